//! Modular arithmetic: explicit-modulus functions that reduce their inputs
//! on entry, plus a validated ring context whose elements are kept reduced
//! at all times.
//!
//! The explicit-modulus multiply reduces through division. The ring context
//! precomputes Montgomery constants for odd moduli and routes its element
//! operations through them; results are identical either way.

use core::fmt;

use rand::RngCore;

use crate::division::{rem_wide, EuclidDiv};
use crate::montgomery::MontgomeryContext;
use crate::numtheory::ext_gcd;
use crate::uint::{Double, FixedUint, Word};

/// Error from a modular operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModError<T> {
    /// The operand shares a factor with the modulus; carries the gcd.
    NotInvertible { gcd: T },
    /// No square root exists for the given residue.
    NotAResidue,
    /// The modulus must be at least 2.
    ModulusTooSmall,
}

impl<T: fmt::Debug> fmt::Display for ModError<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModError::NotInvertible { gcd } => {
                write!(f, "operand not invertible (gcd {gcd:?})")
            }
            ModError::NotAResidue => write!(f, "not a quadratic residue"),
            ModError::ModulusTooSmall => write!(f, "modulus must be at least 2"),
        }
    }
}

impl<T: fmt::Debug> std::error::Error for ModError<T> {}

#[inline]
fn check_modulus<T: FixedUint>(n: T) {
    assert!(!n.is_zero() && !n.is_one(), "modulus must be at least 2");
}

/// `b mod n`. Panics if `n` is zero.
#[inline]
pub fn reduce<T: EuclidDiv>(b: T, n: T) -> T {
    b.div_remainder(n)
}

/// `-b mod n`.
pub fn neg_mod<T: EuclidDiv>(b: T, n: T) -> T {
    check_modulus(n);
    let b = reduce(b, n);
    if b.is_zero() {
        T::ZERO
    } else {
        n.wrapping_sub(b)
    }
}

// Sum of two reduced values, corrected back below n.
#[inline]
fn add_reduced<T: EuclidDiv>(b: T, c: T, n: T) -> T {
    let (s, carry) = b.overflowing_add(c);
    if carry || s >= n {
        s.wrapping_sub(n)
    } else {
        s
    }
}

#[inline]
fn sub_reduced<T: EuclidDiv>(b: T, c: T, n: T) -> T {
    let (d, borrow) = b.overflowing_sub(c);
    if borrow {
        d.wrapping_add(n)
    } else {
        d
    }
}

#[inline]
fn mul_reduced<T: EuclidDiv>(b: T, c: T, n: T) -> T {
    rem_wide(b.widening_mul(c), n)
}

pub fn add_mod<T: EuclidDiv>(b: T, c: T, n: T) -> T {
    check_modulus(n);
    add_reduced(reduce(b, n), reduce(c, n), n)
}

pub fn sub_mod<T: EuclidDiv>(b: T, c: T, n: T) -> T {
    check_modulus(n);
    sub_reduced(reduce(b, n), reduce(c, n), n)
}

/// `b * c mod n` through a full product and a division-based reduction.
pub fn mul_mod<T: EuclidDiv>(b: T, c: T, n: T) -> T {
    check_modulus(n);
    mul_reduced(reduce(b, n), reduce(c, n), n)
}

/// `b * c mod n` for a single-word `c`.
pub fn mul_mod_limb<T: EuclidDiv>(b: T, c: T::Limb, n: T) -> T {
    check_modulus(n);
    let b = reduce(b, n);
    let (hi, lo) = b.widening_mul_limb(c);
    rem_wide(Double::new(T::from_limb(hi), lo), n)
}

/// `b^2 mod n`.
pub fn square_mod<T: EuclidDiv>(b: T, n: T) -> T {
    check_modulus(n);
    rem_wide(reduce(b, n).widening_square(), n)
}

// Ladder over an already-reduced base with division-based reduction.
fn exp_reduced<T: EuclidDiv>(base: T, e: T, n: T) -> T {
    debug_assert!(base < n);
    let bits = T::BITS - e.leading_zeros();
    let mut acc = T::ONE;
    let mut base = base;
    for i in 0..bits {
        if e.bit(i) {
            acc = mul_reduced(acc, base, n);
        }
        if i + 1 < bits {
            base = rem_wide(base.widening_square(), n);
        }
    }
    acc
}

/// `b^c mod n` with the convention `0^0 = 1`. Odd moduli go through
/// Montgomery form; even moduli use division-based reduction.
pub fn exp_mod<T: EuclidDiv>(b: T, c: T, n: T) -> T {
    check_modulus(n);
    if n.is_odd() {
        let ctx = MontgomeryContext::new(n).expect("odd modulus above 2");
        ctx.exp(reduce(b, n), c)
    } else {
        exp_reduced(reduce(b, n), c, n)
    }
}

/// `b^c mod n` for a single-word exponent.
pub fn exp_mod_limb<T: EuclidDiv>(b: T, c: T::Limb, n: T) -> T {
    exp_mod(b, T::from_limb(c), n)
}

/// `b^-1 mod n` in `[1, n)`, via the extended gcd with a sign fix-up.
pub fn inv_mod<T: EuclidDiv>(b: T, n: T) -> Result<T, ModError<T>> {
    check_modulus(n);
    let b = reduce(b, n);
    if b.is_zero() {
        return Err(ModError::NotInvertible { gcd: n });
    }
    let (g, u, _) = ext_gcd(b, n);
    if !g.is_one() {
        return Err(ModError::NotInvertible { gcd: g });
    }
    Ok(if u.nonneg {
        u.magnitude
    } else {
        n.wrapping_sub(u.magnitude)
    })
}

/// `b * c^-1 mod n` when `c` is invertible.
pub fn div_mod<T: EuclidDiv>(b: T, c: T, n: T) -> Result<T, ModError<T>> {
    let inv = inv_mod(c, n)?;
    Ok(mul_mod(b, inv, n))
}

/// Euler's criterion; `n` must be an odd prime (composite moduli give an
/// unspecified answer). Zero counts as a residue.
pub fn is_quadratic_residue<T: EuclidDiv>(a: T, n: T) -> bool {
    check_modulus(n);
    assert!(n.is_odd(), "modulus must be odd");
    let a = reduce(a, n);
    a.is_zero() || exp_mod(a, n.shr_bits(1), n).is_one()
}

/// A square root of `b` modulo an odd prime `n`, if one exists. Either of
/// the two roots may be returned. `n = 3 mod 4` takes the direct power;
/// otherwise the order-2^s subgroup descent is used.
pub fn square_root_mod<T: EuclidDiv>(b: T, n: T) -> Result<T, ModError<T>> {
    check_modulus(n);
    assert!(n.is_odd(), "modulus must be odd");
    let b = reduce(b, n);
    if b.is_zero() {
        return Ok(T::ZERO);
    }
    if n.bit(1) {
        // n = 3 mod 4: candidate b^((n+1)/4), verified by squaring.
        let e = n.shr_bits(2).wrapping_add(T::ONE);
        let r = exp_mod(b, e, n);
        return if rem_wide(r.widening_square(), n) == b {
            Ok(r)
        } else {
            Err(ModError::NotAResidue)
        };
    }

    let n_m1 = n.wrapping_sub(T::ONE);
    let half = n.shr_bits(1);
    if !exp_mod(b, half, n).is_one() {
        return Err(ModError::NotAResidue);
    }
    // n - 1 = q * 2^s with q odd.
    let s = n_m1.trailing_zeros();
    let q = n_m1.shr_bits(s);
    // Smallest non-residue as the subgroup generator. The scan stays far
    // below the word range for any prime these widths can hold.
    let mut z_scan = 2u64;
    let z = loop {
        let zl = T::Limb::truncate_u64(z_scan);
        assert!(zl.to_u64() == z_scan, "non-residue scan left the word range");
        let z = reduce(T::from_limb(zl), n);
        if exp_mod(z, half, n) == n_m1 {
            break z;
        }
        z_scan += 1;
    };

    let mut m = s;
    let mut c = exp_mod(z, q, n);
    let mut t = exp_mod(b, q, n);
    let mut r = exp_mod(b, q.shr_bits(1).wrapping_add(T::ONE), n);
    while !t.is_one() {
        let mut i = 0;
        let mut probe = t;
        while !probe.is_one() {
            probe = rem_wide(probe.widening_square(), n);
            i += 1;
            assert!(i < m, "square_root_mod requires a prime modulus");
        }
        let mut gain = c;
        for _ in 0..(m - i - 1) {
            gain = rem_wide(gain.widening_square(), n);
        }
        m = i;
        c = rem_wide(gain.widening_square(), n);
        t = mul_reduced(t, c, n);
        r = mul_reduced(r, gain, n);
    }
    debug_assert!(rem_wide(r.widening_square(), n) == b);
    Ok(r)
}

/// A validated modulus context. Montgomery constants are precomputed
/// exactly when the modulus is odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModRing<T> {
    n: T,
    mont: Option<MontgomeryContext<T>>,
}

impl<T: EuclidDiv> ModRing<T> {
    pub fn new(n: T) -> Result<Self, ModError<T>> {
        if n.is_zero() || n.is_one() {
            return Err(ModError::ModulusTooSmall);
        }
        let mont = if n.is_odd() {
            Some(MontgomeryContext::new(n).expect("odd modulus above 2"))
        } else {
            None
        };
        Ok(ModRing { n, mont })
    }

    pub fn modulus(&self) -> T {
        self.n
    }

    pub fn is_odd(&self) -> bool {
        self.n.is_odd()
    }

    pub fn montgomery(&self) -> Option<&MontgomeryContext<T>> {
        self.mont.as_ref()
    }

    /// Wraps a value, reducing it modulo the ring's modulus.
    pub fn element(&self, a: T) -> ModElement<'_, T> {
        ModElement { ring: self, value: reduce(a, self.n) }
    }

    /// Uniform random element of the ring.
    pub fn random_element<R: RngCore + ?Sized>(&self, rng: &mut R) -> ModElement<'_, T> {
        ModElement { ring: self, value: T::random_below(rng, &self.n) }
    }
}

/// A value of `Z/nZ`, always held reduced below the ring modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModElement<'r, T> {
    ring: &'r ModRing<T>,
    value: T,
}

#[allow(clippy::should_implement_trait)]
impl<'r, T: EuclidDiv> ModElement<'r, T> {
    /// The canonical representative in `[0, n)`.
    pub fn value(&self) -> T {
        self.value
    }

    pub fn ring(&self) -> &'r ModRing<T> {
        self.ring
    }

    #[inline]
    fn check_same_ring(&self, rhs: &Self) {
        assert!(
            self.ring.n == rhs.ring.n,
            "ring mismatch: elements belong to different moduli"
        );
    }

    #[inline]
    fn wrap(&self, value: T) -> Self {
        debug_assert!(value < self.ring.n);
        ModElement { ring: self.ring, value }
    }

    pub fn add(self, rhs: Self) -> Self {
        self.check_same_ring(&rhs);
        self.wrap(add_reduced(self.value, rhs.value, self.ring.n))
    }

    pub fn sub(self, rhs: Self) -> Self {
        self.check_same_ring(&rhs);
        self.wrap(sub_reduced(self.value, rhs.value, self.ring.n))
    }

    pub fn neg(self) -> Self {
        let v = if self.value.is_zero() {
            T::ZERO
        } else {
            self.ring.n.wrapping_sub(self.value)
        };
        self.wrap(v)
    }

    pub fn mul(self, rhs: Self) -> Self {
        self.check_same_ring(&rhs);
        let v = match &self.ring.mont {
            Some(ctx) => ctx.mul_normal(self.value, rhs.value),
            None => mul_reduced(self.value, rhs.value, self.ring.n),
        };
        self.wrap(v)
    }

    pub fn square(self) -> Self {
        let v = match &self.ring.mont {
            Some(ctx) => ctx.square_normal(self.value),
            None => rem_wide(self.value.widening_square(), self.ring.n),
        };
        self.wrap(v)
    }

    pub fn exp(self, e: T) -> Self {
        let v = match &self.ring.mont {
            Some(ctx) => ctx.exp(self.value, e),
            None => exp_reduced(self.value, e, self.ring.n),
        };
        self.wrap(v)
    }

    pub fn inv(self) -> Result<Self, ModError<T>> {
        inv_mod(self.value, self.ring.n).map(|v| self.wrap(v))
    }

    pub fn div(self, rhs: Self) -> Result<Self, ModError<T>> {
        self.check_same_ring(&rhs);
        Ok(self.mul(rhs.inv()?))
    }
}
