//! Montgomery representation and reduction with radix `R = 2^(2^k)`.
//!
//! With that radix, reducing a double-width value modulo `R` is taking its
//! low half and dividing exactly by `R` is taking its high half, so a full
//! reduction costs one truncated multiplication and one complete one.

use core::fmt;

use crate::division::EuclidDiv;
use crate::ring::WideProduct;
use crate::uint::Double;

/// Error constructing a [`MontgomeryContext`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MontgomeryError {
    /// The radix `2^(2^k)` requires an odd modulus.
    EvenModulus,
    /// The modulus must be at least 3.
    ModulusTooSmall,
}

impl fmt::Display for MontgomeryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MontgomeryError::EvenModulus => write!(f, "modulus must be odd"),
            MontgomeryError::ModulusTooSmall => write!(f, "modulus must be at least 3"),
        }
    }
}

impl std::error::Error for MontgomeryError {}

/// Precomputed constants for reduction modulo an odd `n` with `R = 2^(2^k)`:
/// `n_prime` satisfies `R * R^-1 - n * n_prime = 1`, and `r2 = R^2 mod n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MontgomeryContext<T> {
    n: T,
    n_prime: T,
    r2: T,
}

impl<T: EuclidDiv> MontgomeryContext<T> {
    pub fn new(n: T) -> Result<Self, MontgomeryError> {
        if !n.is_odd() {
            return Err(MontgomeryError::EvenModulus);
        }
        if n.is_one() {
            return Err(MontgomeryError::ModulusTooSmall);
        }
        // n^-1 mod R by lifting the trivial inverse mod 2, doubling the
        // valid bits each step; LEVEL steps reach the full width.
        let two = T::ONE.wrapping_add(T::ONE);
        let mut inv = T::ONE;
        for _ in 0..T::LEVEL {
            inv = inv.wrapping_mul(two.wrapping_sub(n.wrapping_mul(inv)));
        }
        let n_prime = inv.wrapping_neg();
        assert!(
            n.wrapping_mul(n_prime) == T::MAX,
            "montgomery constant check failed"
        );
        // R^2 mod n: start from R mod n and double BITS times.
        let mut r2 = n.wrapping_neg().div_remainder(n);
        for _ in 0..T::BITS {
            let (s, carry) = r2.overflowing_add(r2);
            r2 = if carry || s >= n { s.wrapping_sub(n) } else { s };
        }
        Ok(MontgomeryContext { n, n_prime, r2 })
    }

    pub fn modulus(&self) -> T {
        self.n
    }

    /// `N'` with `n * n_prime = -1 mod R`.
    pub fn n_prime(&self) -> T {
        self.n_prime
    }

    /// `R^2 mod n`.
    pub fn r2_mod_n(&self) -> T {
        self.r2
    }

    /// Montgomery reduction: maps `t < R*n` to `t * R^-1 mod n`.
    pub fn redc(&self, t: WideProduct<T>) -> T {
        debug_assert!(t.high < self.n, "redc input not below R*n");
        let m = t.low.wrapping_mul(self.n_prime);
        let mn = m.widening_mul(self.n);
        // t + m*n is divisible by R: the low halves cancel to zero and the
        // quotient is the high half plus the incoming carry.
        let (low, carry) = t.low.overflowing_add(mn.low);
        debug_assert!(low.is_zero());
        let (sum, carry) = t.high.carrying_add(mn.high, carry);
        let out = if carry || sum >= self.n {
            sum.wrapping_sub(self.n)
        } else {
            sum
        };
        debug_assert!(out < self.n);
        out
    }

    /// Maps `a` to its Montgomery representation `a * R mod n`.
    pub fn to_mont(&self, a: T) -> T {
        self.redc(a.widening_mul(self.r2))
    }

    /// Maps a Montgomery representation back to the plain value.
    pub fn from_mont(&self, abar: T) -> T {
        self.redc(Double::new(T::ZERO, abar))
    }

    /// Product of two Montgomery representations, still in Montgomery form.
    pub fn mul(&self, abar: T, bbar: T) -> T {
        debug_assert!(abar < self.n && bbar < self.n);
        self.redc(abar.widening_mul(bbar))
    }

    /// `a^e mod n` for `a < n`: one conversion in, the whole ladder in
    /// Montgomery form, one conversion out.
    pub fn exp(&self, a: T, e: T) -> T {
        debug_assert!(a < self.n);
        let bits = T::BITS - e.leading_zeros();
        let mut acc = self.to_mont(T::ONE);
        let mut base = self.to_mont(a);
        for i in 0..bits {
            if e.bit(i) {
                acc = self.mul(acc, base);
            }
            if i + 1 < bits {
                base = self.mul(base, base);
            }
        }
        self.from_mont(acc)
    }

    // Plain-domain products for callers that are not staying in Montgomery
    // form: fold the stray R^-1 back with one extra reduction.
    pub(crate) fn mul_normal(&self, a: T, b: T) -> T {
        let t = self.redc(a.widening_mul(b));
        self.redc(t.widening_mul(self.r2))
    }

    pub(crate) fn square_normal(&self, a: T) -> T {
        let t = self.redc(a.widening_square());
        self.redc(t.widening_mul(self.r2))
    }
}
