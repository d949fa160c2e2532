//! Greatest common divisor and the extended Euclidean algorithm with
//! sign-flagged Bézout coefficients over the unsigned fixed-width values.

use crate::division::EuclidDiv;
use crate::uint::FixedUint;

/// A signed value carried as an unsigned magnitude plus a sign flag.
/// Zero is canonically non-negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedCoeff<T> {
    pub magnitude: T,
    pub nonneg: bool,
}

impl<T: FixedUint> SignedCoeff<T> {
    pub fn new(magnitude: T, nonneg: bool) -> Self {
        SignedCoeff { magnitude, nonneg: nonneg || magnitude.is_zero() }
    }

    pub fn zero() -> Self {
        SignedCoeff { magnitude: T::ZERO, nonneg: true }
    }

    pub fn is_negative(&self) -> bool {
        !self.nonneg
    }
}

/// Greatest common divisor; `gcd(a, 0) = a` and `gcd(0, 0) = 0`.
pub fn gcd<T: EuclidDiv>(mut a: T, mut b: T) -> T {
    while !b.is_zero() {
        let r = a.div_remainder(b);
        a = b;
        b = r;
    }
    a
}

/// Extended Euclidean algorithm: returns `(g, u, v)` with
/// `u * a + v * b = g = gcd(a, b)` in signed arithmetic.
///
/// The classical iteration keeps coefficient magnitudes at or below
/// `b / (2g)` and `a / (2g)`, so they always fit the operand width.
/// Panics if both inputs are zero.
pub fn ext_gcd<T: EuclidDiv>(a: T, b: T) -> (T, SignedCoeff<T>, SignedCoeff<T>) {
    assert!(
        !(a.is_zero() && b.is_zero()),
        "ext_gcd(0, 0) is undefined"
    );
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (SignedCoeff::new(T::ONE, true), SignedCoeff::zero());
    let (mut t0, mut t1) = (SignedCoeff::zero(), SignedCoeff::new(T::ONE, true));
    while !r1.is_zero() {
        let (q, r2) = r0.divrem(r1);
        r0 = r1;
        r1 = r2;
        let s2 = sub_mul(s0, q, s1);
        s0 = s1;
        s1 = s2;
        let t2 = sub_mul(t0, q, t1);
        t0 = t1;
        t1 = t2;
    }
    (r0, s0, t0)
}

// x - q * y over sign-magnitude values. The coefficient bounds along the
// Euclidean recursion keep every intermediate within the width; the
// assertions catch any violation.
fn sub_mul<T: EuclidDiv>(x: SignedCoeff<T>, q: T, y: SignedCoeff<T>) -> SignedCoeff<T> {
    let qy = q.widening_mul(y.magnitude);
    assert!(qy.high.is_zero(), "coefficient overflow");
    let qy_mag = qy.low;
    // Sign of the -q*y term.
    let qy_nonneg = !y.nonneg || qy_mag.is_zero();
    if x.nonneg == qy_nonneg {
        let (sum, carry) = x.magnitude.overflowing_add(qy_mag);
        assert!(!carry, "coefficient overflow");
        SignedCoeff::new(sum, x.nonneg)
    } else if x.magnitude >= qy_mag {
        SignedCoeff::new(x.magnitude.wrapping_sub(qy_mag), x.nonneg)
    } else {
        SignedCoeff::new(qy_mag.wrapping_sub(x.magnitude), qy_nonneg)
    }
}
