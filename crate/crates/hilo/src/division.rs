//! Euclidean division built from two interlocking sub-algorithms: dividing
//! two digits by one and dividing three half-digits by two, recursing on the
//! halves down to the machine word's double-by-single divide.

use crate::ring::{RingArith, WideProduct};
use crate::uint::{Double, FixedUint};

/// Quotient-and-remainder division.
pub trait EuclidDiv: RingArith {
    /// Divides `hi * 2^BITS + lo` by `d`.
    ///
    /// Requires `d` normalized (top bit set) and `hi < d`, which guarantees
    /// the quotient fits the operand width. Checked in debug builds only;
    /// callers are responsible for the contract.
    fn div2n1n(hi: Self, lo: Self, d: Self) -> (Self, Self);

    /// Quotient and remainder of `self / d`. Panics if `d` is zero.
    fn divrem(self, d: Self) -> (Self, Self);

    #[inline]
    fn div_quotient(self, d: Self) -> Self {
        self.divrem(d).0
    }

    #[inline]
    fn div_remainder(self, d: Self) -> Self {
        self.divrem(d).1
    }
}

macro_rules! impl_div_base {
    ($t:ty, $wide:ty) => {
        impl EuclidDiv for $t {
            #[inline]
            fn div2n1n(hi: Self, lo: Self, d: Self) -> (Self, Self) {
                debug_assert!(d >> (<$t>::BITS - 1) == 1, "divisor not normalized");
                debug_assert!(hi < d, "quotient would overflow");
                let a = ((hi as $wide) << <$t>::BITS) | lo as $wide;
                ((a / d as $wide) as $t, (a % d as $wide) as $t)
            }

            #[inline]
            fn divrem(self, d: Self) -> (Self, Self) {
                (self / d, self % d)
            }
        }
    };
}

impl_div_base!(u8, u16);
impl_div_base!(u16, u32);
impl_div_base!(u32, u64);
impl_div_base!(u64, u128);

/// Divides the three half-digits `[a12, a3]` by the two half-digits of `b`.
///
/// Requires `b` normalized and `a12 < b`, so the quotient fits one half
/// digit. The quotient is estimated from the top two half-digits and fixed
/// up by at most two corrections.
pub fn div3n2n<T: EuclidDiv>(a12: Double<T>, a3: T, b: Double<T>) -> (T, Double<T>) {
    debug_assert!(b.high.leading_zeros() == 0, "divisor not normalized");
    debug_assert!(a12 < b, "quotient would overflow");

    let (mut q, c, c_carry) = if a12.high < b.high {
        let (q, c) = T::div2n1n(a12.high, a12.low, b.high);
        (q, c, false)
    } else {
        // a12.high == b.high: clamp the estimate to the digit maximum, with
        // remainder a12.low + b.high spilling into a carry.
        let (c, carry) = a12.low.overflowing_add(b.high);
        (T::MAX, c, carry)
    };

    // R = [c, a3] - q * b.low; `deficit` tracks how far R went negative in
    // units of 2^(2*BITS).
    let d = q.widening_mul(b.low);
    let (mut r, borrow) = Double::new(c, a3).borrowing_sub(d, false);
    let deficit = borrow as i32 - c_carry as i32;
    assert!(deficit >= 0, "estimate remainder overflow");
    let mut deficit = deficit as u32;

    let mut corrections = 0;
    while deficit > 0 {
        corrections += 1;
        assert!(corrections <= 2, "quotient correction bound exceeded");
        let (dec, underflow) = q.decrement();
        debug_assert!(!underflow);
        q = dec;
        let (sum, carry) = r.overflowing_add(b);
        r = sum;
        deficit -= carry as u32;
    }
    debug_assert!(r < b);
    (q, r)
}

impl<T: EuclidDiv> EuclidDiv for Double<T> {
    fn div2n1n(hi: Self, lo: Self, d: Self) -> (Self, Self) {
        debug_assert!(d.leading_zeros() == 0, "divisor not normalized");
        debug_assert!(hi < d, "quotient would overflow");
        let (q1, r1) = div3n2n(hi, lo.high, d);
        let (q2, r) = div3n2n(r1, lo.low, d);
        (Double { high: q1, low: q2 }, r)
    }

    fn divrem(self, d: Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero");
        if self < d {
            return (Self::ZERO, self);
        }
        // Normalize the divisor, shift the dividend along (keeping the
        // overflowed top bits as an extra digit), divide, shift back.
        let sh = d.leading_zeros();
        let dn = d.shl_bits(sh);
        let (a_hi, a_lo) = if sh == 0 {
            (Self::ZERO, self)
        } else {
            (self.shr_bits(Self::BITS - sh), self.shl_bits(sh))
        };
        let (q, rn) = Self::div2n1n(a_hi, a_lo, dn);
        debug_assert!(rn.trailing_zeros() >= sh, "remainder lost shifted bits");
        (q, rn.shr_bits(sh))
    }
}

/// Remainder of a double-width value modulo `n`. Panics if `n` is zero.
pub fn rem_wide<T: EuclidDiv>(w: WideProduct<T>, n: T) -> T {
    assert!(!n.is_zero(), "division by zero");
    let h = w.high.div_remainder(n);
    let sh = n.leading_zeros();
    if sh == 0 {
        T::div2n1n(h, w.low, n).1
    } else {
        let dn = n.shl_bits(sh);
        let hi = h.shl_bits(sh).bitor(w.low.shr_bits(T::BITS - sh));
        let lo = w.low.shl_bits(sh);
        T::div2n1n(hi, lo, dn).1.shr_bits(sh)
    }
}
