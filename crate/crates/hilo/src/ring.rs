//! Carry-aware addition and subtraction, full double-width multiplication,
//! and arithmetic truncated to the operand width (mod `2^(2^k)`).
//!
//! The double-width product of a level-`k` value is exactly a level-`k+1`
//! value, so [`WideProduct`] is just [`Double`] again.

use crate::uint::{Double, FixedUint, Word};

/// `high * 2^(2^k) + low`: the exact product of two level-`k` operands.
pub type WideProduct<T> = Double<T>;

/// Arithmetic in the ring `Z / 2^(2^k)`, plus the exact double-width products.
pub trait RingArith: FixedUint {
    /// `self + rhs + carry`, returning the low bits and the carry-out.
    /// The exact identity is `self + rhs + carry = out + carry_out * 2^BITS`.
    fn carrying_add(self, rhs: Self, carry: bool) -> (Self, bool);

    /// `self - rhs - borrow`, returning the low bits and the borrow-out:
    /// `out = self - rhs - borrow + borrow_out * 2^BITS`.
    fn borrowing_sub(self, rhs: Self, borrow: bool) -> (Self, bool);

    /// Exact full product, twice the operand width.
    fn widening_mul(self, rhs: Self) -> WideProduct<Self>;

    /// Product truncated to the operand width: `self * rhs mod 2^BITS`.
    ///
    /// One full product of the low halves plus the two cross products
    /// computed truncated; the high-half product is never formed.
    fn wrapping_mul(self, rhs: Self) -> Self;

    /// Exact square; cheaper than `widening_mul(self, self)` because the
    /// cross product is computed once and doubled.
    fn widening_square(self) -> WideProduct<Self>;

    /// Shift left one bit, shifting `carry` in and the top bit out.
    fn shl1_carry(self, carry: bool) -> (Self, bool);

    #[inline]
    fn overflowing_add(self, rhs: Self) -> (Self, bool) {
        self.carrying_add(rhs, false)
    }

    #[inline]
    fn overflowing_sub(self, rhs: Self) -> (Self, bool) {
        self.borrowing_sub(rhs, false)
    }

    #[inline]
    fn add_limb(self, v: Self::Limb) -> (Self, bool) {
        self.carrying_add(Self::from_limb(v), false)
    }

    #[inline]
    fn sub_limb(self, v: Self::Limb) -> (Self, bool) {
        self.borrowing_sub(Self::from_limb(v), false)
    }

    /// `self + 1` with carry-out.
    #[inline]
    fn increment(self) -> (Self, bool) {
        self.carrying_add(Self::ZERO, true)
    }

    /// `self - 1` with borrow-out.
    #[inline]
    fn decrement(self) -> (Self, bool) {
        self.borrowing_sub(Self::ZERO, true)
    }

    #[inline]
    fn wrapping_add(self, rhs: Self) -> Self {
        self.carrying_add(rhs, false).0
    }

    #[inline]
    fn wrapping_sub(self, rhs: Self) -> Self {
        self.borrowing_sub(rhs, false).0
    }

    #[inline]
    fn wrapping_neg(self) -> Self {
        Self::ZERO.borrowing_sub(self, false).0
    }

    /// `self * v` for a single word `v`; the high part fits one word.
    fn widening_mul_limb(self, v: Self::Limb) -> (Self::Limb, Self);
}

// Word + carry bit where overflow is impossible by construction.
#[inline(always)]
fn word_add_bit<W: Word>(w: W, bit: bool) -> W {
    W::truncate_u64(w.to_u64().wrapping_add(bit as u64))
}

macro_rules! impl_ring_base {
    ($t:ty, $wide:ty) => {
        impl RingArith for $t {
            #[inline(always)]
            fn carrying_add(self, rhs: Self, carry: bool) -> (Self, bool) {
                let (a, c1) = self.overflowing_add(rhs);
                let (b, c2) = a.overflowing_add(carry as $t);
                (b, c1 | c2)
            }

            #[inline(always)]
            fn borrowing_sub(self, rhs: Self, borrow: bool) -> (Self, bool) {
                let (a, b1) = self.overflowing_sub(rhs);
                let (b, b2) = a.overflowing_sub(borrow as $t);
                (b, b1 | b2)
            }

            #[inline(always)]
            fn widening_mul(self, rhs: Self) -> WideProduct<Self> {
                let wide = (self as $wide) * (rhs as $wide);
                Double::new((wide >> <$t>::BITS) as $t, wide as $t)
            }

            #[inline(always)]
            fn wrapping_mul(self, rhs: Self) -> Self {
                <$t>::wrapping_mul(self, rhs)
            }

            #[inline(always)]
            fn widening_square(self) -> WideProduct<Self> {
                RingArith::widening_mul(self, self)
            }

            #[inline(always)]
            fn shl1_carry(self, carry: bool) -> (Self, bool) {
                ((self << 1) | carry as $t, self >> (<$t>::BITS - 1) == 1)
            }

            #[inline(always)]
            fn widening_mul_limb(self, v: Self::Limb) -> (Self::Limb, Self) {
                let p = RingArith::widening_mul(self, v);
                (p.high, p.low)
            }
        }
    };
}

impl_ring_base!(u8, u16);
impl_ring_base!(u16, u32);
impl_ring_base!(u32, u64);
impl_ring_base!(u64, u128);

impl<T: RingArith> RingArith for Double<T> {
    #[inline]
    fn carrying_add(self, rhs: Self, carry: bool) -> (Self, bool) {
        let (low, c) = self.low.carrying_add(rhs.low, carry);
        let (high, c) = self.high.carrying_add(rhs.high, c);
        (Double { high, low }, c)
    }

    #[inline]
    fn borrowing_sub(self, rhs: Self, borrow: bool) -> (Self, bool) {
        let (low, b) = self.low.borrowing_sub(rhs.low, borrow);
        let (high, b) = self.high.borrowing_sub(rhs.high, b);
        (Double { high, low }, b)
    }

    fn widening_mul(self, rhs: Self) -> WideProduct<Self> {
        // Four half-size full products, recombined with carry chains so no
        // intermediate exceeds double width.
        let ll = self.low.widening_mul(rhs.low);
        let lh = self.low.widening_mul(rhs.high);
        let hl = self.high.widening_mul(rhs.low);
        let hh = self.high.widening_mul(rhs.high);

        // Middle column: lh + hl spans one extra bit.
        let (mid, mid_carry) = lh.carrying_add(hl, false);

        let d0 = ll.low;
        let (d1, c) = ll.high.carrying_add(mid.low, false);
        let (d2, c) = hh.low.carrying_add(mid.high, c);
        let (d3, c) = hh.high.carrying_add(
            if mid_carry { T::ONE } else { T::ZERO },
            c,
        );
        debug_assert!(!c);

        Double::new(Double::new(d3, d2), Double::new(d1, d0))
    }

    fn wrapping_mul(self, rhs: Self) -> Self {
        let ll = self.low.widening_mul(rhs.low);
        let cross = self
            .high
            .wrapping_mul(rhs.low)
            .wrapping_add(self.low.wrapping_mul(rhs.high));
        Double { high: ll.high.wrapping_add(cross), low: ll.low }
    }

    fn widening_square(self) -> WideProduct<Self> {
        let ll = self.low.widening_square();
        let hh = self.high.widening_square();
        let cross = self.high.widening_mul(self.low);
        let (cross2, top) = cross.shl1_carry(false);

        let d0 = ll.low;
        let (d1, c) = ll.high.carrying_add(cross2.low, false);
        let (d2, c) = hh.low.carrying_add(cross2.high, c);
        let (d3, c) = hh.high.carrying_add(if top { T::ONE } else { T::ZERO }, c);
        debug_assert!(!c);

        Double::new(Double::new(d3, d2), Double::new(d1, d0))
    }

    #[inline]
    fn shl1_carry(self, carry: bool) -> (Self, bool) {
        let (low, c) = self.low.shl1_carry(carry);
        let (high, c) = self.high.shl1_carry(c);
        (Double { high, low }, c)
    }

    fn widening_mul_limb(self, v: Self::Limb) -> (Self::Limb, Self) {
        let (h1, l1) = self.low.widening_mul_limb(v);
        let (h2, l2) = self.high.widening_mul_limb(v);
        let (mid, carry) = l2.carrying_add(T::from_limb(h1), false);
        (word_add_bit(h2, carry), Double { high: mid, low: l1 })
    }
}
