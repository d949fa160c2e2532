//! A 4-bit synthetic base word.
//!
//! Plugging `U4` under [`hilo::Double`] shrinks the whole recursion to toy
//! widths (8-bit values from two half-digits, 16-bit doubles), small enough
//! to verify the division and reduction algorithms exhaustively against
//! plain machine arithmetic.

use core::fmt;

use hilo::{Double, EuclidDiv, FixedUint, RingArith, WideProduct, Word};

/// An unsigned 4-bit integer stored in the low nibble of a byte.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct U4(u8);

impl U4 {
    pub const fn new(v: u8) -> Self {
        U4(v & 0xF)
    }

    pub const fn get(self) -> u8 {
        self.0
    }
}

impl fmt::Debug for U4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:x}", self.0)
    }
}

impl Word for U4 {
    const BITS: u32 = 4;
    const ZERO: Self = U4(0);

    fn to_u64(self) -> u64 {
        self.0 as u64
    }

    fn truncate_u64(v: u64) -> Self {
        U4((v & 0xF) as u8)
    }
}

impl FixedUint for U4 {
    type Limb = U4;

    const LEVEL: u32 = 2;
    const BITS: u32 = 4;
    const LIMBS: usize = 1;

    const ZERO: Self = U4(0);
    const ONE: Self = U4(1);
    const MAX: Self = U4(0xF);

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn is_one(&self) -> bool {
        self.0 == 1
    }

    fn equals_limb(&self, v: Self::Limb) -> bool {
        *self == v
    }

    fn get_limb(&self, n: usize) -> Self::Limb {
        assert!(n < 1, "limb index {n} out of range");
        *self
    }

    fn set_limb(self, v: Self::Limb, n: usize) -> Self {
        assert!(n < 1, "limb index {n} out of range");
        v
    }

    fn shl_bits(self, sh: u32) -> Self {
        debug_assert!(sh < 4);
        U4((self.0 << sh) & 0xF)
    }

    fn shr_bits(self, sh: u32) -> Self {
        debug_assert!(sh < 4);
        U4(self.0 >> sh)
    }

    fn leading_zeros(&self) -> u32 {
        self.0.leading_zeros() - 4
    }

    fn trailing_zeros(&self) -> u32 {
        self.0.trailing_zeros().min(4)
    }

    fn bitand(self, rhs: Self) -> Self {
        U4(self.0 & rhs.0)
    }

    fn bitor(self, rhs: Self) -> Self {
        U4(self.0 | rhs.0)
    }
}

impl RingArith for U4 {
    fn carrying_add(self, rhs: Self, carry: bool) -> (Self, bool) {
        let s = self.0 + rhs.0 + carry as u8;
        (U4(s & 0xF), s > 0xF)
    }

    fn borrowing_sub(self, rhs: Self, borrow: bool) -> (Self, bool) {
        let take = rhs.0 + borrow as u8;
        if self.0 >= take {
            (U4(self.0 - take), false)
        } else {
            (U4((self.0 + 0x10 - take) & 0xF), true)
        }
    }

    fn widening_mul(self, rhs: Self) -> WideProduct<Self> {
        let p = self.0 * rhs.0;
        Double::new(U4(p >> 4), U4(p & 0xF))
    }

    fn wrapping_mul(self, rhs: Self) -> Self {
        U4((self.0 * rhs.0) & 0xF)
    }

    fn widening_square(self) -> WideProduct<Self> {
        self.widening_mul(self)
    }

    fn shl1_carry(self, carry: bool) -> (Self, bool) {
        (U4(((self.0 << 1) | carry as u8) & 0xF), self.0 >> 3 == 1)
    }

    fn widening_mul_limb(self, v: Self::Limb) -> (Self::Limb, Self) {
        let p = self.widening_mul(v);
        (p.high, p.low)
    }
}

impl EuclidDiv for U4 {
    fn div2n1n(hi: Self, lo: Self, d: Self) -> (Self, Self) {
        debug_assert!(d.0 >> 3 == 1, "divisor not normalized");
        debug_assert!(hi < d, "quotient would overflow");
        let a = ((hi.0 as u16) << 4) | lo.0 as u16;
        (U4((a / d.0 as u16) as u8), U4((a % d.0 as u16) as u8))
    }

    fn divrem(self, d: Self) -> (Self, Self) {
        assert!(d.0 != 0, "division by zero");
        (U4(self.0 / d.0), U4(self.0 % d.0))
    }
}

/// An 8-bit value as two 4-bit halves.
pub type Toy8 = Double<U4>;
/// A 16-bit value as two 8-bit halves of 4-bit half-digits.
pub type Toy16 = Double<Toy8>;
