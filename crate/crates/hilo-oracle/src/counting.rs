//! A 64-bit base word that counts its own multiplications.
//!
//! Building `Double<...Double<CountingWord>>` runs the exact same generic
//! code paths as the production word, so the thread-local counter observes
//! how many base multiplications an operation performs without instrumenting
//! (or slowing down) the production types.

use core::cell::Cell;
use core::fmt;

use hilo::{Double, EuclidDiv, FixedUint, RingArith, WideProduct, Word};

thread_local! {
    static BASE_MULS: Cell<u64> = const { Cell::new(0) };
}

/// Zeroes this thread's base-multiplication counter.
pub fn reset_mul_count() {
    BASE_MULS.with(|c| c.set(0));
}

/// Base multiplications performed on this thread since the last reset.
pub fn mul_count() -> u64 {
    BASE_MULS.with(|c| c.get())
}

#[inline]
fn bump() {
    BASE_MULS.with(|c| c.set(c.get() + 1));
}

/// A `u64` in disguise whose multiplications are tallied.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CountingWord(pub u64);

impl fmt::Debug for CountingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl Word for CountingWord {
    const BITS: u32 = 64;
    const ZERO: Self = CountingWord(0);

    fn to_u64(self) -> u64 {
        self.0
    }

    fn truncate_u64(v: u64) -> Self {
        CountingWord(v)
    }
}

impl FixedUint for CountingWord {
    type Limb = CountingWord;

    const LEVEL: u32 = 6;
    const BITS: u32 = 64;
    const LIMBS: usize = 1;

    const ZERO: Self = CountingWord(0);
    const ONE: Self = CountingWord(1);
    const MAX: Self = CountingWord(u64::MAX);

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
        CountingWord(self.0 << sh)
    }

    fn shr_bits(self, sh: u32) -> Self {
        CountingWord(self.0 >> sh)
    }

    fn leading_zeros(&self) -> u32 {
        self.0.leading_zeros()
    }

    fn trailing_zeros(&self) -> u32 {
        self.0.trailing_zeros()
    }

    fn bitand(self, rhs: Self) -> Self {
        CountingWord(self.0 & rhs.0)
    }

    fn bitor(self, rhs: Self) -> Self {
        CountingWord(self.0 | rhs.0)
    }
}

impl RingArith for CountingWord {
    fn carrying_add(self, rhs: Self, carry: bool) -> (Self, bool) {
        let (a, c1) = self.0.overflowing_add(rhs.0);
        let (b, c2) = a.overflowing_add(carry as u64);
        (CountingWord(b), c1 | c2)
    }

    fn borrowing_sub(self, rhs: Self, borrow: bool) -> (Self, bool) {
        let (a, b1) = self.0.overflowing_sub(rhs.0);
        let (b, b2) = a.overflowing_sub(borrow as u64);
        (CountingWord(b), b1 | b2)
    }

    fn widening_mul(self, rhs: Self) -> WideProduct<Self> {
        bump();
        let wide = self.0 as u128 * rhs.0 as u128;
        Double::new(CountingWord((wide >> 64) as u64), CountingWord(wide as u64))
    }

    fn wrapping_mul(self, rhs: Self) -> Self {
        bump();
        CountingWord(self.0.wrapping_mul(rhs.0))
    }

    fn widening_square(self) -> WideProduct<Self> {
        self.widening_mul(self)
    }

    fn shl1_carry(self, carry: bool) -> (Self, bool) {
        (CountingWord((self.0 << 1) | carry as u64), self.0 >> 63 == 1)
    }

    fn widening_mul_limb(self, v: Self::Limb) -> (Self::Limb, Self) {
        let p = self.widening_mul(v);
        (p.high, p.low)
    }
}

impl EuclidDiv for CountingWord {
    fn div2n1n(hi: Self, lo: Self, d: Self) -> (Self, Self) {
        debug_assert!(d.0 >> 63 == 1, "divisor not normalized");
        debug_assert!(hi < d, "quotient would overflow");
        let a = ((hi.0 as u128) << 64) | lo.0 as u128;
        (
            CountingWord((a / d.0 as u128) as u64),
            CountingWord((a % d.0 as u128) as u64),
        )
    }

    fn divrem(self, d: Self) -> (Self, Self) {
        (CountingWord(self.0 / d.0), CountingWord(self.0 % d.0))
    }
}
