//! The recursive fixed-width unsigned integer representation.
//!
//! A value of width `2^k` bits is stored as a pair of `2^(k-1)`-bit halves,
//! down to a machine-word base case. The width is part of the type, so every
//! value is a fixed-size, heap-free chunk of data:
//!
//! ```text
//! U256 = Double<U128> = Double<Double<u64>>      (64-bit word build)
//! ```
//!
//! All operations on the wider types are written once, generically, against
//! [`FixedUint`] and recurse through the halves.

use core::fmt;

use rand::RngCore;

/// Base-2 log of the machine word width used as the recursion base.
#[cfg(not(feature = "limb32"))]
pub const LIMB_LOG2: u32 = 6;
#[cfg(feature = "limb32")]
pub const LIMB_LOG2: u32 = 5;

/// The machine word at the base of the recursion.
#[cfg(not(feature = "limb32"))]
pub type Limb = u64;
#[cfg(feature = "limb32")]
pub type Limb = u32;

/// A scalar usable as the base word of the recursion.
///
/// At most 64 bits wide; conversion through `u64` is lossless.
pub trait Word: Copy + Eq + Ord + fmt::Debug + Send + Sync + 'static {
    const BITS: u32;
    const ZERO: Self;

    fn to_u64(self) -> u64;
    /// Keeps the low `BITS` bits of `v`.
    fn truncate_u64(v: u64) -> Self;
}

macro_rules! impl_word {
    ($t:ty) => {
        impl Word for $t {
            const BITS: u32 = <$t>::BITS;
            const ZERO: Self = 0;

            #[inline(always)]
            fn to_u64(self) -> u64 {
                self as u64
            }

            #[inline(always)]
            fn truncate_u64(v: u64) -> Self {
                v as $t
            }
        }
    };
}

impl_word!(u8);
impl_word!(u16);
impl_word!(u32);
impl_word!(u64);

/// A `2^(k+1)`-bit value made of two `2^k`-bit halves.
///
/// The represented integer is `high * 2^(2^k) + low`. Field order matters:
/// `high` first makes the derived ordering the unsigned integer ordering.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Double<T> {
    pub high: T,
    pub low: T,
}

impl<T> Double<T> {
    #[inline(always)]
    pub const fn new(high: T, low: T) -> Self {
        Double { high, low }
    }
}

impl<T: FixedUint> fmt::Debug for Double<T>
where
    Double<T>: FixedUint,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{}", self.to_hex())
    }
}

/// Error parsing a hexadecimal string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseHexError {
    /// No hex digits in the input.
    Empty,
    /// A character outside `[0-9a-fA-F]`.
    InvalidDigit,
    /// More significant bits than the target width holds.
    Overflow,
}

impl fmt::Display for ParseHexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseHexError::Empty => write!(f, "empty hex string"),
            ParseHexError::InvalidDigit => write!(f, "invalid hex digit"),
            ParseHexError::Overflow => write!(f, "value does not fit the target width"),
        }
    }
}

impl std::error::Error for ParseHexError {}

/// A fixed-width unsigned integer of exactly `2^LEVEL` bits.
///
/// Implemented by the base words and by [`Double`] over any implementor,
/// which is how every operation recurses from level `k` to level `k - 1`.
pub trait FixedUint: Copy + Eq + Ord + fmt::Debug + Send + Sync + 'static {
    /// The word type at the base of this value's recursion.
    type Limb: Word;

    /// Recursion depth `k`; the value is exactly `2^k` bits wide.
    const LEVEL: u32;
    /// Width in bits (`2^LEVEL`).
    const BITS: u32;
    /// Number of base words.
    const LIMBS: usize;

    const ZERO: Self;
    const ONE: Self;
    const MAX: Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    /// True iff the value equals `v`, i.e. every limb above the first is zero.
    fn equals_limb(&self, v: Self::Limb) -> bool;

    /// The `n`-th base word, 0 = least significant. Panics if out of range.
    fn get_limb(&self, n: usize) -> Self::Limb;
    /// Copy with the `n`-th word replaced; all others kept. Panics if out of range.
    fn set_limb(self, v: Self::Limb, n: usize) -> Self;

    /// Left shift by `sh` bits, `sh < BITS`. Shifted-out bits are dropped.
    fn shl_bits(self, sh: u32) -> Self;
    /// Logical right shift by `sh` bits, `sh < BITS`.
    fn shr_bits(self, sh: u32) -> Self;
    fn leading_zeros(&self) -> u32;
    fn trailing_zeros(&self) -> u32;
    fn bitand(self, rhs: Self) -> Self;
    fn bitor(self, rhs: Self) -> Self;

    #[inline]
    fn get_limb0(&self) -> Self::Limb {
        self.get_limb(0)
    }

    /// The most significant base word.
    #[inline]
    fn get_limbn(&self) -> Self::Limb {
        self.get_limb(Self::LIMBS - 1)
    }

    /// Sets word 0, leaving the other words untouched.
    #[inline]
    fn set_const(self, v: Self::Limb) -> Self {
        self.set_limb(v, 0)
    }

    #[inline]
    fn from_limb(v: Self::Limb) -> Self {
        Self::ZERO.set_limb(v, 0)
    }

    #[inline]
    fn bit(&self, i: u32) -> bool {
        debug_assert!(i < Self::BITS);
        let limb = self.get_limb((i / Self::Limb::BITS) as usize);
        (limb.to_u64() >> (i % Self::Limb::BITS)) & 1 == 1
    }

    #[inline]
    fn is_odd(&self) -> bool {
        self.bit(0)
    }

    /// Uniform random value over the full width; draws low words first.
    fn random<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        let mut out = Self::ZERO;
        for i in 0..Self::LIMBS {
            out = out.set_limb(Self::Limb::truncate_u64(rng.next_u64()), i);
        }
        out
    }

    /// Uniform random value in `[0, n)`. Panics if `n` is zero.
    fn random_below<R: RngCore + ?Sized>(rng: &mut R, n: &Self) -> Self {
        assert!(!n.is_zero(), "random_below: empty range");
        // Mask down to bit_len(n) bits so at least half of all draws land.
        let mask = Self::MAX.shr_bits(n.leading_zeros());
        loop {
            let r = Self::random(rng).bitand(mask);
            if r < *n {
                return r;
            }
        }
    }

    /// Big-endian, lowercase, zero-padded to the full width (`BITS / 4` digits).
    fn to_hex(&self) -> String {
        use fmt::Write;
        let digits_per_limb = (Self::Limb::BITS / 4) as usize;
        let mut s = String::with_capacity((Self::BITS / 4) as usize);
        for i in (0..Self::LIMBS).rev() {
            write!(s, "{:0w$x}", self.get_limb(i).to_u64(), w = digits_per_limb).unwrap();
        }
        s
    }

    /// Parses big-endian hex; accepts any number of leading zeros.
    fn from_hex(s: &str) -> Result<Self, ParseHexError> {
        if s.is_empty() {
            return Err(ParseHexError::Empty);
        }
        let digits: Vec<u32> = s
            .chars()
            .map(|c| c.to_digit(16).ok_or(ParseHexError::InvalidDigit))
            .collect::<Result<_, _>>()?;
        let significant = digits
            .iter()
            .position(|&d| d != 0)
            .map_or(0, |i| digits.len() - i);
        if significant > (Self::BITS / 4) as usize {
            return Err(ParseHexError::Overflow);
        }
        let digits_per_limb = (Self::Limb::BITS / 4) as usize;
        let mut out = Self::ZERO;
        for (i, chunk) in digits.rchunks(digits_per_limb).enumerate() {
            let mut limb = 0u64;
            for &d in chunk {
                limb = (limb << 4) | d as u64;
            }
            if limb != 0 {
                out = out.set_limb(Self::Limb::truncate_u64(limb), i);
            }
        }
        Ok(out)
    }
}

macro_rules! impl_fixed_uint_base {
    ($t:ty, $level:expr) => {
        impl FixedUint for $t {
            type Limb = $t;

            const LEVEL: u32 = $level;
            const BITS: u32 = <$t>::BITS;
            const LIMBS: usize = 1;

            const ZERO: Self = 0;
            const ONE: Self = 1;
            const MAX: Self = <$t>::MAX;

            #[inline(always)]
            fn is_zero(&self) -> bool {
                *self == 0
            }

            #[inline(always)]
            fn is_one(&self) -> bool {
                *self == 1
            }

            #[inline(always)]
            fn equals_limb(&self, v: Self::Limb) -> bool {
                *self == v
            }

            #[inline(always)]
            fn get_limb(&self, n: usize) -> Self::Limb {
                assert!(n < 1, "limb index {n} out of range");
                *self
            }

            #[inline(always)]
            fn set_limb(self, v: Self::Limb, n: usize) -> Self {
                assert!(n < 1, "limb index {n} out of range");
                v
            }

            #[inline(always)]
            fn shl_bits(self, sh: u32) -> Self {
                debug_assert!(sh < Self::BITS);
                self << sh
            }

            #[inline(always)]
            fn shr_bits(self, sh: u32) -> Self {
                debug_assert!(sh < Self::BITS);
                self >> sh
            }

            #[inline(always)]
            fn leading_zeros(&self) -> u32 {
                <$t>::leading_zeros(*self)
            }

            #[inline(always)]
            fn trailing_zeros(&self) -> u32 {
                <$t>::trailing_zeros(*self)
            }

            #[inline(always)]
            fn bitand(self, rhs: Self) -> Self {
                self & rhs
            }

            #[inline(always)]
            fn bitor(self, rhs: Self) -> Self {
                self | rhs
            }
        }
    };
}

impl_fixed_uint_base!(u8, 3);
impl_fixed_uint_base!(u16, 4);
impl_fixed_uint_base!(u32, 5);
impl_fixed_uint_base!(u64, 6);

impl<T: FixedUint> FixedUint for Double<T> {
    type Limb = T::Limb;

    const LEVEL: u32 = T::LEVEL + 1;
    const BITS: u32 = 2 * T::BITS;
    const LIMBS: usize = 2 * T::LIMBS;

    const ZERO: Self = Double { high: T::ZERO, low: T::ZERO };
    const ONE: Self = Double { high: T::ZERO, low: T::ONE };
    const MAX: Self = Double { high: T::MAX, low: T::MAX };

    #[inline(always)]
    fn is_zero(&self) -> bool {
        self.high.is_zero() && self.low.is_zero()
    }

    #[inline(always)]
    fn is_one(&self) -> bool {
        self.high.is_zero() && self.low.is_one()
    }

    #[inline(always)]
    fn equals_limb(&self, v: Self::Limb) -> bool {
        self.high.is_zero() && self.low.equals_limb(v)
    }

    #[inline]
    fn get_limb(&self, n: usize) -> Self::Limb {
        assert!(n < Self::LIMBS, "limb index {n} out of range");
        if n < T::LIMBS {
            self.low.get_limb(n)
        } else {
            self.high.get_limb(n - T::LIMBS)
        }
    }

    #[inline]
    fn set_limb(self, v: Self::Limb, n: usize) -> Self {
        assert!(n < Self::LIMBS, "limb index {n} out of range");
        if n < T::LIMBS {
            Double { high: self.high, low: self.low.set_limb(v, n) }
        } else {
            Double { high: self.high.set_limb(v, n - T::LIMBS), low: self.low }
        }
    }

    #[inline]
    fn shl_bits(self, sh: u32) -> Self {
        debug_assert!(sh < Self::BITS);
        if sh == 0 {
            self
        } else if sh < T::BITS {
            let high = self
                .high
                .shl_bits(sh)
                .bitor(self.low.shr_bits(T::BITS - sh));
            Double { high, low: self.low.shl_bits(sh) }
        } else {
            Double { high: self.low.shl_bits(sh - T::BITS), low: T::ZERO }
        }
    }

    #[inline]
    fn shr_bits(self, sh: u32) -> Self {
        debug_assert!(sh < Self::BITS);
        if sh == 0 {
            self
        } else if sh < T::BITS {
            let low = self
                .low
                .shr_bits(sh)
                .bitor(self.high.shl_bits(T::BITS - sh));
            Double { high: self.high.shr_bits(sh), low }
        } else {
            Double { high: T::ZERO, low: self.high.shr_bits(sh - T::BITS) }
        }
    }

    #[inline]
    fn leading_zeros(&self) -> u32 {
        if self.high.is_zero() {
            T::BITS + self.low.leading_zeros()
        } else {
            self.high.leading_zeros()
        }
    }

    #[inline]
    fn trailing_zeros(&self) -> u32 {
        if self.low.is_zero() {
            T::BITS + self.high.trailing_zeros()
        } else {
            self.low.trailing_zeros()
        }
    }

    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        Double {
            high: self.high.bitand(rhs.high),
            low: self.low.bitand(rhs.low),
        }
    }

    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        Double {
            high: self.high.bitor(rhs.high),
            low: self.low.bitor(rhs.low),
        }
    }
}

#[cfg(not(feature = "limb32"))]
/// 64-bit unsigned integer (the base word on this build).
pub type U64 = Limb;

#[cfg(feature = "limb32")]
/// 32-bit unsigned integer (the base word on this build).
pub type U32 = Limb;
#[cfg(feature = "limb32")]
/// 64-bit unsigned integer.
pub type U64 = Double<Limb>;

/// 128-bit unsigned integer.
pub type U128 = Double<U64>;
/// 256-bit unsigned integer.
pub type U256 = Double<U128>;
/// 512-bit unsigned integer.
pub type U512 = Double<U256>;
/// 1024-bit unsigned integer.
pub type U1024 = Double<U512>;
/// 2048-bit unsigned integer.
pub type U2048 = Double<U1024>;
/// 4096-bit unsigned integer.
pub type U4096 = Double<U2048>;

#[cfg(not(feature = "limb32"))]
/// 8192-bit unsigned integer.
pub type U8192 = Double<U4096>;
