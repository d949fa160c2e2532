//! Schoolbook arbitrary-precision natural numbers.
//!
//! Digits are base 2^32 so every intermediate fits plain `u64` arithmetic;
//! the library under test builds on 64-bit words and 128-bit widening, so
//! the two sides share no multiply primitive. Clarity over speed throughout.

use core::cmp::Ordering;
use core::fmt;

use hilo::{FixedUint, Word};
use rand::RngCore;

const BASE_BITS: usize = 32;

/// Little-endian base-2^32 digits, no trailing zero digit; zero is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BigNat {
    digits: Vec<u32>,
}

/// Error parsing a hexadecimal string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseError;

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid hex string")
    }
}

impl std::error::Error for ParseError {}

impl fmt::Debug for BigNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{}", self.to_hex())
    }
}

impl PartialOrd for BigNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigNat {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.digits.len() != other.digits.len() {
            return self.digits.len().cmp(&other.digits.len());
        }
        for (a, b) in self.digits.iter().rev().zip(other.digits.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl BigNat {
    pub fn zero() -> Self {
        BigNat { digits: Vec::new() }
    }

    pub fn one() -> Self {
        BigNat { digits: vec![1] }
    }

    pub fn from_u64(v: u64) -> Self {
        Self::normalized(vec![v as u32, (v >> 32) as u32])
    }

    pub fn from_u128(v: u128) -> Self {
        Self::normalized(vec![
            v as u32,
            (v >> 32) as u32,
            (v >> 64) as u32,
            (v >> 96) as u32,
        ])
    }

    fn normalized(mut digits: Vec<u32>) -> Self {
        while digits.last() == Some(&0) {
            digits.pop();
        }
        BigNat { digits }
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.digits == [1]
    }

    pub fn is_odd(&self) -> bool {
        self.digits.first().is_some_and(|d| d & 1 == 1)
    }

    pub fn to_u64(&self) -> u64 {
        assert!(self.digits.len() <= 2, "value does not fit u64");
        let lo = self.digits.first().copied().unwrap_or(0) as u64;
        let hi = self.digits.get(1).copied().unwrap_or(0) as u64;
        (hi << 32) | lo
    }

    pub fn to_u128(&self) -> u128 {
        assert!(self.digits.len() <= 4, "value does not fit u128");
        let mut v = 0u128;
        for d in self.digits.iter().rev() {
            v = (v << 32) | *d as u128;
        }
        v
    }

    pub fn bit_len(&self) -> usize {
        match self.digits.last() {
            None => 0,
            Some(&top) => {
                (self.digits.len() - 1) * BASE_BITS + (32 - top.leading_zeros() as usize)
            }
        }
    }

    pub fn bit(&self, i: usize) -> bool {
        self.digits
            .get(i / BASE_BITS)
            .is_some_and(|d| (d >> (i % BASE_BITS)) & 1 == 1)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.digits.len().max(rhs.digits.len());
        let mut out = Vec::with_capacity(n + 1);
        let mut carry = 0u64;
        for i in 0..n {
            let a = self.digits.get(i).copied().unwrap_or(0) as u64;
            let b = rhs.digits.get(i).copied().unwrap_or(0) as u64;
            let s = a + b + carry;
            out.push(s as u32);
            carry = s >> 32;
        }
        out.push(carry as u32);
        Self::normalized(out)
    }

    /// Panics if `rhs > self`.
    pub fn sub(&self, rhs: &Self) -> Self {
        assert!(self >= rhs, "subtraction underflow");
        let mut out = Vec::with_capacity(self.digits.len());
        let mut borrow = 0u64;
        for i in 0..self.digits.len() {
            let a = self.digits[i] as u64;
            let b = rhs.digits.get(i).copied().unwrap_or(0) as u64 + borrow;
            if a >= b {
                out.push((a - b) as u32);
                borrow = 0;
            } else {
                out.push((a + (1u64 << 32) - b) as u32);
                borrow = 1;
            }
        }
        debug_assert_eq!(borrow, 0);
        Self::normalized(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0u32; self.digits.len() + rhs.digits.len()];
        for (i, &a) in self.digits.iter().enumerate() {
            let mut carry = 0u64;
            for (j, &b) in rhs.digits.iter().enumerate() {
                let t = a as u64 * b as u64 + out[i + j] as u64 + carry;
                out[i + j] = t as u32;
                carry = t >> 32;
            }
            out[i + rhs.digits.len()] = carry as u32;
        }
        Self::normalized(out)
    }

    /// Quotient and remainder. Panics if `rhs` is zero.
    pub fn divmod(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero");
        if self < rhs {
            return (Self::zero(), self.clone());
        }
        if rhs.digits.len() == 1 {
            return self.divmod_digit(rhs.digits[0]);
        }

        // Long division, one quotient digit per step, with the divisor
        // scaled so its top digit has its high bit set.
        let n = rhs.digits.len();
        let m = self.digits.len() - n;
        let shift = rhs.digits[n - 1].leading_zeros() as usize;
        let v = rhs.shl(shift).digits;
        let mut u = self.shl(shift).digits;
        u.resize(self.digits.len() + 1, 0);

        let mut q = vec![0u32; m + 1];
        for j in (0..=m).rev() {
            let num = ((u[j + n] as u64) << 32) | u[j + n - 1] as u64;
            let mut qhat = num / v[n - 1] as u64;
            let mut rhat = num % v[n - 1] as u64;
            while qhat >= 1 << 32
                || qhat * v[n - 2] as u64 > ((rhat << 32) | u[j + n - 2] as u64)
            {
                qhat -= 1;
                rhat += v[n - 1] as u64;
                if rhat >= 1 << 32 {
                    break;
                }
            }

            // u[j..j+n+1] -= qhat * v, tracked with a signed borrow.
            let mut borrow = 0i64;
            for i in 0..n {
                let p = qhat * v[i] as u64;
                let t = u[i + j] as i64 - borrow - (p as u32) as i64;
                u[i + j] = t as u32;
                borrow = (p >> 32) as i64 - (t >> 32);
            }
            let t = u[j + n] as i64 - borrow;
            u[j + n] = t as u32;

            if t < 0 {
                // Estimate was one too large; add the divisor back.
                qhat -= 1;
                let mut carry = 0u64;
                for i in 0..n {
                    let s = u[i + j] as u64 + v[i] as u64 + carry;
                    u[i + j] = s as u32;
                    carry = s >> 32;
                }
                u[j + n] = (u[j + n] as u64 + carry) as u32;
            }
            q[j] = qhat as u32;
        }

        let r = Self::normalized(u[..n].to_vec()).shr(shift);
        (Self::normalized(q), r)
    }

    fn divmod_digit(&self, d: u32) -> (Self, Self) {
        let mut q = vec![0u32; self.digits.len()];
        let mut rem = 0u64;
        for i in (0..self.digits.len()).rev() {
            let cur = (rem << 32) | self.digits[i] as u64;
            q[i] = (cur / d as u64) as u32;
            rem = cur % d as u64;
        }
        (Self::normalized(q), Self::from_u64(rem))
    }

    pub fn rem(&self, rhs: &Self) -> Self {
        self.divmod(rhs).1
    }

    pub fn shl(&self, bits: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (words, bits) = (bits / BASE_BITS, bits % BASE_BITS);
        let mut out = vec![0u32; words];
        if bits == 0 {
            out.extend_from_slice(&self.digits);
        } else {
            let mut carry = 0u32;
            for &d in &self.digits {
                out.push((d << bits) | carry);
                carry = d >> (BASE_BITS - bits);
            }
            out.push(carry);
        }
        Self::normalized(out)
    }

    pub fn shr(&self, bits: usize) -> Self {
        let (words, bits) = (bits / BASE_BITS, bits % BASE_BITS);
        if words >= self.digits.len() {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.digits.len() - words);
        if bits == 0 {
            out.extend_from_slice(&self.digits[words..]);
        } else {
            for i in words..self.digits.len() {
                let lo = self.digits[i] >> bits;
                let hi = self
                    .digits
                    .get(i + 1)
                    .map_or(0, |d| d << (BASE_BITS - bits));
                out.push(hi | lo);
            }
        }
        Self::normalized(out)
    }

    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Extended gcd: `(g, (u_nonneg, |u|), (v_nonneg, |v|))` with
    /// `u*a + v*b = g`. Panics if both inputs are zero.
    #[allow(clippy::type_complexity)]
    pub fn extgcd(&self, rhs: &Self) -> (Self, (bool, Self), (bool, Self)) {
        assert!(!(self.is_zero() && rhs.is_zero()));
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = ((true, Self::one()), (true, Self::zero()));
        let (mut t0, mut t1) = ((true, Self::zero()), (true, Self::one()));
        while !r1.is_zero() {
            let (q, r2) = r0.divmod(&r1);
            r0 = r1;
            r1 = r2;
            let s2 = signed_sub_mul(&s0, &q, &s1);
            s0 = s1;
            s1 = s2;
            let t2 = signed_sub_mul(&t0, &q, &t1);
            t0 = t1;
            t1 = t2;
        }
        (r0, s0, t0)
    }

    /// `self^e mod n` with `0^0 = 1`. Panics if `n` is zero.
    pub fn powmod(&self, e: &Self, n: &Self) -> Self {
        assert!(!n.is_zero(), "division by zero");
        if n.is_one() {
            return Self::zero();
        }
        let bits = e.bit_len();
        let mut acc = Self::one();
        let mut base = self.rem(n);
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(n);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(n);
            }
        }
        acc
    }

    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = format!("{:x}", self.digits.last().unwrap());
        for d in self.digits.iter().rev().skip(1) {
            s.push_str(&format!("{d:08x}"));
        }
        s
    }

    pub fn from_hex(s: &str) -> Result<Self, ParseError> {
        if s.is_empty() {
            return Err(ParseError);
        }
        let digits: Vec<u32> = s
            .chars()
            .map(|c| c.to_digit(16).ok_or(ParseError))
            .collect::<Result<_, _>>()?;
        let mut out = Vec::new();
        for chunk in digits.rchunks(8) {
            let mut d = 0u32;
            for &c in chunk {
                d = (d << 4) | c;
            }
            out.push(d);
        }
        Ok(Self::normalized(out))
    }

    /// Exact bridge from a fixed-width value: concatenates its words.
    pub fn from_fixed<T: FixedUint>(a: &T) -> Self {
        let w = T::Limb::BITS as usize;
        if w.is_multiple_of(BASE_BITS) {
            let mut out = Vec::with_capacity(T::LIMBS * w / BASE_BITS);
            for i in 0..T::LIMBS {
                let v = a.get_limb(i).to_u64();
                for j in 0..w / BASE_BITS {
                    out.push((v >> (32 * j)) as u32);
                }
            }
            Self::normalized(out)
        } else {
            let mut out = Self::zero();
            for i in (0..T::LIMBS).rev() {
                out = out.shl(w).add(&Self::from_u64(a.get_limb(i).to_u64()));
            }
            out
        }
    }

    /// Exact bridge back. Panics if the value needs more than `2^k` bits.
    pub fn to_fixed<T: FixedUint>(&self) -> T {
        assert!(
            self.bit_len() <= T::BITS as usize,
            "value does not fit the fixed width"
        );
        let w = T::Limb::BITS as usize;
        let mut out = T::ZERO;
        for i in 0..T::LIMBS {
            let v = self.bits_range(i * w, w as u32);
            if v != 0 {
                out = out.set_limb(T::Limb::truncate_u64(v), i);
            }
        }
        out
    }

    /// The `width <= 64` bits starting at bit `start`, as a `u64`.
    pub fn bits_range(&self, start: usize, width: u32) -> u64 {
        debug_assert!(width <= 64);
        let mut v = 0u64;
        for k in 0..width as usize {
            if self.bit(start + k) {
                v |= 1 << k;
            }
        }
        v
    }

    /// Uniform value with at most `bits` bits.
    pub fn random_bits<R: RngCore + ?Sized>(rng: &mut R, bits: usize) -> Self {
        let mut digits = Vec::with_capacity(bits.div_ceil(BASE_BITS));
        let mut left = bits;
        while left > 0 {
            let take = left.min(BASE_BITS);
            let mask = if take == 32 { u32::MAX } else { (1 << take) - 1 };
            digits.push(rng.next_u32() & mask);
            left -= take;
        }
        Self::normalized(digits)
    }

    /// Uniform value in `[0, n)`. Panics if `n` is zero.
    pub fn random_below<R: RngCore + ?Sized>(rng: &mut R, n: &Self) -> Self {
        assert!(!n.is_zero());
        loop {
            let r = Self::random_bits(rng, n.bit_len());
            if r < *n {
                return r;
            }
        }
    }

    /// Miller-Rabin with small-prime trial division first. Composite means
    /// definitely composite; prime means prime with overwhelming odds.
    pub fn is_probable_prime<R: RngCore + ?Sized>(&self, rng: &mut R, rounds: u32) -> bool {
        const SMALL_PRIMES: [u32; 25] = [
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
            79, 83, 89, 97,
        ];
        if self.digits.len() == 1 || self.is_zero() {
            let v = self.digits.first().copied().unwrap_or(0);
            if v < 2 {
                return false;
            }
            if SMALL_PRIMES.contains(&v) {
                return true;
            }
        }
        for p in SMALL_PRIMES {
            if self.rem(&Self::from_u64(p as u64)).is_zero() {
                return false;
            }
        }
        let one = Self::one();
        let n_m1 = self.sub(&one);
        let s = n_m1.trailing_zeros();
        let d = n_m1.shr(s);
        'witness: for _ in 0..rounds {
            let a = Self::random_below(rng, &n_m1.sub(&one)).add(&Self::from_u64(2));
            let mut x = a.powmod(&d, self);
            if x.is_one() || x == n_m1 {
                continue;
            }
            for _ in 0..s - 1 {
                x = x.mul(&x).rem(self);
                if x == n_m1 {
                    continue 'witness;
                }
            }
            return false;
        }
        true
    }

    fn trailing_zeros(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut i = 0;
        while !self.bit(i) {
            i += 1;
        }
        i
    }
}

// x - q * y over (sign, magnitude) pairs; zero is canonically non-negative.
fn signed_sub_mul(
    x: &(bool, BigNat),
    q: &BigNat,
    y: &(bool, BigNat),
) -> (bool, BigNat) {
    let qy = q.mul(&y.1);
    // Sign of the -q*y term.
    let qy_nonneg = !y.0 || qy.is_zero();
    let (nonneg, magnitude) = if x.0 == qy_nonneg {
        (x.0, x.1.add(&qy))
    } else if x.1 >= qy {
        (x.0, x.1.sub(&qy))
    } else {
        (qy_nonneg, qy.sub(&x.1))
    };
    (nonneg || magnitude.is_zero(), magnitude)
}
