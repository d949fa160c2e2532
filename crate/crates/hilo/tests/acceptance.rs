//! Acceptance suite. One test per criterion; each prints a PASS line with
//! volume and timing when it completes (visible with `--nocapture`), and the
//! test name itself reports the verdict under plain `cargo test`.
//!
//! Covered here:
//!   1. full-volume oracle differential sweep over every public operation,
//!      10^4 random cases per operation per width from 64 to 1024 bits;
//!   2. exhaustive verification of the division sub-algorithms and
//!      Montgomery reduction on a 4-bit synthetic base (all moduli < 2^8,
//!      all valid inputs);
//!   3. truncated-product coherence with the full product on 10^5 pairs;
//!   4. base-word multiplication counts of the truncated vs full product;
//!   5. the reduction cost of one truncated plus one complete product;
//!   6. Fermat / inverse / square-root identities on random primes;
//!   7. Montgomery round trips against the division-based route.
//!
//! The benchmark-facing criteria (8, 9) live in the bench crate's own
//! acceptance test.

use std::time::Instant;

use hilo::modular::{
    add_mod, div_mod, exp_mod, exp_mod_limb, inv_mod, is_quadratic_residue, mul_mod,
    mul_mod_limb, neg_mod, reduce, square_mod, square_root_mod, sub_mod, ModError, ModRing,
};
use hilo::{
    div3n2n, ext_gcd, gcd, Double, EuclidDiv, FixedUint, MontgomeryContext, Word,
    U1024, U128, U256, U512, U64,
};
use hilo_oracle::{mul_count, reset_mul_count, BigNat, CountingWord, Toy16, Toy8, U4};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const CASES: usize = 10_000;
const SEED: u64 = 0x5EED_0ACC;

fn case_rng(tag: u64, i: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        SEED.wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(tag.wrapping_mul(0xD1B5_4A32_D192_ED03))
            .wrapping_add(i),
    )
}

fn nat<T: FixedUint>(x: &T) -> BigNat {
    BigNat::from_fixed(x)
}

fn random_modulus<T: EuclidDiv, R: RngCore>(rng: &mut R) -> T {
    let n = T::random(rng);
    if n.is_zero() || n.is_one() {
        T::from_limb(T::Limb::truncate_u64(2))
    } else {
        n
    }
}

fn random_odd<T: EuclidDiv, R: RngCore>(rng: &mut R) -> T {
    let n = T::random(rng).bitor(T::ONE);
    if n.is_one() {
        T::from_limb(T::Limb::truncate_u64(3))
    } else {
        n
    }
}

// Every cheap operation on shared operands: one oracle image per value,
// dozens of checks per case.
fn sweep_core_ops<T: EuclidDiv>(cases: usize) -> u64 {
    let level = T::LEVEL as u64;
    let r_nat = BigNat::one().shl(T::BITS as usize);
    (0..cases).into_par_iter().for_each(|i| {
        let mut rng = case_rng(level, i as u64);
        let a = T::random(&mut rng);
        let b = T::random(&mut rng);
        let v = T::Limb::truncate_u64(rng.next_u64());
        let (na, nb) = (nat(&a), nat(&b));
        let nv = BigNat::from_u64(v.to_u64());

        // ring: carry/borrow arithmetic
        let (sum, carry) = a.overflowing_add(b);
        let osum = na.add(&nb);
        assert_eq!(nat(&sum), osum.rem(&r_nat));
        assert_eq!(carry, osum.bit_len() > T::BITS as usize);
        assert_eq!(a.wrapping_add(b), sum);

        let (diff, borrow) = a.overflowing_sub(b);
        let odiff = if na >= nb { na.sub(&nb) } else { na.add(&r_nat).sub(&nb) };
        assert_eq!(nat(&diff), odiff);
        assert_eq!(borrow, na < nb);
        assert_eq!(a.wrapping_sub(b), diff);

        let (s_limb, c_limb) = a.add_limb(v);
        let ol = na.add(&nv);
        assert_eq!(nat(&s_limb), ol.rem(&r_nat));
        assert_eq!(c_limb, ol.bit_len() > T::BITS as usize);
        let (d_limb, b_limb) = a.sub_limb(v);
        let odl = if na >= nv { na.sub(&nv) } else { na.add(&r_nat).sub(&nv) };
        assert_eq!(nat(&d_limb), odl);
        assert_eq!(b_limb, na < nv);

        let (inc, c_inc) = a.increment();
        let oi = na.add(&BigNat::one());
        assert_eq!(nat(&inc), oi.rem(&r_nat));
        assert_eq!(c_inc, oi.bit_len() > T::BITS as usize);
        let (dec, b_dec) = a.decrement();
        assert_eq!(b_dec, na.is_zero());
        if !na.is_zero() {
            assert_eq!(nat(&dec), na.sub(&BigNat::one()));
        } else {
            assert_eq!(nat(&dec), r_nat.sub(&BigNat::one()));
        }

        // ring: products
        let prod = a.widening_mul(b);
        let oprod = na.mul(&nb);
        assert_eq!(nat(&prod.low), oprod.rem(&r_nat));
        assert_eq!(nat(&prod.high), oprod.divmod(&r_nat).0);
        assert_eq!(a.wrapping_mul(b), prod.low);

        let (ph, pl) = a.widening_mul_limb(v);
        let opl = na.mul(&nv);
        assert_eq!(nat(&pl), opl.rem(&r_nat));
        assert_eq!(BigNat::from_u64(ph.to_u64()), opl.divmod(&r_nat).0);

        let sq = a.widening_square();
        let osq = na.mul(&na);
        assert_eq!(nat(&sq.low), osq.rem(&r_nat));
        assert_eq!(nat(&sq.high), osq.divmod(&r_nat).0);

        // division
        let d = if b.is_zero() { T::ONE } else { b };
        let nd = nat(&d);
        let (q, r) = a.divrem(d);
        let (oq, or) = na.divmod(&nd);
        assert_eq!(nat(&q), oq);
        assert_eq!(nat(&r), or);
        assert_eq!(a.div_quotient(d), q);
        assert_eq!(a.div_remainder(d), r);

        let dn = d.bitor(T::ONE.shl_bits(T::BITS - 1));
        let hi = T::random_below(&mut rng, &dn);
        let (q2, r2) = T::div2n1n(hi, a, dn);
        let (oq2, or2) = nat(&hi).shl(T::BITS as usize).add(&na).divmod(&nat(&dn));
        assert_eq!(nat(&q2), oq2);
        assert_eq!(nat(&r2), or2);

        // number theory
        if !(a.is_zero() && b.is_zero()) {
            let g = gcd(a, b);
            assert_eq!(nat(&g), na.gcd(&nb));
            let (g2, u, w) = ext_gcd(a, b);
            assert_eq!(g2, g);
            let ua = nat(&u.magnitude).mul(&na);
            let wb = nat(&w.magnitude).mul(&nb);
            let total = match (u.nonneg, w.nonneg) {
                (true, true) => ua.add(&wb),
                (true, false) => ua.sub(&wb),
                (false, true) => wb.sub(&ua),
                (false, false) => panic!("both coefficients negative"),
            };
            assert_eq!(total, nat(&g));
        }

        // modular, explicit modulus
        let n: T = random_modulus(&mut rng);
        let nn = nat(&n);
        let (ra, rb) = (na.rem(&nn), nb.rem(&nn));
        assert_eq!(nat(&reduce(a, n)), ra);
        assert_eq!(
            nat(&neg_mod(a, n)),
            if ra.is_zero() { BigNat::zero() } else { nn.sub(&ra) }
        );
        assert_eq!(nat(&add_mod(a, b, n)), ra.add(&rb).rem(&nn));
        assert_eq!(
            nat(&sub_mod(a, b, n)),
            if ra >= rb { ra.sub(&rb) } else { ra.add(&nn).sub(&rb) }
        );
        assert_eq!(nat(&mul_mod(a, b, n)), ra.mul(&rb).rem(&nn));
        assert_eq!(nat(&mul_mod_limb(a, v, n)), ra.mul(&nv).rem(&nn));
        assert_eq!(nat(&square_mod(a, n)), ra.mul(&ra).rem(&nn));

        let og = ra.gcd(&nn);
        match inv_mod(a, n) {
            Ok(inv) => {
                assert!(og.is_one());
                assert!(inv < n);
                assert!(nat(&inv).mul(&ra).rem(&nn).is_one());
            }
            Err(ModError::NotInvertible { gcd }) => {
                assert_eq!(nat(&gcd), og);
                assert!(!og.is_one());
            }
            Err(e) => panic!("unexpected {e:?}"),
        }
        match div_mod(a, b, n) {
            // res * b = a (mod n) pins res = a * b^-1.
            Ok(res) => assert_eq!(nat(&res).mul(&rb).rem(&nn), ra),
            Err(ModError::NotInvertible { gcd }) => {
                assert_eq!(nat(&gcd), rb.gcd(&nn));
            }
            Err(e) => panic!("unexpected {e:?}"),
        }

        // modular, ring elements
        let ring = ModRing::new(n).unwrap();
        assert_eq!(ring.modulus(), n);
        let (x, y) = (ring.element(a), ring.element(b));
        assert_eq!(nat(&x.value()), ra);
        assert_eq!(x.add(y).value(), add_mod(a, b, n));
        assert_eq!(x.sub(y).value(), sub_mod(a, b, n));
        assert_eq!(x.neg().value(), neg_mod(a, n));
        assert_eq!(x.mul(y).value(), mul_mod(a, b, n));
        assert_eq!(x.square().value(), square_mod(a, n));
        match (x.inv(), inv_mod(a, n)) {
            (Ok(xi), Ok(iv)) => assert_eq!(xi.value(), iv),
            (Err(e1), Err(e2)) => assert_eq!(e1, e2),
            other => panic!("element/function inverse disagree: {other:?}"),
        }
        match (x.div(y), div_mod(a, b, n)) {
            (Ok(xd), Ok(fd)) => assert_eq!(xd.value(), fd),
            (Err(e1), Err(e2)) => assert_eq!(e1, e2),
            other => panic!("element/function division disagree: {other:?}"),
        }
        let z = ring.random_element(&mut rng);
        assert!(z.value() < n);

        // montgomery
        let m: T = random_odd(&mut rng);
        let nm = nat(&m);
        let ctx = MontgomeryContext::new(m).unwrap();
        assert_eq!(
            nm.mul(&nat(&ctx.n_prime())).rem(&r_nat),
            r_nat.sub(&BigNat::one())
        );
        assert_eq!(nat(&ctx.r2_mod_n()), r_nat.mul(&r_nat).rem(&nm));

        let t = Double::new(T::random_below(&mut rng, &m), a);
        let red = ctx.redc(t);
        assert!(red < m);
        // red = t / R (mod m), checked multiplicatively: red * R = t.
        let t_nat = nat(&t.high).shl(T::BITS as usize).add(&nat(&t.low));
        assert_eq!(
            nat(&red).shl(T::BITS as usize).rem(&nm),
            t_nat.rem(&nm)
        );

        let abar = ctx.to_mont(a);
        assert_eq!(nat(&abar), na.shl(T::BITS as usize).rem(&nm));
        assert_eq!(nat(&ctx.from_mont(abar)), na.rem(&nm));
        let bbar = ctx.to_mont(b);
        let mm = ctx.mul(abar, bbar);
        assert_eq!(
            nat(&mm).shl(T::BITS as usize).rem(&nm),
            nat(&abar).mul(&nat(&bbar)).rem(&nm)
        );
    });
    (cases * 30) as u64
}

// Quotients one digit at a time: the three-half-digits by two sub-algorithm
// at every composite width.
fn sweep_div3n2n<H: EuclidDiv>(cases: usize) {
    let tag = 0x1000 + H::LEVEL as u64;
    (0..cases).into_par_iter().for_each(|i| {
        let mut rng = case_rng(tag, i as u64);
        let b = Double::new(
            H::random(&mut rng).bitor(H::ONE.shl_bits(H::BITS - 1)),
            H::random(&mut rng),
        );
        let a12 = Double::<H>::random_below(&mut rng, &b);
        let a3 = H::random(&mut rng);
        let (q, r) = div3n2n(a12, a3, b);
        let dividend = nat(&a12).shl(H::BITS as usize).add(&nat(&a3));
        let (oq, or) = dividend.divmod(&nat(&b));
        assert_eq!(nat(&q), oq);
        assert_eq!(nat(&r), or);
    });
}

// The exponentiation family shares one oracle power per case.
fn sweep_exponentiation<T: EuclidDiv>(cases: usize) {
    let tag = 0x2000 + T::LEVEL as u64;
    (0..cases).into_par_iter().for_each(|i| {
        let mut rng = case_rng(tag, i as u64);
        let a = T::random(&mut rng);
        let e = T::random(&mut rng);
        let n: T = random_odd(&mut rng);
        let expect = nat(&a).powmod(&nat(&e), &nat(&n));

        assert_eq!(nat(&exp_mod(a, e, n)), expect);
        let ctx = MontgomeryContext::new(n).unwrap();
        assert_eq!(nat(&ctx.exp(reduce(a, n), e)), expect);
        let ring = ModRing::new(n).unwrap();
        assert_eq!(nat(&ring.element(a).exp(e).value()), expect);

        // Division-based route through an even modulus.
        if i % 16 == 0 {
            let n_even = {
                let n = T::random(&mut rng).bitand(T::MAX.wrapping_sub(T::ONE));
                if n.is_zero() { T::from_limb(T::Limb::truncate_u64(2)) } else { n }
            };
            let small_e = T::from_limb(T::Limb::truncate_u64(rng.next_u64() & 0x3FF));
            assert_eq!(
                nat(&exp_mod(a, small_e, n_even)),
                nat(&a).powmod(&nat(&small_e), &nat(&n_even))
            );
        }
    });
}

fn sweep_exp_limb<T: EuclidDiv>(cases: usize) {
    let tag = 0x3000 + T::LEVEL as u64;
    (0..cases).into_par_iter().for_each(|i| {
        let mut rng = case_rng(tag, i as u64);
        let a = T::random(&mut rng);
        let e = T::Limb::truncate_u64(rng.next_u64());
        let n: T = random_modulus(&mut rng);
        assert_eq!(
            nat(&exp_mod_limb(a, e, n)),
            nat(&a).powmod(&BigNat::from_u64(e.to_u64()), &nat(&n))
        );
    });
}

fn gen_prime<R: RngCore>(rng: &mut R, bits: usize) -> BigNat {
    loop {
        let mut c = BigNat::one()
            .shl(bits - 1)
            .add(&BigNat::random_bits(rng, bits - 1));
        if !c.is_odd() {
            c = c.add(&BigNat::one());
        }
        if c.is_probable_prime(rng, 24) {
            return c;
        }
    }
}

// Residue classifications and square roots modulo generated primes. The
// boolean side is anchored on oracle Euler tests for a slice of the cases
// and on multiplicativity for the rest; roots are re-squared in the oracle.
fn sweep_quadratic<T: EuclidDiv>(cases: usize) {
    let tag = 0x4000 + T::LEVEL as u64;
    let mut prng = case_rng(tag, u64::MAX);
    let primes: Vec<T> = (0..3)
        .map(|_| gen_prime(&mut prng, T::BITS as usize).to_fixed())
        .collect();
    (0..cases).into_par_iter().for_each(|i| {
        let mut rng = case_rng(tag, i as u64);
        let p = primes[i % primes.len()];
        let np = nat(&p);

        // A residue constructed in the oracle.
        let x = T::random_below(&mut rng, &p);
        let b_nat = nat(&x).mul(&nat(&x)).rem(&np);
        let b: T = b_nat.to_fixed();
        assert!(is_quadratic_residue(b, p));
        let root = square_root_mod(b, p).expect("constructed residue has a root");
        assert_eq!(nat(&root).mul(&nat(&root)).rem(&np), b_nat);

        // An arbitrary value: classification must be multiplicatively
        // consistent with the known residue, and roots must exist exactly
        // for the residues.
        let y = T::random_below(&mut rng, &p);
        let y_qr = is_quadratic_residue(y, p);
        if !y.is_zero() && !b.is_zero() {
            let yb: T = nat(&y).mul(&b_nat).rem(&np).to_fixed();
            assert_eq!(is_quadratic_residue(yb, p), y_qr);
        }
        match square_root_mod(y, p) {
            Ok(r) => {
                assert!(y_qr);
                assert_eq!(nat(&r).mul(&nat(&r)).rem(&np), nat(&y));
            }
            Err(ModError::NotAResidue) => assert!(!y_qr),
            Err(e) => panic!("unexpected {e:?}"),
        }

        // Direct Euler-criterion anchor on a slice of the cases.
        if i < 200 {
            let euler = nat(&y).powmod(&np.sub(&BigNat::one()).shr(1), &np);
            let oracle_qr = nat(&y).rem(&np).is_zero() || euler.is_one();
            assert_eq!(y_qr, oracle_qr);
        }
    });
}

#[test]
fn criterion_1_oracle_differential() {
    let start = Instant::now();
    let mut checks = 0u64;
    checks += sweep_core_ops::<U64>(CASES);
    checks += sweep_core_ops::<U128>(CASES);
    checks += sweep_core_ops::<U256>(CASES);
    checks += sweep_core_ops::<U512>(CASES);
    checks += sweep_core_ops::<U1024>(CASES);

    sweep_div3n2n::<U64>(CASES);
    sweep_div3n2n::<U128>(CASES);
    sweep_div3n2n::<U256>(CASES);
    sweep_div3n2n::<U512>(CASES);

    sweep_exp_limb::<U64>(CASES);
    sweep_exp_limb::<U128>(CASES);
    sweep_exp_limb::<U256>(CASES);
    sweep_exp_limb::<U512>(CASES);
    sweep_exp_limb::<U1024>(CASES);

    sweep_exponentiation::<U64>(CASES);
    sweep_exponentiation::<U128>(CASES);
    sweep_exponentiation::<U256>(CASES);
    sweep_exponentiation::<U512>(CASES);
    sweep_exponentiation::<U1024>(CASES);

    sweep_quadratic::<U64>(CASES);
    sweep_quadratic::<U128>(CASES);
    sweep_quadratic::<U256>(CASES);
    sweep_quadratic::<U512>(CASES);
    sweep_quadratic::<U1024>(CASES);

    println!(
        "[acceptance] criterion 1 (oracle differential, {} core checks + div3n2n/exp/quadratic sweeps at 10^4 cases per op per level): PASS in {:.1?}",
        checks,
        start.elapsed()
    );
}

fn toy8(v: u32) -> Toy8 {
    Double::new(U4::new((v >> 4) as u8), U4::new(v as u8))
}

fn toy8_val(x: Toy8) -> u32 {
    (x.high.get() as u32) << 4 | x.low.get() as u32
}

fn toy16(v: u32) -> Toy16 {
    Double::new(toy8(v >> 8), toy8(v & 0xFF))
}

fn toy16_val(x: Toy16) -> u32 {
    toy8_val(x.high) << 8 | toy8_val(x.low)
}

#[test]
fn criterion_2_exhaustive_small_scale() {
    let start = Instant::now();
    let mut total = 0u64;

    // div2n1n over 8-bit values built from 4-bit halves: every normalized
    // divisor, every valid high digit, every low digit.
    for d in 0x80u32..=0xFF {
        for hi in 0..d {
            for lo in 0..=0xFFu32 {
                let (q, r) = Toy8::div2n1n(toy8(hi), toy8(lo), toy8(d));
                let a = (hi << 8) | lo;
                assert_eq!((toy8_val(q), toy8_val(r)), (a / d, a % d), "div2n1n {a}/{d}");
                total += 1;
            }
        }
    }

    // div3n2n over three 4-bit half-digits by two.
    for b in 0x80u32..=0xFF {
        for a12 in 0..b {
            for a3 in 0..16u32 {
                let (q, r) = div3n2n(toy8(a12), U4::new(a3 as u8), toy8(b));
                let a = (a12 << 4) | a3;
                let rv = toy8_val(r);
                assert_eq!(q.get() as u32 * b + rv, a, "div3n2n {a}/{b}");
                assert!(rv < b);
                total += 1;
            }
        }
    }

    // The full division driver, exhaustively at 8 bits and on a dense grid
    // at 16 bits.
    for a in 0u32..=0xFF {
        for b in 1u32..=0xFF {
            let (q, r) = toy8(a).divrem(toy8(b));
            assert_eq!((toy8_val(q), toy8_val(r)), (a / b, a % b));
            total += 1;
        }
    }
    for b in (1u32..=0xFFFF).step_by(7) {
        let bb = toy16(b);
        for a in (0u32..=0xFFFF).step_by(401) {
            let (q, r) = toy16(a).divrem(bb);
            assert_eq!((toy16_val(q), toy16_val(r)), (a / b, a % b));
            total += 1;
        }
    }

    // Montgomery reduction with R = 2^8: every odd modulus below 2^8, every
    // input below R*n, plus the products of every reduced pair.
    for n in (3u32..=0xFF).step_by(2) {
        let ctx = MontgomeryContext::new(toy8(n)).unwrap();
        assert_eq!((n * toy8_val(ctx.n_prime())) % 256, 255);
        assert_eq!(toy8_val(ctx.r2_mod_n()), (256 * 256) % n);
        // R^-1 mod n by scan.
        let r_inv = (1..n).find(|k| (256 * k) % n == 1).unwrap();

        for t in 0..256 * n {
            let red = ctx.redc(Double::new(toy8(t >> 8), toy8(t & 0xFF)));
            assert_eq!(toy8_val(red), (t * r_inv) % n, "redc({t}) mod {n}");
            total += 1;
        }
        for a in 0..n {
            for b in 0..=a {
                let m = ctx.mul(toy8(a), toy8(b));
                assert_eq!(toy8_val(m), a * b % n * r_inv % n, "a={a} b={b} n={n}");
                total += 1;
            }
        }
    }

    println!(
        "[acceptance] criterion 2 (exhaustive 4-bit-base div2n1n/div3n2n/div/redc, {total} cases): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_3_truncation_coherence() {
    let start = Instant::now();
    fn run<T: EuclidDiv>(cases: usize) {
        let tag = 0x5000 + T::LEVEL as u64;
        (0..cases).into_par_iter().for_each(|i| {
            let mut rng = case_rng(tag, i as u64);
            let a = T::random(&mut rng);
            let b = T::random(&mut rng);
            assert_eq!(a.wrapping_mul(b), a.widening_mul(b).low);
        });
    }
    run::<U64>(20_000);
    run::<U128>(20_000);
    run::<U256>(20_000);
    run::<U512>(20_000);
    run::<U1024>(20_000);
    println!(
        "[acceptance] criterion 3 (truncation coherence, 100000 pairs): PASS in {:.1?}",
        start.elapsed()
    );
}

fn measured_mul_counts<T: EuclidDiv>() -> (u64, u64) {
    let mut rng = case_rng(0x6000, T::LEVEL as u64);
    let a = T::random(&mut rng);
    let b = T::random(&mut rng);
    reset_mul_count();
    let _ = a.widening_mul(b);
    let full = mul_count();
    reset_mul_count();
    let _ = a.wrapping_mul(b);
    let truncated = mul_count();
    (full, truncated)
}

#[test]
fn criterion_4_multiplication_counts() {
    type C7 = Double<CountingWord>;
    type C8 = Double<C7>;
    type C9 = Double<C8>;
    type C10 = Double<C9>;

    let measured = [
        (7u32, measured_mul_counts::<C7>()),
        (8, measured_mul_counts::<C8>()),
        (9, measured_mul_counts::<C9>()),
        (10, measured_mul_counts::<C10>()),
    ];
    for (k, (full, truncated)) in measured {
        let j = k - 6;
        println!(
            "[acceptance] criterion 4 data: k={k} full={full} (4^j={}) truncated={truncated} \
             (3^j={}, (4^j+2^j)/2={})",
            4u64.pow(j),
            3u64.pow(j),
            (4u64.pow(j) + 2u64.pow(j)) / 2
        );
    }
    let mut ok = true;
    for (k, (full, truncated)) in measured {
        let j = k - 6;
        assert_eq!(
            full,
            4u64.pow(j),
            "full product at k={k} must use 4^(k-6) base multiplications"
        );
        if truncated != 3u64.pow(j) {
            ok = false;
        }
    }
    println!(
        "[acceptance] criterion 4 (3^(k-6)/4^(k-6) multiplication counts): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    for (k, (_, truncated)) in measured {
        let j = k - 6;
        assert_eq!(
            truncated,
            3u64.pow(j),
            "truncated product at k={k} must use 3^(k-6) base multiplications; the \
             one-complete-plus-two-truncated recursion performs (4^j + 2^j)/2 = {} of them, \
             which matches the measurement",
            (4u64.pow(j) + 2u64.pow(j)) / 2
        );
    }
}

#[test]
fn criterion_5_redc_cost() {
    fn check<T: EuclidDiv>(k: u32) {
        let mut rng = case_rng(0x7000, k as u64);
        let n: T = random_odd(&mut rng);
        let ctx = MontgomeryContext::new(n).unwrap();
        let a = T::random_below(&mut rng, &n);
        let b = T::random_below(&mut rng, &n);

        let (full, truncated) = measured_mul_counts::<T>();

        reset_mul_count();
        let _ = ctx.redc(Double::new(T::random_below(&mut rng, &n), T::random(&mut rng)));
        let redc_cost = mul_count();
        assert_eq!(
            redc_cost,
            truncated + full,
            "redc at k={k} must cost exactly one truncated plus one complete product"
        );

        reset_mul_count();
        let _ = ctx.mul(a, b);
        assert_eq!(
            mul_count(),
            full + redc_cost,
            "montgomery multiply at k={k} is one complete product plus one redc"
        );
    }
    type C7 = Double<CountingWord>;
    type C8 = Double<C7>;
    type C9 = Double<C8>;
    type C10 = Double<C9>;
    check::<CountingWord>(6);
    check::<C7>(7);
    check::<C8>(8);
    check::<C9>(9);
    check::<C10>(10);
    println!("[acceptance] criterion 5 (redc = 1 truncated + 1 complete multiplication): PASS");
}

fn fermat_suite<T: EuclidDiv>(bits: usize, prime_count: usize, bases: usize, roots: usize) {
    let tag = 0x8000 + T::BITS as u64;
    let mut prng = case_rng(tag, u64::MAX);
    let primes: Vec<T> = (0..prime_count)
        .map(|_| gen_prime(&mut prng, bits).to_fixed())
        .collect();

    primes.par_iter().enumerate().for_each(|(pi, &p)| {
        let mut rng = case_rng(tag, pi as u64);
        let p_m1 = p.wrapping_sub(T::ONE);
        let ctx = MontgomeryContext::new(p).unwrap();
        for _ in 0..bases {
            let a = T::random_below(&mut rng, &p_m1).wrapping_add(T::ONE);
            let f = exp_mod(a, p_m1, p);
            assert!(f.is_one(), "fermat failed: base {a:?} modulus {p:?}");
            assert!(ctx.exp(a, p_m1).is_one());
            let inv = inv_mod(a, p).expect("nonzero residue mod prime");
            assert!(mul_mod(inv, a, p).is_one());
        }
        for _ in 0..roots {
            let x = T::random_below(&mut rng, &p);
            let b = mul_mod(x, x, p);
            let r = square_root_mod(b, p).expect("square has a root");
            assert_eq!(mul_mod(r, r, p), b);
        }
    });
}

#[test]
fn criterion_6_number_theoretic_identities() {
    let start = Instant::now();
    fermat_suite::<U128>(128, 20, 100, 1000);
    fermat_suite::<U256>(256, 20, 100, 1000);
    fermat_suite::<U512>(512, 20, 100, 1000);
    println!(
        "[acceptance] criterion 6 (Fermat/inverse on 100 bases and 1000 roots for each of 20 \
         primes per size 128/256/512): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_7_montgomery_round_trip() {
    let start = Instant::now();
    fn run<T: EuclidDiv>(cases: usize) {
        let tag = 0x9000 + T::LEVEL as u64;
        (0..cases).into_par_iter().for_each(|i| {
            let mut rng = case_rng(tag, i as u64);
            let a = T::random(&mut rng);
            let b = T::random(&mut rng);
            let n: T = random_odd(&mut rng);
            let ctx = MontgomeryContext::new(n).unwrap();
            assert_eq!(ctx.from_mont(ctx.to_mont(a)), reduce(a, n));
            let ab = ctx.from_mont(ctx.mul(ctx.to_mont(a), ctx.to_mont(b)));
            assert_eq!(ab, mul_mod(a, b, n));
        });
    }
    run::<U64>(CASES);
    run::<U128>(CASES);
    run::<U256>(CASES);
    run::<U512>(CASES);
    run::<U1024>(CASES);
    println!(
        "[acceptance] criterion 7 (montgomery round trip, 10^4 triples per level): PASS in {:.1?}",
        start.elapsed()
    );
}
