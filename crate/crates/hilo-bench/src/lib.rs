//! Throughput measurement for the core operations: operations per second
//! against operand width, written out as CSV.
//!
//! Methodology: operand pools are generated from a seed before anything is
//! timed, the loop is warmed up first, results feed a checksum that is
//! black-boxed so nothing is optimized away, and the reported elapsed time
//! is the median of several repetitions. Measurement is single-threaded.

use std::fmt;
use std::io;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

#[cfg(not(feature = "limb32"))]
use hilo::U8192;
use hilo::modular::{exp_mod, mul_mod};
use hilo::{
    gcd, EuclidDiv, MontgomeryContext, Word, U1024, U128, U2048, U256,
    U4096, U512, U64,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0xBE7C;
pub const POOL_SIZE: usize = 1024;

/// The operations the harness can time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BenchOp {
    Add,
    AddWrapping,
    Lmul,
    MulWrapping,
    MulMod,
    MontMul,
    ExpMod,
    Div,
    Gcd,
}

impl BenchOp {
    pub const ALL: [BenchOp; 9] = [
        BenchOp::Add,
        BenchOp::AddWrapping,
        BenchOp::Lmul,
        BenchOp::MulWrapping,
        BenchOp::MulMod,
        BenchOp::MontMul,
        BenchOp::ExpMod,
        BenchOp::Div,
        BenchOp::Gcd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchOp::Add => "add",
            BenchOp::AddWrapping => "add_wrapping",
            BenchOp::Lmul => "lmul",
            BenchOp::MulWrapping => "mul_wrapping",
            BenchOp::MulMod => "mul_mod",
            BenchOp::MontMul => "mont_mul",
            BenchOp::ExpMod => "exp_mod",
            BenchOp::Div => "div",
            BenchOp::Gcd => "gcd",
        }
    }
}

impl fmt::Display for BenchOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BenchOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| format!("unknown operation '{s}'"))
    }
}

/// One measured cell: an operation at one operand width.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub op: BenchOp,
    pub bits: u32,
    pub iterations: u64,
    pub elapsed_s: f64,
    pub mops: f64,
}

impl BenchRecord {
    fn new(op: BenchOp, bits: u32, iterations: u64, elapsed_s: f64) -> Self {
        assert!(elapsed_s > 0.0, "zero elapsed time");
        BenchRecord {
            op,
            bits,
            iterations,
            elapsed_s,
            mops: iterations as f64 / elapsed_s / 1e6,
        }
    }
}

/// Widths this build can dispatch on.
pub fn supported_bits() -> &'static [u32] {
    #[cfg(not(feature = "limb32"))]
    {
        &[64, 128, 256, 512, 1024, 2048, 4096, 8192]
    }
    #[cfg(feature = "limb32")]
    {
        &[32, 64, 128, 256, 512, 1024, 2048, 4096]
    }
}

/// Widths of the default sweep.
pub fn default_sweep_bits() -> Vec<u32> {
    supported_bits().iter().copied().filter(|&b| b >= 128).collect()
}

/// Configuration for [`run_suite`].
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub ops: Vec<BenchOp>,
    pub bits: Vec<u32>,
    pub seed: u64,
    pub reps: u32,
    /// Per-repetition time the calibration aims for, in milliseconds.
    pub target_ms: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            ops: BenchOp::ALL.to_vec(),
            bits: default_sweep_bits(),
            seed: DEFAULT_SEED,
            reps: 5,
            target_ms: 40,
        }
    }
}

fn pool_rng(op: BenchOp, bits: u32, seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add((op.name().len() as u64) << 32)
            .wrapping_add(op.name().as_bytes()[0] as u64)
            .wrapping_add((bits as u64) << 16),
    )
}

// Pre-generated inputs for one cell; built outside the timed region.
struct Cell<T: EuclidDiv> {
    pairs: Vec<(T, T)>,
    modulus: T,
    mont: Option<MontgomeryContext<T>>,
}

fn build_cell<T: EuclidDiv>(op: BenchOp, bits: u32, seed: u64) -> Cell<T> {
    let mut rng = pool_rng(op, bits, seed);
    // Full-width odd modulus so modular cells exercise the nominal size.
    let modulus = T::random(&mut rng)
        .bitor(T::ONE)
        .bitor(T::ONE.shl_bits(T::BITS - 1));
    let mont = match op {
        BenchOp::MontMul | BenchOp::ExpMod | BenchOp::MulMod => {
            Some(MontgomeryContext::new(modulus).expect("odd modulus"))
        }
        _ => None,
    };
    let pairs = (0..POOL_SIZE)
        .map(|_| match op {
            BenchOp::Add | BenchOp::AddWrapping | BenchOp::Lmul | BenchOp::MulWrapping => {
                (T::random(&mut rng), T::random(&mut rng))
            }
            BenchOp::Div | BenchOp::Gcd => {
                let a = T::random(&mut rng);
                let b = T::random(&mut rng);
                (a, if b.is_zero() { T::ONE } else { b })
            }
            BenchOp::MulMod => (
                T::random_below(&mut rng, &modulus),
                T::random_below(&mut rng, &modulus),
            ),
            BenchOp::MontMul => {
                let ctx = mont.as_ref().unwrap();
                (
                    ctx.to_mont(T::random_below(&mut rng, &modulus)),
                    ctx.to_mont(T::random_below(&mut rng, &modulus)),
                )
            }
            // base and full-width exponent
            BenchOp::ExpMod => (T::random_below(&mut rng, &modulus), T::random(&mut rng)),
        })
        .collect();
    Cell { pairs, modulus, mont }
}

fn median(samples: &mut [f64]) -> f64 {
    samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
    samples[samples.len() / 2]
}

// One timed pass over the loop body.
fn timed(iterations: u64, mut body: impl FnMut(usize) -> u64) -> f64 {
    let start = Instant::now();
    let mut acc = 0u64;
    for i in 0..iterations {
        acc = acc.wrapping_add(body(i as usize & (POOL_SIZE - 1)));
    }
    std::hint::black_box(acc);
    start.elapsed().as_secs_f64()
}

fn measure_cell<T: EuclidDiv>(
    op: BenchOp,
    bits: u32,
    seed: u64,
    reps: u32,
    iterations: Option<u64>,
    target_s: f64,
) -> BenchRecord {
    let cell = build_cell::<T>(op, bits, seed);
    let pairs = &cell.pairs;
    let n = cell.modulus;
    let mont = cell.mont.as_ref();

    let mut body = |i: usize| -> u64 {
        let (a, b) = pairs[i];
        match op {
            BenchOp::Add => {
                let (s, c) = a.overflowing_add(b);
                s.get_limb0().to_u64() ^ c as u64
            }
            BenchOp::AddWrapping => a.wrapping_add(b).get_limb0().to_u64(),
            BenchOp::Lmul => {
                let p = a.widening_mul(b);
                p.low.get_limb0().to_u64() ^ p.high.get_limb0().to_u64()
            }
            BenchOp::MulWrapping => a.wrapping_mul(b).get_limb0().to_u64(),
            BenchOp::MulMod => mul_mod(a, b, n).get_limb0().to_u64(),
            BenchOp::MontMul => mont.unwrap().mul(a, b).get_limb0().to_u64(),
            BenchOp::ExpMod => exp_mod(a, b, n).get_limb0().to_u64(),
            BenchOp::Div => {
                let (q, r) = a.divrem(b);
                q.get_limb0().to_u64() ^ r.get_limb0().to_u64()
            }
            BenchOp::Gcd => gcd(a, b).get_limb0().to_u64(),
        }
    };

    // Calibrate by doubling until one pass reaches the target.
    let iterations = iterations.unwrap_or_else(|| {
        let mut iters = 1u64;
        loop {
            let t = timed(iters, &mut body);
            if t >= target_s || iters >= 1 << 24 {
                return iters;
            }
            iters *= 2;
        }
    });

    // Warmup: run the loop briefly before measuring.
    let warmup_deadline = Instant::now();
    let mut done = 0u64;
    while done < iterations && warmup_deadline.elapsed().as_millis() < 10 {
        let chunk = (iterations - done).min(POOL_SIZE as u64);
        let _ = timed(chunk, &mut body);
        done += chunk;
    }

    let mut samples: Vec<f64> = (0..reps.max(1))
        .map(|_| timed(iterations, &mut body))
        .collect();
    BenchRecord::new(op, bits, iterations, median(&mut samples))
}

macro_rules! with_width {
    ($bits:expr, $run:expr) => {{
        let bits: u32 = $bits;
        let run = $run;
        #[cfg(not(feature = "limb32"))]
        match bits {
            64 => Some(run.go::<U64>()),
            128 => Some(run.go::<U128>()),
            256 => Some(run.go::<U256>()),
            512 => Some(run.go::<U512>()),
            1024 => Some(run.go::<U1024>()),
            2048 => Some(run.go::<U2048>()),
            4096 => Some(run.go::<U4096>()),
            8192 => Some(run.go::<U8192>()),
            _ => None,
        }
        #[cfg(feature = "limb32")]
        match bits {
            32 => Some(run.go::<hilo::U32>()),
            64 => Some(run.go::<U64>()),
            128 => Some(run.go::<U128>()),
            256 => Some(run.go::<U256>()),
            512 => Some(run.go::<U512>()),
            1024 => Some(run.go::<U1024>()),
            2048 => Some(run.go::<U2048>()),
            4096 => Some(run.go::<U4096>()),
            _ => None,
        }
    }};
}

struct MeasureRun {
    op: BenchOp,
    bits: u32,
    seed: u64,
    reps: u32,
    iterations: Option<u64>,
    target_s: f64,
}

impl MeasureRun {
    fn go<T: EuclidDiv>(&self) -> BenchRecord {
        measure_cell::<T>(
            self.op,
            self.bits,
            self.seed,
            self.reps,
            self.iterations,
            self.target_s,
        )
    }
}

/// Stable digest of a cell's operand pool; pools are a pure function of
/// `(op, bits, seed)`.
pub fn pool_fingerprint(op: BenchOp, bits: u32, seed: u64) -> u64 {
    struct Fingerprint {
        op: BenchOp,
        bits: u32,
        seed: u64,
    }
    impl Fingerprint {
        fn go<T: EuclidDiv>(&self) -> u64 {
            let cell = build_cell::<T>(self.op, self.bits, self.seed);
            let mut h = 0xcbf2_9ce4_8422_2325u64;
            for (a, b) in &cell.pairs {
                for i in 0..T::LIMBS {
                    h = (h ^ a.get_limb(i).to_u64()).wrapping_mul(0x0100_0000_01b3);
                    h = (h ^ b.get_limb(i).to_u64()).wrapping_mul(0x0100_0000_01b3);
                }
            }
            h
        }
    }
    with_width!(bits, Fingerprint { op, bits, seed })
        .unwrap_or_else(|| panic!("unsupported operand width {bits}"))
}

/// Times `op` on `bits`-wide operands for exactly `iterations` iterations
/// per repetition, reporting the median repetition. Returns `None` for an
/// unsupported width.
pub fn run_bench(
    op: BenchOp,
    bits: u32,
    iterations: u64,
    seed: u64,
    reps: u32,
) -> Option<BenchRecord> {
    assert!(iterations >= 1, "iterations must be at least 1");
    with_width!(
        bits,
        MeasureRun { op, bits, seed, reps, iterations: Some(iterations), target_s: 0.0 }
    )
}

/// Runs every `(op, bits)` cell of the configuration with auto-calibrated
/// iteration counts. Panics on an unsupported width.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<BenchRecord> {
    let mut out = Vec::with_capacity(cfg.ops.len() * cfg.bits.len());
    for &op in &cfg.ops {
        for &bits in &cfg.bits {
            let rec = with_width!(
                bits,
                MeasureRun {
                    op,
                    bits,
                    seed: cfg.seed,
                    reps: cfg.reps,
                    iterations: None,
                    target_s: cfg.target_ms as f64 / 1e3,
                }
            )
            .unwrap_or_else(|| panic!("unsupported operand width {bits}"));
            out.push(rec);
        }
    }
    out
}

/// CSV with header `op,bits,iterations,elapsed_s,mops`, LF line endings.
pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut s = String::from("op,bits,iterations,elapsed_s,mops\n");
    for r in records {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.op, r.bits, r.iterations, r.elapsed_s, r.mops
        ));
    }
    s
}

pub fn emit_csv(records: &[BenchRecord], path: &Path) -> io::Result<()> {
    std::fs::write(path, to_csv(records))
}

/// Error parsing a benchmark CSV.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for CsvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "csv line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for CsvError {}

/// Parses text produced by [`to_csv`] back into records.
pub fn parse_csv(text: &str) -> Result<Vec<BenchRecord>, CsvError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "op,bits,iterations,elapsed_s,mops")) => {}
        Some((_, other)) => {
            return Err(CsvError { line: 1, message: format!("bad header '{other}'") })
        }
        None => return Err(CsvError { line: 1, message: "empty file".into() }),
    }
    let mut out = Vec::new();
    for (idx, line) in lines {
        let err = |message: String| CsvError { line: idx + 1, message };
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(err(format!("expected 5 fields, got {}", fields.len())));
        }
        let op = fields[0].parse::<BenchOp>().map_err(&err)?;
        let bits = fields[1].parse::<u32>().map_err(|e| err(e.to_string()))?;
        let iterations = fields[2].parse::<u64>().map_err(|e| err(e.to_string()))?;
        let elapsed_s = fields[3].parse::<f64>().map_err(|e| err(e.to_string()))?;
        let mops = fields[4].parse::<f64>().map_err(|e| err(e.to_string()))?;
        out.push(BenchRecord { op, bits, iterations, elapsed_s, mops });
    }
    Ok(out)
}
