use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hilo_bench::{
    emit_csv, run_bench, run_suite, supported_bits, to_csv, BenchOp, SuiteConfig, DEFAULT_SEED,
};

/// Throughput benchmarks for the fixed-width integer library: operations
/// per second against operand width, written as CSV.
#[derive(Parser, Debug)]
#[command(name = "bench", version)]
struct Cli {
    /// Operation to time: add, add_wrapping, lmul, mul_wrapping, mul_mod,
    /// mont_mul, exp_mod, div, gcd.
    #[arg(long, required_unless_present = "suite", conflicts_with = "suite")]
    op: Option<String>,

    /// Operand width in bits (a power of two between 64 and 8192).
    #[arg(long, required_unless_present = "suite", conflicts_with = "suite")]
    bits: Option<u32>,

    /// Iterations per repetition.
    #[arg(long, required_unless_present = "suite", conflicts_with = "suite")]
    iters: Option<u64>,

    /// Seed for the operand pools.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Write the results as CSV to this path (suite mode prints CSV to
    /// stdout when omitted).
    #[arg(long)]
    csv: Option<PathBuf>,

    /// Repetitions per cell; the median is reported.
    #[arg(long, default_value_t = 5)]
    reps: u32,

    /// Run the default sweep: every operation at every width from 128 to
    /// the largest supported.
    #[arg(long)]
    suite: bool,
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let records = if cli.suite {
        let cfg = SuiteConfig { seed: cli.seed, reps: cli.reps.max(1), ..Default::default() };
        run_suite(&cfg)
    } else {
        let op: BenchOp = match cli.op.as_deref().unwrap().parse() {
            Ok(op) => op,
            Err(e) => return usage_error(&e),
        };
        let bits = cli.bits.unwrap();
        if !supported_bits().contains(&bits) {
            return usage_error(&format!(
                "unsupported --bits {bits}; expected one of {:?}",
                supported_bits()
            ));
        }
        let iters = cli.iters.unwrap();
        if iters == 0 {
            return usage_error("--iters must be at least 1");
        }
        let rec = run_bench(op, bits, iters, cli.seed, cli.reps.max(1)).unwrap();
        eprintln!(
            "{} @ {} bits: {} iterations in {:.6} s = {:.3} Mops/s",
            rec.op, rec.bits, rec.iterations, rec.elapsed_s, rec.mops
        );
        vec![rec]
    };

    match &cli.csv {
        Some(path) => {
            if let Err(e) = emit_csv(&records, path) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        }
        None => {
            if cli.suite {
                print!("{}", to_csv(&records));
            }
        }
    }
    ExitCode::SUCCESS
}
