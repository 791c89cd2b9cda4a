//! `gadj`: run, sweep, verify and benchmark the geometric-product
//! Deutsch-Jozsa pipeline.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/input error.

mod funcspec;
mod verify;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use funcspec::FunctionSpec;
use gadj_core::{
    cartan, dj, quantum, BooleanFunction, Classification, Multivector64, PipelineMode, RepKind,
};

#[derive(Parser)]
#[command(name = "gadj", version, about = "Deutsch-Jozsa by geometric product")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepArg {
    /// Explicit 2x2 Pauli tables (requires n <= 2).
    Pauli,
    /// Kronecker-product construction for any n.
    Cartan,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Matched-mask scalar readout.
    ScalarOnly,
    /// Full geometric product then scalar part.
    Full,
}

impl ModeArg {
    fn pipeline(self) -> PipelineMode {
        match self {
            ModeArg::ScalarOnly => PipelineMode::ScalarOnly,
            ModeArg::Full => PipelineMode::FullProduct,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the GA pipeline on one Boolean function.
    Run {
        /// Input bit count (the algebra uses n+1 generators).
        #[arg(long)]
        n: u32,
        /// const0 | const1 | parity | table:<bits> | file:<path>
        #[arg(long)]
        f: String,
        /// Matrix representation used for the reported N.
        #[arg(long, value_enum)]
        rep: Option<RepArg>,
        /// Also run the tensor-product reference and compare.
        #[arg(long)]
        cross_check: bool,
        /// Print the matrix image of the pipeline output (n <= 3).
        #[arg(long)]
        show_matrix: bool,
        /// Readout strategy.
        #[arg(long, value_enum, default_value = "scalar-only")]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Run the pipeline over a family of functions.
    Sweep {
        #[arg(long)]
        n: u32,
        /// All 2^(2^n) functions (n <= 3).
        #[arg(long)]
        all: bool,
        /// Both constants plus sampled balanced functions.
        #[arg(long)]
        promise: bool,
        /// Balanced sample count for --promise.
        #[arg(long, default_value_t = 8)]
        count: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Randomized algebra checks: sign oracle, associativity,
    /// anticommutation, reverse anti-automorphism, matrix homomorphism.
    Verify {
        /// Largest generator count to draw blades from.
        #[arg(long, default_value_t = 8)]
        m: u32,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Deliberately corrupt the expected sign (test-only).
        #[arg(long, hide = true)]
        inject_sign_flip: bool,
    },
    /// Time the pipeline stages and compare readout strategies.
    Bench {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "scalar-only")]
        mode: ModeArg,
    },
}

const MAX_RUN_BITS: u32 = 20;
const MAX_FULL_BITS: u32 = 12;

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

#[derive(Serialize)]
struct RunReport {
    n: u32,
    m: u32,
    rep_kind: &'static str,
    #[serde(rename = "N")]
    n_dim: u32,
    scalar: f64,
    trace_value: f64,
    classification: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ga_quantum_agreement: Option<bool>,
    wall_time_ns: u128,
}

fn rep_name(kind: RepKind) -> &'static str {
    match kind {
        RepKind::CartanGeneral => "cartan",
        RepKind::PauliPlane => "pauli-plane",
        RepKind::PauliSpace => "pauli-space",
    }
}

fn classification_parts(c: Classification) -> (&'static str, Option<i32>) {
    match c {
        Classification::Constant(s) => ("constant", Some(s)),
        Classification::Balanced => ("balanced", None),
        Classification::NeitherPromiseCase => ("neither", None),
    }
}

fn resolve_rep(rep: Option<RepArg>, m: u32) -> Result<RepKind, String> {
    match rep {
        None => Ok(RepKind::default_for(m)),
        Some(RepArg::Cartan) => Ok(RepKind::CartanGeneral),
        Some(RepArg::Pauli) => match m {
            2 => Ok(RepKind::PauliPlane),
            3 => Ok(RepKind::PauliSpace),
            _ => Err(format!(
                "the Pauli tables exist only for n <= 2 (got n = {})",
                m - 1
            )),
        },
    }
}

fn report_for(
    f: &BooleanFunction,
    kind: RepKind,
    mode: PipelineMode,
    cross_check: bool,
) -> RunReport {
    let start = Instant::now();
    let result = dj::run_with_mode::<f64>(f, kind, mode).expect("pipeline inputs validated");
    let wall_time_ns = start.elapsed().as_nanos();
    let (classification, sign) = classification_parts(result.classification);
    let ga_quantum_agreement = cross_check.then(|| {
        let amp = quantum::dj_reference::<f64>(f).expect("qubit count validated");
        (result.scalar / (1u64 << f.n()) as f64 - amp).abs() < 1e-9
    });
    RunReport {
        n: f.n(),
        m: f.n() + 1,
        rep_kind: rep_name(kind),
        n_dim: result.rep_dim,
        scalar: result.scalar,
        trace_value: result.trace_value,
        classification,
        sign,
        ga_quantum_agreement,
        wall_time_ns,
    }
}

fn print_report_text(r: &RunReport) {
    println!(
        "n = {}  m = {}  rep = {}  N = {}",
        r.n, r.m, r.rep_kind, r.n_dim
    );
    println!("scalar = {}", r.scalar);
    println!("trace_value = {}", r.trace_value);
    match r.sign {
        Some(s) => println!("classification = {} (sign {s:+})", r.classification),
        None => println!("classification = {}", r.classification),
    }
    if let Some(agree) = r.ga_quantum_agreement {
        println!("ga_quantum_agreement = {agree}");
    }
    println!("wall_time_ns = {}", r.wall_time_ns);
}

fn cmd_run(
    n: u32,
    spec: &str,
    rep: Option<RepArg>,
    cross_check: bool,
    show_matrix: bool,
    mode: ModeArg,
    json: bool,
) -> ExitCode {
    if n == 0 || n > MAX_RUN_BITS {
        return usage_error(&format!("--n must be in 1..={MAX_RUN_BITS}"));
    }
    if show_matrix && n > 3 {
        return usage_error("--show-matrix requires n <= 3");
    }
    if matches!(mode, ModeArg::Full) && n > MAX_FULL_BITS {
        return usage_error(&format!("--mode full requires n <= {MAX_FULL_BITS}"));
    }
    let spec = match FunctionSpec::parse(spec) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let f = match spec.resolve(n) {
        Ok(f) => f,
        Err(e) => return usage_error(&e),
    };
    let kind = match resolve_rep(rep, n + 1) {
        Ok(k) => k,
        Err(e) => return usage_error(&e),
    };
    let report = report_for(&f, kind, mode.pipeline(), cross_check);
    if json {
        println!("{}", serde_json::to_string(&report).unwrap());
    } else {
        print_report_text(&report);
    }
    if show_matrix {
        let product = dj::pipeline_product::<f64>(&f).expect("n validated");
        let mat = cartan::represent(&product, kind).expect("rep validated");
        println!("matrix of F_{{n+1}} E_f E_{{n+1}} e_seed under {}:", rep_name(kind));
        print!("{mat}");
        println!("Re Tr = {}", cartan::trace_projection(&mat));
    }
    if report.ga_quantum_agreement == Some(false) {
        eprintln!("error: GA and quantum backends disagree");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

#[derive(Serialize)]
struct SweepRecord {
    f: String,
    #[serde(flatten)]
    report: RunReport,
}

#[derive(Serialize)]
struct SweepSummary {
    functions: u64,
    constant: u64,
    balanced: u64,
    neither: u64,
    disagreements: u64,
}

fn sampled_balanced_tables(n: u32, count: u32, seed: u64) -> Vec<Vec<u8>> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let size = 1usize << n;
    (0..count)
        .map(|_| {
            let mut table = vec![0u8; size];
            table[..size / 2].fill(1);
            table.shuffle(&mut rng);
            table
        })
        .collect()
}

fn cmd_sweep(n: u32, all: bool, promise: bool, count: u32, seed: u64, json: bool) -> ExitCode {
    if n == 0 || n > MAX_RUN_BITS {
        return usage_error(&format!("--n must be in 1..={MAX_RUN_BITS}"));
    }
    if all == promise {
        return usage_error("pass exactly one of --all or --promise");
    }
    if all && n > 3 {
        return usage_error("--all enumerates 2^(2^n) functions and requires n <= 3");
    }
    let kind = RepKind::default_for(n + 1);
    let tables: Vec<Vec<u8>> = if all {
        (0..1u64 << (1u64 << n))
            .map(|idx| BooleanFunction::from_index(n, idx).unwrap().table().to_vec())
            .collect()
    } else {
        let mut t = vec![vec![0u8; 1 << n], vec![1u8; 1 << n]];
        t.extend(sampled_balanced_tables(n, count, seed));
        t
    };
    let mut summary = SweepSummary {
        functions: 0,
        constant: 0,
        balanced: 0,
        neither: 0,
        disagreements: 0,
    };
    for table in tables {
        let f = BooleanFunction::from_table(n, table).unwrap();
        let report = report_for(&f, kind, PipelineMode::ScalarOnly, true);
        summary.functions += 1;
        match report.classification {
            "constant" => summary.constant += 1,
            "balanced" => summary.balanced += 1,
            _ => summary.neither += 1,
        }
        if report.ga_quantum_agreement != Some(true) {
            summary.disagreements += 1;
        }
        let bits: String = f.table().iter().map(|b| char::from(b'0' + b)).collect();
        if json {
            let record = SweepRecord { f: bits, report };
            println!("{}", serde_json::to_string(&record).unwrap());
        } else {
            println!(
                "f={bits} scalar={} trace_value={} classification={} agree={}",
                report.scalar,
                report.trace_value,
                report.classification,
                report.ga_quantum_agreement.unwrap()
            );
        }
    }
    if json {
        println!("{}", serde_json::to_string(&summary).unwrap());
    } else {
        println!(
            "summary: functions={} constant={} balanced={} neither={} disagreements={}",
            summary.functions,
            summary.constant,
            summary.balanced,
            summary.neither,
            summary.disagreements
        );
    }
    if summary.disagreements > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_bench(n: u32, mode: ModeArg) -> ExitCode {
    if n == 0 || n > MAX_RUN_BITS {
        return usage_error(&format!("--n must be in 1..={MAX_RUN_BITS}"));
    }
    if matches!(mode, ModeArg::Full) && n > MAX_FULL_BITS {
        return usage_error(&format!("--mode full requires n <= {MAX_FULL_BITS}"));
    }
    let f = BooleanFunction::parity(n).unwrap();

    let t0 = Instant::now();
    let superposition = dj::build_superposition::<f64>(n).unwrap();
    let t_build = t0.elapsed();

    let seed = Multivector64::term(dj::seed_blade(n).unwrap(), 1.0);
    let t0 = Instant::now();
    let spread = superposition.geometric_product(&seed).unwrap();
    let t_spread = t0.elapsed();

    let t0 = Instant::now();
    let z = dj::apply_oracle(&f, &spread).unwrap();
    let t_oracle = t0.elapsed();

    let reversal = dj::build_reversal_operator::<f64>(n).unwrap();
    let (full_pairings, matched_pairings) = reversal.pairing_counts(&z);

    let t0 = Instant::now();
    let fast_scalar = reversal.scalar_of_product(&z).unwrap();
    let t_fast = t0.elapsed();

    println!("stage                  time_ns");
    println!("build_superposition    {}", t_build.as_nanos());
    println!("spread_product         {}", t_spread.as_nanos());
    println!("apply_oracle           {}", t_oracle.as_nanos());
    println!("scalar_readout_fast    {}", t_fast.as_nanos());
    println!("fast_path_pairings     {matched_pairings}");

    if matches!(mode, ModeArg::Full) {
        let t0 = Instant::now();
        let full_scalar = reversal.geometric_product(&z).unwrap().scalar_part();
        let t_full = t0.elapsed();
        assert_eq!(
            fast_scalar, full_scalar,
            "readout strategies must agree before reporting"
        );
        println!("scalar_readout_full    {}", t_full.as_nanos());
        println!("full_product_pairings  {full_pairings}");
        assert!(matched_pairings < full_pairings);
    }

    let t0 = Instant::now();
    let amp = quantum::dj_reference::<f64>(&f).unwrap();
    let t_quantum = t0.elapsed();
    assert!((fast_scalar / (1u64 << n) as f64 - amp).abs() < 1e-9);
    println!("quantum_reference      {}", t_quantum.as_nanos());
    println!("scalar                 {fast_scalar}");
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run {
            n,
            f,
            rep,
            cross_check,
            show_matrix,
            mode,
            json,
        } => cmd_run(n, &f, rep, cross_check, show_matrix, mode, json),
        Command::Sweep {
            n,
            all,
            promise,
            count,
            seed,
            json,
        } => cmd_sweep(n, all, promise, count, seed, json),
        Command::Verify {
            m,
            trials,
            seed,
            inject_sign_flip,
        } => verify::cmd_verify(m, trials, seed, inject_sign_flip),
        Command::Bench { n, mode } => cmd_bench(n, mode),
    }
}
