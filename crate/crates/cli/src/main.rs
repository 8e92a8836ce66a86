//! zharm command line: operator evaluation, norms, weight-constant tables,
//! Whitney decompositions, tagged experiment reports and a convolution
//! benchmark. Results go to `--out` (or stdout); diagnostics go to stderr.
//! Exit codes: 0 success, 1 domain error (hypothesis violation, bad input),
//! 2 I/O error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;
use std::{env, fs};

use clap::{Args, Parser, Subcommand, ValueEnum};
use zharm::verify::generate;
use zharm::{
    ap_constant, apq_constant, decompose, fractional_maximal, lp_norm, morrey_norm, riesz_fast,
    riesz_naive, run_experiment, weak_lp_norm, weighted_morrey_norm, EnumerationRule, EvalWindow,
    ExperimentReport, ExperimentRequest, ExperimentTag, FamilyKind, FiniteSequence,
    IntervalFamily, NormValue, Weight, DEFAULT_SEED,
};

/// A failed run, split by exit code: domain errors (1) cover hypothesis
/// violations and malformed data; I/O errors (2) cover the filesystem.
enum Failure {
    Domain(String),
    Io(String),
}

type CliResult<T> = Result<T, Failure>;

fn domain<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Domain(msg.into()))
}

#[derive(Parser)]
#[command(
    name = "zharm",
    version,
    about = "Fractional maximal operators, Riesz potentials, Muckenhoupt weights and Morrey norms on the integer lattice"
)]
struct Cli {
    /// Worker threads (overrides the ZHARM_THREADS variable)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply the fractional maximal operator or the Riesz potential
    Op(OpArgs),
    /// Evaluate a sequence norm
    Norm(NormArgs),
    /// Tabulate a truncated Muckenhoupt constant against the window cap
    Weight(WeightArgs),
    /// Whitney-decompose an integer set
    Whitney(WhitneyArgs),
    /// Run a tagged experiment and write its report
    Verify(VerifyArgs),
    /// Time the naive and fast potential evaluations
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Maximal,
    Riesz,
}

#[derive(Args)]
struct OpArgs {
    /// Operator to apply
    #[arg(long, value_enum)]
    kind: OpKind,
    /// Fractional order
    #[arg(long)]
    alpha: f64,
    /// Evaluate the potential by fast convolution instead of direct sums
    #[arg(long)]
    fast: bool,
    /// Evaluation window, written lo:hi
    #[arg(long, allow_hyphen_values = true)]
    window: String,
    /// Input sequence file (.csv for index,value rows; JSON otherwise)
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Output file (stdout when omitted; .csv selects CSV)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormFamily {
    Lp,
    Weak,
    Morrey,
    Wmorrey,
}

#[derive(Args)]
struct NormArgs {
    /// Norm family
    #[arg(long, value_enum)]
    family: NormFamily,
    /// Primary exponent
    #[arg(long)]
    p: f64,
    /// Morrey scale exponent (morrey and wmorrey)
    #[arg(long)]
    q: Option<f64>,
    /// Weight spec JSON (optional for lp/weak; the local weight for wmorrey)
    #[arg(long, value_name = "FILE")]
    weight: Option<PathBuf>,
    /// Gauge weight spec JSON (wmorrey only)
    #[arg(long, value_name = "FILE")]
    vweight: Option<PathBuf>,
    /// Input sequence file
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstantFamily {
    Ap,
    Apq,
}

#[derive(Args)]
struct WeightArgs {
    /// Which constant to tabulate
    #[arg(long, value_enum)]
    kind: ConstantFamily,
    /// Lebesgue exponent
    #[arg(long)]
    p: f64,
    /// Second exponent (apq only)
    #[arg(long)]
    q: Option<f64>,
    /// Weight spec JSON
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Window caps, comma separated and strictly increasing
    #[arg(long, value_delimiter = ',')]
    caps: Vec<i64>,
    /// Output CSV (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WhitneyArgs {
    /// Input set file: {"runs":[[a,b],…],"rightRay":i0|null,"leftRay":j0|null}
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Number of parts emitted per infinite ray
    #[arg(long, default_value_t = 12)]
    ray_depth: u32,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Experiment tag code
    #[arg(long)]
    tag: String,
    /// Fractional order
    #[arg(long)]
    alpha: f64,
    /// Input-side exponent
    #[arg(long)]
    p: f64,
    /// Output-side exponent, where the tag takes one
    #[arg(long)]
    q: Option<f64>,
    /// Power-weight exponents, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    beta: Vec<f64>,
    /// Weak-type variant, where the tag admits one
    #[arg(long)]
    weak: bool,
    /// Support caps, comma separated and strictly increasing
    #[arg(long, value_delimiter = ',')]
    caps: Vec<u64>,
    /// Generator seed
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Report JSON path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the per-case table as CSV
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Input sizes, comma separated
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<u64>,
    /// Fractional order of the timed potential
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    /// Timing repetitions per size; the median is reported
    #[arg(long, default_value_t = 3)]
    reps: u32,
    /// Seed for the timed inputs
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output CSV (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    init_threads(cli.threads);
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn init_threads(flag: Option<usize>) {
    let n = flag
        .or_else(|| env::var("ZHARM_THREADS").ok().and_then(|s| s.parse().ok()))
        .filter(|&n| n > 0);
    if let Some(n) = n {
        // a pool may already exist in tests; the run proceeds either way
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn run(cmd: Cmd) -> CliResult<()> {
    match cmd {
        Cmd::Op(a) => run_op(a),
        Cmd::Norm(a) => run_norm(a),
        Cmd::Weight(a) => run_weight(a),
        Cmd::Whitney(a) => run_whitney(a),
        Cmd::Verify(a) => run_verify(a),
        Cmd::Bench(a) => run_bench(a),
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// Writes the primary result: to the file when a path is given, otherwise
/// to stdout. File output gets a trailing newline so reruns stay
/// byte-identical with POSIX line discipline.
fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => {
            let mut owned = text.to_owned();
            if !owned.ends_with('\n') {
                owned.push('\n');
            }
            fs::write(path, owned).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn is_csv(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

fn read_sequence(path: &Path) -> CliResult<FiniteSequence> {
    let text = read_file(path)?;
    let parsed = if is_csv(path) {
        zharm::io::sequence_from_csv(&text)
    } else {
        zharm::io::sequence_from_json(&text)
    };
    parsed.map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn read_weight(path: &Path) -> CliResult<Weight> {
    let text = read_file(path)?;
    zharm::io::weight_from_json(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn parse_window(s: &str) -> CliResult<EvalWindow> {
    let parts: Option<(i64, i64)> = s
        .split_once(':')
        .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
    match parts {
        Some((lo, hi)) if lo <= hi => Ok(EvalWindow { lo, hi }),
        _ => domain(format!("window must be lo:hi with lo <= hi, got {s:?}")),
    }
}

fn run_op(a: OpArgs) -> CliResult<()> {
    let window = parse_window(&a.window)?;
    let x = read_sequence(&a.input)?;
    let y = match a.kind {
        OpKind::Maximal => {
            if !(0.0..1.0).contains(&a.alpha) {
                return domain(format!("maximal order must lie in [0,1), got {}", a.alpha));
            }
            fractional_maximal(&x, a.alpha, window)
        }
        OpKind::Riesz => {
            if !(a.alpha > 0.0 && a.alpha < 1.0) {
                return domain(format!("Riesz order must lie in (0,1), got {}", a.alpha));
            }
            if a.fast {
                riesz_fast(&x, a.alpha, window).map_err(|e| Failure::Domain(e.to_string()))?
            } else {
                riesz_naive(&x, a.alpha, window)
            }
        }
    };
    let text = match &a.out {
        Some(p) if is_csv(p) => zharm::io::sequence_to_csv(&y),
        _ => zharm::io::sequence_to_json(&y),
    };
    emit(a.out.as_deref(), &text)
}

fn run_norm(a: NormArgs) -> CliResult<()> {
    if a.p < 1.0 {
        return domain(format!("norm exponent must satisfy p >= 1, got {}", a.p));
    }
    let x = read_sequence(&a.input)?;
    let w = a.weight.as_deref().map(read_weight).transpose()?;
    let v = a.vweight.as_deref().map(read_weight).transpose()?;
    let need_q = |q: Option<f64>| -> CliResult<f64> {
        match q {
            Some(q) if q >= a.p => Ok(q),
            Some(q) => domain(format!("Morrey norms need p <= q, got p = {}, q = {q}", a.p)),
            None => domain("Morrey norms need --q"),
        }
    };
    let result: NormValue = match a.family {
        NormFamily::Lp => NormValue { value: lp_norm(&x, a.p, w.as_ref()), witness: None },
        NormFamily::Weak => NormValue { value: weak_lp_norm(&x, a.p, w.as_ref()), witness: None },
        NormFamily::Morrey => {
            if w.is_some() || v.is_some() {
                return domain("the plain Morrey norm takes no weight; use --family wmorrey");
            }
            morrey_norm(&x, a.p, need_q(a.q)?)
        }
        NormFamily::Wmorrey => {
            let q = need_q(a.q)?;
            let (Some(w), Some(v)) = (w.as_ref(), v.as_ref()) else {
                return domain("wmorrey needs --weight (local) and --vweight (gauge)");
            };
            weighted_morrey_norm(&x, a.p, q, w, v)
        }
    };
    let text = serde_json::to_string(&result).expect("norm results serialize");
    emit(a.out.as_deref(), &text)
}

fn run_weight(a: WeightArgs) -> CliResult<()> {
    if a.p <= 1.0 {
        return domain(format!("weight constants need p > 1, got {}", a.p));
    }
    if a.caps.is_empty() {
        return domain("at least one window cap is required");
    }
    if !(a.caps.windows(2).all(|c| c[0] < c[1]) && a.caps[0] >= 1) {
        return domain("caps must be strictly increasing and >= 1");
    }
    let q = match (a.kind, a.q) {
        (ConstantFamily::Ap, _) => 0.0,
        (ConstantFamily::Apq, Some(q)) if q > 0.0 => q,
        (ConstantFamily::Apq, Some(q)) => {
            return domain(format!("the two-exponent constant needs q > 0, got {q}"))
        }
        (ConstantFamily::Apq, None) => return domain("the two-exponent constant needs --q"),
    };
    let w = read_weight(&a.input)?;
    let mut csv = String::from("cap,constant,witnessStart,witnessEnd\n");
    for &cap in &a.caps {
        let fam = IntervalFamily::new(cap, cap, EnumerationRule::AllRuns);
        let report = match a.kind {
            ConstantFamily::Ap => ap_constant(&w, &fam, a.p),
            ConstantFamily::Apq => apq_constant(&w, &fam, a.p, q),
        };
        writeln!(csv, "{},{},{},{}", cap, report.value, report.witness.start, report.witness.end)
            .expect("string writes are infallible");
    }
    emit(a.out.as_deref(), csv.trim_end())
}

fn run_whitney(a: WhitneyArgs) -> CliResult<()> {
    let text = read_file(&a.input)?;
    let set = zharm::io::set_from_json(&text)
        .map_err(|e| Failure::Domain(format!("{}: {e}", a.input.display())))?;
    let dec = decompose(&set, a.ray_depth).map_err(|e| Failure::Domain(e.to_string()))?;
    if let Some(k) = dec.left_remainder {
        eprintln!("left ray truncated: the decomposition continues below {k}");
    }
    if let Some(k) = dec.right_remainder {
        eprintln!("right ray truncated: the decomposition continues above {k}");
    }
    let text = serde_json::to_string(&dec.parts).expect("parts serialize");
    emit(a.out.as_deref(), &text)
}

fn run_verify(a: VerifyArgs) -> CliResult<()> {
    let tag = ExperimentTag::parse(&a.tag).map_err(|e| Failure::Domain(e.to_string()))?;
    let req = ExperimentRequest {
        tag,
        alpha: a.alpha,
        p: a.p,
        q: a.q,
        betas: a.beta,
        weak: a.weak,
        caps: a.caps,
        seed: a.seed,
    };
    let report = run_experiment(&req).map_err(|e| Failure::Domain(e.to_string()))?;
    if let Some(path) = &a.csv {
        emit(Some(path), &per_case_csv(&report))?;
    }
    emit(a.out.as_deref(), &report.to_json_pretty())
}

fn per_case_csv(report: &ExperimentReport) -> String {
    let mut csv = String::new();
    match report {
        ExperimentReport::Constant(r) => {
            csv.push_str("caseId,cap,lhs,rhs,ratio,certified\n");
            for c in &r.per_case {
                writeln!(
                    csv,
                    "{},{},{},{},{},{}",
                    c.case_id, c.cap, c.lhs, c.rhs, c.ratio, c.certified
                )
                .expect("string writes are infallible");
            }
        }
        ExperimentReport::Phase(r) => {
            csv.push_str("beta,direct,viaQ,viaDual,agree,guardBand\n");
            for row in &r.rows {
                writeln!(
                    csv,
                    "{},{},{},{},{},{}",
                    row.beta,
                    row.verdicts[0],
                    row.verdicts[1],
                    row.verdicts[2],
                    row.agree,
                    row.guard_band
                )
                .expect("string writes are infallible");
            }
        }
    }
    csv.trim_end().to_owned()
}

fn run_bench(a: BenchArgs) -> CliResult<()> {
    if a.reps == 0 {
        return domain("bench needs at least one repetition");
    }
    if !(a.alpha > 0.0 && a.alpha < 1.0) {
        return domain(format!("Riesz order must lie in (0,1), got {}", a.alpha));
    }
    let mut csv = String::from("n,naive_ms,fast_ms,speedup\n");
    for &n in &a.sizes {
        if n < 2 {
            return domain(format!("bench sizes must be at least 2, got {n}"));
        }
        let x = generate(FamilyKind::RandomSigned { density: 1.0 }, a.seed, n);
        let window = EvalWindow { lo: 0, hi: n as i64 - 1 };

        let fast = median_time(a.reps, || riesz_fast(&x, a.alpha, window));
        let (fast_out, fast_ms) = match fast {
            (Ok(y), ms) => (Some(y), Some(ms)),
            (Err(e), _) => {
                eprintln!("n={n}: {e}");
                (None, None)
            }
        };

        let naive_ms = if n <= 1 << 15 {
            let (y, ms) = median_time(a.reps, || riesz_naive(&x, a.alpha, window));
            if let Some(fy) = &fast_out {
                check_agreement(n, &y, fy)?;
            }
            Some(ms)
        } else {
            None
        };

        let naive_col = naive_ms.map_or_else(|| "skip".into(), |ms| format!("{ms:.3}"));
        let fast_col = fast_ms.map_or_else(|| "n/a".into(), |ms| format!("{ms:.3}"));
        let speedup = match (naive_ms, fast_ms) {
            (Some(a), Some(b)) if b > 0.0 => format!("{:.1}", a / b),
            _ => "n/a".into(),
        };
        writeln!(csv, "{n},{naive_col},{fast_col},{speedup}")
            .expect("string writes are infallible");
    }
    emit(a.out.as_deref(), csv.trim_end())
}

fn median_time<T>(reps: u32, mut f: impl FnMut() -> T) -> (T, f64) {
    let mut times = Vec::with_capacity(reps as usize);
    let mut out = None;
    for _ in 0..reps {
        let t0 = Instant::now();
        let y = f();
        times.push(t0.elapsed().as_secs_f64() * 1e3);
        out = Some(y);
    }
    times.sort_by(|a, b| a.partial_cmp(b).expect("timings are finite"));
    (out.expect("at least one repetition"), times[times.len() / 2])
}

fn check_agreement(n: u64, naive: &FiniteSequence, fast: &FiniteSequence) -> CliResult<()> {
    let mut worst = 0.0f64;
    for (k, v) in naive.iter() {
        let f = fast.eval(k);
        let scale = v.abs().max(1e-300);
        worst = worst.max((f - v).abs() / scale);
    }
    if worst > 1e-10 {
        return domain(format!(
            "fast/naive disagreement at n={n}: relative deviation {worst:.3e}"
        ));
    }
    Ok(())
}
