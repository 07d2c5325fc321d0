//! `k4sat`: constructions, saturation checks, spectra and sweeps.
//!
//! Exit codes: 0 success, 1 verification failed or not saturated,
//! 2 usage error, 3 input/format error. Stdout never depends on `--jobs`.

use std::io::Read;
use std::ops::RangeInclusive;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use k4sat_core::enumeration::{MAX_ENUMERATION_N, DEFAULT_CERT_CAP};
use k4sat_core::sweeps::{
    checker_equivalence, non_bipartite_witnesses, sweep_edge_formula, sweep_family_saturation,
    sweep_interval_coverage, sweep_overlap,
};
use k4sat_core::{
    audit, construct_complete_bipartite, construct_f, construct_star_matching, coverage_set,
    graph6, is_k4_minus_saturated, naive_is_saturated, spectrum_formula, verify_proof_bound,
    verify_theorem_a, CheckerMode, ConstructionParams, EnumerationOptions, Error, Graph,
    SaturationVerdict, SpectrumSet, MAX_VERTICES,
};

const DEFAULT_SEED: u64 = 0x6b34;

#[derive(Parser)]
#[command(name = "k4sat", version, about = "K4^--saturated graphs: constructions, checks, spectra")]
struct Cli {
    /// Worker threads for checks, sweeps and enumeration.
    #[arg(long, global = true, env = "K4SAT_JOBS", default_value_t = 1,
          value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from one of the families.
    Construct(ConstructArgs),
    /// Decide K4^--saturation of graph6 input.
    Check(CheckArgs),
    /// Edge spectrum: closed form, construction coverage, or enumeration.
    Spectrum(SpectrumArgs),
    /// Run a verification sweep and print a report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    F,
    StarMatching,
    CompleteBipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Graph6,
    Edges,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    a: usize,
    #[arg(long, default_value_t = 2)]
    b: usize,
    /// Smaller side of `K_{i,n-i}`.
    #[arg(long)]
    i: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// graph6 string, a file with one graph6 per line, or "-" for stdin.
    input: String,
    #[arg(long, value_enum, default_value_t = Mode::Fast)]
    mode: Mode,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Fast,
    Naive,
    Both,
}

impl From<Mode> for CheckerMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Fast => CheckerMode::Fast,
            Mode::Naive => CheckerMode::Naive,
            Mode::Both => CheckerMode::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumKind {
    Formula,
    Coverage,
    Enumerate,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(value_enum)]
    kind: SpectrumKind,
    #[arg(long)]
    n: usize,
    /// Report labeled counts only, without isomorphism classes.
    #[arg(long)]
    no_dedup: bool,
    /// Certificates kept per edge count.
    #[arg(long, default_value_t = DEFAULT_CERT_CAP)]
    cert_cap: usize,
    #[arg(long, value_enum, default_value_t = Mode::Fast)]
    checker: Mode,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Lemma1,
    Lemma2,
    Lemma3,
    Overlap,
    TheoremA,
    ProofBound,
    CheckerEquiv,
}

impl Target {
    fn name(self) -> &'static str {
        match self {
            Target::Lemma1 => "lemma1",
            Target::Lemma2 => "lemma2",
            Target::Lemma3 => "lemma3",
            Target::Overlap => "overlap",
            Target::TheoremA => "theorem-a",
            Target::ProofBound => "proof-bound",
            Target::CheckerEquiv => "checker-equiv",
        }
    }

    /// Default `n` range when neither `--n` nor `--n-min/--n-max` is given.
    fn default_range(self) -> (usize, usize) {
        match self {
            Target::Lemma1 | Target::Lemma2 => (10, 60),
            Target::Lemma3 => (10, 500),
            Target::Overlap => (11, 500),
            Target::TheoremA | Target::ProofBound => (4, MAX_ENUMERATION_N),
            Target::CheckerEquiv => (7, 12),
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    target: Target,
    /// Single order; for checker-equiv, the largest exhaustively checked order.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Random graphs for checker-equiv.
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

/// Failure that ends the process with a specific code.
enum Exit {
    Usage(String),
    Format(String),
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        match e {
            Error::Format(_) => Exit::Format(e.to_string()),
            Error::Usage(_) | Error::Overflow(_) => Exit::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Exit>;

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("values serialize"));
}

fn edge_pairs(g: &Graph) -> Value {
    g.edges().map(|(u, v)| json!([u, v])).collect()
}

fn construct(args: &ConstructArgs) -> Outcome {
    let (g, parts, params) = match args.family {
        Family::F => {
            let p = ConstructionParams::new(args.n, args.a, args.b)?;
            let (g, parts) = construct_f(p)?;
            (g, Some(parts), json!({"n": args.n, "a": args.a, "b": args.b}))
        }
        Family::StarMatching => (construct_star_matching(args.n)?, None, json!({"n": args.n})),
        Family::CompleteBipartite => {
            let i = args
                .i
                .ok_or_else(|| Exit::Usage("complete-bipartite needs --i".into()))?;
            (construct_complete_bipartite(args.n, i)?, None, json!({"n": args.n, "i": i}))
        }
    };
    match args.format {
        Format::Graph6 => println!("{}", graph6::encode(&g)),
        Format::Edges => print!("{}", g.to_edge_list()),
        Format::Json => {
            let mut out = json!({
                "family": args.family.to_possible_value().expect("named").get_name(),
                "params": params,
                "n": g.n(),
                "edge_count": g.edge_count(),
                "edges": edge_pairs(&g),
                "graph6": graph6::encode(&g),
            });
            if let Some(parts) = parts {
                out["parts"] = serde_json::to_value(parts).expect("labels serialize");
            }
            print_json(&out);
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Input text for `check`: stdin for "-", an existing file, else the
/// argument itself as graph6.
fn check_input(arg: &str) -> Result<String, Exit> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Exit::Format(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    if Path::new(arg).is_file() {
        return std::fs::read_to_string(arg).map_err(|e| Exit::Format(format!("reading {arg}: {e}")));
    }
    Ok(arg.to_owned())
}

fn verdict_json(v: &SaturationVerdict) -> Value {
    serde_json::to_value(v).expect("verdicts serialize")
}

fn check(args: &CheckArgs) -> Outcome {
    let text = check_input(&args.input)?;
    let graphs: Vec<Graph> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| graph6::decode_str(l).map_err(Exit::from))
        .collect::<Result<_, _>>()?;
    if graphs.is_empty() {
        return Err(Exit::Format("no graph6 input".into()));
    }
    let mut all_saturated = true;
    for g in &graphs {
        let verdict = match args.mode {
            Mode::Fast => is_k4_minus_saturated(g),
            Mode::Naive => naive_is_saturated(g),
            Mode::Both => {
                let fast = is_k4_minus_saturated(g);
                let naive = naive_is_saturated(g);
                if fast != naive {
                    print_json(&json!({
                        "graph6": graph6::encode(g),
                        "disagreement": true,
                        "fast": verdict_json(&fast),
                        "naive": verdict_json(&naive),
                    }));
                    eprintln!("fast and naive checkers disagree on {}", graph6::encode(g));
                    return Ok(ExitCode::from(1));
                }
                fast
            }
        };
        all_saturated &= verdict.saturated;
        print_json(&verdict_json(&verdict));
    }
    Ok(if all_saturated { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn spectrum_set_json(s: &SpectrumSet) -> Value {
    let mut v = serde_json::to_value(s).expect("sets serialize");
    v["intervals"] = s.intervals().into_iter().map(|(lo, hi)| json!([lo, hi])).collect();
    v
}

fn spectrum(args: &SpectrumArgs) -> Outcome {
    match args.kind {
        SpectrumKind::Formula => {
            let s = spectrum_formula(args.n)?;
            let mut v = spectrum_set_json(&s);
            if s.formula_out_of_range {
                v["warning"] = json!(format!(
                    "closed form is stated for n >= 10; n = {} is outside that range",
                    args.n
                ));
            }
            print_json(&v);
        }
        SpectrumKind::Coverage => print_json(&spectrum_set_json(&coverage_set(args.n)?)),
        SpectrumKind::Enumerate => {
            let opts = EnumerationOptions {
                dedup: !args.no_dedup,
                cert_cap: args.cert_cap,
                workers: 0,
                mode: args.checker.into(),
                ..EnumerationOptions::default()
            };
            let a = audit(args.n, opts, false)?;
            let mut v = serde_json::to_value(&a.report).expect("reports serialize");
            v["edge_counts"] = json!(a.report.edge_counts());
            v["search"] = serde_json::to_value(a.stats).expect("stats serialize");
            if matches!(args.checker, Mode::Both) {
                v["checker_disagreements"] = json!(a.checker_disagreements);
            }
            print_json(&v);
            if !a.checker_disagreements.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn resolve_range(args: &VerifyArgs) -> Result<RangeInclusive<usize>, Exit> {
    let (lo, hi) = args.target.default_range();
    let (lo, hi) = match (args.n, args.target) {
        (Some(n), t) if !matches!(t, Target::CheckerEquiv) => {
            if args.n_min.is_some() || args.n_max.is_some() {
                return Err(Exit::Usage("--n excludes --n-min/--n-max".into()));
            }
            (n, n)
        }
        _ => (args.n_min.unwrap_or(lo), args.n_max.unwrap_or(hi)),
    };
    if lo > hi {
        return Err(Exit::Usage(format!("empty range: n-min {lo} > n-max {hi}")));
    }
    Ok(lo..=hi)
}

fn check_enumeration_range(r: &RangeInclusive<usize>) -> Result<(), Exit> {
    if *r.end() > MAX_ENUMERATION_N {
        return Err(Exit::Usage(format!(
            "exhaustive verification is limited to n <= {MAX_ENUMERATION_N}"
        )));
    }
    Ok(())
}

/// `(passed, params, payload)` for one verification target.
fn run_target(args: &VerifyArgs, range: RangeInclusive<usize>) -> Result<(bool, Value, Value), Exit> {
    let (lo, hi) = (*range.start(), *range.end());
    let span = json!({"n_min": lo, "n_max": hi});
    let opts = EnumerationOptions { workers: 0, ..EnumerationOptions::default() };
    Ok(match args.target {
        Target::Lemma1 => {
            let s = sweep_edge_formula(range, 0)?;
            (s.holds(), json!({"n_min": lo, "n_max": hi, "b_min": 0}),
             serde_json::to_value(&s).expect("serializes"))
        }
        Target::Lemma2 => {
            let s = sweep_family_saturation(range)?;
            let small: Vec<Value> = s
                .small_b_saturated()
                .map(|v| json!([v.params.n, v.params.a, v.params.b]))
                .collect();
            (s.holds(), span, json!({
                "checked": s.checked,
                "failures": s.failures,
                "small_b_checked": s.small_b.len(),
                "small_b_saturated": small,
            }))
        }
        Target::Lemma3 => {
            let checks = sweep_interval_coverage(range.clone())?;
            let uncovered: Vec<_> = checks.iter().filter(|c| !c.holds).collect();
            let witness_ns = *range.start()..=(*range.end()).min(MAX_VERTICES);
            let mut witnesses = 0u64;
            let mut bad_witnesses = Vec::new();
            for n in witness_ns.clone() {
                for w in non_bipartite_witnesses(n)? {
                    witnesses += 1;
                    if !w.ok() {
                        bad_witnesses.push(json!({"n": n, "witness": w}));
                    }
                }
            }
            (uncovered.is_empty() && bad_witnesses.is_empty(), span, json!({
                "coverage_checked": checks.len(),
                "uncovered": uncovered,
                "witness_n_max": witness_ns.end(),
                "witnesses_checked": witnesses,
                "witness_failures": bad_witnesses,
            }))
        }
        Target::Overlap => {
            let checks = sweep_overlap(range)?;
            let failures: Vec<_> = checks.iter().filter(|c| !c.holds).collect();
            let pairs: usize = checks.iter().map(|c| c.checked.len()).sum();
            (failures.is_empty(), span, json!({"inequalities_checked": pairs, "failures": failures}))
        }
        Target::TheoremA => {
            check_enumeration_range(&range)?;
            let checks = range
                .map(|n| verify_theorem_a(n, opts))
                .collect::<Result<Vec<_>, _>>()?;
            (checks.iter().all(|c| c.holds), span, json!(checks))
        }
        Target::ProofBound => {
            check_enumeration_range(&range)?;
            let checks = range
                .map(|n| verify_proof_bound(n, opts))
                .collect::<Result<Vec<_>, _>>()?;
            (checks.iter().all(|c| c.holds), span, json!(checks))
        }
        Target::CheckerEquiv => {
            let exhaustive = args.n.unwrap_or(6);
            let r = checker_equivalence(exhaustive, range, args.samples, args.seed)?;
            (r.holds(), json!({
                "exhaustive_max_n": exhaustive,
                "random_n_min": lo,
                "random_n_max": hi,
                "samples": args.samples,
                "seed": args.seed,
            }), serde_json::to_value(&r).expect("serializes"))
        }
    })
}

fn verify(args: &VerifyArgs) -> Outcome {
    let range = resolve_range(args)?;
    let started = Instant::now();
    let (passed, params, payload) = run_target(args, range)?;
    print_json(&json!({
        "command": format!("verify {}", args.target.name()),
        "params": params,
        "outcome": if passed { "pass" } else { "fail" },
        "payload": payload,
    }));
    eprintln!("wall-time: {:.3}s", started.elapsed().as_secs_f64());
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs as usize).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start {} workers: {e}", cli.jobs);
            return ExitCode::from(2);
        }
    };
    let outcome = pool.install(|| match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Check(a) => check(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Verify(a) => verify(a),
    });
    match outcome {
        Ok(code) => code,
        Err(Exit::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Exit::Format(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
