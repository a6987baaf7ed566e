//! `fano`: classify Fano schemes of k-planes on complete intersections and
//! check the predictions by enumeration over small prime fields.
//!
//! Exit codes: 0 success or certified, 2 invalid input, 3 certificate or
//! sweep invariant fails, 4 enumeration budget exceeded.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use fano_core::classifier::sweep::{sweep, to_csv, SweepGrid};
use fano_core::classifier::{classify, curve_free_bound_holds, normalize, FanoClassification};
use fano_core::exec::configure_threads;
use fano_core::grassmann::{count_planes, GrassmannError};
use fano_core::verifier::{
    chart_ideal, fano_points, meet_components, random_instance, ChartIdealJson, FanoPointReport,
};
use fano_core::{
    ClassifyError, CompleteIntersection, Exec, FanoSetup, PivotSet, PrimeField, Status, Strategy,
    VerifyError, DEFAULT_BUDGET,
};

const EXIT_OK: u8 = 0;
const EXIT_INVALID: u8 = 2;
const EXIT_FAILS: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "fano", version, about = "Fano schemes of k-planes on complete intersections")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify F_k(X) for a general X of the given shape.
    Classify(ShapeArgs),
    /// Check the curve-free bound; exit 0 when it holds, 3 when it fails.
    Certify(ShapeArgs),
    /// Enumerate the k-planes on an explicit instance over F_p.
    Enumerate(EnumerateArgs),
    /// Classify every setup of a parameter grid and re-check the identities.
    Sweep(SweepArgs),
    /// Export chart ideals of F_k(X) for an explicit instance.
    Ideal(IdealArgs),
    /// Print the number of k-planes in P^n(F_p).
    CountPlanes(CountArgs),
}

#[derive(Debug, Args)]
struct ShapeArgs {
    #[arg(long)]
    n: u32,
    /// Comma-separated degrees, linear equations allowed.
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<u32>,
    #[arg(long)]
    k: u32,
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// Instance file: {"p": int, "n": int, "polys": [string, ...]}.
    #[arg(long, conflicts_with_all = ["n", "degrees", "p"])]
    input: Option<PathBuf>,
    /// Ambient dimension of a random instance.
    #[arg(long, requires = "degrees")]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    degrees: Vec<u32>,
    #[arg(long, default_value_t = 7)]
    p: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Include the pairwise meet matrix.
    #[arg(long)]
    meets: bool,
    /// Group the planes into connected components of the disjointness graph.
    #[arg(long)]
    components: bool,
    /// Write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Range `a..b`, `..b` or `a`, inclusive.
    #[arg(long)]
    n: String,
    /// Number of equations.
    #[arg(long, default_value = "1")]
    s: String,
    /// Range for every degree.
    #[arg(long)]
    degrees: String,
    #[arg(long)]
    k: String,
    /// How far above n to re-embed when checking padding invariance.
    #[arg(long, default_value_t = 3)]
    padding: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct IdealArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long)]
    k: usize,
    /// Comma-separated pivot columns, or `all`.
    #[arg(long, default_value = "all")]
    chart: String,
    /// Directory receiving one JSON file per chart.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    p: u64,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl ToString) -> Self {
        Failure { code: EXIT_INVALID, message: message.to_string() }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        Failure::invalid(e)
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Grassmann(GrassmannError::BudgetExceeded { .. }) => {
                Failure { code: EXIT_BUDGET, message: e.to_string() }
            }
            other => Failure::invalid(other),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = match cli.threads {
        Some(0) => {
            eprintln!("fano: --threads must be at least 1");
            return ExitCode::from(EXIT_INVALID);
        }
        Some(1) => Exec::Sequential,
        Some(t) => {
            configure_threads(t);
            Exec::Parallel
        }
        None => Exec::Parallel,
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Classify(args) => cmd_classify(&args, json),
        Command::Certify(args) => cmd_certify(&args, json),
        Command::Enumerate(args) => cmd_enumerate(&args, json, exec),
        Command::Sweep(args) => cmd_sweep(&args, json, exec),
        Command::Ideal(args) => cmd_ideal(&args, json),
        Command::CountPlanes(args) => cmd_count_planes(&args, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("fano: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    emit(&format!("{}\n", to_json(value)));
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable report")
}

fn shape(args: &ShapeArgs) -> FanoSetup {
    FanoSetup::new(args.n, args.degrees.clone(), args.k)
}

fn print_classification(c: &FanoClassification) {
    let canonical = c.canonical_degree.as_ref().map_or("-".to_string(), ToString::to_string);
    let rows = [
        ("setup", c.raw_setup.to_string()),
        ("normalized", c.normalized_setup.to_string()),
        ("status", format!("{:?}", c.status)),
        ("t", c.t.to_string()),
        ("components", format!("{:?}", c.component_count)),
        ("canonical degree", canonical),
        ("m", c.m.to_string()),
        ("degree product", c.product.to_string()),
        ("rationally connected", c.rationally_connected.to_string()),
        ("general type", c.general_type.to_string()),
        ("curve-free certificate", c.curve_free_certificate.to_string()),
        ("scope", format!("{:?}", c.scope_note)),
    ];
    for (key, value) in rows {
        println!("{key:<24}{value}");
    }
    for note in &c.notes {
        println!("note: {note}");
    }
}

fn cmd_classify(args: &ShapeArgs, json: bool) -> CmdResult {
    let c = classify(&shape(args))?;
    if json {
        print_json(&c);
    } else {
        print_classification(&c);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CertifyReport {
    raw_setup: FanoSetup,
    normalized_setup: FanoSetup,
    certified: bool,
}

fn cmd_certify(args: &ShapeArgs, json: bool) -> CmdResult {
    let raw = shape(args);
    let normalized = normalize(&raw)?;
    let certified = curve_free_bound_holds(&normalized)?;
    if json {
        print_json(&CertifyReport { raw_setup: raw, normalized_setup: normalized, certified });
    } else if certified {
        println!("certified: bound holds for {normalized}; no rational or elliptic curves on F_k(X) for very general X");
    } else {
        println!("not certified: bound fails for {normalized}");
    }
    Ok(if certified { EXIT_OK } else { EXIT_FAILS })
}

fn load_instance(args: &InstanceArgs) -> Result<CompleteIntersection, Failure> {
    match (&args.input, args.n) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
            Ok(CompleteIntersection::from_json(&text)?)
        }
        (None, Some(n)) => {
            let field = PrimeField::new(args.p).map_err(Failure::invalid)?;
            Ok(random_instance(n, &args.degrees, field, args.seed)?)
        }
        (None, None) => Err(Failure::invalid("give --input or --n with --degrees")),
    }
}

#[derive(Serialize)]
struct EnumerateReport {
    p: u32,
    n: usize,
    k: usize,
    degrees: Vec<u32>,
    polys: Vec<String>,
    #[serde(serialize_with = "bigint_number")]
    t: num_bigint::BigInt,
    status: Status,
    #[serde(flatten)]
    points: FanoPointReport,
}

fn bigint_number<S: serde::Serializer>(v: &num_bigint::BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

fn cmd_enumerate(args: &EnumerateArgs, json: bool, exec: Exec) -> CmdResult {
    let x = load_instance(&args.instance)?;
    let prediction = classify(&x.setup(args.k))?;
    let mut set = fano_points(&x, args.k, args.budget, Strategy::Charts, exec)?;
    let components = args.components.then(|| meet_components(&mut set, exec));
    if args.meets && set.meets.is_none() {
        set.compute_meets(exec);
    }
    let report = EnumerateReport {
        p: x.field().p(),
        n: x.n(),
        k: args.k,
        degrees: x.degrees().to_vec(),
        polys: x.to_file().polys,
        t: prediction.t.clone(),
        status: prediction.status,
        points: FanoPointReport::new(&set, components, args.meets),
    };
    if let Some(path) = &args.out {
        write_file(path, &to_json(&report))?;
    }
    if json {
        print_json(&report);
        return Ok(EXIT_OK);
    }

    println!("instance: {} over F_{}", x.setup(args.k), report.p);
    println!("count: {}", set.count());
    println!("t: {}", prediction.t);
    let predicted_empty = !prediction.status.is_nonempty();
    let consistency = match (predicted_empty, set.count() == 0) {
        (true, true) | (false, false) => "agrees with",
        (true, false) => "special instance: planes found despite",
        (false, true) => "no F_p-rational planes found despite",
    };
    println!(
        "consistency: {consistency} the classifier verdict {:?} ({:?})",
        prediction.status, prediction.scope_note
    );
    if let Some(comps) = &report.points.meet_components {
        let sizes: Vec<String> = comps.iter().map(|c| c.len().to_string()).collect();
        println!("components: {} (sizes {})", comps.len(), sizes.join(", "));
    }
    Ok(EXIT_OK)
}

/// Inclusive range from `a..b`, `..b` or a single `a`.
fn parse_range(flag: &str, text: &str) -> Result<RangeInclusive<u32>, Failure> {
    let num = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| Failure::invalid(format!("--{flag}: bad range {text:?}")))
    };
    match text.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo = if lo.trim().is_empty() { 0 } else { num(lo)? };
            Ok(lo..=num(hi)?)
        }
        None => {
            let v = num(text)?;
            Ok(v..=v)
        }
    }
}

fn cmd_sweep(args: &SweepArgs, json: bool, exec: Exec) -> CmdResult {
    let grid = SweepGrid {
        n: parse_range("n", &args.n)?,
        s: parse_range("s", &args.s)?,
        degrees: parse_range("degrees", &args.degrees)?,
        k: parse_range("k", &args.k)?,
    };
    let report = sweep(&grid, args.padding, exec);
    let rendered = if json { to_json(&report) } else { to_csv(&report) };
    match &args.out {
        Some(path) => write_file(path, &rendered)?,
        None if json => emit(&format!("{rendered}\n")),
        None => emit(&rendered),
    }
    if report.failures > 0 {
        eprintln!("fano: {} sweep rows failed an internal identity", report.failures);
        return Ok(EXIT_FAILS);
    }
    Ok(EXIT_OK)
}

fn parse_chart(text: &str, x: &CompleteIntersection, k: usize) -> Result<Vec<PivotSet>, Failure> {
    if text == "all" {
        return Ok(PivotSet::all(x.n(), k));
    }
    let cols = text
        .split(',')
        .map(|c| c.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::invalid(format!("--chart: cannot parse {text:?}")))?;
    let pivots = PivotSet::new(cols, x.n()).map_err(Failure::invalid)?;
    if pivots.len() != k + 1 {
        return Err(Failure::invalid(format!("--chart: {pivots} needs k + 1 = {} columns", k + 1)));
    }
    Ok(vec![pivots])
}

fn cmd_ideal(args: &IdealArgs, json: bool) -> CmdResult {
    let x = load_instance(&args.instance)?;
    let charts = parse_chart(&args.chart, &x, args.k)?;
    let ideals = charts
        .iter()
        .map(|p| chart_ideal(&x, args.k, p).map(|i| i.to_json()))
        .collect::<Result<Vec<ChartIdealJson>, _>>()?;
    let Some(dir) = &args.out else {
        print_json(&ideals);
        return Ok(EXIT_OK);
    };
    fs::create_dir_all(dir).map_err(|e| Failure::invalid(format!("{}: {e}", dir.display())))?;
    for ideal in &ideals {
        let name: Vec<String> = ideal.pivots.iter().map(usize::to_string).collect();
        let path = dir.join(format!("chart_{}.json", name.join("_")));
        write_file(&path, &to_json(ideal))?;
        if !json {
            println!("{}: {} generators", path.display(), ideal.generators.len());
        }
    }
    Ok(EXIT_OK)
}

fn cmd_count_planes(args: &CountArgs, json: bool) -> CmdResult {
    let field = PrimeField::new(args.p).map_err(Failure::invalid)?;
    let count = count_planes(args.n, args.k, field).map_err(Failure::invalid)?;
    if json {
        #[derive(Serialize)]
        struct Count {
            #[serde(serialize_with = "bigint_number")]
            count: num_bigint::BigInt,
        }
        print_json(&Count { count });
    } else {
        println!("{count}");
    }
    Ok(EXIT_OK)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    let mut text = contents.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}
