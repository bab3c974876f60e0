//! `pke-ma`: verification, classification, continuation, scans, catalog
//! generation and Einstein checks from the command line.
//!
//! Every subcommand is first turned into a command name plus a JSON map of
//! inputs (polynomials inline, in the shared schema), and then executed from
//! that map alone. A saved [`Report`] therefore carries everything needed to
//! re-run its check (`report --rerun`).

use std::collections::BTreeMap;
use std::io::Read;
use std::time::Instant;

use clap::{Parser, Subcommand};
use pke_core::algebra::{parse_rational, ExactScalar, MultiPoly};
use pke_core::catalog::{
    canonical_classes, catalog_from_json, catalog_to_json, partitions, CatalogError,
    SolutionRecord,
};
use pke_core::geometry::{einstein_fit_with_step, sample_points, GeometryError, PotentialKind, ToricPotential};
use pke_core::ma::{
    axis_profile_check, classify_flat, classify_n1, default_r_grid, feasible_k_scan_n2, search_n2,
    taylor_continue_n2, verify_ma_star, CauchyData, FlatClass, MAError,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

/// Verified / success.
pub const EXIT_OK: i32 = 0;
/// Checked and refuted (e.g. not a solution).
pub const EXIT_REFUTED: i32 = 1;
/// Input or usage error.
pub const EXIT_USAGE: i32 = 2;
/// Numeric domain error (e.g. a sample point on the zero set of P).
pub const EXIT_DOMAIN: i32 = 3;

/// Environment variable capping internal parallelism (0 = automatic).
pub const THREADS_ENV: &str = "PKE_MA_THREADS";

/// The canonical machine-readable result of one invocation.
///
/// Fields are declared in alphabetical order and every nested map is sorted,
/// so serialization is byte-identical for identical inputs. `timings` stays
/// empty unless `--timings` is given.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub timings: BTreeMap<String, f64>,
    pub verdict: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        let value = sort_keys(serde_json::to_value(self).expect("reports are plain JSON"));
        serde_json::to_string_pretty(&value).expect("reports are plain JSON")
    }
}

/// Rebuilds every object with sorted keys, independent of serde_json features.
fn sort_keys(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let sorted: BTreeMap<String, Value> = map.into_iter().map(|(k, v)| (k, sort_keys(v))).collect();
            Value::Object(sorted.into_iter().collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sort_keys).collect()),
        other => other,
    }
}

/// Exit code and the text written to standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
}

impl From<MAError> for CliError {
    fn from(e: MAError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Domain(msg) => CliError::Domain(msg),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Geometry(g) => g.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "pke-ma", version, about = "Toric para-Kähler–Einstein Monge–Ampère engine")]
struct Cli {
    /// Emit the canonical JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Record per-phase timings (milliseconds) in the report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check Eq. (MA*): LHS(P) = ±Pⁿ exactly.
    Verify {
        #[arg(long)]
        n: usize,
        /// Polynomial JSON file, or `-` for standard input.
        #[arg(long)]
        poly: String,
    },
    /// Theorem 1 classification of a flat potential D₀.
    ClassifyFlat {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: String,
    },
    /// Axis-restriction profile and Eq. (q) check (axes are 1-based).
    Axis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: String,
        /// Axis to check; all axes when omitted.
        #[arg(long)]
        axis: Option<usize>,
    },
    /// n = 2 Taylor continuation from the Cauchy family (ε, σ, r, k).
    Continue {
        #[arg(long, allow_hyphen_values = true)]
        epsilon: i8,
        #[arg(long, allow_hyphen_values = true)]
        sigma: i8,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 10)]
        degree_bound: u32,
    },
    /// Feasibility of the n = 2 continuation for k = 1..k-max.
    ScanK {
        #[arg(long, default_value_t = 6)]
        k_max: u32,
        /// Comma-separated rationals; default ±1, ±2, ±3.
        #[arg(long, allow_hyphen_values = true)]
        r_grid: Option<String>,
    },
    /// All n = 1 solutions ε(1 + x/r)^k with k ≤ k-max, r on the grid.
    ClassifyN1 {
        #[arg(long, default_value_t = 6)]
        k_max: u32,
        #[arg(long, allow_hyphen_values = true)]
        r_grid: Option<String>,
    },
    /// All n = 2 solutions reachable by continuation from the grid.
    SearchN2 {
        #[arg(long, allow_hyphen_values = true)]
        r_grid: Option<String>,
        #[arg(long, default_value_t = 8)]
        degree_bound: u32,
    },
    /// Theorem 2 catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Numeric fit of Ric = λg at sample points.
    EinsteinCheck {
        /// Potential JSON file ({"kind","P","k_num","k_den"}) or `-`.
        #[arg(long, conflicts_with = "poly")]
        potential: Option<String>,
        /// Polynomial JSON file or `-`, combined with --kind and --k.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, default_value = "log")]
        kind: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
        #[arg(long, default_value_t = 5)]
        points: usize,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Echo a saved JSON report canonically, or re-run it with --rerun.
    Report {
        #[arg(long)]
        file: String,
        #[arg(long)]
        rerun: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// List records from a catalog file, or all partitions of n ≤ max-n.
    List {
        #[arg(long)]
        file: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long = "K", default_value_t = 1)]
        big_k: u32,
    },
    /// Generate the record for one partition and power K.
    Gen {
        /// Comma-separated block sizes, e.g. `1,2`.
        #[arg(long)]
        partition: String,
        #[arg(long = "K", default_value_t = 1)]
        big_k: u32,
        /// Catalog file to add the record to (created if missing).
        #[arg(long)]
        out: Option<String>,
    },
}

/// Result of executing a command from its inputs.
struct Exec {
    verdict: Value,
    refuted: bool,
    text: String,
}

/// Runs the CLI on `args` (including the program name) with the given stdin.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    if let Err(msg) = configure_threads() {
        return failure(EXIT_USAGE, msg);
    }
    let (json_out, with_timings) = (cli.json, cli.timings);
    let mut timings = BTreeMap::new();
    let start = Instant::now();
    let prepared = match prepare(cli.command, stdin) {
        Ok(p) => p,
        Err(e) => return error_outcome(e),
    };
    timings.insert("parse".to_string(), ms(start));

    let (command, inputs, exec) = match prepared {
        Prepared::Run { command, inputs } => {
            let start = Instant::now();
            let exec = match execute(&command, &inputs, true) {
                Ok(x) => x,
                Err(e) => return error_outcome(e),
            };
            timings.insert("compute".to_string(), ms(start));
            (command, inputs, exec)
        }
        Prepared::Echo(report) => {
            let text = report.to_json();
            return Outcome {
                code: EXIT_OK,
                stdout: format!("{text}\n"),
                stderr: String::new(),
            };
        }
        Prepared::Rerun(saved) => {
            let start = Instant::now();
            let mut exec = match execute(&saved.command, &saved.inputs, false) {
                Ok(x) => x,
                Err(e) => return error_outcome(e),
            };
            timings.insert("compute".to_string(), ms(start));
            let reproduced = exec.verdict == saved.verdict;
            exec.text = format!(
                "{}re-run of `{}`: verdict {}\n",
                exec.text,
                saved.command,
                if reproduced { "reproduced" } else { "DIFFERS from the saved report" }
            );
            exec.refuted |= !reproduced;
            (saved.command, saved.inputs, exec)
        }
    };

    let report = Report {
        command,
        inputs,
        timings: if with_timings { timings } else { BTreeMap::new() },
        verdict: exec.verdict,
    };
    let stdout = if json_out {
        format!("{}\n", report.to_json())
    } else {
        let mut text = exec.text;
        if with_timings {
            for (phase, t) in &report.timings {
                text.push_str(&format!("time {phase}: {t:.3} ms\n"));
            }
        }
        text
    };
    Outcome {
        code: if exec.refuted { EXIT_REFUTED } else { EXIT_OK },
        stdout,
        stderr: String::new(),
    }
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn failure(code: i32, msg: String) -> Outcome {
    Outcome {
        code,
        stdout: String::new(),
        stderr: format!("pke-ma: {msg}\n"),
    }
}

fn error_outcome(e: CliError) -> Outcome {
    match e {
        CliError::Usage(msg) => failure(EXIT_USAGE, msg),
        CliError::Domain(msg) => failure(EXIT_DOMAIN, format!("domain error: {msg}")),
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("{THREADS_ENV} must be a non-negative integer, got {raw:?}"))?;
    // The global pool can be configured once per process; later calls (for
    // example repeated `run` invocations in tests) keep the first setting.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

enum Prepared {
    Run { command: String, inputs: Map<String, Value> },
    Echo(Report),
    Rerun(Report),
}

fn read_source(path: &str, stdin: &mut dyn Read) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("reading {path}: {e}")))
    }
}

fn read_poly(path: &str, stdin: &mut dyn Read) -> CliResult<Value> {
    let text = read_source(path, stdin)?;
    let p: MultiPoly =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("malformed polynomial JSON in {path}: {e}")))?;
    Ok(serde_json::to_value(&p).expect("polynomials serialize"))
}

fn obj(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn grid_value(grid: Option<String>) -> CliResult<Value> {
    let grid = match grid {
        None => default_r_grid(),
        Some(s) => s
            .split(',')
            .map(|t| parse_rational(t).map_err(|e| CliError::Usage(e.to_string())))
            .collect::<CliResult<Vec<_>>>()?,
    };
    Ok(Value::Array(grid.iter().map(|r| Value::String(r.to_string())).collect()))
}

/// Turns parsed arguments into a command name and its self-contained inputs.
fn prepare(command: Command, stdin: &mut dyn Read) -> CliResult<Prepared> {
    let run = |command: &str, inputs: Map<String, Value>| Prepared::Run {
        command: command.to_string(),
        inputs,
    };
    Ok(match command {
        Command::Verify { n, poly } => run("verify", obj(vec![("n", json!(n)), ("poly", read_poly(&poly, stdin)?)])),
        Command::ClassifyFlat { n, poly } => {
            run("classify-flat", obj(vec![("n", json!(n)), ("poly", read_poly(&poly, stdin)?)]))
        }
        Command::Axis { n, poly, axis } => run(
            "axis",
            obj(vec![("n", json!(n)), ("poly", read_poly(&poly, stdin)?), ("axis", json!(axis))]),
        ),
        Command::Continue {
            epsilon,
            sigma,
            r,
            k,
            degree_bound,
        } => {
            let r = parse_rational(&r).map_err(|e| CliError::Usage(e.to_string()))?;
            run(
                "continue",
                obj(vec![
                    ("epsilon", json!(epsilon)),
                    ("sigma", json!(sigma)),
                    ("r", json!(r.to_string())),
                    ("k", json!(k)),
                    ("degree_bound", json!(degree_bound)),
                ]),
            )
        }
        Command::ScanK { k_max, r_grid } => {
            run("scan-k", obj(vec![("k_max", json!(k_max)), ("r_grid", grid_value(r_grid)?)]))
        }
        Command::ClassifyN1 { k_max, r_grid } => {
            run("classify-n1", obj(vec![("k_max", json!(k_max)), ("r_grid", grid_value(r_grid)?)]))
        }
        Command::SearchN2 { r_grid, degree_bound } => run(
            "search-n2",
            obj(vec![("r_grid", grid_value(r_grid)?), ("degree_bound", json!(degree_bound))]),
        ),
        Command::Catalog { action } => match action {
            CatalogCommand::List { file, max_n, big_k } => {
                let mut inputs = obj(vec![("max_n", json!(max_n)), ("K", json!(big_k))]);
                if let Some(path) = file {
                    let text = read_source(&path, stdin)?;
                    let records = catalog_from_json(&text)
                        .map_err(|e| CliError::Usage(format!("malformed catalog {path}: {e}")))?;
                    inputs.insert("file".into(), json!(path));
                    inputs.insert("records".into(), serde_json::to_value(records).expect("records serialize"));
                }
                run("catalog-list", inputs)
            }
            CatalogCommand::Gen { partition, big_k, out } => {
                let parts = partition
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| CliError::Usage(format!("partition must be comma-separated positive integers, got {partition:?}")))?;
                run(
                    "catalog-gen",
                    obj(vec![("partition", json!(parts)), ("K", json!(big_k)), ("out", json!(out))]),
                )
            }
        },
        Command::EinsteinCheck {
            potential,
            poly,
            kind,
            k,
            points,
            step,
            tol,
            seed,
        } => {
            let pot: ToricPotential = match (potential, poly) {
                (Some(path), _) => serde_json::from_str(&read_source(&path, stdin)?)
                    .map_err(|e| CliError::Usage(format!("malformed potential JSON in {path}: {e}")))?,
                (None, Some(path)) => {
                    let p: MultiPoly = serde_json::from_value(read_poly(&path, stdin)?).expect("re-parse");
                    let k = parse_rational(&k).map_err(|e| CliError::Usage(e.to_string()))?;
                    match kind.as_str() {
                        "log" => ToricPotential::log(p, k)?,
                        "poly" => ToricPotential::scaled_poly(p, k)?,
                        other => return Err(CliError::Usage(format!("--kind must be log or poly, got {other:?}"))),
                    }
                }
                (None, None) => return Err(CliError::Usage("einstein-check needs --potential or --poly".into())),
            };
            if !(step.is_finite() && step > 0.0) || !(tol.is_finite() && tol > 0.0) {
                return Err(CliError::Usage("--step and --tol must be positive".into()));
            }
            run(
                "einstein-check",
                obj(vec![
                    ("potential", serde_json::to_value(&pot).expect("potentials serialize")),
                    ("points", json!(points)),
                    ("step", json!(step)),
                    ("tol", json!(tol)),
                    ("seed", json!(seed)),
                ]),
            )
        }
        Command::Report { file, rerun } => {
            let text = read_source(&file, stdin)?;
            let report: Report =
                serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("malformed report {file}: {e}")))?;
            if rerun {
                Prepared::Rerun(report)
            } else {
                Prepared::Echo(report)
            }
        }
    })
}

// ---- typed access to the inputs map ----

fn field<'a>(inputs: &'a Map<String, Value>, key: &str) -> CliResult<&'a Value> {
    inputs
        .get(key)
        .ok_or_else(|| CliError::Usage(format!("report inputs lack {key:?}")))
}

fn get_u64(inputs: &Map<String, Value>, key: &str) -> CliResult<u64> {
    field(inputs, key)?
        .as_u64()
        .ok_or_else(|| CliError::Usage(format!("input {key:?} must be a non-negative integer")))
}

fn get_i8(inputs: &Map<String, Value>, key: &str) -> CliResult<i8> {
    field(inputs, key)?
        .as_i64()
        .and_then(|v| i8::try_from(v).ok())
        .ok_or_else(|| CliError::Usage(format!("input {key:?} must be ±1")))
}

fn get_f64(inputs: &Map<String, Value>, key: &str) -> CliResult<f64> {
    field(inputs, key)?
        .as_f64()
        .ok_or_else(|| CliError::Usage(format!("input {key:?} must be a number")))
}

fn get_u32(inputs: &Map<String, Value>, key: &str) -> CliResult<u32> {
    u32::try_from(get_u64(inputs, key)?).map_err(|_| CliError::Usage(format!("input {key:?} too large")))
}

fn get_usize(inputs: &Map<String, Value>, key: &str) -> CliResult<usize> {
    usize::try_from(get_u64(inputs, key)?).map_err(|_| CliError::Usage(format!("input {key:?} too large")))
}

fn get_poly(inputs: &Map<String, Value>, key: &str) -> CliResult<MultiPoly> {
    serde_json::from_value(field(inputs, key)?.clone())
        .map_err(|e| CliError::Usage(format!("input {key:?} is not a polynomial: {e}")))
}

fn get_rat(inputs: &Map<String, Value>, key: &str) -> CliResult<ExactScalar> {
    let s = field(inputs, key)?
        .as_str()
        .ok_or_else(|| CliError::Usage(format!("input {key:?} must be a rational string")))?;
    parse_rational(s).map_err(|e| CliError::Usage(e.to_string()))
}

fn get_grid(inputs: &Map<String, Value>) -> CliResult<Vec<ExactScalar>> {
    field(inputs, "r_grid")?
        .as_array()
        .ok_or_else(|| CliError::Usage("input \"r_grid\" must be an array".into()))?
        .iter()
        .map(|v| {
            let s = v.as_str().ok_or_else(|| CliError::Usage("grid entries must be strings".into()))?;
            parse_rational(s).map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect()
}

fn poly_json(p: &MultiPoly) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn sign_str(s: i8) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}

fn polys_text(label: &str, polys: &[MultiPoly]) -> String {
    let mut text = format!("{label}: {}\n", polys.len());
    for p in polys {
        text.push_str(&format!("  {p}\n"));
    }
    text
}

/// Executes a command from its inputs. `side_effects` is false when
/// re-running a saved report, so catalog files are not rewritten.
fn execute(command: &str, inputs: &Map<String, Value>, side_effects: bool) -> CliResult<Exec> {
    match command {
        "verify" => {
            let (n, p) = (get_usize(inputs, "n")?, get_poly(inputs, "poly")?);
            let r = verify_ma_star(&p, n)?;
            let text = match r.sign {
                Some(s) => format!("P = {p}\nn = {n}\nverdict: solution of (MA*) with sign {}\n", sign_str(s)),
                None => format!("P = {p}\nn = {n}\nverdict: NOT a solution of (MA*)\nLHS = {}\n", r.witness),
            };
            Ok(Exec {
                verdict: json!({
                    "is_solution": r.is_solution,
                    "sign": r.sign.map(sign_str),
                    "witness": poly_json(&r.witness),
                }),
                refuted: !r.is_solution,
                text,
            })
        }
        "classify-flat" => {
            let (n, p) = (get_usize(inputs, "n")?, get_poly(inputs, "poly")?);
            let class = classify_flat(&p, n)?;
            let (verdict, text) = match &class {
                FlatClass::Linear { coeffs } => {
                    let cs: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
                    (
                        json!({"class": "linear", "coeffs": cs}),
                        format!("D0 = {p}\nverdict: flat solution, linear with coefficients [{}]\n", cs.join(", ")),
                    )
                }
                FlatClass::NotSolution { lhs } => (
                    json!({"class": "not_solution", "lhs": poly_json(lhs)}),
                    format!("D0 = {p}\nverdict: NOT a flat solution (LHS = {lhs})\n"),
                ),
                FlatClass::Anomalous { lhs } => (
                    json!({"class": "anomalous", "lhs": poly_json(lhs)}),
                    format!("D0 = {p}\nverdict: ANOMALOUS: LHS = {lhs} ≡ ±1 but D0 is not linear\n"),
                ),
            };
            Ok(Exec {
                verdict,
                refuted: !class.is_solution(),
                text,
            })
        }
        "axis" => {
            let (n, p) = (get_usize(inputs, "n")?, get_poly(inputs, "poly")?);
            let axes: Vec<usize> = match field(inputs, "axis")? {
                Value::Null => (1..=n).collect(),
                v => vec![v
                    .as_u64()
                    .and_then(|a| usize::try_from(a).ok())
                    .filter(|&a| (1..=n).contains(&a))
                    .ok_or_else(|| CliError::Usage(format!("--axis must be in 1..={n}")))?],
            };
            let mut profiles = Vec::new();
            let mut failures = Vec::new();
            let mut text = format!("P = {p}\n");
            for axis in axes {
                match axis_profile_check(&p, n, axis - 1) {
                    Ok(prof) => {
                        text.push_str(&format!(
                            "axis {axis}: p(t) = {}(1 + t/{})^{}, Eq. (q) holds with sign {}\n",
                            sign_str(prof.epsilon),
                            prof.r,
                            prof.k,
                            sign_str(prof.q_sign)
                        ));
                        profiles.push(json!({
                            "axis": axis,
                            "epsilon": prof.epsilon,
                            "r": prof.r.to_string(),
                            "k": prof.k,
                            "q_sign": prof.q_sign,
                        }));
                    }
                    Err(MAError::ProfileMismatch(msg)) => {
                        text.push_str(&format!("axis {axis}: FAILED: {msg}\n"));
                        failures.push(json!({"axis": axis, "error": msg}));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(Exec {
                refuted: !failures.is_empty(),
                verdict: json!({"profiles": profiles, "failures": failures}),
                text,
            })
        }
        "continue" => {
            let cd = CauchyData::family(
                get_i8(inputs, "epsilon")?,
                get_i8(inputs, "sigma")?,
                get_rat(inputs, "r")?,
                get_u32(inputs, "k")?,
            )?;
            match taylor_continue_n2(&cd, get_u32(inputs, "degree_bound")?) {
                Ok(c) => Ok(Exec {
                    verdict: json!({
                        "consistent": true,
                        "poly": poly_json(&c.poly),
                        "coefficients": c.coefficients.iter().map(poly_json).collect::<Vec<_>>(),
                        "sign": sign_str(c.sign),
                    }),
                    refuted: false,
                    text: format!(
                        "continuation: P = {}\nsolves (MA*) with sign {}\n",
                        c.poly,
                        sign_str(c.sign)
                    ),
                }),
                Err(MAError::Inconsistent(reason)) => Ok(Exec {
                    text: format!("continuation inconsistent: {reason}\n"),
                    verdict: json!({"consistent": false, "reason": reason}),
                    refuted: true,
                }),
                Err(e) => Err(e.into()),
            }
        }
        "scan-k" => {
            let feasible = feasible_k_scan_n2(get_u32(inputs, "k_max")?, &get_grid(inputs)?);
            let list: Vec<u32> = feasible.into_iter().collect();
            Ok(Exec {
                text: format!("feasible k: {list:?}\n"),
                verdict: json!({"feasible": list}),
                refuted: false,
            })
        }
        "classify-n1" => {
            let sols = classify_n1(get_u32(inputs, "k_max")?, &get_grid(inputs)?);
            Ok(Exec {
                text: polys_text("n = 1 solutions", &sols),
                verdict: json!({"solutions": sols.iter().map(poly_json).collect::<Vec<_>>()}),
                refuted: false,
            })
        }
        "search-n2" => {
            let sols = search_n2(&get_grid(inputs)?, get_u32(inputs, "degree_bound")?);
            let classes = canonical_classes(&sols)?;
            Ok(Exec {
                text: format!("{}{}", polys_text("n = 2 solutions", &sols), polys_text("canonical classes", &classes)),
                verdict: json!({
                    "solutions": sols.iter().map(poly_json).collect::<Vec<_>>(),
                    "canonical_classes": classes.iter().map(poly_json).collect::<Vec<_>>(),
                }),
                refuted: false,
            })
        }
        "catalog-gen" => {
            let partition: Vec<usize> = serde_json::from_value(field(inputs, "partition")?.clone())
                .map_err(|e| CliError::Usage(format!("partition: {e}")))?;
            let record = SolutionRecord::new(&partition, get_u32(inputs, "K")?)?;
            let verified = verify_ma_star(&record.p, record.n)?.is_solution;
            let mut text = record_text(&record, verified);
            if let (true, Some(path)) = (side_effects, field(inputs, "out")?.as_str()) {
                add_to_catalog(path, &record)?;
                text.push_str(&format!("written to {path}\n"));
            }
            Ok(Exec {
                verdict: json!({"record": record, "verified": verified}),
                refuted: !verified,
                text,
            })
        }
        "catalog-list" => {
            let records: Vec<SolutionRecord> = match inputs.get("records") {
                Some(v) => serde_json::from_value(v.clone()).map_err(|e| CliError::Usage(format!("records: {e}")))?,
                None => {
                    let big_k = get_u32(inputs, "K")?;
                    (1..=get_usize(inputs, "max_n")?)
                        .flat_map(partitions)
                        .map(|p| SolutionRecord::new(&p, big_k))
                        .collect::<Result<_, _>>()?
                }
            };
            let mut text = String::new();
            let mut entries = Vec::new();
            let mut all_ok = true;
            for r in &records {
                let verified = verify_ma_star(&r.p, r.n)?.is_solution;
                all_ok &= verified;
                text.push_str(&record_text(r, verified));
                entries.push(json!({"record": r, "verified": verified}));
            }
            Ok(Exec {
                verdict: json!({"records": entries}),
                refuted: !all_ok,
                text,
            })
        }
        "einstein-check" => {
            let pot: ToricPotential = serde_json::from_value(field(inputs, "potential")?.clone())
                .map_err(|e| CliError::Usage(format!("potential: {e}")))?;
            let tol = get_f64(inputs, "tol")?;
            let points = sample_points(pot.nvars(), get_usize(inputs, "points")?, get_u64(inputs, "seed")?);
            let fit = einstein_fit_with_step(&pot, &points, get_f64(inputs, "step")?)?;
            let einstein = fit.max_residual < tol;
            let kind = match pot.kind() {
                PotentialKind::Log => "log",
                PotentialKind::Poly => "poly",
            };
            Ok(Exec {
                text: format!(
                    "potential: {kind}, k = {}, P = {}\nλ = {:.12}\nmax |Ric − λg| = {:.3e} over {} points\nverdict: {}\n",
                    pot.exponent(),
                    pot.polynomial(),
                    fit.lambda,
                    fit.max_residual,
                    fit.points,
                    if einstein { "Einstein within tolerance" } else { "NOT Einstein within tolerance" }
                ),
                verdict: json!({
                    "lambda": fit.lambda,
                    "max_residual": fit.max_residual,
                    "points": fit.points,
                    "tol": tol,
                    "einstein": einstein,
                }),
                refuted: !einstein,
            })
        }
        other => Err(CliError::Usage(format!("unknown command {other:?} in report"))),
    }
}

fn record_text(r: &SolutionRecord, verified: bool) -> String {
    format!(
        "{} ({}): n = {}, h = {}, P = {}, min embedding dim = {}, verified = {}\n",
        r.name, r.manifold_label, r.n, r.h, r.p, r.min_embedding_dim, verified
    )
}

/// Adds `record` to the JSON catalog at `path`, replacing an equal-named entry.
fn add_to_catalog(path: &str, record: &SolutionRecord) -> CliResult<()> {
    let mut records = match std::fs::read_to_string(path) {
        Ok(text) => catalog_from_json(&text).map_err(|e| CliError::Usage(format!("malformed catalog {path}: {e}")))?,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Vec::new(),
        Err(e) => return Err(CliError::Usage(format!("reading {path}: {e}"))),
    };
    records.retain(|r| r.name != record.name);
    records.push(record.clone());
    records.sort_by(|a, b| (a.n, &a.partition, a.k).cmp(&(b.n, &b.partition, b.k)));
    std::fs::write(path, catalog_to_json(&records) + "\n").map_err(|e| CliError::Usage(format!("writing {path}: {e}")))
}
