//! `lielab`: batch verification runs with JSON reports.
//!
//! Exit codes: 0 when every check passes, 1 on a failed check, 2 on bad
//! flags or unusable input.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use lielab::budget;
use lielab::io::from_json;
use lielab::pipeline::run_pipeline;
use lielab::suites::{run_suite, Suite, SuiteOptions};
use lielab::tower::theorem3_checks;
use lielab::{CheckOutcome, Error, FieldSpec, RunReport, Series};

#[derive(Parser)]
#[command(name = "lielab", version, about = "Exact verification runs on finite-dimensional algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Levelwise checks for the tower of matrix pairs with involution.
    Theorem3 {
        /// Odd prime giving level sizes p^i and the (k+1, k, 0) signature.
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        levels: usize,
        /// Largest ambient dimension 2·p^(2i) to build.
        #[arg(long)]
        budget: Option<usize>,
        /// Seed for the random simplicity probes.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Square-zero element to 5-grading on a classical matrix algebra.
    Pipeline {
        /// sl, sp or o.
        #[arg(long)]
        series: Series,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded property suites.
    Properties {
        /// identities, descent, vandermonde, degeneracy, words or tkk.
        #[arg(long)]
        suite: Suite,
        /// Defaults to 200 for identities, 50 for vandermonde.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Algebra file in the canonical JSON format.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure that maps to an exit code.
enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::BadCharacteristic(_)
            | Error::PreconditionFailed(_)
            | Error::InvalidPresentation(_)
            | Error::SizeBudget { .. }
            | Error::BudgetExceeded { .. }
            | Error::DimensionMismatch(_)
            | Error::NoSuchElement(_)
            | Error::InfiniteField
            | Error::BadParity(_) => Failure::Usage(e.to_string()),
            other => Failure::Violation(other.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn theorem3(p: u64, levels: usize, budget: Option<usize>, seed: u64) -> Result<RunReport, Failure> {
    if p < 3 || p.is_multiple_of(2) || !lielab::field::is_prime(p) {
        return Err(usage(format!("--p must be an odd prime, got {p}")));
    }
    if levels == 0 {
        return Err(usage("--levels must be at least 1"));
    }
    let budget = budget.unwrap_or_else(budget::tower_size);
    let start = Instant::now();
    let checks = theorem3_checks(p, levels, FieldSpec::rationals(), budget, seed)?;
    Ok(RunReport::new(
        "theorem3",
        params(&[("p", json!(p)), ("levels", json!(levels)), ("budget", json!(budget)), ("field", json!("Q"))]),
        seed,
        checks,
        start.elapsed().as_secs_f64() * 1e3,
    ))
}

fn pipeline(series: Series, n: usize, p: u64, seed: u64) -> Result<RunReport, Failure> {
    if !lielab::field::is_prime(p) {
        return Err(usage(format!("--p must be prime, got {p}")));
    }
    if p <= 7 {
        eprintln!("warning: p = {p}; the grading argument is stated for p > 7");
    }
    let start = Instant::now();
    let check = match run_pipeline(series, n, p, seed) {
        Ok(report) => {
            let ok = report.grading_law;
            CheckOutcome::new("pipeline", ok, serde_json::to_value(&report).expect("serializable"))
        }
        Err(e) => CheckOutcome::new("pipeline", false, json!({ "stage": e.stage, "error": e.error.to_string() })),
    };
    Ok(RunReport::new(
        "pipeline",
        params(&[("series", json!(series.to_string())), ("n", json!(n)), ("p", json!(p))]),
        seed,
        vec![check],
        start.elapsed().as_secs_f64() * 1e3,
    ))
}

fn properties(suite: Suite, trials: Option<usize>, seed: u64, file: Option<PathBuf>) -> Result<RunReport, Failure> {
    let trials = trials.unwrap_or_else(|| suite.default_trials());
    let parsed = match &file {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Some(from_json(&text)?)
        }
        None => None,
    };
    let start = Instant::now();
    let checks = run_suite(suite, &SuiteOptions { trials, seed, file: parsed })?;
    let file_param = file.map(|p| json!(p.display().to_string())).unwrap_or(Value::Null);
    Ok(RunReport::new(
        "properties",
        params(&[("suite", json!(suite.as_str())), ("trials", json!(trials)), ("file", file_param)]),
        seed,
        checks,
        start.elapsed().as_secs_f64() * 1e3,
    ))
}

fn emit(report: &RunReport, out: Option<PathBuf>) -> Result<(), Failure> {
    let text = report.to_json();
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    let passed = report.checks.iter().filter(|c| c.passed()).count();
    eprintln!("{}: {passed}/{} checks passed in {:.0} ms", report.command, report.checks.len(), report.wall_time_ms);
    for c in report.failures() {
        eprintln!("  FAIL {}", c.name);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, out) = match cli.command {
        Command::Theorem3 { p, levels, budget, seed, out } => (theorem3(p, levels, budget, seed), out),
        Command::Pipeline { series, n, p, seed, out } => (pipeline(series, n, p, seed), out),
        Command::Properties { suite, trials, seed, file, out } => (properties(suite, trials, seed, file), out),
    };
    let outcome = result.and_then(|report| emit(&report, out).map(|_| report.all_passed));
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Violation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
