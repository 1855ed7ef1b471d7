//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Expected values come from small independent oracles below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lielab::constructions::Series;
use lielab::pipeline::run_pipeline;
use lielab::report::CheckOutcome;
use lielab::suites::{self, run_suite, Suite, SuiteOptions};
use lielab::tower::theorem3_checks;
use lielab::FieldSpec;
use serde_json::Value;

const SEED: u64 = 20240601;
const LEVEL2_LIMIT: Duration = Duration::from_secs(60);

struct Criterion {
    id: usize,
    title: &'static str,
    run: fn() -> Result<String, String>,
}

fn all_pass(checks: &[CheckOutcome]) -> Result<(), String> {
    match checks.iter().find(|c| !c.passed()) {
        None => Ok(()),
        Some(c) => Err(format!("{} failed: {}", c.name, c.details)),
    }
}

fn detail<'a>(checks: &'a [CheckOutcome], name: &str) -> Result<&'a Value, String> {
    checks.iter().find(|c| c.name == name).map(|c| &c.details).ok_or_else(|| format!("missing check {name:?}"))
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

/// Dimension of `K(M_n ⊕ M_n)` under `(A, B) ↦ (Bᵀ, Aᵀ)`: pairs `(M, -Mᵀ)`.
fn oracle_k_dim(n: usize) -> u64 {
    (n * n) as u64
}

fn theorem3() -> Result<String, String> {
    let start = Instant::now();
    let checks = theorem3_checks(3, 2, FieldSpec::rationals(), 200, SEED).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    all_pass(&checks)?;
    for (level, n) in [(1, 3), (2, 9)] {
        let d = detail(&checks, &format!("level {level} dimensions"))?;
        expect_eq("dim K", d["dim_k"].as_u64(), Some(oracle_k_dim(n)))?;
        expect_eq("dim [K,K]", d["dim_derived"].as_u64(), Some(oracle_k_dim(n) - 1))?;
        let o = detail(&checks, &format!("level {level} trace obstruction"))?;
        expect_eq("obstruction outside [K,K]", o["element_outside_derived"].as_bool(), Some(true))?;
    }
    let img = detail(&checks, "level 2 image of (E11, -E11)")?;
    expect_eq("trace of image", img["trace"].as_str(), Some("1"))?;
    let simp = detail(&checks, "level 1 simplicity probes")?;
    expect_eq("probes passed", simp["passed"].as_u64(), Some(18 + 32))?;
    if elapsed > LEVEL2_LIMIT {
        return Err(format!("level 2 took {elapsed:.1?}"));
    }
    Ok(format!("dims (9,8), (81,80); 50 probes; {elapsed:.1?}"))
}

fn identities() -> Result<String, String> {
    let checks = suites::identities(None, 200, SEED).map_err(|e| e.to_string())?;
    expect_eq("identities", checks.len(), 8)?;
    all_pass(&checks)?;
    for c in &checks {
        expect_eq("trials", c.details["trials"].as_u64(), Some(200))?;
        expect_eq("failures", c.details["failures"].as_u64(), Some(0))?;
    }
    Ok("8 x 200 trials, 0 failures".into())
}

fn descent() -> Result<String, String> {
    let checks = suites::descent(None).map_err(|e| e.to_string())?;
    all_pass(&checks)?;
    expect_eq("checks", checks.len(), 4)?;
    let calls: u64 = checks.iter().filter_map(|c| c.details["calls"].as_u64()).sum();
    Ok(format!("{calls} descent calls; iterated descents reach Jordan elements"))
}

/// Degrees of `ad(diag(1, 0, -1))` on `sl_3`: differences `h_i - h_j` on
/// off-diagonal units plus two Cartan directions in degree 0.
fn oracle_sl3_dims() -> Vec<u64> {
    let h = [1i64, 0, -1];
    let mut dims = vec![0u64; 5];
    dims[2] += 2;
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                dims[(h[i] - h[j] + 2) as usize] += 1;
            }
        }
    }
    dims
}

fn pipeline() -> Result<String, String> {
    let mut summary = Vec::new();
    for (series, n) in [(Series::Sl, 3), (Series::Sp, 4), (Series::O, 5)] {
        let r = run_pipeline(series, n, 11, SEED).map_err(|e| format!("{series}{n}: {e}"))?;
        expect_eq("grading law", r.grading_law, true)?;
        let dims: Vec<u64> = r.part_dims.iter().map(|(_, d)| *d as u64).collect();
        expect_eq("parts sum to dim", dims.iter().sum::<u64>(), r.dim as u64)?;
        if series == Series::Sl {
            expect_eq("sl3 part dims", dims.clone(), oracle_sl3_dims())?;
        }
        summary.push(format!("{series}{n} {dims:?}"));
    }
    Ok(summary.join("; "))
}

fn vandermonde() -> Result<String, String> {
    let checks = suites::vandermonde(None, 50, SEED).map_err(|e| e.to_string())?;
    all_pass(&checks)?;
    let rec = detail(&checks, "vandermonde recovery")?;
    expect_eq("recovered", rec["recovered"].as_u64(), Some(50))?;
    let d = rec["max_d"].as_u64().unwrap_or(99);
    if d > 5 {
        return Err(format!("max d = {d}"));
    }
    Ok(format!("50/50 recovered, max d = {d}; exp_ad automorphisms exact"))
}

fn words() -> Result<String, String> {
    let checks = suites::words().map_err(|e| e.to_string())?;
    all_pass(&checks)?;
    let d = detail(&checks, "word bound M3(GF(11)) E12, E23, E21, E32")?;
    expect_eq("Assoc dim", d["assoc_dim"].as_u64(), Some(9))?;
    // M = 2, n = 4 generators
    expect_eq("N", d["word_length_bound"].as_u64(), Some(2 * (4 + 2)))?;
    Ok(format!("dim Assoc 9 <= d^13 with d = {}", d["lie_dim"]))
}

fn degeneracy() -> Result<String, String> {
    let checks = suites::degeneracy_suite(None, SEED).map_err(|e| e.to_string())?;
    all_pass(&checks)?;
    let s = detail(&checks, "sandwich enumeration sl2(GF(5))")?;
    expect_eq("sl2 sandwiches", s["sandwiches"].as_u64(), Some(0))?;
    // 5^3 - 1 nonzero elements
    let h = detail(&checks, "heisenberg(GF(5)) locally degenerate")?;
    expect_eq("heisenberg degenerate", h["locally_degenerate"].as_u64(), Some(5u64.pow(3) - 1))?;
    let w = detail(&checks, "sl2(GF(5)) S-sequence witness x = e, S = {f}")?;
    expect_eq("witness edges verified", w["edges_verified"].as_bool(), Some(true))?;
    Ok("0 sandwiches in sl2(GF(5)); 124/124 degenerate; witness verified".into())
}

fn tkk() -> Result<String, String> {
    let checks = suites::tkk(1..=5, 11).map_err(|e| e.to_string())?;
    all_pass(&checks)?;
    let mut dims = Vec::new();
    for (m, c) in (1..=5u64).zip(&checks) {
        // skew endomorphisms of a nondegenerate symmetric form on m + 3 dims
        let n = m + 3;
        expect_eq("tkk dim", c.details["dim"].as_u64(), Some(n * (n - 1) / 2))?;
        expect_eq("center", c.details["center_dim"].as_u64(), Some(0))?;
        dims.push(n * (n - 1) / 2);
    }
    Ok(format!("dims {dims:?}, centers 0"))
}

fn char_zero() -> Result<String, String> {
    for n in 2..=4 {
        let c = suites::center_meets_commutators(n, FieldSpec::rationals()).map_err(|e| e.to_string())?;
        all_pass(std::slice::from_ref(&c))?;
        expect_eq("center dim", c.details["center_dim"].as_u64(), Some(1))?;
        expect_eq("commutator dim", c.details["commutator_dim"].as_u64(), Some((n * n - 1) as u64))?;
    }
    Ok("n = 2, 3, 4: intersection 0".into())
}

fn determinism() -> Result<String, String> {
    for suite in Suite::ALL {
        let opts = SuiteOptions { trials: suite.default_trials().min(20), seed: SEED, file: None };
        let a = run_suite(suite, &opts).map_err(|e| e.to_string())?;
        let b = run_suite(suite, &opts).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("suite {suite} differs between runs"));
        }
    }
    let p1 = run_pipeline(Series::Sp, 4, 11, SEED).map_err(|e| e.to_string())?;
    let p2 = run_pipeline(Series::Sp, 4, 11, SEED).map_err(|e| e.to_string())?;
    expect_eq("pipeline replay", p1 == p2, true)?;
    let t1 = theorem3_checks(3, 1, FieldSpec::rationals(), 200, SEED).map_err(|e| e.to_string())?;
    let t2 = theorem3_checks(3, 1, FieldSpec::rationals(), 200, SEED).map_err(|e| e.to_string())?;
    expect_eq("theorem3 replay", t1 == t2, true)?;
    Ok("6 suites, pipeline and tower replay identically".into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "tower levels 1-2: K vs [K,K], trace, simplicity", run: theorem3 },
        Criterion { id: 2, title: "Jordan identity suite on sl4(GF(11))", run: identities },
        Criterion { id: 3, title: "Kostrikin descent on sl3, sp4 over GF(11)", run: descent },
        Criterion { id: 4, title: "pipeline sl3, sp4, o5 over GF(11)", run: pipeline },
        Criterion { id: 5, title: "Vandermonde recovery on sl3(GF(11))", run: vandermonde },
        Criterion { id: 6, title: "graded word bound on M3(GF(11))", run: words },
        Criterion { id: 7, title: "degeneracy suite", run: degeneracy },
        Criterion { id: 8, title: "TKK dimension law m = 1..5", run: tkk },
        Criterion { id: 9, title: "characteristic-zero Z(M_n) meets [M_n, M_n]", run: char_zero },
        Criterion { id: 10, title: "determinism", run: determinism },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        match (c.run)() {
            Ok(msg) => println!("PASS {:>2} {} ({msg}) [{:.1?}]", c.id, c.title, start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {} ({msg}) [{:.1?}]", c.id, c.title, start.elapsed());
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
