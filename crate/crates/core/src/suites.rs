//! Seeded property suites. Each returns its checks in a fixed order so the
//! same seed reproduces the same outcomes.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde_json::json;

use crate::algebra::{AlgebraElement, AlgebraKind, AlgebraPresentation};
use crate::budget;
use crate::constructions::{build_matrix_lie, field_algebra, heisenberg, matrix_algebra, square_zero_element, tkk_skew, BilinearForm, Series};
use crate::degeneracy::{
    self, all_s_sequences_terminate, kloc_experiment, locally_degenerate_element, m_sequence_explore, sandwich_set, sandwich_set_by_equations,
};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::grading::{commutator_algebra, commutator_grading, exp_ad, graded_word_bound_check, vandermonde_recover};
use crate::io::AlgebraFile;
use crate::jordan::{is_jordan_element, iterated_descent, kostrikin_descent, verify_identities};
use crate::matrix::ExactMatrix;
use crate::report::CheckOutcome;
use crate::sampling;
use crate::subspace::{center, derived, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Identities,
    Descent,
    Vandermonde,
    Degeneracy,
    Words,
    Tkk,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Identities, Suite::Descent, Suite::Vandermonde, Suite::Degeneracy, Suite::Words, Suite::Tkk];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Descent => "descent",
            Suite::Vandermonde => "vandermonde",
            Suite::Degeneracy => "degeneracy",
            Suite::Words => "words",
            Suite::Tkk => "tkk",
        }
    }

    pub fn default_trials(&self) -> usize {
        match self {
            Suite::Identities => 200,
            Suite::Vandermonde => 50,
            _ => 1,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.as_str() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

pub struct SuiteOptions {
    pub trials: usize,
    pub seed: u64,
    pub file: Option<AlgebraFile>,
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<CheckOutcome>> {
    let file = opts.file.as_ref().map(|f| &f.algebra);
    match suite {
        Suite::Identities => identities(file, opts.trials, opts.seed),
        Suite::Descent => descent(file),
        Suite::Vandermonde => vandermonde(file, opts.trials, opts.seed),
        Suite::Degeneracy => degeneracy_suite(file, opts.seed),
        Suite::Words => no_file(suite, file).and_then(|_| words()),
        Suite::Tkk => no_file(suite, file).and_then(|_| tkk(1..=5, 11)),
    }
}

fn no_file(suite: Suite, file: Option<&AlgebraPresentation>) -> Result<()> {
    match file {
        Some(_) => Err(Error::PreconditionFailed(format!("suite {suite} runs on fixed instances and takes no file"))),
        None => Ok(()),
    }
}

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("prime")
}

fn require_lie(l: &AlgebraPresentation) -> Result<()> {
    if l.kind() != AlgebraKind::Lie {
        return Err(Error::PreconditionFailed("suite needs a Lie algebra".into()));
    }
    Ok(())
}

/// First basis element with `ad³ = 0`.
fn first_jordan_basis(l: &AlgebraPresentation) -> Result<AlgebraElement> {
    for b in l.basis() {
        if is_jordan_element(l, &b)?.0 {
            return Ok(b);
        }
    }
    Err(Error::NoSuchElement("no basis element is a Jordan element".into()))
}

/// The eight identities at `x` on seeded random pairs. Defaults to `sl_4`
/// over GF(11) with its square-zero element.
pub fn identities(file: Option<&AlgebraPresentation>, trials: usize, seed: u64) -> Result<Vec<CheckOutcome>> {
    let default;
    let (l, x, label) = match file {
        Some(l) => {
            require_lie(l)?;
            (l, first_jordan_basis(l)?, "file".to_string())
        }
        None => {
            default = build_matrix_lie(Series::Sl, 4, gf(11))?;
            let x = square_zero_element(&default)?;
            (default.presentation(), x, "sl4(GF(11))".to_string())
        }
    };
    let checks = verify_identities(l, &x, trials, seed)?;
    Ok(checks
        .into_iter()
        .map(|c| {
            CheckOutcome::new(
                format!("identity {}", c.name),
                c.failures == 0,
                json!({ "algebra": label, "x": x.to_strings(), "trials": c.trials, "failures": c.failures, "counterexample": c.counterexample }),
            )
        })
        .collect())
}

/// Ad-nilpotent basis elements and sums `b_i ± b_j`, with their indices.
pub fn nilpotent_candidates(l: &AlgebraPresentation) -> Result<Vec<(AlgebraElement, usize)>> {
    let mut out: Vec<(AlgebraElement, usize)> = Vec::new();
    let basis = l.basis();
    let mut push = |a: AlgebraElement| -> Result<()> {
        if a.is_zero() || out.iter().any(|(b, _)| *b == a) {
            return Ok(());
        }
        if let Some(k) = l.ad(&a)?.nilpotency_index() {
            out.push((a, k));
        }
        Ok(())
    };
    for b in &basis {
        push(b.clone())?;
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            push(&basis[i] + &basis[j])?;
            push(&basis[i] - &basis[j])?;
        }
    }
    Ok(out)
}

fn descent_on(l: &AlgebraPresentation, label: &str) -> Result<Vec<CheckOutcome>> {
    let p = l.field().characteristic();
    let top = if p == 0 { 8 } else { (p - 1) as usize };
    let candidates = nilpotent_candidates(l)?;
    let basis = l.basis();
    let mut calls = 0;
    let mut failures = 0;
    let mut first_failure = None;
    for (a, idx) in &candidates {
        for n in (*idx).max(4)..=top {
            for (bi, b) in basis.iter().enumerate() {
                calls += 1;
                match kostrikin_descent(l, a, b, n) {
                    Ok(y) => {
                        if !l.ad(&y)?.pow(n - 1)?.is_zero() {
                            failures += 1;
                        }
                    }
                    Err(Error::InvariantViolation(msg)) => {
                        failures += 1;
                        first_failure.get_or_insert((a.to_strings(), bi, n, msg));
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    let mut out = vec![CheckOutcome::new(
        format!("descent {label}"),
        failures == 0 && calls > 0,
        json!({ "candidates": candidates.len(), "calls": calls, "failures": failures, "first_failure": first_failure }),
    )];
    match candidates.iter().find(|(_, k)| *k >= 4 && (p == 0 || (*k as u64) < p)) {
        Some((a, _)) => {
            let steps = iterated_descent(l, a)?;
            let last = steps.last().expect("nonempty");
            let reached = !last.element.is_zero() && is_jordan_element(l, &last.element)?.0;
            out.push(CheckOutcome::new(
                format!("iterated descent {label}"),
                reached,
                json!({
                    "start": a.to_strings(),
                    "indices": steps.iter().map(|s| s.index).collect::<Vec<_>>(),
                    "via_basis": steps.iter().map(|s| s.via_basis).collect::<Vec<_>>(),
                    "result": last.element.to_strings(),
                }),
            ));
        }
        None => out.push(CheckOutcome::skip(format!("iterated descent {label}"), "no ad-nilpotent candidate of index >= 4")),
    }
    Ok(out)
}

/// Descent on every basis `b` and valid `(a, n)` over the candidate set,
/// then iterated descent from a non-Jordan ad-nilpotent element. Defaults to
/// `sl_3` and `sp_4` over GF(11).
pub fn descent(file: Option<&AlgebraPresentation>) -> Result<Vec<CheckOutcome>> {
    if let Some(l) = file {
        require_lie(l)?;
        return descent_on(l, "file");
    }
    let mut out = Vec::new();
    for (s, n) in [(Series::Sl, 3), (Series::Sp, 4)] {
        let m = build_matrix_lie(s, n, gf(11))?;
        out.extend(descent_on(m.presentation(), &format!("{s}{n}(GF(11))"))?);
    }
    Ok(out)
}

fn distinct_nonzero_nodes(field: FieldSpec, d: usize, rng: &mut impl Rng) -> Vec<Scalar> {
    let mut nodes: Vec<Scalar> = Vec::with_capacity(d);
    while nodes.len() < d {
        let s = sampling::nonzero_scalar(field, rng);
        if !nodes.contains(&s) {
            nodes.push(s);
        }
    }
    nodes
}

/// Vandermonde recovery on seeded `(x, v)` pairs with `x` ad-nilpotent,
/// plus `exp(ξ ad x) exp(-ξ ad x) = 1`. Defaults to `sl_3` over GF(11) with
/// `x` strictly upper triangular; with a file, `x` is a random multiple of
/// an ad-nilpotent basis element.
pub fn vandermonde(file: Option<&AlgebraPresentation>, trials: usize, seed: u64) -> Result<Vec<CheckOutcome>> {
    let default = match file {
        Some(l) => {
            require_lie(l)?;
            None
        }
        None => Some(build_matrix_lie(Series::Sl, 3, gf(11))?),
    };
    let l = match (&default, file) {
        (Some(m), _) => m.presentation(),
        (None, Some(l)) => l,
        (None, None) => unreachable!("one source is always present"),
    };
    let f = l.field();
    let nilpotent_basis: Vec<AlgebraElement> = l.basis().into_iter().filter(|b| matches!(l.ad(b).map(|m| m.nilpotency_index()), Ok(Some(_)))).collect();
    let mut rng = sampling::rng(seed);
    let mut recovered = 0;
    let mut automorphisms = 0;
    let mut max_d = 0;
    let mut failures: Vec<String> = Vec::new();
    for t in 0..trials {
        let x = match &default {
            Some(sl3) => {
                let m = ExactMatrix::from_fn(f, 3, 3, |i, j| if j > i { sampling::scalar(f, &mut rng) } else { f.zero() });
                sl3.from_matrix(&m)?
            }
            None => {
                if nilpotent_basis.is_empty() {
                    return Ok(vec![CheckOutcome::skip("vandermonde", "no ad-nilpotent basis element")]);
                }
                let b = &nilpotent_basis[rng.random_range(0..nilpotent_basis.len())];
                b.scale(&sampling::nonzero_scalar(f, &mut rng))
            }
        };
        let v = l.element(sampling::vector(f, l.dim(), &mut rng))?;
        let d = l.ad(&x)?.nilpotency_index().expect("ad-nilpotent by construction").max(1);
        max_d = max_d.max(d);
        let nodes = distinct_nonzero_nodes(f, d, &mut rng);
        match vandermonde_recover(l, &x, &v, &nodes) {
            Ok(_) => recovered += 1,
            Err(e) => failures.push(format!("trial {t}: {e}")),
        }
        let xi = sampling::scalar(f, &mut rng);
        match (exp_ad(l, &x, &xi), exp_ad(l, &x, &-&xi)) {
            (Ok(a), Ok(b)) if a.matmul(&b)? == ExactMatrix::identity(f, l.dim()) => automorphisms += 1,
            (Ok(_), Ok(_)) => failures.push(format!("trial {t}: exp(xi) exp(-xi) != 1")),
            (Err(e), _) | (_, Err(e)) => failures.push(format!("trial {t}: {e}")),
        }
    }
    Ok(vec![
        CheckOutcome::new(
            "vandermonde recovery",
            recovered == trials,
            json!({ "trials": trials, "recovered": recovered, "max_d": max_d, "failures": failures }),
        ),
        CheckOutcome::new("exp_ad automorphism", automorphisms == trials, json!({ "trials": trials, "passed": automorphisms })),
    ])
}

fn sandwich_checks(l: &AlgebraPresentation, label: &str, budget: u128) -> Result<(CheckOutcome, usize)> {
    let one = sandwich_set(l, budget)?;
    let two = sandwich_set_by_equations(l, budget)?;
    let n = one.sandwiches.len();
    Ok((
        CheckOutcome::new(
            format!("sandwich enumeration {label}"),
            one.sandwiches == two,
            json!({ "examined": one.examined.to_string(), "sandwiches": n, "paths_agree": one.sandwiches == two }),
        ),
        n,
    ))
}

fn local_degeneracy_count(l: &AlgebraPresentation, budget: u128) -> Result<(usize, usize)> {
    let total = degeneracy::element_count(l)?;
    let mut degenerate = 0;
    for idx in 1..total {
        let x = l.element(degeneracy::element_at(l.field(), l.dim(), idx))?;
        if locally_degenerate_element(l, &x, budget)?.terminates {
            degenerate += 1;
        }
    }
    Ok((degenerate, (total - 1) as usize))
}

/// Sandwiches, local degeneracy, the sl₂ witness, m-sequences and the
/// `K_loc` consistency experiment. With a file: sandwiches and local
/// degeneracy of every nonzero element.
pub fn degeneracy_suite(file: Option<&AlgebraPresentation>, seed: u64) -> Result<Vec<CheckOutcome>> {
    let budget = budget::enumeration();
    if let Some(l) = file {
        require_lie(l)?;
        let (sandwich, count) = sandwich_checks(l, "file", budget)?;
        let (degenerate, total) = local_degeneracy_count(l, budget)?;
        return Ok(vec![
            sandwich,
            CheckOutcome::new(
                "local degeneracy file",
                true,
                json!({ "sandwiches": count, "locally_degenerate": degenerate, "nonzero_elements": total, "all_locally_degenerate": degenerate == total }),
            ),
        ]);
    }
    let f5 = gf(5);
    let sl2 = build_matrix_lie(Series::Sl, 2, f5)?;
    let s = sl2.presentation();
    let heis = heisenberg(f5)?;
    let mut out = Vec::new();

    let (c, n) = sandwich_checks(s, "sl2(GF(5))", budget)?;
    out.push(CheckOutcome { status: if c.passed() && n == 0 { c.status } else { crate::report::Status::Fail }, ..c });
    let (c, n) = sandwich_checks(&heis, "heisenberg(GF(5))", budget)?;
    out.push(CheckOutcome { status: if c.passed() && n == 124 { c.status } else { crate::report::Status::Fail }, ..c });

    let (degenerate, total) = local_degeneracy_count(&heis, budget)?;
    out.push(CheckOutcome::new(
        "heisenberg(GF(5)) locally degenerate",
        degenerate == total,
        json!({ "locally_degenerate": degenerate, "nonzero_elements": total }),
    ));

    let e = s.basis_element(0);
    let r = all_s_sequences_terminate(s, &e, &[s.basis_element(2)], budget)?;
    let verified = match &r.witness {
        Some(w) => w.verify(s)?,
        None => false,
    };
    out.push(CheckOutcome::new(
        "sl2(GF(5)) S-sequence witness x = e, S = {f}",
        !r.terminates && verified,
        json!({ "terminates": r.terminates, "edges_verified": verified, "witness": r.witness.as_ref().map(|w| w.report()) }),
    ));

    let ld = locally_degenerate_element(s, &e, budget)?;
    out.push(CheckOutcome::new("sl2(GF(5)) e not locally degenerate", !ld.terminates, json!({ "reachable": ld.reachable })));

    let k7 = field_algebra(AlgebraKind::Jordan, gf(7))?;
    let m = m_sequence_explore(&k7, &k7.basis_element(0), budget)?;
    out.push(CheckOutcome::new(
        "GF(7) m-sequence from 1 does not terminate",
        !m.terminates && m.witness.as_ref().map_or(Ok(false), |w| w.verify(&k7))?,
        json!({ "reachable": m.reachable }),
    ));

    let mut kloc = Vec::new();
    for (alg, x, label) in [(&heis, heis.basis_element(0), "heisenberg(GF(5)) x"), (s, e.clone(), "sl2(GF(5)) e")] {
        let rep = kloc_experiment(alg, &x, seed, budget)?;
        kloc.push(CheckOutcome::new(format!("kloc {label}"), rep.consistent, serde_json::to_value(&rep).expect("serializable")));
    }
    out.extend(kloc);
    Ok(out)
}

/// The graded word bound on `M_3` over GF(11) graded by `E_11 - E_33`.
pub fn words() -> Result<Vec<CheckOutcome>> {
    let f = gf(11);
    let m3 = matrix_algebra(3, f)?;
    let h = m3.element_from_i64(&[1, 0, 0, 0, 0, 0, 0, 0, -1])?;
    let g = commutator_grading(&m3, &h)?;
    let gens: Vec<AlgebraElement> = [1, 5, 3, 7].into_iter().map(|i| m3.basis_element(i)).collect();
    let four = graded_word_bound_check(&m3, &g, &gens)?;
    let single = graded_word_bound_check(&m3, &g, &[m3.basis_element(1)])?;
    let zero_rejected = matches!(graded_word_bound_check(&m3, &g, &[m3.basis_element(0)]), Err(Error::NonzeroDegreeRequired));
    Ok(vec![
        CheckOutcome::new(
            "word bound M3(GF(11)) E12, E23, E21, E32",
            four.holds && four.assoc_dim == 9 && four.word_length_bound == 12,
            serde_json::to_value(&four).expect("serializable"),
        ),
        CheckOutcome::new("word bound single generator E12", single.holds && single.assoc_dim == 1, serde_json::to_value(&single).expect("serializable")),
        CheckOutcome::new("degree-zero generator rejected", zero_rejected, json!(null)),
    ])
}

/// `tkk_skew` of the identity form of each dimension `m`.
pub fn tkk(ms: std::ops::RangeInclusive<usize>, p: u64) -> Result<Vec<CheckOutcome>> {
    let f = FieldSpec::new(p)?;
    let mut out = Vec::new();
    for m in ms {
        let form = BilinearForm::symmetric(ExactMatrix::identity(f, m))?;
        let l = tkk_skew(&form)?;
        let dim = l.presentation().dim();
        let expected = (m + 3) * (m + 2) / 2;
        let z = center(l.presentation()).dim();
        out.push(CheckOutcome::new(format!("tkk m = {m}"), dim == expected && z == 0, json!({ "m": m, "dim": dim, "expected": expected, "center_dim": z })));
    }
    Ok(out)
}

/// `Z(M_n) ∩ [M_n, M_n]` by exact span intersection.
pub fn center_meets_commutators(n: usize, field: FieldSpec) -> Result<CheckOutcome> {
    let r = matrix_algebra(n, field)?;
    let z = center(&r);
    let lie = commutator_algebra(&r)?;
    let d = derived(&lie);
    let d_in_r = Subspace::span_coeffs(&r, d.basis_coeffs());
    let meet = z.intersection(&d_in_r)?;
    Ok(CheckOutcome::new(
        format!("Z(M{n}) meets [M{n}, M{n}] over {field}"),
        meet.is_zero(),
        json!({ "center_dim": z.dim(), "commutator_dim": d.dim(), "intersection_dim": meet.dim() }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn words_and_tkk_pass() {
        assert!(words().unwrap().iter().all(CheckOutcome::passed));
        assert!(tkk(1..=3, 11).unwrap().iter().all(CheckOutcome::passed));
    }

    #[test]
    fn vandermonde_is_deterministic() {
        let a = vandermonde(None, 5, 9).unwrap();
        assert!(a.iter().all(CheckOutcome::passed));
        assert_eq!(a, vandermonde(None, 5, 9).unwrap());
    }

    #[test]
    fn identities_small_run() {
        let r = identities(None, 3, 1).unwrap();
        assert_eq!(r.len(), 8);
        assert!(r.iter().all(CheckOutcome::passed));
    }

    #[test]
    fn char0_intersection() {
        assert!(center_meets_commutators(2, FieldSpec::rationals()).unwrap().passed());
        // in characteristic 3 the identity of M_3 is a commutator-span element
        assert!(!center_meets_commutators(3, gf(3)).unwrap().passed());
    }

    #[test]
    fn file_rejected_for_fixed_suites() {
        let file = AlgebraFile { algebra: heisenberg(gf(5)).unwrap(), involution: None };
        let opts = SuiteOptions { trials: 1, seed: 0, file: Some(file) };
        assert!(run_suite(Suite::Words, &opts).is_err());
        let deg = run_suite(Suite::Degeneracy, &opts).unwrap();
        assert!(deg.iter().all(CheckOutcome::passed));
    }
}
