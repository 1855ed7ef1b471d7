//! Sandwiches, S-sequences and m-sequences over finite fields, decided as
//! reachability on the (finite) set of algebra elements.
//!
//! A sequence `x_{k+1} = step(x_k, s_k)` fails to terminate exactly when it
//! reaches a nonzero cycle, so exhaustive exploration of the nonzero states
//! reachable from `x` settles termination for every choice of steps at once.
//! The step is `[y, [y, s]]` for Lie algebras and `U_y(s)` for Jordan ones.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use serde::Serialize;

use crate::algebra::{AlgebraElement, AlgebraKind, AlgebraPresentation};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::jordan::{build_L_x, find_idempotent, u_operator, IdempotentSearch};
use crate::matrix::ExactMatrix;
use crate::sampling;
use crate::vector;

/// Depth of each random path in sampled mode.
pub const SAMPLED_DEPTH: usize = 64;

/// Linear map `s ↦ step(y, s)`.
pub fn step_matrix(alg: &AlgebraPresentation, y: &AlgebraElement) -> Result<ExactMatrix> {
    match alg.kind() {
        AlgebraKind::Lie => {
            let ad = alg.ad(y)?;
            ad.matmul(&ad)
        }
        AlgebraKind::Jordan => {
            let ly = alg.left_mul(y)?;
            let ly2 = alg.left_mul(&alg.multiply(y, y)?)?;
            ly.matmul(&ly)?.scale(&alg.field().from_i64(2)).sub(&ly2)
        }
        AlgebraKind::Associative => Err(Error::PreconditionFailed("sequences need a Lie or Jordan algebra".into())),
    }
}

/// `step(y, s)` computed from products, independently of [`step_matrix`].
pub fn step(alg: &AlgebraPresentation, y: &AlgebraElement, s: &AlgebraElement) -> Result<AlgebraElement> {
    match alg.kind() {
        AlgebraKind::Lie => alg.multiply(y, &alg.multiply(y, s)?),
        AlgebraKind::Jordan => u_operator(alg, y, s),
        AlgebraKind::Associative => Err(Error::PreconditionFailed("sequences need a Lie or Jordan algebra".into())),
    }
}

fn order(field: FieldSpec) -> Result<u64> {
    field.order().ok_or(Error::InfiniteField)
}

/// `|F|^dim`, saturating.
pub fn element_count(alg: &AlgebraPresentation) -> Result<u128> {
    let p = order(alg.field())? as u128;
    Ok((0..alg.dim()).try_fold(1u128, |acc, _| acc.checked_mul(p)).unwrap_or(u128::MAX))
}

fn require_within(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Coefficients of the element with base-`p` index `idx`, lowest digit first.
pub fn element_at(field: FieldSpec, dim: usize, mut idx: u128) -> Vec<Scalar> {
    let p = field.order().expect("finite field") as u128;
    (0..dim)
        .map(|_| {
            let digit = (idx % p) as u64;
            idx /= p;
            field.from_u64(digit)
        })
        .collect()
}

/// Inverse of [`element_at`].
pub fn index_of(v: &[Scalar]) -> u128 {
    v.iter().rev().fold(0u128, |acc, s| match s {
        Scalar::Mod { value, p } => acc * (*p as u128) + *value as u128,
        Scalar::Rational(_) => panic!("index_of over the rationals"),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SandwichMode {
    Exact,
    Sampled,
}

#[derive(Clone, Debug)]
pub struct SandwichReport {
    pub mode: SandwichMode,
    pub examined: u128,
    /// Sorted by element index.
    pub sandwiches: Vec<AlgebraElement>,
}

/// Nonzero `x` with `ad(x)² = 0` (for Jordan algebras `U_x = 0`), by
/// enumerating every element.
pub fn sandwich_set(alg: &AlgebraPresentation, budget: u128) -> Result<SandwichReport> {
    let count = element_count(alg)?;
    require_within(count, budget)?;
    let mut found = Vec::new();
    for idx in 1..count {
        let x = alg.element(element_at(alg.field(), alg.dim(), idx))?;
        if step_matrix(alg, &x)?.is_zero() {
            found.push(x);
        }
    }
    Ok(SandwichReport { mode: SandwichMode::Exact, examined: count - 1, sandwiches: found })
}

/// Second enumeration: descending order, testing `step(x, b_i) = 0` on each
/// basis vector from products alone.
pub fn sandwich_set_by_equations(alg: &AlgebraPresentation, budget: u128) -> Result<Vec<AlgebraElement>> {
    let count = element_count(alg)?;
    require_within(count, budget)?;
    let basis = alg.basis();
    let mut found = Vec::new();
    for idx in (1..count).rev() {
        let x = alg.element(element_at(alg.field(), alg.dim(), idx))?;
        let mut all = true;
        for b in &basis {
            if !step(alg, &x, b)?.is_zero() {
                all = false;
                break;
            }
        }
        if all {
            found.push(x);
        }
    }
    found.reverse();
    Ok(found)
}

/// Seeded random nonzero elements; lists the sandwiches among them.
pub fn sandwich_sample(alg: &AlgebraPresentation, samples: usize, seed: u64) -> Result<SandwichReport> {
    order(alg.field())?;
    let mut rng = sampling::rng(seed);
    let mut found: BTreeMap<u128, AlgebraElement> = BTreeMap::new();
    for _ in 0..samples {
        let v = sampling::nonzero_vector(alg.field(), alg.dim(), &mut rng);
        let x = alg.element(v)?;
        if step_matrix(alg, &x)?.is_zero() {
            found.insert(index_of(x.coeffs()), x);
        }
    }
    Ok(SandwichReport { mode: SandwichMode::Sampled, examined: samples as u128, sandwiches: found.into_values().collect() })
}

/// One edge `to = step(from, step)` of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessEdge {
    pub from: AlgebraElement,
    pub step: AlgebraElement,
    pub to: AlgebraElement,
}

/// A path from the start that closes into a nonzero cycle: the target of
/// the last edge is the source of edge `cycle_start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceWitness {
    pub edges: Vec<WitnessEdge>,
    pub cycle_start: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEdgeReport {
    pub from: Vec<String>,
    pub step: Vec<String>,
    pub to: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub edges: Vec<WitnessEdgeReport>,
    pub cycle_start: usize,
}

impl SequenceWitness {
    /// Recomputes every edge with [`step`] and checks the cycle closes on
    /// nonzero elements.
    pub fn verify(&self, alg: &AlgebraPresentation) -> Result<bool> {
        let Some(last) = self.edges.last() else {
            return Ok(false);
        };
        for (i, e) in self.edges.iter().enumerate() {
            if e.from.is_zero() || e.to.is_zero() || step(alg, &e.from, &e.step)? != e.to {
                return Ok(false);
            }
            if i > 0 && self.edges[i - 1].to != e.from {
                return Ok(false);
            }
        }
        Ok(self.cycle_start < self.edges.len() && last.to == self.edges[self.cycle_start].from)
    }

    pub fn report(&self) -> WitnessReport {
        WitnessReport {
            edges: self.edges.iter().map(|e| WitnessEdgeReport { from: e.from.to_strings(), step: e.step.to_strings(), to: e.to.to_strings() }).collect(),
            cycle_start: self.cycle_start,
        }
    }
}

/// Transition graph on nonzero elements reachable from a start element;
/// each edge records the step element that realizes it.
#[derive(Clone, Debug)]
pub struct SequenceGraph {
    pub start: Vec<Scalar>,
    pub steps: Vec<AlgebraElement>,
    /// `state → [(successor, index into steps)]`; zero successors omitted.
    pub adjacency: HashMap<Vec<Scalar>, Vec<(Vec<Scalar>, usize)>>,
}

impl SequenceGraph {
    /// Explores every state reachable from `x` under steps from `s`.
    pub fn build(alg: &AlgebraPresentation, x: &AlgebraElement, s: &[AlgebraElement], budget: u128) -> Result<Self> {
        order(alg.field())?;
        alg.check_parent(x)?;
        for e in s {
            alg.check_parent(e)?;
        }
        let mut adjacency = HashMap::new();
        let mut queue = Vec::new();
        if !x.is_zero() {
            queue.push(x.coeffs().to_vec());
        }
        while let Some(v) = queue.pop() {
            if adjacency.contains_key(&v) {
                continue;
            }
            require_within(adjacency.len() as u128 + 1, budget)?;
            let m = step_matrix(alg, &alg.element(v.clone())?)?;
            let mut out = Vec::new();
            for (i, e) in s.iter().enumerate() {
                let w = m.mul_vec(e.coeffs())?;
                if !vector::is_zero(&w) {
                    if !adjacency.contains_key(&w) {
                        queue.push(w.clone());
                    }
                    out.push((w, i));
                }
            }
            adjacency.insert(v, out);
        }
        Ok(SequenceGraph { start: x.coeffs().to_vec(), steps: s.to_vec(), adjacency })
    }

    pub fn reachable(&self) -> usize {
        self.adjacency.len()
    }

    /// Every recorded edge satisfies the step relation.
    pub fn verify_edges(&self, alg: &AlgebraPresentation) -> Result<bool> {
        for (v, out) in &self.adjacency {
            let y = alg.element(v.clone())?;
            for (w, i) in out {
                if step(alg, &y, &self.steps[*i])?.coeffs() != w.as_slice() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// A path into a nonzero cycle, if any.
    pub fn find_cycle(&self, alg: &AlgebraPresentation) -> Result<Option<SequenceWitness>> {
        let cycle = find_cycle(&self.start, |v| {
            Ok(self.adjacency.get(v).map(|out| out.iter().map(|(w, i)| (w.clone(), self.steps[*i].coeffs().to_vec())).collect()).unwrap_or_default())
        })?;
        cycle.map(|c| c.into_witness(alg)).transpose()
    }
}

struct RawCycle {
    path: Vec<(Vec<Scalar>, Vec<Scalar>)>,
    closing: Vec<Scalar>,
}

impl RawCycle {
    fn into_witness(self, alg: &AlgebraPresentation) -> Result<SequenceWitness> {
        let mut edges = Vec::with_capacity(self.path.len());
        for (i, (from, s)) in self.path.iter().enumerate() {
            let to = self.path.get(i + 1).map_or(&self.closing, |(v, _)| v);
            edges.push(WitnessEdge { from: alg.element(from.clone())?, step: alg.element(s.clone())?, to: alg.element(to.clone())? });
        }
        let cycle_start = self.path.iter().position(|(v, _)| *v == self.closing).expect("closing state on path");
        Ok(SequenceWitness { edges, cycle_start })
    }
}

type Successors = Vec<(Vec<Scalar>, Vec<Scalar>)>;

/// Depth-first search for a back edge among nonzero states; returns the
/// current path and the state it closes on. Also counts visited states.
fn explore(start: &[Scalar], budget: u128, mut succ: impl FnMut(&[Scalar]) -> Result<Successors>) -> Result<(usize, Option<RawCycle>)> {
    const ON_STACK: u8 = 1;
    const DONE: u8 = 2;
    if vector::is_zero(start) {
        return Ok((0, None));
    }
    let mut color: HashMap<Vec<Scalar>, u8> = HashMap::new();
    // (state, successors, next index, step used to leave state)
    let mut stack: Vec<(Vec<Scalar>, Successors, usize)> = Vec::new();
    let mut used: Vec<Vec<Scalar>> = Vec::new();
    color.insert(start.to_vec(), ON_STACK);
    stack.push((start.to_vec(), succ(start)?, 0));
    while let Some((state, out, next)) = stack.last_mut() {
        if *next == out.len() {
            color.insert(state.clone(), DONE);
            stack.pop();
            used.pop();
            continue;
        }
        let (w, s) = out[*next].clone();
        *next += 1;
        if vector::is_zero(&w) {
            continue;
        }
        match color.get(&w) {
            Some(&ON_STACK) => {
                used.push(s);
                let path = stack.iter().map(|(v, _, _)| v.clone()).zip(used).collect();
                return Ok((color.len(), Some(RawCycle { path, closing: w })));
            }
            Some(_) => {}
            None => {
                require_within(color.len() as u128 + 1, budget)?;
                color.insert(w.clone(), ON_STACK);
                used.push(s);
                let out = succ(&w)?;
                stack.push((w, out, 0));
            }
        }
    }
    Ok((color.len(), None))
}

fn find_cycle(start: &[Scalar], succ: impl FnMut(&[Scalar]) -> Result<Successors>) -> Result<Option<RawCycle>> {
    explore(start, u128::MAX, succ).map(|(_, c)| c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminationResult {
    pub terminates: bool,
    /// Nonzero states visited.
    pub reachable: usize,
    pub witness: Option<SequenceWitness>,
}

/// Whether every S-sequence from `x` terminates, for the finite step set `s`.
pub fn all_s_sequences_terminate(alg: &AlgebraPresentation, x: &AlgebraElement, s: &[AlgebraElement], budget: u128) -> Result<TerminationResult> {
    let graph = SequenceGraph::build(alg, x, s, budget)?;
    let witness = graph.find_cycle(alg)?;
    Ok(TerminationResult { terminates: witness.is_none(), reachable: graph.reachable(), witness })
}

/// Every element of the image of `m`, each paired with a preimage.
fn image_with_preimages(m: &ExactMatrix) -> Result<Successors> {
    let field = m.field();
    let p = order(field)?;
    let (_, pivots) = m.rref();
    let cols: Vec<Vec<Scalar>> = pivots.iter().map(|&j| m.column(j)).collect();
    let r = pivots.len() as u32;
    let total = (p as u128).checked_pow(r).ok_or(Error::BudgetExceeded { needed: u128::MAX, budget: u128::MAX })?;
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let c = element_at(field, pivots.len(), idx);
        let mut img = vector::zeros(field, m.rows());
        let mut pre = vector::zeros(field, m.cols());
        for (k, ck) in c.iter().enumerate() {
            if !ck.is_zero() {
                vector::axpy(&mut img, ck, &cols[k]);
                pre[pivots[k]] = ck.clone();
            }
        }
        out.push((img, pre));
    }
    Ok(out)
}

/// Termination with `S` the whole algebra: successors of `y` are all of
/// `step(y, L)`.
fn full_step_termination(alg: &AlgebraPresentation, x: &AlgebraElement, budget: u128) -> Result<TerminationResult> {
    alg.check_parent(x)?;
    require_within(element_count(alg)?, budget)?;
    let (reachable, cycle) = explore(x.coeffs(), budget, |v| {
        let m = step_matrix(alg, &alg.element(v.to_vec())?)?;
        image_with_preimages(&m)
    })?;
    let witness = cycle.map(|c| c.into_witness(alg)).transpose()?;
    Ok(TerminationResult { terminates: witness.is_none(), reachable, witness })
}

/// `x` is locally degenerate when every S-sequence from it terminates for
/// every finite `S`; taking `S = L` covers all of them.
pub fn locally_degenerate_element(l: &AlgebraPresentation, x: &AlgebraElement, budget: u128) -> Result<TerminationResult> {
    if l.kind() != AlgebraKind::Lie {
        return Err(Error::PreconditionFailed("expected a Lie algebra".into()));
    }
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    full_step_termination(l, x, budget)
}

/// Whether every m-sequence `a_{k+1} = U_{a_k}(b)` from `x` terminates.
pub fn m_sequence_explore(j: &AlgebraPresentation, x: &AlgebraElement, budget: u128) -> Result<TerminationResult> {
    if j.kind() != AlgebraKind::Jordan {
        return Err(Error::PreconditionFailed("expected a Jordan algebra".into()));
    }
    full_step_termination(j, x, budget)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampledOutcome {
    /// A random path revisited a nonzero state.
    NonTerminationFound(SequenceWitness),
    /// Never a claim of termination.
    NoNonTerminationFound { paths: usize, depth: usize },
}

/// Random S-sequences of depth [`SAMPLED_DEPTH`] from `x`.
pub fn sampled_s_sequences(alg: &AlgebraPresentation, x: &AlgebraElement, s: &[AlgebraElement], paths: usize, seed: u64) -> Result<SampledOutcome> {
    alg.check_parent(x)?;
    if s.is_empty() || x.is_zero() {
        return Ok(SampledOutcome::NoNonTerminationFound { paths: 0, depth: SAMPLED_DEPTH });
    }
    let mut rng = sampling::rng(seed);
    for _ in 0..paths {
        let mut path: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
        let mut cur = x.clone();
        for _ in 0..SAMPLED_DEPTH {
            let choice = &s[rng.random_range(0..s.len())];
            let next = step(alg, &cur, choice)?;
            path.push((cur.coeffs().to_vec(), choice.coeffs().to_vec()));
            if next.is_zero() {
                break;
            }
            if path.iter().any(|(v, _)| v.as_slice() == next.coeffs()) {
                let raw = RawCycle { path, closing: next.into_coeffs() };
                return Ok(SampledOutcome::NonTerminationFound(raw.into_witness(alg)?));
            }
            cur = next;
        }
    }
    Ok(SampledOutcome::NoNonTerminationFound { paths, depth: SAMPLED_DEPTH })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KlocReport {
    pub x: Vec<String>,
    pub lx_dim: usize,
    /// Finite-dimensional stand-in for local nilpotence.
    pub lx_nilpotent: bool,
    pub locally_degenerate: bool,
    pub reachable: usize,
    /// False only when `L_x` is nilpotent but `x` is not locally degenerate.
    pub consistent: bool,
}

pub fn kloc_experiment(l: &AlgebraPresentation, x: &AlgebraElement, seed: u64, budget: u128) -> Result<KlocReport> {
    let q = build_L_x(l, x)?;
    let lx_nilpotent = matches!(find_idempotent(q.algebra(), seed)?, IdempotentSearch::Nil(_));
    let t = locally_degenerate_element(l, x, budget)?;
    Ok(KlocReport {
        x: x.to_strings(),
        lx_dim: q.dim(),
        lx_nilpotent,
        locally_degenerate: t.terminates,
        reachable: t.reachable,
        consistent: !lx_nilpotent || t.terminates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::ENUMERATION;
    use crate::constructions::{build_matrix_lie, field_algebra, heisenberg, zero_algebra, Series};
    use proptest::prelude::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn sl2_gf5_is_nondegenerate() {
        let l = build_matrix_lie(Series::Sl, 2, gf(5)).unwrap();
        let a = l.presentation();
        let r = sandwich_set(a, ENUMERATION).unwrap();
        assert_eq!(r.examined, 124);
        assert!(r.sandwiches.is_empty());
        assert!(sandwich_set_by_equations(a, ENUMERATION).unwrap().is_empty());
    }

    #[test]
    fn sl3_gf3_paths_agree() {
        let l = build_matrix_lie(Series::Sl, 3, gf(3)).unwrap();
        let a = l.presentation();
        let one = sandwich_set(a, ENUMERATION).unwrap().sandwiches;
        let two = sandwich_set_by_equations(a, ENUMERATION).unwrap();
        assert_eq!(one, two);
        // the identity is traceless in characteristic 3 and central
        let id = l.from_matrix(&ExactMatrix::identity(gf(3), 3)).unwrap();
        assert!(one.contains(&id));
    }

    #[test]
    fn heisenberg_everything_is_sandwich() {
        let h = heisenberg(gf(5)).unwrap();
        assert_eq!(sandwich_set(&h, ENUMERATION).unwrap().sandwiches.len(), 124);
    }

    #[test]
    fn exact_mode_respects_budget() {
        let l = build_matrix_lie(Series::Sl, 3, gf(11)).unwrap();
        assert!(matches!(sandwich_set(l.presentation(), ENUMERATION), Err(Error::BudgetExceeded { .. })));
        let s = sandwich_sample(l.presentation(), 50, 1).unwrap();
        assert_eq!(s.mode, SandwichMode::Sampled);
    }

    #[test]
    fn sl2_witness_cycle() {
        let f = gf(5);
        let l = build_matrix_lie(Series::Sl, 2, f).unwrap();
        let a = l.presentation();
        let e = a.basis_element(0);
        let r = all_s_sequences_terminate(a, &e, &[a.basis_element(2)], ENUMERATION).unwrap();
        assert!(!r.terminates);
        let w = r.witness.unwrap();
        assert!(w.verify(a).unwrap());
        assert_eq!(w.edges[0].to, e.scale(&f.from_i64(-2)));
        assert_eq!(w.edges[1].to, e.scale(&f.from_i64(2)));
        let g = SequenceGraph::build(a, &e, &[a.basis_element(2)], ENUMERATION).unwrap();
        assert!(g.verify_edges(a).unwrap());
        assert!(matches!(sampled_s_sequences(a, &e, &[a.basis_element(2)], 4, 0).unwrap(), SampledOutcome::NonTerminationFound(_)));
    }

    #[test]
    fn zero_start_terminates() {
        let l = build_matrix_lie(Series::Sl, 2, gf(5)).unwrap();
        let a = l.presentation();
        let r = all_s_sequences_terminate(a, &a.zero_element(), &a.basis(), ENUMERATION).unwrap();
        assert!(r.terminates && r.reachable == 0);
        assert_eq!(locally_degenerate_element(a, &a.zero_element(), ENUMERATION).err(), Some(Error::ZeroElement));
    }

    #[test]
    fn local_degeneracy() {
        let h = heisenberg(gf(5)).unwrap();
        for idx in 1..125 {
            let x = h.element(element_at(gf(5), 3, idx)).unwrap();
            assert!(locally_degenerate_element(&h, &x, ENUMERATION).unwrap().terminates);
        }
        let l = build_matrix_lie(Series::Sl, 2, gf(5)).unwrap();
        let a = l.presentation();
        let r = locally_degenerate_element(a, &a.basis_element(0), ENUMERATION).unwrap();
        assert!(!r.terminates);
        assert!(r.witness.unwrap().verify(a).unwrap());
    }

    #[test]
    fn m_sequences() {
        let z = zero_algebra(AlgebraKind::Jordan, 2, gf(7)).unwrap();
        for idx in 0..49 {
            let x = z.element(element_at(gf(7), 2, idx)).unwrap();
            assert!(m_sequence_explore(&z, &x, ENUMERATION).unwrap().terminates);
        }
        let k = field_algebra(AlgebraKind::Jordan, gf(7)).unwrap();
        let r = m_sequence_explore(&k, &k.basis_element(0), ENUMERATION).unwrap();
        assert!(!r.terminates);
        assert!(r.witness.unwrap().verify(&k).unwrap());
    }

    #[test]
    fn kloc_cases() {
        let h = heisenberg(gf(5)).unwrap();
        let r = kloc_experiment(&h, &h.basis_element(0), 0, ENUMERATION).unwrap();
        assert!(r.lx_nilpotent && r.locally_degenerate && r.consistent);
        let l = build_matrix_lie(Series::Sl, 2, gf(5)).unwrap();
        let a = l.presentation();
        let r = kloc_experiment(a, &a.basis_element(0), 0, ENUMERATION).unwrap();
        assert!(!r.lx_nilpotent && r.consistent);
        assert_eq!(kloc_experiment(a, &a.basis_element(1), 0, ENUMERATION).err(), Some(Error::NotJordanElement));
    }

    #[test]
    fn index_round_trip() {
        let f = gf(5);
        for idx in [0u128, 1, 7, 124] {
            assert_eq!(index_of(&element_at(f, 3, idx)), idx);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn terminating_full_set_implies_subsets(idx in 1u128..125, mask in 0u32..(1 << 6)) {
            let l = build_matrix_lie(Series::Sl, 2, gf(5)).unwrap();
            let a = l.presentation();
            let x = a.element(element_at(gf(5), 3, idx)).unwrap();
            let pool: Vec<AlgebraElement> = (0..6u128).map(|k| a.element(element_at(gf(5), 3, 1 + 17 * k)).unwrap()).collect();
            let subset: Vec<AlgebraElement> = pool.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e.clone()).collect();
            let full = all_s_sequences_terminate(a, &x, &pool, ENUMERATION).unwrap();
            let sub = all_s_sequences_terminate(a, &x, &subset, ENUMERATION).unwrap();
            if full.terminates {
                prop_assert!(sub.terminates);
            }
            if let Some(w) = sub.witness {
                prop_assert!(w.verify(a).unwrap());
            }
        }
    }
}
