//! sl₂ triples and the gradings they induce, exponentials of nilpotent
//! derivations with Vandermonde recovery, graded word bounds, and root
//! space decompositions.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{AlgebraElement, AlgebraKind, AlgebraPresentation, StructureTable};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::jordan::{is_jordan_element, JordanQuotient};
use crate::matrix::ExactMatrix;
use crate::poly::Polynomial;
use crate::sampling;
use crate::subspace::{subalgebra_closure, Subspace};
use crate::vector;

/// `(e, h, f)` with `[e, f] = h`, `[h, e] = 2e`, `[h, f] = -2f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Data {
    pub e: AlgebraElement,
    pub h: AlgebraElement,
    pub f: AlgebraElement,
}

impl Sl2Data {
    /// Checks the three relations and `ad(e)³ = ad(f)³ = 0`.
    pub fn verify(&self, l: &AlgebraPresentation) -> Result<bool> {
        let two = l.field().from_i64(2);
        let rel = l.multiply(&self.e, &self.f)? == self.h
            && l.multiply(&self.h, &self.e)? == self.e.scale(&two)
            && l.multiply(&self.h, &self.f)? == self.f.scale(&-&two);
        Ok(rel && l.ad(&self.e)?.pow(3)?.is_zero() && l.ad(&self.f)?.pow(3)?.is_zero())
    }
}

/// Independent subspaces labelled by integer degree.
#[derive(Clone, Debug)]
pub struct GradedDecomposition {
    pub parts: BTreeMap<i64, Subspace>,
}

impl GradedDecomposition {
    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.parts.iter().map(|(k, s)| (*k, s.dim())).collect()
    }

    /// Dimensions for the consecutive degrees `lo..=hi`, zero when absent.
    pub fn dims_in(&self, lo: i64, hi: i64) -> Vec<usize> {
        (lo..=hi).map(|k| self.parts.get(&k).map_or(0, Subspace::dim)).collect()
    }

    pub fn degree_of(&self, a: &AlgebraElement) -> Option<i64> {
        if a.is_zero() {
            return None;
        }
        self.parts.iter().find(|(_, s)| s.contains(a)).map(|(k, _)| *k)
    }

    /// Parts are independent and span everything.
    pub fn is_direct_decomposition(&self, alg: &AlgebraPresentation) -> Result<bool> {
        let mut total = Subspace::zero(alg);
        let mut sum = 0;
        for s in self.parts.values() {
            total = total.sum(s)?;
            sum += s.dim();
        }
        Ok(sum == alg.dim() && total.is_whole())
    }

    /// `A_i A_j ⊆ A_{i+j}` on all basis pairs, with absent degrees zero.
    pub fn satisfies_grading_law(&self, alg: &AlgebraPresentation) -> Result<bool> {
        for (i, si) in &self.parts {
            for (j, sj) in &self.parts {
                let target = self.parts.get(&(i + j));
                for u in si.basis() {
                    for v in sj.basis() {
                        let w = alg.multiply(&u, &v)?;
                        let ok = match target {
                            Some(t) => t.contains(&w),
                            None => w.is_zero(),
                        };
                        if !ok {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

fn require_jordan(l: &AlgebraPresentation, e: &AlgebraElement) -> Result<ExactMatrix> {
    let (ok, ad) = is_jordan_element(l, e)?;
    if !ok {
        return Err(Error::NotJordanElement);
    }
    Ok(ad)
}

/// Some `a` with `ad(e)²(a) = e`.
pub fn regularity_witness(l: &AlgebraPresentation, e: &AlgebraElement) -> Result<AlgebraElement> {
    let ad = require_jordan(l, e)?;
    let ad2 = ad.matmul(&ad)?;
    match ad2.solve(e.coeffs())? {
        Some(sol) => l.element(sol.particular),
        None => Err(Error::NotRegular),
    }
}

/// Solves `U_ē(ā) = ē` in `L_x`.
pub fn u_witness(l: &AlgebraPresentation, q: &JordanQuotient, e_bar: &AlgebraElement) -> Result<AlgebraElement> {
    let u = q.u_matrix(l, e_bar)?;
    match u.solve(e_bar.coeffs())? {
        Some(sol) => q.algebra().element(sol.particular),
        None => Err(Error::WitnessInvalid),
    }
}

/// `e' = ad(x)²(e)` for a preimage `e` of the idempotent `ē`, with its
/// regularity witness `a` (a preimage of `ā`).
#[derive(Clone, Debug)]
pub struct RegularLift {
    pub e: AlgebraElement,
    pub e_prime: AlgebraElement,
    pub witness: AlgebraElement,
}

/// Since `ker ad(x)²` is exactly the kernel of the projection, `e'` does not
/// depend on the preimage chosen and is nonzero whenever `ē` is.
pub fn lift_regular(l: &AlgebraPresentation, q: &JordanQuotient, e_bar: &AlgebraElement, a_bar: &AlgebraElement) -> Result<RegularLift> {
    let j = q.algebra();
    j.check_parent(e_bar)?;
    j.check_parent(a_bar)?;
    if e_bar.is_zero() || j.multiply(e_bar, e_bar)? != *e_bar {
        return Err(Error::NotIdempotent);
    }
    if q.u_lifted(l, e_bar, a_bar)? != *e_bar {
        return Err(Error::WitnessInvalid);
    }
    let e = q.lift(e_bar)?;
    let a = q.lift(a_bar)?;
    let x2 = q.ad_x2();
    let e_prime = l.element(x2.mul_vec(e.coeffs())?)?;
    if e_prime.is_zero() {
        return Err(Error::InvariantViolation("ad(x)^2 e vanishes for a nonzero class".into()));
    }
    let ad_e = l.ad(&e)?;
    let ad_ep = require_jordan(l, &e_prime).map_err(|_| Error::InvariantViolation("ad(x)^2 e is not a Jordan element".into()))?;
    // X² E² X² = ad(X² e)² as operators
    let lhs = x2.matmul(&ad_e)?.matmul(&ad_e)?.matmul(x2)?;
    if lhs != ad_ep.matmul(&ad_ep)? {
        return Err(Error::InvariantViolation("X^2 E^2 X^2 != ad(X^2 e)^2".into()));
    }
    // X² E² X² a = X² e
    if lhs.mul_vec(a.coeffs())? != *e_prime.coeffs() {
        return Err(Error::InvariantViolation("lifted witness fails X^2 E^2 X^2 a = X^2 e".into()));
    }
    Ok(RegularLift { e, e_prime, witness: a })
}

pub const SL2_BUDGET: usize = 256;

/// Completes a regular `e` to an sl₂ triple: `h = [e, z]` with
/// `ad(e)² z = -2e`, then `f` solving `[e, f] = h`, `[h, f] = -2f`,
/// searched over the affine solution set for `ad(f)³ = 0`.
pub fn complete_sl2(l: &AlgebraPresentation, e: &AlgebraElement, seed: u64) -> Result<Sl2Data> {
    let ad_e = require_jordan(l, e)?;
    let fs = l.field();
    let d = l.dim();
    let ad_e2 = ad_e.matmul(&ad_e)?;
    let minus_two_e = vector::scale(&fs.from_i64(-2), e.coeffs());
    let z_sol = ad_e2.solve(&minus_two_e)?.ok_or(Error::NotRegular)?;
    let mut rng = sampling::rng(seed);
    let mut tried = 0;
    let mut z_candidates = vec![z_sol.particular.clone()];
    z_candidates.extend(z_sol.kernel.iter().map(|k| vector::add(&z_sol.particular, k)));
    let mut zi = 0;
    while tried < SL2_BUDGET {
        let z = if zi < z_candidates.len() {
            z_candidates[zi].clone()
        } else if z_sol.kernel.is_empty() {
            break;
        } else {
            random_in_affine(fs, &z_sol.particular, &z_sol.kernel, &mut rng)
        };
        zi += 1;
        let h = l.element(ad_e.mul_vec(&z)?)?;
        let ad_h = l.ad(&h)?;
        let shifted = ad_h.add(&ExactMatrix::identity(fs, d).scale(&fs.from_i64(2)))?;
        let system = stack(&ad_e, &shifted);
        let mut rhs = h.coeffs().to_vec();
        rhs.extend(vector::zeros(fs, d));
        let Some(sol) = system.solve(&rhs)? else {
            tried += 1;
            continue;
        };
        let mut f_candidates = vec![sol.particular.clone()];
        f_candidates.extend(sol.kernel.iter().map(|k| vector::add(&sol.particular, k)));
        let mut fi = 0;
        while tried < SL2_BUDGET {
            let fv = if fi < f_candidates.len() {
                f_candidates[fi].clone()
            } else if sol.kernel.is_empty() {
                break;
            } else {
                random_in_affine(fs, &sol.particular, &sol.kernel, &mut rng)
            };
            fi += 1;
            tried += 1;
            let f = l.element(fv)?;
            if l.ad(&f)?.pow(3)?.is_zero() {
                let triple = Sl2Data { e: e.clone(), h, f };
                if !triple.verify(l)? {
                    return Err(Error::InvariantViolation("completed triple fails the sl2 relations".into()));
                }
                return Ok(triple);
            }
            if fi >= f_candidates.len() && sol.kernel.is_empty() {
                break;
            }
        }
    }
    Err(Error::Sl2SearchExhausted(SL2_BUDGET))
}

fn random_in_affine(f: FieldSpec, base: &[Scalar], kernel: &[Vec<Scalar>], rng: &mut impl rand::Rng) -> Vec<Scalar> {
    let mut v = base.to_vec();
    for k in kernel {
        vector::axpy(&mut v, &sampling::scalar(f, rng), k);
    }
    v
}

fn stack(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let mut rows: Vec<Vec<Scalar>> = (0..a.rows()).map(|i| a.row(i)).collect();
    rows.extend((0..b.rows()).map(|i| b.row(i)));
    ExactMatrix::from_rows(a.field(), a.cols(), &rows)
}

/// Degree label of a field element: the integer representative in
/// `[-(p-1)/2, (p-1)/2]`, or the integer itself over the rationals.
pub fn degree_label(s: &Scalar) -> Option<i64> {
    s.to_signed()
}

/// Eigenspace grading of `ad(h)` by degrees `-2..=2`.
pub fn grading_from_h(l: &AlgebraPresentation, h: &AlgebraElement) -> Result<GradedDecomposition> {
    l.check_parent(h)?;
    let f = l.field();
    let p = f.characteristic();
    if p != 0 && p <= 4 {
        return Err(Error::NonSplitOperator(format!("degrees -2..2 are not distinct mod {p}")));
    }
    let ad = l.ad(h)?;
    let mut poly = Polynomial::constant(f.one());
    for k in -2..=2 {
        poly = poly.mul(&Polynomial::linear(&f.from_i64(k)));
    }
    if !poly.eval_matrix(&ad)?.is_zero() {
        return Err(Error::NonSplitOperator("ad(h) is not annihilated by t(t^2-1)(t^2-4)".into()));
    }
    let mut parts = BTreeMap::new();
    for k in -2..=2 {
        let space = Subspace::span_coeffs(l, ad.eigenspace(&f.from_i64(k))?);
        if !space.is_zero() {
            parts.insert(k, space);
        }
    }
    let g = GradedDecomposition { parts };
    if !g.is_direct_decomposition(l)? {
        return Err(Error::InvariantViolation("eigenspaces of ad(h) do not span".into()));
    }
    if !g.satisfies_grading_law(l)? {
        return Err(Error::InvariantViolation("eigenspaces of ad(h) violate the grading law".into()));
    }
    Ok(g)
}

/// `Σ_{k<d} ξ^k ad(x)^k / k!` for the nilpotency index `d` of `ad(x)`,
/// checked to preserve the product on all basis pairs.
pub fn exp_ad(l: &AlgebraPresentation, x: &AlgebraElement, xi: &Scalar) -> Result<ExactMatrix> {
    l.check_parent(x)?;
    let ad = l.ad(x)?;
    let d = ad.nilpotency_index().ok_or(Error::NotNilpotent)?;
    let m = exp_series(&ad, d, xi)?;
    if !is_automorphism(l, &m)? {
        return Err(Error::NotAutomorphism);
    }
    Ok(m)
}

fn exp_series(ad: &ExactMatrix, d: usize, xi: &Scalar) -> Result<ExactMatrix> {
    let f = ad.field();
    let n = ad.rows();
    let mut acc = ExactMatrix::zeros(f, n, n);
    let mut term = ExactMatrix::identity(f, n);
    for k in 0..d {
        let inv = f.factorial(k).inv().ok_or(Error::FactorialNotInvertible(k))?;
        acc = acc.add(&term.scale(&(&xi.pow(k as u64) * &inv)))?;
        term = term.matmul(ad)?;
    }
    Ok(acc)
}

/// `σ(b_i b_j) = σ(b_i) σ(b_j)` on all basis pairs.
pub fn is_automorphism(l: &AlgebraPresentation, m: &ExactMatrix) -> Result<bool> {
    let d = l.dim();
    let cols: Vec<Vec<Scalar>> = (0..d).map(|j| m.column(j)).collect();
    for i in 0..d {
        for j in 0..d {
            if m.mul_vec(&l.table().product_vec(i, j))? != l.mul_coeffs(&cols[i], &cols[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Recovers `(v, ad_x v, ad_x² v / 2!, …, ad_x^{d-1} v / (d-1)!)` from the
/// values `exp(ξ_i ad x)(v)` at `d` distinct nonzero nodes by solving the
/// Vandermonde system, and cross-checks against direct computation.
pub fn vandermonde_recover(l: &AlgebraPresentation, x: &AlgebraElement, v: &AlgebraElement, nodes: &[Scalar]) -> Result<Vec<AlgebraElement>> {
    l.check_parent(x)?;
    l.check_parent(v)?;
    let f = l.field();
    let d = nodes.len();
    if d == 0 {
        return Err(Error::PreconditionFailed("at least one node required".into()));
    }
    for (i, a) in nodes.iter().enumerate() {
        if a.is_zero() || nodes[..i].contains(a) {
            return Err(Error::DuplicateNodes);
        }
    }
    let ad = l.ad(x)?;
    if !ad.pow(d)?.is_zero() {
        return Err(Error::NotNilpotent);
    }
    // direct chain w_k = ad^k v / k!
    let mut direct = Vec::with_capacity(d);
    let mut cur = v.coeffs().to_vec();
    for k in 0..d {
        let inv = f.factorial(k).inv().ok_or(Error::FactorialNotInvertible(k))?;
        direct.push(vector::scale(&inv, &cur));
        cur = ad.mul_vec(&cur)?;
    }
    // samples v_i = exp(ξ_i ad x) v
    let samples: Vec<Vec<Scalar>> = nodes.iter().map(|xi| exp_series(&ad, d, xi).and_then(|m| m.mul_vec(v.coeffs()))).collect::<Result<_>>()?;
    let vand = ExactMatrix::from_fn(f, d, d, |i, k| nodes[i].pow(k as u64));
    let dim = l.dim();
    let mut recovered = vec![vector::zeros(f, dim); d];
    for c in 0..dim {
        let rhs: Vec<Scalar> = samples.iter().map(|s| s[c].clone()).collect();
        let sol = vand.solve(&rhs)?.ok_or(Error::DuplicateNodes)?;
        if !sol.kernel.is_empty() {
            return Err(Error::DuplicateNodes);
        }
        for (k, val) in sol.particular.into_iter().enumerate() {
            recovered[k][c] = val;
        }
    }
    if recovered != direct {
        return Err(Error::InvariantViolation("Vandermonde recovery disagrees with the direct chain".into()));
    }
    recovered.into_iter().map(|w| l.element(w)).collect()
}

/// The commutator algebra `R^(-)` of an associative presentation.
pub fn commutator_algebra(r: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    if r.kind() != AlgebraKind::Associative {
        return Err(Error::PreconditionFailed("commutator algebra of a non-associative algebra".into()));
    }
    let d = r.dim();
    let f = r.field();
    let table = StructureTable::from_products(f, d, |i, j| vector::sub(&r.table().product_vec(i, j), &r.table().product_vec(j, i)));
    AlgebraPresentation::new(AlgebraKind::Lie, r.labels().to_vec(), table)
}

/// Grading of an associative algebra by the eigenvalues of `[h, ·]`.
pub fn commutator_grading(r: &AlgebraPresentation, h: &AlgebraElement) -> Result<GradedDecomposition> {
    r.check_parent(h)?;
    let ad = r.left_mul(h)?.sub(&r.right_mul(h)?)?;
    let mu = ad.minimal_polynomial()?;
    let roots = mu.roots()?;
    if roots.iter().map(|(_, m)| m).sum::<usize>() != mu.degree().unwrap_or(0) {
        return Err(Error::NonSplitOperator(format!("minimal polynomial {mu} does not split")));
    }
    let mut parts = BTreeMap::new();
    for (lambda, _) in roots {
        let label = degree_label(&lambda).ok_or_else(|| Error::NonSplitOperator(format!("eigenvalue {lambda} is not an integer")))?;
        parts.insert(label, Subspace::span_coeffs(r, ad.eigenspace(&lambda)?));
    }
    let g = GradedDecomposition { parts };
    if !g.is_direct_decomposition(r)? {
        return Err(Error::NonSplitOperator("[h, ·] is not semisimple".into()));
    }
    if !g.satisfies_grading_law(r)? {
        return Err(Error::InvariantViolation("commutator grading violates the grading law".into()));
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordBoundReport {
    pub generator_degrees: Vec<i64>,
    /// Largest absolute degree `M` occurring in the grading.
    pub max_degree: i64,
    /// `N = M (n + 2)`.
    pub word_length_bound: usize,
    pub lie_dim: usize,
    pub assoc_dim: usize,
    /// `d^{N+1}`, saturating.
    pub bound: u128,
    /// Least `k` with products of at most `k` Lie elements spanning the
    /// associative closure.
    pub spanning_length: usize,
    pub holds: bool,
}

/// Closure dimensions of `Lie(gens)` and `Assoc(gens)`, the bound
/// `dim Assoc ≤ d^{N+1}`, and the length at which products of Lie elements
/// span the associative closure, compared with `N`.
pub fn graded_word_bound_check(r: &AlgebraPresentation, grading: &GradedDecomposition, gens: &[AlgebraElement]) -> Result<WordBoundReport> {
    if gens.is_empty() {
        return Err(Error::PreconditionFailed("no generators".into()));
    }
    let max_degree = grading.parts.iter().filter(|(_, s)| !s.is_zero()).map(|(k, _)| k.abs()).max().unwrap_or(0);
    let p = r.field().characteristic();
    if p != 0 && p <= max_degree as u64 {
        return Err(Error::CharTooSmall { characteristic: p, needed: max_degree as u64 });
    }
    let mut degrees = Vec::with_capacity(gens.len());
    for g in gens {
        r.check_parent(g)?;
        let k = grading.degree_of(g).ok_or_else(|| Error::PreconditionFailed("generator is not homogeneous".into()))?;
        if k == 0 {
            return Err(Error::NonzeroDegreeRequired);
        }
        degrees.push(k);
    }
    let minus = commutator_algebra(r)?;
    let lie_gens: Vec<AlgebraElement> = gens.iter().map(|g| minus.element(g.coeffs().to_vec())).collect::<Result<_>>()?;
    let lie = subalgebra_closure(&minus, &lie_gens)?;
    let assoc = subalgebra_closure(r, gens)?;
    let n = gens.len();
    let word_length_bound = max_degree as usize * (n + 2);
    let d = lie.dim() as u128;
    let bound = (0..=word_length_bound).try_fold(1u128, |acc, _| acc.checked_mul(d)).unwrap_or(u128::MAX);
    // products of at most k Lie basis elements
    let lie_basis = lie.basis_coeffs();
    let mut span = Subspace::span_coeffs(r, lie_basis.clone());
    let mut frontier = lie_basis.clone();
    let mut spanning_length = 1;
    while span != assoc && spanning_length <= word_length_bound + 1 {
        let mut next = Vec::new();
        for w in &frontier {
            for u in &lie_basis {
                let prod = r.mul_coeffs(w, u);
                if span.insert_coeffs(prod.clone()) {
                    next.push(prod);
                }
            }
        }
        spanning_length += 1;
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let spans = span == assoc;
    let holds = (assoc.dim() as u128) <= bound && spans && spanning_length <= word_length_bound.max(1);
    Ok(WordBoundReport { generator_degrees: degrees, max_degree, word_length_bound, lie_dim: lie.dim(), assoc_dim: assoc.dim(), bound, spanning_length, holds })
}

/// Generalized eigenspaces of `ad(a)` by root.
#[derive(Clone, Debug)]
pub struct RootSpaceDecomposition {
    pub minimal_polynomial: Polynomial,
    pub roots: Vec<(Scalar, Subspace)>,
}

impl RootSpaceDecomposition {
    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn dims(&self) -> Vec<(String, usize)> {
        self.roots.iter().map(|(r, s)| (r.to_string(), s.dim())).collect()
    }

    fn part(&self, r: &Scalar) -> Option<&Subspace> {
        self.roots.iter().find(|(x, _)| x == r).map(|(_, s)| s)
    }
}

pub fn root_space_decomposition(l: &AlgebraPresentation, a: &AlgebraElement) -> Result<RootSpaceDecomposition> {
    l.check_parent(a)?;
    let ad = l.ad(a)?;
    let mu = ad.minimal_polynomial()?;
    let roots = mu.roots()?;
    if roots.iter().map(|(_, m)| m).sum::<usize>() != mu.degree().unwrap_or(0) {
        return Err(Error::NonSplitOperator(format!("minimal polynomial {mu} of ad(a) does not split")));
    }
    let mut parts = Vec::new();
    for (r, _) in roots {
        let s = Subspace::span_coeffs(l, ad.generalized_eigenspace(&r)?);
        parts.push((r, s));
    }
    let dec = RootSpaceDecomposition { minimal_polynomial: mu, roots: parts };
    // [L_α, L_β] ⊆ L_{α+β}, zero when α+β is not a root
    for (ra, sa) in &dec.roots {
        for (rb, sb) in &dec.roots {
            let target = dec.part(&(ra + rb));
            for u in sa.basis() {
                for v in sb.basis() {
                    let w = l.multiply(&u, &v)?;
                    let ok = target.map_or(w.is_zero(), |t| t.contains(&w));
                    if !ok {
                        return Err(Error::InvariantViolation(format!("[L_{ra}, L_{rb}] leaves L_{{{ra}+{rb}}}")));
                    }
                }
            }
        }
    }
    Ok(dec)
}

/// `deg μ_{ad(a)}`, and whether `ad(a)` is nilpotent.
pub fn ad_degree(l: &AlgebraPresentation, a: &AlgebraElement) -> Result<(usize, bool)> {
    let ad = l.ad(a)?;
    let mu = ad.minimal_polynomial()?;
    let deg = mu.degree().unwrap_or(0);
    let nilpotent = mu == Polynomial::monomial(l.field(), deg);
    Ok((deg, nilpotent))
}

/// Least `deg μ_{ad(a)}` over the non-ad-nilpotent candidates, or `None`
/// when all candidates are ad-nilpotent. Only a bound over the candidates.
pub fn d_over_candidates(l: &AlgebraPresentation, candidates: &[AlgebraElement]) -> Result<Option<usize>> {
    let mut best: Option<usize> = None;
    for a in candidates {
        let (deg, nil) = ad_degree(l, a)?;
        if !nil {
            best = Some(best.map_or(deg, |b| b.min(deg)));
        }
    }
    Ok(best)
}

/// Basis candidates plus `extra` seeded random elements.
pub fn d_candidates(l: &AlgebraPresentation, extra: usize, seed: u64) -> Result<Vec<AlgebraElement>> {
    let mut rng = sampling::rng(seed);
    let mut out = l.basis();
    for _ in 0..extra {
        out.push(l.element(sampling::nonzero_vector(l.field(), l.dim(), &mut rng))?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootStringCheck {
    pub roots: usize,
    pub power: usize,
    pub applicable: bool,
    pub vectors_checked: usize,
    pub failures: usize,
}

/// For every basis vector `x` of a nonzero root space, `ad(x)^d = 0` where
/// `d` is the number of roots; applicable when `p > 2d - 2`.
pub fn root_string_check(l: &AlgebraPresentation, dec: &RootSpaceDecomposition) -> Result<RootStringCheck> {
    let d = dec.root_count();
    let p = l.field().characteristic();
    let applicable = p == 0 || p as usize > 2 * d - 2;
    let mut checked = 0;
    let mut failures = 0;
    if applicable {
        for (r, s) in &dec.roots {
            if r.is_zero() {
                continue;
            }
            for x in s.basis() {
                checked += 1;
                if !l.ad(&x)?.pow(d)?.is_zero() {
                    failures += 1;
                }
            }
        }
    }
    Ok(RootStringCheck { roots: d, power: d, applicable, vectors_checked: checked, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_matrix_lie, heisenberg, matrix_algebra, Series};
    use crate::jordan::build_L_x;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn sl2_regularity_witness() {
        let f = gf(11);
        let l = build_matrix_lie(Series::Sl, 2, f).unwrap();
        let a = l.presentation();
        let w = regularity_witness(a, &a.basis_element(0)).unwrap();
        assert_eq!(w, a.basis_element(2).scale(&f.from_i64(5)));
        let h = heisenberg(f).unwrap();
        assert_eq!(regularity_witness(&h, &h.basis_element(0)).err(), Some(Error::NotRegular));
    }

    #[test]
    fn sl3_corner_triple_and_grading() {
        let f = gf(11);
        let l = build_matrix_lie(Series::Sl, 3, f).unwrap();
        let a = l.presentation();
        let e = l.unit(0, 2).unwrap();
        let t = complete_sl2(a, &e, 0).unwrap();
        assert_eq!(l.to_matrix(&t.h).unwrap(), ExactMatrix::from_i64(f, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]));
        assert_eq!(t.f, l.unit(2, 0).unwrap());
        let g = grading_from_h(a, &t.h).unwrap();
        assert_eq!(g.dims_in(-2, 2), vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn lift_from_sl2() {
        let f = gf(11);
        let l = build_matrix_lie(Series::Sl, 2, f).unwrap();
        let a = l.presentation();
        let q = build_L_x(a, &a.basis_element(0)).unwrap();
        let e_bar = q.algebra().basis_element(0).scale(&f.from_i64(6));
        let a_bar = u_witness(a, &q, &e_bar).unwrap();
        let lift = lift_regular(a, &q, &e_bar, &a_bar).unwrap();
        assert!(!lift.e_prime.is_zero());
        assert!(Subspace::span(a, &[a.basis_element(0)]).unwrap().contains(&lift.e_prime));
        let bad = q.algebra().zero_element();
        assert_eq!(lift_regular(a, &q, &e_bar, &bad).err(), Some(Error::WitnessInvalid));
    }

    #[test]
    fn exp_ad_cases() {
        let f = gf(11);
        let l = build_matrix_lie(Series::Sl, 2, f).unwrap();
        let a = l.presentation();
        assert_eq!(exp_ad(a, &a.basis_element(0), &f.zero()).unwrap(), ExactMatrix::identity(f, 3));
        let m = exp_ad(a, &a.basis_element(0), &f.one()).unwrap();
        let minv = exp_ad(a, &a.basis_element(0), &f.from_i64(-1)).unwrap();
        assert_eq!(m.matmul(&minv).unwrap(), ExactMatrix::identity(f, 3));
        assert_eq!(exp_ad(a, &a.basis_element(1), &f.one()).err(), Some(Error::NotNilpotent));
    }

    #[test]
    fn vandermonde_on_sl2() {
        let f = gf(11);
        let l = build_matrix_lie(Series::Sl, 2, f).unwrap();
        let a = l.presentation();
        let nodes: Vec<Scalar> = (1..=3).map(|k| f.from_i64(k)).collect();
        let out = vandermonde_recover(a, &a.basis_element(0), &a.basis_element(2), &nodes).unwrap();
        assert_eq!(out, vec![a.basis_element(2), a.basis_element(1), -&a.basis_element(0)]);
        let dup = vec![f.one(), f.one(), f.from_i64(2)];
        assert_eq!(vandermonde_recover(a, &a.basis_element(0), &a.basis_element(2), &dup).err(), Some(Error::DuplicateNodes));
    }

    #[test]
    fn word_bound_on_m3() {
        let f = gf(11);
        let m3 = matrix_algebra(3, f).unwrap();
        let h = m3.element_from_i64(&[1, 0, 0, 0, 0, 0, 0, 0, -1]).unwrap();
        let g = commutator_grading(&m3, &h).unwrap();
        let gens = [1, 5, 3, 7].map(|i| m3.basis_element(i));
        let rep = graded_word_bound_check(&m3, &g, &gens).unwrap();
        assert_eq!(rep.assoc_dim, 9);
        assert_eq!(rep.lie_dim, 8);
        assert_eq!(rep.word_length_bound, 12);
        assert!(rep.holds);
        let single = graded_word_bound_check(&m3, &g, &[m3.basis_element(1)]).unwrap();
        assert_eq!(single.assoc_dim, 1);
        assert_eq!(graded_word_bound_check(&m3, &g, &[m3.basis_element(0)]).err(), Some(Error::NonzeroDegreeRequired));
    }

    #[test]
    fn root_spaces_of_sl2() {
        let l = build_matrix_lie(Series::Sl, 2, gf(11)).unwrap();
        let a = l.presentation();
        let dec = root_space_decomposition(a, &a.basis_element(1)).unwrap();
        assert_eq!(dec.root_count(), 3);
        assert!(dec.roots.iter().all(|(_, s)| s.dim() == 1));
        assert_eq!(ad_degree(a, &a.basis_element(1)).unwrap(), (3, false));
        let nil = root_space_decomposition(a, &a.basis_element(0)).unwrap();
        assert_eq!(nil.root_count(), 1);
        let chk = root_string_check(a, &dec).unwrap();
        assert!(chk.applicable && chk.failures == 0);
    }
}
