//! Towers `R_1 → R_2 → …` of matrix pairs `M_n ⊕ M_n` with the involution
//! `(A, B)* = (Bᵀ, Aᵀ)`, joined by block-diagonal signature embeddings.
//!
//! All claims are levelwise: each level's skew part `K`, its derived
//! algebra, the trace of the first coordinate, and ideals generated by
//! images of probe elements in the next level.

use serde::Serialize;
use serde_json::json;

use crate::algebra::{AlgebraElement, AlgebraPresentation};
use crate::constructions::{exchange_transpose_involution, matrix_pair_algebra, skew_part, InvolutionMap, SkewPart};
use crate::echelon::Echelon;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::report::CheckOutcome;
use crate::sampling;
use crate::subspace::{derived, ideal_generated, Subspace};
use crate::vector;

/// `φ(M, N) = (diag(M^s, N^t, 0_z), diag(N^s, M^t, 0_z))`: `s` copies of
/// the first coordinate, `t` of the second, `z` rows of zero padding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureEmbedding {
    pub s: usize,
    pub t: usize,
    pub z: usize,
}

impl SignatureEmbedding {
    pub fn new(s: usize, t: usize, z: usize) -> Self {
        Self { s, t, z }
    }

    /// `(k + 1, k, 0)` for `p = 2k + 1`.
    pub fn theorem3(p: u64) -> Self {
        let k = (p as usize - 1) / 2;
        Self::new(k + 1, k, 0)
    }

    pub fn target_size(&self, n: usize) -> usize {
        (self.s + self.t) * n + self.z
    }

    pub fn check(&self, n: usize, target: usize) -> Result<()> {
        if self.target_size(n) != target {
            return Err(Error::SizeMismatch(format!("{}*{n} + {}*{n} + {} != {target}", self.s, self.t, self.z)));
        }
        if self.s + self.t == 0 {
            return Err(Error::SizeMismatch("signature with no copies is not injective".into()));
        }
        Ok(())
    }
}

/// Sparse images of basis elements of `M_n ⊕ M_n` in `M_m ⊕ M_m`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub signature: SignatureEmbedding,
    pub source_n: usize,
    pub target_n: usize,
    /// One entry list per source basis element; all coefficients are 1.
    pub columns: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn new(signature: SignatureEmbedding, source_n: usize, target_n: usize) -> Result<Self> {
        signature.check(source_n, target_n)?;
        let (n, m) = (source_n, target_n);
        let (nn, mm) = (n * n, m * m);
        let block = |copy: usize, a: usize, b: usize| (copy * n + a) * m + copy * n + b;
        let mut columns = Vec::with_capacity(2 * nn);
        for side in 0..2 {
            for x in 0..nn {
                let (a, b) = (x / n, x % n);
                let mut col = Vec::with_capacity(signature.s + signature.t);
                // copies placed in the first coordinate, then the second
                let (first, second) = if side == 0 {
                    ((0..signature.s).collect::<Vec<_>>(), (signature.s..signature.s + signature.t).collect::<Vec<_>>())
                } else {
                    ((signature.s..signature.s + signature.t).collect(), (0..signature.s).collect())
                };
                col.extend(first.into_iter().map(|c| block(c, a, b)));
                col.extend(second.into_iter().map(|c| mm + block(c, a, b)));
                col.sort_unstable();
                columns.push(col);
            }
        }
        Ok(Self { signature, source_n, target_n, columns })
    }

    pub fn source_dim(&self) -> usize {
        2 * self.source_n * self.source_n
    }

    pub fn target_dim(&self) -> usize {
        2 * self.target_n * self.target_n
    }

    pub fn apply_coeffs(&self, field: FieldSpec, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(field, self.target_dim());
        for (j, c) in v.iter().enumerate() {
            if !c.is_zero() {
                for &t in &self.columns[j] {
                    out[t] += c;
                }
            }
        }
        out
    }

    pub fn apply(&self, target: &AlgebraPresentation, a: &AlgebraElement) -> Result<AlgebraElement> {
        if a.coeffs().len() != self.source_dim() || target.dim() != self.target_dim() {
            return Err(Error::DimensionMismatch("embedding applied across mismatched levels".into()));
        }
        target.element(self.apply_coeffs(target.field(), a.coeffs()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingChecks {
    pub injective: bool,
    pub multiplicative: bool,
    pub involutive: bool,
}

impl EmbeddingChecks {
    pub fn all(&self) -> bool {
        self.injective && self.multiplicative && self.involutive
    }
}

/// Rank, multiplicativity on all basis pairs, and `φ∘σ = σ'∘φ`.
pub fn check_embedding(phi: &Embedding, source: &TowerLevel, target: &TowerLevel) -> Result<EmbeddingChecks> {
    let f = source.algebra.field();
    let d = source.algebra.dim();
    if d != phi.source_dim() || target.algebra.dim() != phi.target_dim() {
        return Err(Error::DimensionMismatch("embedding does not match levels".into()));
    }
    let images: Vec<Vec<Scalar>> = (0..d).map(|j| phi.apply_coeffs(f, &vector::unit(f, d, j))).collect();
    let mut ech = Echelon::new(f, phi.target_dim());
    for v in &images {
        ech.insert(v.clone());
    }
    let injective = ech.rank() == d;
    let mut multiplicative = true;
    'pairs: for i in 0..d {
        for j in 0..d {
            let lhs = phi.apply_coeffs(f, &source.algebra.table().product_vec(i, j));
            if lhs != target.algebra.mul_coeffs(&images[i], &images[j]) {
                multiplicative = false;
                break 'pairs;
            }
        }
    }
    let mut involutive = true;
    for (j, img) in images.iter().enumerate() {
        let via_source = phi.apply_coeffs(f, &source.involution.matrix().column(j));
        if via_source != target.involution.matrix().mul_vec(img)? {
            involutive = false;
            break;
        }
    }
    Ok(EmbeddingChecks { injective, multiplicative, involutive })
}

/// `R = M_n ⊕ M_n` with its involution and skew part.
#[derive(Clone, Debug)]
pub struct TowerLevel {
    pub index: usize,
    pub n: usize,
    pub algebra: AlgebraPresentation,
    pub involution: InvolutionMap,
    pub skew: SkewPart,
    /// Into the next level; absent at the frontier.
    pub embedding: Option<Embedding>,
}

impl TowerLevel {
    pub fn build(index: usize, n: usize, field: FieldSpec, budget: usize) -> Result<Self> {
        let dim = 2 * n * n;
        if dim > budget {
            return Err(Error::SizeBudget { needed: dim, budget });
        }
        let algebra = matrix_pair_algebra(n, field)?;
        let involution = exchange_transpose_involution(&algebra, n)?;
        let skew = skew_part(&algebra, &involution)?;
        Ok(Self { index, n, algebra, involution, skew, embedding: None })
    }

    pub fn k_dim(&self) -> usize {
        self.skew.presentation().dim()
    }

    /// `(E_11, -E_11)`, skew with first-coordinate trace 1.
    pub fn obstruction_element(&self) -> AlgebraElement {
        let f = self.algebra.field();
        let mut v = vector::zeros(f, self.algebra.dim());
        v[0] = f.one();
        v[self.n * self.n] = f.from_i64(-1);
        self.algebra.element(v).expect("dimension matches")
    }

    /// The pair `(A, B)` as separate coefficient blocks.
    pub fn coordinates(&self, a: &AlgebraElement) -> (Vec<Scalar>, Vec<Scalar>) {
        let nn = self.n * self.n;
        (a.coeffs()[..nn].to_vec(), a.coeffs()[nn..].to_vec())
    }
}

fn trace_of_first(n: usize, field: FieldSpec, v: &[Scalar]) -> Scalar {
    (0..n).fold(field.zero(), |acc, i| &acc + &v[i * n + i])
}

/// Trace of the first coordinate of a skew element.
pub fn trace_functional(level: &TowerLevel, a: &AlgebraElement) -> Result<Scalar> {
    level.skew.restrict(a)?;
    Ok(trace_of_first(level.n, level.algebra.field(), a.coeffs()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub level: usize,
    pub k_dim: usize,
    pub derived_dim: usize,
    /// `dim [K, K] = dim K - 1`.
    pub codim_one: bool,
    pub element: Vec<String>,
    pub element_trace: String,
    pub element_outside_derived: bool,
    pub trace_vanishes_on_derived: bool,
}

impl ObstructionReport {
    pub fn holds(&self) -> bool {
        self.codim_one && self.element_outside_derived && self.trace_vanishes_on_derived && self.element_trace != "0"
    }
}

/// `[K, K]` inside `K`, with the obstruction element tested for membership.
pub fn derived_skew(level: &TowerLevel) -> Subspace {
    derived(level.skew.presentation())
}

pub fn commutator_obstruction(level: &TowerLevel) -> Result<ObstructionReport> {
    obstruction_for(level, &level.obstruction_element())
}

/// [`commutator_obstruction`] for an arbitrary skew element of the level.
pub fn obstruction_for(level: &TowerLevel, element: &AlgebraElement) -> Result<ObstructionReport> {
    let f = level.algebra.field();
    let k = level.skew.presentation();
    let d = derived_skew(level);
    let in_k = level.skew.restrict(element)?;
    let trace_vanishes = d.basis_coeffs().iter().all(|v| trace_of_first(level.n, f, &level.skew.include_coeffs(v)).is_zero());
    Ok(ObstructionReport {
        level: level.index,
        k_dim: k.dim(),
        derived_dim: d.dim(),
        codim_one: d.dim() + 1 == k.dim(),
        element: element.to_strings(),
        element_trace: trace_of_first(level.n, f, element.coeffs()).to_string(),
        element_outside_derived: !d.contains(&in_k),
        trace_vanishes_on_derived: trace_vanishes,
    })
}

pub const RANDOM_PROBES: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub level: usize,
    pub unit_probes: usize,
    pub random_probes: usize,
    pub seed: u64,
    /// Every probe image has both coordinates nonzero.
    pub images_split: bool,
    pub passed: usize,
}

/// For each probe `c` of `R_i` (all `(E_ab, 0)`, `(0, E_ab)` and seeded
/// random nonzero elements), the ideal of `R_{i+1}` generated by `φ(c)` is
/// everything.
pub fn simplicity_certificate(level: &TowerLevel, next: &TowerLevel, seed: u64) -> Result<SimplicityReport> {
    let phi = level.embedding.as_ref().ok_or_else(|| Error::PreconditionFailed(format!("level {} has no embedding", level.index)))?;
    let f = level.algebra.field();
    let d = level.algebra.dim();
    let mut probes: Vec<Vec<Scalar>> = (0..d).map(|j| vector::unit(f, d, j)).collect();
    let mut rng = sampling::rng(seed);
    for _ in 0..RANDOM_PROBES {
        probes.push(sampling::nonzero_vector(f, d, &mut rng));
    }
    let mut images_split = true;
    let mut passed = 0;
    for c in &probes {
        let img = next.algebra.element(phi.apply_coeffs(f, c))?;
        let (a, b) = next.coordinates(&img);
        images_split &= !vector::is_zero(&a) && !vector::is_zero(&b);
        let ideal = ideal_generated(&next.algebra, &Subspace::span(&next.algebra, &[img])?)?;
        if !ideal.is_whole() {
            return Err(Error::ProbeFailed(format!(
                "level {}: probe {:?} generates an ideal of dimension {}",
                level.index,
                vector::to_strings(c),
                ideal.dim()
            )));
        }
        passed += 1;
    }
    Ok(SimplicityReport { level: level.index, unit_probes: d, random_probes: RANDOM_PROBES, seed, images_split, passed })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TracePreservation {
    pub level: usize,
    /// Basis elements of `K` whose image has the same first-coordinate trace.
    pub preserved: usize,
    pub total: usize,
}

/// Compares the trace of each basis element of `K_i` with that of its image.
pub fn trace_preservation(level: &TowerLevel, next: &TowerLevel) -> Result<TracePreservation> {
    let phi = level.embedding.as_ref().ok_or_else(|| Error::PreconditionFailed("no embedding".into()))?;
    let k = level.skew.presentation();
    let mut preserved = 0;
    for b in k.basis() {
        let x = level.skew.include(&b)?;
        let img = phi.apply(&next.algebra, &x)?;
        if trace_functional(level, &x)? == trace_functional(next, &img)? {
            preserved += 1;
        }
    }
    Ok(TracePreservation { level: level.index, preserved, total: k.dim() })
}

/// Levels `1..=levels` with `n_i = p^i` joined by `(k+1, k, 0)` embeddings.
pub fn build_theorem3_tower(p: u64, levels: usize, field: FieldSpec, budget: usize) -> Result<Vec<TowerLevel>> {
    if p < 3 || p.is_multiple_of(2) || !crate::field::is_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    if levels == 0 {
        return Err(Error::PreconditionFailed("at least one level".into()));
    }
    let sizes: Vec<usize> =
        (1..=levels as u32).map(|i| (p as usize).checked_pow(i).ok_or(Error::SizeBudget { needed: usize::MAX, budget })).collect::<Result<_>>()?;
    let sig = SignatureEmbedding::theorem3(p);
    build_tower(&sizes, &vec![sig; levels - 1], field, budget)
}

/// A single level, with its embedding when `index < frontier`.
pub fn build_theorem3_level(p: u64, index: usize, frontier: usize, field: FieldSpec, budget: usize) -> Result<TowerLevel> {
    if p < 3 || p.is_multiple_of(2) || !crate::field::is_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    let n_of = |i: usize| (p as usize).checked_pow(i as u32).ok_or(Error::SizeBudget { needed: usize::MAX, budget });
    let mut level = TowerLevel::build(index, n_of(index)?, field, budget)?;
    if index < frontier {
        let next_n = n_of(index + 1)?;
        if 2 * next_n * next_n > budget {
            return Err(Error::SizeBudget { needed: 2 * next_n * next_n, budget });
        }
        level.embedding = Some(Embedding::new(SignatureEmbedding::theorem3(p), level.n, next_n)?);
    }
    Ok(level)
}

fn build_tower(sizes: &[usize], sigs: &[SignatureEmbedding], field: FieldSpec, budget: usize) -> Result<Vec<TowerLevel>> {
    for (w, sig) in sizes.windows(2).zip(sigs) {
        sig.check(w[0], w[1])?;
    }
    if let Some(&big) = sizes.iter().max() {
        if 2 * big * big > budget {
            return Err(Error::SizeBudget { needed: 2 * big * big, budget });
        }
    }
    let mut levels = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let mut level = TowerLevel::build(i + 1, n, field, budget)?;
        if let Some(sig) = sigs.get(i) {
            level.embedding = Some(Embedding::new(*sig, n, sizes[i + 1])?);
        }
        levels.push(level);
    }
    for i in 0..levels.len().saturating_sub(1) {
        let phi = levels[i].embedding.as_ref().expect("embedding below frontier");
        let checks = check_embedding(phi, &levels[i], &levels[i + 1])?;
        if !checks.all() {
            return Err(Error::InvariantViolation(format!("embedding at level {} fails {checks:?}", i + 1)));
        }
    }
    Ok(levels)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericLevelReport {
    pub level: usize,
    pub n: usize,
    pub k_dim: usize,
    pub derived_dim: usize,
    /// First-coordinate trace of the image of `(E_11, -E_11)` from level 1.
    pub carried_trace: String,
    /// Whether that image has become a sum of commutators.
    pub carried_in_derived: bool,
}

/// A tower starting at `M_{n0} ⊕ M_{n0}` with the given signatures; each
/// next size is `(s + t)·n + z`.
pub fn generic_tower(n0: usize, signatures: &[SignatureEmbedding], field: FieldSpec, budget: usize) -> Result<(Vec<TowerLevel>, Vec<GenericLevelReport>)> {
    let mut sizes = vec![n0];
    for sig in signatures {
        let last = *sizes.last().expect("nonempty");
        sizes.push(sig.target_size(last));
    }
    let levels = build_tower(&sizes, signatures, field, budget)?;
    let mut reports = Vec::with_capacity(levels.len());
    let mut carried = levels[0].obstruction_element();
    for (i, level) in levels.iter().enumerate() {
        if i > 0 {
            let phi = levels[i - 1].embedding.as_ref().expect("embedding below frontier");
            carried = phi.apply(&level.algebra, &carried)?;
        }
        let rep = obstruction_for(level, &carried)?;
        reports.push(GenericLevelReport {
            level: level.index,
            n: level.n,
            k_dim: rep.k_dim,
            derived_dim: rep.derived_dim,
            carried_trace: rep.element_trace,
            carried_in_derived: !rep.element_outside_derived,
        });
    }
    Ok((levels, reports))
}

/// Checks a signature against explicit sizes without building anything.
pub fn check_sizes(sizes: &[usize], signatures: &[SignatureEmbedding]) -> Result<()> {
    if sizes.len() != signatures.len() + 1 {
        return Err(Error::SizeMismatch(format!("{} sizes for {} embeddings", sizes.len(), signatures.len())));
    }
    for (w, sig) in sizes.windows(2).zip(signatures) {
        sig.check(w[0], w[1])?;
    }
    Ok(())
}

/// All levelwise checks for the `p`-tower up to `levels`: dimensions,
/// the trace obstruction at each level, and across each embedding the
/// structural checks, trace preservation, the carried obstruction element
/// and the simplicity probes.
pub fn theorem3_checks(p: u64, levels: usize, field: FieldSpec, budget: usize, seed: u64) -> Result<Vec<CheckOutcome>> {
    let tower = build_theorem3_tower(p, levels, field, budget)?;
    let mut out = Vec::new();
    let mut carried = tower[0].obstruction_element();
    for (i, level) in tower.iter().enumerate() {
        let n2 = level.n * level.n;
        let obs = commutator_obstruction(level)?;
        out.push(CheckOutcome::new(
            format!("level {} dimensions", level.index),
            level.algebra.dim() == 2 * n2 && obs.k_dim == n2 && obs.derived_dim + 1 == n2,
            json!({ "n": level.n, "dim_r": level.algebra.dim(), "dim_k": obs.k_dim, "dim_derived": obs.derived_dim }),
        ));
        out.push(CheckOutcome::new(format!("level {} trace obstruction", level.index), obs.holds(), serde_json::to_value(&obs).expect("serializable")));
        if i > 0 {
            let phi = tower[i - 1].embedding.as_ref().expect("embedding below frontier");
            carried = phi.apply(&level.algebra, &carried)?;
            let rep = obstruction_for(level, &carried)?;
            out.push(CheckOutcome::new(
                format!("level {} image of (E11, -E11)", level.index),
                rep.element_trace == "1" && rep.element_outside_derived,
                json!({ "trace": rep.element_trace, "outside_derived": rep.element_outside_derived }),
            ));
        }
        if let (Some(phi), Some(next)) = (level.embedding.as_ref(), tower.get(i + 1)) {
            let checks = check_embedding(phi, level, next)?;
            out.push(CheckOutcome::new(
                format!("embedding {} -> {}", level.index, next.index),
                checks.all(),
                json!({ "signature": phi.signature, "checks": checks }),
            ));
            let tp = trace_preservation(level, next)?;
            out.push(CheckOutcome::new(
                format!("embedding {} -> {} trace preserved", level.index, next.index),
                tp.preserved == tp.total,
                serde_json::to_value(&tp).expect("serializable"),
            ));
            let (passed, details) = match simplicity_certificate(level, next, seed) {
                Ok(r) => (r.images_split && r.passed == r.unit_probes + r.random_probes, serde_json::to_value(&r).expect("serializable")),
                Err(Error::ProbeFailed(msg)) => (false, json!({ "probe_failed": msg })),
                Err(e) => return Err(e),
            };
            out.push(CheckOutcome::new(format!("level {} simplicity probes", level.index), passed, details));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn level_one_dimensions() {
        let l = build_theorem3_level(3, 1, 1, gf(101), 200).unwrap();
        assert_eq!(l.algebra.dim(), 18);
        assert_eq!(l.k_dim(), 9);
        assert_eq!(SignatureEmbedding::theorem3(3), SignatureEmbedding::new(2, 1, 0));
    }

    #[test]
    fn size_budget_gate() {
        assert!(matches!(build_theorem3_level(3, 3, 3, gf(101), 200), Err(Error::SizeBudget { .. })));
        assert_eq!(build_theorem3_tower(4, 1, gf(101), 200).err(), Some(Error::BadCharacteristic(4)));
    }

    #[test]
    fn trace_values() {
        let f = gf(101);
        let l = TowerLevel::build(1, 3, f, 200).unwrap();
        assert_eq!(trace_functional(&l, &l.obstruction_element()).unwrap(), f.one());
        let mut v = vector::zeros(f, 18);
        v[1] = f.one();
        v[9 + 3] = f.from_i64(-1);
        assert!(trace_functional(&l, &l.algebra.element(v).unwrap()).unwrap().is_zero());
        let not_skew = l.algebra.basis_element(0);
        assert_eq!(trace_functional(&l, &not_skew).err(), Some(Error::NotInK));
    }

    #[test]
    fn obstruction_level_one() {
        let l = TowerLevel::build(1, 3, gf(101), 200).unwrap();
        let r = commutator_obstruction(&l).unwrap();
        assert_eq!((r.k_dim, r.derived_dim), (9, 8));
        assert!(r.holds());
    }

    #[test]
    fn embedding_checks_and_trace() {
        let f = gf(101);
        let levels = generic_tower(2, &[SignatureEmbedding::new(2, 1, 0)], f, 200).unwrap().0;
        let phi = levels[0].embedding.as_ref().unwrap();
        assert!(check_embedding(phi, &levels[0], &levels[1]).unwrap().all());
        let t = trace_preservation(&levels[0], &levels[1]).unwrap();
        assert_eq!(t.preserved, t.total);
        let img = phi.apply(&levels[1].algebra, &levels[0].obstruction_element()).unwrap();
        assert_eq!(trace_functional(&levels[1], &img).unwrap(), f.one());
    }

    #[test]
    fn simplicity_small() {
        let levels = generic_tower(2, &[SignatureEmbedding::new(2, 1, 0)], gf(101), 200).unwrap().0;
        let r = simplicity_certificate(&levels[0], &levels[1], 0).unwrap();
        assert!(r.images_split);
        assert_eq!(r.passed, 8 + RANDOM_PROBES);
    }

    #[test]
    fn theorem3_level_one_checks() {
        let checks = theorem3_checks(3, 1, FieldSpec::rationals(), 200, 0).unwrap();
        assert_eq!(checks.len(), 2);
        assert!(checks.iter().all(CheckOutcome::passed));
    }

    #[test]
    fn generic_signatures() {
        let f = gf(101);
        let (_, diag) = generic_tower(2, &[SignatureEmbedding::new(1, 0, 0); 2], f, 200).unwrap();
        assert!(diag.iter().all(|r| r.derived_dim + 1 == r.k_dim && !r.carried_in_derived));
        let (_, bal) = generic_tower(2, &[SignatureEmbedding::new(1, 1, 0)], f, 200).unwrap();
        assert_eq!(bal[1].carried_trace, "0");
        assert!(bal[1].carried_in_derived);
        assert!(matches!(check_sizes(&[2, 5], &[SignatureEmbedding::new(1, 1, 0)]), Err(Error::SizeMismatch(_))));
        assert!(matches!(generic_tower(2, &[SignatureEmbedding::new(0, 0, 3)], f, 200), Err(Error::SizeMismatch(_))));
    }
}
