//! Jordan elements of Lie algebras, Kostrikin descent, the Jordan algebra
//! `L_x`, idempotents and Peirce decompositions.

use serde::Serialize;

use crate::algebra::{AlgebraElement, AlgebraKind, AlgebraPresentation, StructureTable};
use crate::echelon::Echelon;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::ExactMatrix;
use crate::poly::Polynomial;
use crate::sampling;
use crate::subspace::{complement_of, is_ideal_of_table, project_onto, quotient_table, Subspace};
use crate::vector;

fn require_lie(l: &AlgebraPresentation) -> Result<()> {
    if l.kind() != AlgebraKind::Lie {
        return Err(Error::PreconditionFailed("expected a Lie algebra".into()));
    }
    Ok(())
}

/// Whether `ad(x)³ = 0`, together with `ad(x)`.
pub fn is_jordan_element(l: &AlgebraPresentation, x: &AlgebraElement) -> Result<(bool, ExactMatrix)> {
    require_lie(l)?;
    l.check_parent(x)?;
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let ad = l.ad(x)?;
    let cube = ad.pow(3)?;
    Ok((cube.is_zero(), ad))
}

/// Left-normed `[b, a, …, a]` with `n - 1` copies of `a`, after checking
/// `ad(a)^n = 0` and `4 ≤ n ≤ p - 1`. The conclusion `ad(y)^{n-1} = 0` is
/// verified; a failure is reported as [`Error::InvariantViolation`].
pub fn kostrikin_descent(l: &AlgebraPresentation, a: &AlgebraElement, b: &AlgebraElement, n: usize) -> Result<AlgebraElement> {
    require_lie(l)?;
    l.check_parent(a)?;
    l.check_parent(b)?;
    let p = l.field().characteristic();
    if p != 0 && p < 5 {
        return Err(Error::PreconditionFailed(format!("descent needs p >= 5, got {p}")));
    }
    if n < 4 || (p != 0 && n as u64 > p - 1) {
        return Err(Error::PreconditionFailed(format!("n = {n} outside [4, p - 1]")));
    }
    let ad_a = l.ad(a)?;
    if !ad_a.pow(n)?.is_zero() {
        return Err(Error::PreconditionFailed(format!("ad(a)^{n} != 0")));
    }
    let mut y = b.clone();
    for _ in 0..n - 1 {
        y = l.multiply(&y, a)?;
    }
    if !l.ad(&y)?.pow(n - 1)?.is_zero() {
        return Err(Error::InvariantViolation(format!("descent output has ad(y)^{} != 0", n - 1)));
    }
    Ok(y)
}

/// One step of the iterated descent.
#[derive(Clone, Debug)]
pub struct DescentStep {
    pub element: AlgebraElement,
    /// Nilpotency index of `ad(element)`.
    pub index: usize,
    /// Basis index of the `b` used to reach the next element.
    pub via_basis: Option<usize>,
}

/// Repeats [`kostrikin_descent`] from an ad-nilpotent `a`, choosing at each
/// stage the first basis `b` with nonzero output, until `ad³` vanishes.
pub fn iterated_descent(l: &AlgebraPresentation, a: &AlgebraElement) -> Result<Vec<DescentStep>> {
    require_lie(l)?;
    l.check_parent(a)?;
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let p = l.field().characteristic();
    let mut steps = Vec::new();
    let mut cur = a.clone();
    loop {
        let index = l.ad(&cur)?.nilpotency_index().ok_or(Error::NotNilpotent)?;
        if index <= 3 {
            steps.push(DescentStep { element: cur, index, via_basis: None });
            return Ok(steps);
        }
        if p != 0 && index as u64 > p - 1 {
            return Err(Error::PreconditionFailed(format!("ad(a) has index {index} > p - 1")));
        }
        let mut next = None;
        for (i, b) in l.basis().iter().enumerate() {
            let y = kostrikin_descent(l, &cur, b, index)?;
            if !y.is_zero() {
                next = Some((i, y));
                break;
            }
        }
        let (i, y) = next.ok_or_else(|| Error::InvariantViolation("ad(a)^{n-1} vanishes on every basis element".into()))?;
        steps.push(DescentStep { element: cur, index, via_basis: Some(i) });
        cur = y;
    }
}

/// `L_x = L^{(x)} / ker_L(x)` with `a • b = [[a, x], b]`.
#[derive(Clone, Debug)]
pub struct JordanQuotient {
    x: AlgebraElement,
    ad_x: ExactMatrix,
    ad_x2: ExactMatrix,
    kernel: Subspace,
    complement: Vec<usize>,
    quotient: AlgebraPresentation,
}

#[allow(non_snake_case)]
pub fn build_L_x(l: &AlgebraPresentation, x: &AlgebraElement) -> Result<JordanQuotient> {
    let (is_jordan, ad_x) = is_jordan_element(l, x)?;
    if !is_jordan {
        return Err(Error::NotJordanElement);
    }
    let ad_x2 = ad_x.matmul(&ad_x)?;
    let f = l.field();
    let d = l.dim();
    let mut kernel = Echelon::new(f, d);
    for v in ad_x2.kernel() {
        kernel.insert(v);
    }
    // bullet table: b_i • b_j = [[b_i, x], b_j] = [-X b_i, b_j]
    let neg_x_cols: Vec<Vec<Scalar>> = (0..d).map(|i| vector::neg(&ad_x.column(i))).collect();
    let bullet = StructureTable::from_products(f, d, |i, j| l.mul_coeffs(&neg_x_cols[i], &vector::unit(f, d, j)));
    if !is_ideal_of_table(&bullet, &kernel) {
        return Err(Error::InvariantViolation("ker ad(x)^2 is not an ideal of the bullet algebra".into()));
    }
    let complement = complement_of(&kernel);
    let table = quotient_table(&bullet, &kernel, &complement);
    let labels = complement.iter().map(|&k| format!("[{}]", l.labels()[k])).collect();
    let quotient = AlgebraPresentation::new(AlgebraKind::Jordan, labels, table).map_err(|e| match e {
        Error::InvalidPresentation(m) => Error::InvariantViolation(format!("L_x fails the Jordan axioms: {m}")),
        other => other,
    })?;
    let q = JordanQuotient { x: x.clone(), ad_x, ad_x2, kernel: Subspace::from_echelon(l.id(), kernel), complement, quotient };
    q.check_u_operator(l)?;
    Ok(q)
}

impl JordanQuotient {
    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.quotient
    }

    pub fn x(&self) -> &AlgebraElement {
        &self.x
    }

    pub fn ad_x(&self) -> &ExactMatrix {
        &self.ad_x
    }

    pub fn ad_x2(&self) -> &ExactMatrix {
        &self.ad_x2
    }

    /// `ker_L(x) = {a : [x, [x, a]] = 0}`.
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn project(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        if a.parent() != self.kernel.parent() {
            return Err(Error::ParentMismatch);
        }
        self.quotient.element(project_onto(self.kernel.echelon(), &self.complement, a.coeffs()))
    }

    /// A preimage of `a` in `L`.
    pub fn lift(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.quotient.check_parent(a)?;
        let mut v = vector::zeros(self.quotient.field(), self.kernel.ambient_dim());
        for (c, &k) in a.coeffs().iter().zip(&self.complement) {
            v[k] = c.clone();
        }
        Ok(AlgebraElement::from_parts(self.kernel.parent(), v))
    }

    /// `U_ā b̄` as the class of `ad(a)² ad(x)² b`.
    pub fn u_lifted(&self, l: &AlgebraPresentation, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        let (la, lb) = (self.lift(a)?, self.lift(b)?);
        let ad_a = l.ad(&la)?;
        let v = self.ad_x2.mul_vec(lb.coeffs())?;
        let v = ad_a.mul_vec(&ad_a.mul_vec(&v)?)?;
        self.project(&AlgebraElement::from_parts(self.kernel.parent(), v))
    }

    /// `U_a b = {a, b, a} = 2 a∘(a∘b) − a²∘b` inside the quotient.
    pub fn u_triple(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        u_operator(&self.quotient, a, b)
    }

    /// Matrix of `U_ā` via the lifted formula.
    pub fn u_matrix(&self, l: &AlgebraPresentation, a: &AlgebraElement) -> Result<ExactMatrix> {
        let n = self.dim();
        let cols = (0..n).map(|j| self.u_lifted(l, a, &self.quotient.basis_element(j)).map(|e| e.into_coeffs())).collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix::from_columns(self.quotient.field(), n, &cols))
    }

    fn check_u_operator(&self, l: &AlgebraPresentation) -> Result<()> {
        for a in self.quotient.basis() {
            for b in self.quotient.basis() {
                if self.u_lifted(l, &a, &b)? != self.u_triple(&a, &b)? {
                    return Err(Error::InvariantViolation("U-operator formulas disagree".into()));
                }
            }
        }
        Ok(())
    }
}

/// `U_x(y) = {x, y, x} = 2 x∘(x∘y) − x²∘y` in a Jordan algebra.
pub fn u_operator(j: &AlgebraPresentation, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    let xy = j.multiply(x, y)?;
    let x_xy = j.multiply(x, &xy)?;
    let x2 = j.multiply(x, x)?;
    let x2y = j.multiply(&x2, y)?;
    let two = j.field().from_i64(2);
    Ok(&x_xy.scale(&two) - &x2y)
}

/// Outcome of one identity over all trials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub trials: usize,
    pub seed: u64,
    pub failures: usize,
    /// Coefficients of the first failing `(a, b)`.
    pub counterexample: Option<(Vec<String>, Vec<String>)>,
}

pub const IDENTITY_NAMES: [&str; 8] = [
    "i: X^2 A X = X A X^2",
    "ii: X^2 A X^2 = 0",
    "iii: X^2 A^2 X A X^2 = X^2 A X A^2 X^2",
    "iv: [X^2 a, X b] = -[X a, X^2 b]",
    "v: X^2 [[a,x],b] = X^2 [[b,x],a]",
    "vi: X^2 ad[a, X^2 b] = ad[X^2 a, b] X^2",
    "vii: ad(X^2 a)^2 = X^2 A^2 X^2",
    "viii: X^2 a is a Jordan element or zero",
];

fn mm(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.matmul(b).expect("square operators")
}

fn chain(ms: &[&ExactMatrix]) -> ExactMatrix {
    ms[1..].iter().fold(ms[0].clone(), |acc, m| mm(&acc, m))
}

/// Evaluates the eight identities for one pair `(a, b)`; `true` means holds.
fn identities_hold(
    l: &AlgebraPresentation,
    x: &AlgebraElement,
    xm: &ExactMatrix,
    x2: &ExactMatrix,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<[bool; 8]> {
    let am = l.ad(a)?;
    let a2 = mm(&am, &am);
    let xa = AlgebraElement::from_parts(a.parent(), xm.mul_vec(a.coeffs())?);
    let xb = AlgebraElement::from_parts(a.parent(), xm.mul_vec(b.coeffs())?);
    let x2a = AlgebraElement::from_parts(a.parent(), x2.mul_vec(a.coeffs())?);
    let x2b = AlgebraElement::from_parts(a.parent(), x2.mul_vec(b.coeffs())?);

    let i = chain(&[x2, &am, xm]) == chain(&[xm, &am, x2]);
    let ii = chain(&[x2, &am, x2]).is_zero();
    let iii = chain(&[x2, &a2, xm, &am, x2]) == chain(&[x2, &am, xm, &a2, x2]);
    let iv = l.multiply(&x2a, &xb)? == -&l.multiply(&xa, &x2b)?;
    let abx = l.multiply(&l.multiply(a, x)?, b)?;
    let bax = l.multiply(&l.multiply(b, x)?, a)?;
    let v = x2.mul_vec(abx.coeffs())? == x2.mul_vec(bax.coeffs())?;
    let vi = mm(x2, &l.ad(&l.multiply(a, &x2b)?)?) == mm(&l.ad(&l.multiply(&x2a, b)?)?, x2);
    let ad_x2a = l.ad(&x2a)?;
    let vii = mm(&ad_x2a, &ad_x2a) == chain(&[x2, &a2, x2]);
    let viii = x2a.is_zero() || ad_x2a.pow(3)?.is_zero();
    Ok([i, ii, iii, iv, v, vi, vii, viii])
}

/// Samples `trials` seeded pairs `(a, b)` and checks the eight identities
/// for the Jordan element `x`.
pub fn verify_identities(l: &AlgebraPresentation, x: &AlgebraElement, trials: usize, seed: u64) -> Result<Vec<IdentityCheck>> {
    let (is_jordan, xm) = is_jordan_element(l, x)?;
    if !is_jordan {
        return Err(Error::NotJordanElement);
    }
    let x2 = mm(&xm, &xm);
    let mut rng = sampling::rng(seed);
    let mut checks: Vec<IdentityCheck> =
        IDENTITY_NAMES.iter().map(|n| IdentityCheck { name: n.to_string(), trials, seed, failures: 0, counterexample: None }).collect();
    for _ in 0..trials {
        let a = l.element(sampling::vector(l.field(), l.dim(), &mut rng))?;
        let b = l.element(sampling::vector(l.field(), l.dim(), &mut rng))?;
        let results = identities_hold(l, x, &xm, &x2, &a, &b)?;
        for (check, ok) in checks.iter_mut().zip(results) {
            if !ok {
                check.failures += 1;
                if check.counterexample.is_none() {
                    check.counterexample = Some((a.to_strings(), b.to_strings()));
                }
            }
        }
    }
    Ok(checks)
}

/// Evidence that a Jordan algebra is nilpotent: the product powers
/// `J^(k) = Σ_{i+j=k} J^(i) J^(j)` reach zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilCertificate {
    /// Candidates tested and found nilpotent before the power chain ran.
    pub candidates_tested: usize,
    /// Least `k` with `J^(k) = 0`.
    pub nilpotency_index: usize,
    /// `dim J^(1), dim J^(2), …`.
    pub power_dims: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum IdempotentSearch {
    Idempotent { element: AlgebraElement, generator: AlgebraElement },
    Nil(NilCertificate),
}

pub const IDEMPOTENT_BUDGET: usize = 512;

/// Powers `a, a², …` until the first linear dependency, giving the monic
/// `q(t)` with `q(a) = 0` and zero constant term.
fn power_relation(j: &AlgebraPresentation, a: &AlgebraElement) -> Result<(Vec<AlgebraElement>, Polynomial)> {
    let f = j.field();
    let d = j.dim();
    let mut powers: Vec<AlgebraElement> = Vec::new();
    let mut ech = Echelon::with_pivot_limit(f, d + d + 1, d);
    let mut cur = a.clone();
    for k in 1..=d + 1 {
        let mut row = cur.coeffs().to_vec();
        row.extend(vector::unit(f, d + 1, k - 1));
        ech.reduce_in_place(&mut row);
        powers.push(cur.clone());
        if let Some(rel) = ech.insert_reduced(row) {
            // rel tail: Σ r_i a^{i+1} = 0 with r_{k-1} the leading term
            let tail = &rel[d..];
            let lead = tail[k - 1].clone();
            let inv = lead.inv().expect("nonzero leading coefficient");
            let mut coeffs = vec![f.zero()];
            coeffs.extend(tail[..k].iter().map(|c| c * &inv));
            return Ok((powers, Polynomial::new(f, coeffs)));
        }
        cur = j.multiply(&cur, a)?;
    }
    unreachable!("d + 1 vectors in dimension d are dependent")
}

fn eval_no_constant(j: &AlgebraPresentation, r: &Polynomial, powers: &[AlgebraElement]) -> Result<AlgebraElement> {
    let mut acc = j.zero_element();
    for (i, c) in r.coeffs().iter().enumerate().skip(1) {
        if !c.is_zero() {
            let pw = powers.get(i - 1).ok_or_else(|| Error::PreconditionFailed("power out of range".into()))?;
            acc = &acc + &pw.scale(c);
        }
    }
    if !r.coeffs().first().is_none_or(Scalar::is_zero) {
        return Err(Error::PreconditionFailed("polynomial has a constant term".into()));
    }
    Ok(acc)
}

/// Idempotent in the one-generated subalgebra of a non-nilpotent `a`, or
/// `None` when `a` is nilpotent.
pub fn idempotent_from(j: &AlgebraPresentation, a: &AlgebraElement) -> Result<Option<AlgebraElement>> {
    let (mut powers, q) = power_relation(j, a)?;
    let m = q.degree().expect("nonzero");
    // extend powers to degree 2m for the power-associativity check and evaluation
    while powers.len() < 2 * m {
        let next = j.multiply(powers.last().expect("nonempty"), a)?;
        powers.push(next);
    }
    for i in 1..=m {
        for k in 1..=m {
            if j.multiply(&powers[i - 1], &powers[k - 1])? != powers[i + k - 1] {
                return Err(Error::InvariantViolation(format!("a^{i} a^{k} != a^{}", i + k)));
            }
        }
    }
    let (s, u) = q.split_at_zero();
    if u.degree() == Some(0) {
        return Ok(None);
    }
    // r = t^s w, w ≡ t^{-s} (mod u); then r ≡ 0 mod t^s, r ≡ 1 mod u
    let ts = Polynomial::monomial(j.field(), s);
    let (g, inv_ts, _) = ts.ext_gcd(&u);
    debug_assert_eq!(g.degree(), Some(0));
    let w = inv_ts.scale(&g.coeffs()[0].inv().expect("unit gcd")).rem(&u);
    let r = ts.mul(&w).rem(&q);
    let e = eval_no_constant(j, &r, &powers)?;
    if e.is_zero() || j.multiply(&e, &e)? != e {
        return Err(Error::InvariantViolation("interpolated element is not a nonzero idempotent".into()));
    }
    Ok(Some(e))
}

/// Dimensions of `J^(1), J^(2), …` until zero or stable.
fn power_chain(j: &AlgebraPresentation) -> Result<Vec<usize>> {
    let mut levels: Vec<Subspace> = vec![Subspace::whole(j)];
    loop {
        let k = levels.len() + 1;
        let mut next = Subspace::zero(j);
        for i in 1..k {
            let (a, b) = (&levels[i - 1], &levels[k - i - 1]);
            for u in a.basis() {
                for v in b.basis() {
                    next.insert(&j.multiply(&u, &v)?)?;
                }
            }
        }
        let stalled = next.dim() == levels.last().map(Subspace::dim).unwrap_or(0);
        let done = next.is_zero();
        levels.push(next);
        if done || stalled || levels.len() > j.dim() + 2 {
            return Ok(levels.iter().map(Subspace::dim).collect());
        }
    }
}

/// Searches the basis, then seeded random two-term combinations, for a
/// non-nilpotent element and extracts an idempotent from it. If none is
/// found the whole algebra is shown nilpotent by its power chain.
pub fn find_idempotent(j: &AlgebraPresentation, seed: u64) -> Result<IdempotentSearch> {
    if j.kind() != AlgebraKind::Jordan {
        return Err(Error::PreconditionFailed("expected a Jordan algebra".into()));
    }
    let f = j.field();
    let d = j.dim();
    let mut rng = sampling::rng(seed);
    let mut tested = 0;
    let mut candidates: Vec<AlgebraElement> = j.basis();
    while tested < IDEMPOTENT_BUDGET {
        let a = if tested < candidates.len() {
            candidates[tested].clone()
        } else if d >= 2 {
            let i = rand::Rng::random_range(&mut rng, 0..d);
            let k = (i + 1 + rand::Rng::random_range(&mut rng, 0..d - 1)) % d;
            let mut v = vector::zeros(f, d);
            v[i] = sampling::nonzero_scalar(f, &mut rng);
            v[k] = sampling::nonzero_scalar(f, &mut rng);
            let e = j.element(v)?;
            candidates.push(e.clone());
            e
        } else {
            break;
        };
        tested += 1;
        if let Some(e) = idempotent_from(j, &a)? {
            return Ok(IdempotentSearch::Idempotent { element: e, generator: a });
        }
    }
    let dims = power_chain(j)?;
    match dims.iter().position(|&x| x == 0) {
        Some(pos) => Ok(IdempotentSearch::Nil(NilCertificate { candidates_tested: tested, nilpotency_index: pos + 1, power_dims: dims })),
        None => Err(Error::IdempotentSearchExhausted),
    }
}

/// Eigenspaces of `R_e` at `1`, `0` and `1/2`.
#[derive(Clone, Debug)]
pub struct PeirceDecomposition {
    pub one: Subspace,
    pub zero: Subspace,
    pub half: Subspace,
}

impl PeirceDecomposition {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.one.dim(), self.zero.dim(), self.half.dim())
    }
}

pub fn pierce_decompose(j: &AlgebraPresentation, e: &AlgebraElement) -> Result<PeirceDecomposition> {
    j.check_parent(e)?;
    let f = j.field();
    if f.characteristic() == 2 {
        return Err(Error::BadChar(2));
    }
    if e.is_zero() || j.multiply(e, e)? != *e {
        return Err(Error::NotIdempotent);
    }
    let r = j.right_mul(e)?;
    let half = f.fraction(1, 2).expect("p != 2");
    let part = |lambda: &Scalar| -> Result<Subspace> { Ok(Subspace::span_coeffs(j, r.eigenspace(lambda)?)) };
    let dec = PeirceDecomposition { one: part(&f.one())?, zero: part(&f.zero())?, half: part(&half)? };
    let total = dec.one.sum(&dec.zero)?.sum(&dec.half)?;
    let (a, b, c) = dec.dims();
    if a + b + c != j.dim() || !total.is_whole() {
        return Err(Error::InvariantViolation("Peirce parts do not span the algebra".into()));
    }
    if !dec.one.contains(e) {
        return Err(Error::InvariantViolation("e is outside its own 1-eigenspace".into()));
    }
    Ok(dec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_matrix_lie, field_algebra, heisenberg, jordan_symmetric_matrices, square_zero_element, zero_algebra, Series};
    use crate::field::FieldSpec;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn jordan_elements_of_sl2() {
        let l = build_matrix_lie(Series::Sl, 2, gf(11)).unwrap();
        let a = l.presentation();
        assert!(is_jordan_element(a, &a.basis_element(0)).unwrap().0);
        assert!(!is_jordan_element(a, &a.basis_element(1)).unwrap().0);
        assert_eq!(is_jordan_element(a, &a.zero_element()).err(), Some(Error::ZeroElement));
    }

    #[test]
    fn l_e_of_sl2_is_one_dimensional() {
        let f = gf(11);
        let l = build_matrix_lie(Series::Sl, 2, f).unwrap();
        let a = l.presentation();
        let q = build_L_x(a, &a.basis_element(0)).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.kernel(), &Subspace::span(a, &[a.basis_element(0), a.basis_element(1)]).unwrap());
        let fbar = q.project(&a.basis_element(2)).unwrap();
        let sq = q.algebra().multiply(&fbar, &fbar).unwrap();
        assert_eq!(sq, fbar.scale(&f.from_i64(2)));
        match find_idempotent(q.algebra(), 0).unwrap() {
            IdempotentSearch::Idempotent { element, .. } => assert_eq!(element, fbar.scale(&f.from_i64(6))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn l_x_of_sl3_corner() {
        let l = build_matrix_lie(Series::Sl, 3, gf(11)).unwrap();
        let q = build_L_x(l.presentation(), &l.unit(0, 2).unwrap()).unwrap();
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn heisenberg_l_x_is_zero_and_nil() {
        let h = heisenberg(gf(5)).unwrap();
        let q = build_L_x(&h, &h.basis_element(0)).unwrap();
        assert_eq!(q.dim(), 0);
        assert!(matches!(find_idempotent(q.algebra(), 0).unwrap(), IdempotentSearch::Nil(_)));
    }

    #[test]
    fn identities_hold_on_sl4() {
        let l = build_matrix_lie(Series::Sl, 4, gf(11)).unwrap();
        let x = square_zero_element(&l).unwrap();
        for c in verify_identities(l.presentation(), &x, 10, 7).unwrap() {
            assert_eq!(c.failures, 0, "{}", c.name);
        }
    }

    #[test]
    fn descent_on_sl3() {
        let f = gf(11);
        let l = build_matrix_lie(Series::Sl, 3, f).unwrap();
        let p = l.presentation();
        let a = &l.unit(0, 1).unwrap() + &l.unit(1, 2).unwrap();
        let b = l.unit(1, 0).unwrap();
        let y = kostrikin_descent(p, &a, &b, 5).unwrap();
        assert!(p.ad(&y).unwrap().pow(4).unwrap().is_zero());
        assert!(kostrikin_descent(p, &a, &a, 5).unwrap().is_zero());
        assert!(matches!(kostrikin_descent(p, &a, &b, 3), Err(Error::PreconditionFailed(_))));
        let chain = iterated_descent(p, &a).unwrap();
        let last = chain.last().unwrap();
        assert!(last.index <= 3 && !last.element.is_zero());
    }

    #[test]
    fn idempotents_and_nil_certificates() {
        let f = gf(7);
        let one = field_algebra(AlgebraKind::Jordan, f).unwrap();
        match find_idempotent(&one, 1).unwrap() {
            IdempotentSearch::Idempotent { element, .. } => assert_eq!(element, one.basis_element(0)),
            other => panic!("{other:?}"),
        }
        let z = zero_algebra(AlgebraKind::Jordan, 2, f).unwrap();
        assert!(matches!(find_idempotent(&z, 1).unwrap(), IdempotentSearch::Nil(_)));
    }

    #[test]
    fn peirce_of_symmetric_matrices() {
        let f = gf(7);
        let j = jordan_symmetric_matrices(2, f).unwrap();
        let dec = pierce_decompose(&j, &j.basis_element(0)).unwrap();
        assert_eq!(dec.dims(), (1, 1, 1));
        assert_eq!(pierce_decompose(&j, &j.basis_element(1)).err(), Some(Error::NotIdempotent));
    }
}
