//! Concrete algebras: classical matrix Lie algebras with fixed Gram
//! matrices, matrix-unit associative algebras, involutions and their skew
//! parts, the skew-endomorphism TKK algebra, and small test algebras.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraElement, AlgebraId, AlgebraKind, AlgebraPresentation, StructureTable};
use crate::echelon::Echelon;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::ExactMatrix;
use crate::vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Series {
    Gl,
    Sl,
    O,
    Sp,
}

impl Series {
    pub fn as_str(&self) -> &'static str {
        match self {
            Series::Gl => "gl",
            Series::Sl => "sl",
            Series::O => "o",
            Series::Sp => "sp",
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Series::Gl),
            "sl" => Ok(Series::Sl),
            "o" | "so" => Ok(Series::O),
            "sp" => Ok(Series::Sp),
            other => Err(Error::Parse(format!("unknown series {other:?}"))),
        }
    }
}

/// Label of a matrix unit, 1-based: `E12`, or `E1_12` once indices need two digits.
fn unit_label(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("E{}{}", i + 1, j + 1)
    } else {
        format!("E{}_{}", i + 1, j + 1)
    }
}

/// Signed sum of matrix units, e.g. `E13-E42`.
fn matrix_label(m: &ExactMatrix) -> String {
    let n = m.rows();
    let mut out = String::new();
    for i in 0..n {
        for j in 0..m.cols() {
            let c = &m[(i, j)];
            if c.is_zero() {
                continue;
            }
            let unit = unit_label(n, i, j);
            let neg = -c;
            if c.is_one() {
                if !out.is_empty() {
                    out.push('+');
                }
                out.push_str(&unit);
            } else if neg.is_one() {
                out.push('-');
                out.push_str(&unit);
            } else {
                if !out.is_empty() {
                    out.push('+');
                }
                out.push_str(&format!("{c}*{unit}"));
            }
        }
    }
    out
}

fn flatten(m: &ExactMatrix) -> Vec<Scalar> {
    m.to_vec()
}

/// A Lie algebra of `n × n` matrices closed under the commutator, with the
/// chosen matrix basis and a coordinatizer back into it.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    series: Option<Series>,
    n: usize,
    form: Option<ExactMatrix>,
    presentation: AlgebraPresentation,
    basis: Vec<ExactMatrix>,
    // rows are [vec(X_i) | e_i]; pivots restricted to the matrix part
    coord: Echelon,
}

impl MatrixLieAlgebra {
    fn from_basis(series: Option<Series>, n: usize, form: Option<ExactMatrix>, field: FieldSpec, basis: Vec<ExactMatrix>, labels: Vec<String>) -> Result<Self> {
        let d = basis.len();
        let nn = n * n;
        let mut coord = Echelon::with_pivot_limit(field, nn + d, nn);
        for (i, b) in basis.iter().enumerate() {
            let mut row = flatten(b);
            row.extend(vector::unit(field, d, i));
            if !coord.insert(row) {
                return Err(Error::InvalidPresentation("matrix basis is dependent".into()));
            }
        }
        let mut entries = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let c = basis[i].matmul(&basis[j])?.sub(&basis[j].matmul(&basis[i])?)?;
                let coeffs =
                    coordinates_in(&coord, nn, d, &c).ok_or_else(|| Error::InvalidPresentation("matrix span is not closed under the commutator".into()))?;
                for (k, x) in coeffs.into_iter().enumerate() {
                    if !x.is_zero() {
                        entries.push((j, i, k, -&x));
                        entries.push((i, j, k, x));
                    }
                }
            }
        }
        let table = StructureTable::from_entries(field, d, entries)?;
        let presentation = AlgebraPresentation::new(AlgebraKind::Lie, labels, table)?;
        Ok(Self { series, n, form, presentation, basis, coord })
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn series(&self) -> Option<Series> {
        self.series
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.presentation.field()
    }

    /// Gram matrix `G` of the preserved form, for o, sp and TKK algebras.
    pub fn form(&self) -> Option<&ExactMatrix> {
        self.form.as_ref()
    }

    pub fn basis_matrices(&self) -> &[ExactMatrix] {
        &self.basis
    }

    pub fn to_matrix(&self, a: &AlgebraElement) -> Result<ExactMatrix> {
        self.presentation.check_parent(a)?;
        let mut m = ExactMatrix::zeros(self.field(), self.n, self.n);
        for (c, b) in a.coeffs().iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&b.scale(c))?;
            }
        }
        Ok(m)
    }

    /// The element with matrix `m`; fails if `m` is not in the algebra.
    pub fn from_matrix(&self, m: &ExactMatrix) -> Result<AlgebraElement> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(Error::DimensionMismatch(format!("expected {0}x{0} matrix", self.n)));
        }
        let d = self.basis.len();
        let coeffs = coordinates_in(&self.coord, self.n * self.n, d, m).ok_or_else(|| Error::NoSuchElement("matrix does not lie in the algebra".into()))?;
        self.presentation.element(coeffs)
    }

    /// Matrix unit `E_ij` as an element, when it lies in the algebra.
    pub fn unit(&self, i: usize, j: usize) -> Result<AlgebraElement> {
        self.from_matrix(&ExactMatrix::unit(self.field(), self.n, i, j))
    }
}

fn coordinates_in(coord: &Echelon, nn: usize, d: usize, m: &ExactMatrix) -> Option<Vec<Scalar>> {
    let field = coord.field();
    let mut row = flatten(m);
    row.extend(vector::zeros(field, d));
    coord.reduce_in_place(&mut row);
    if !vector::is_zero(&row[..nn]) {
        return None;
    }
    Some(vector::neg(&row[nn..]))
}

/// Gram matrix of the symplectic form `[[0, I], [-I, 0]]`.
pub fn symplectic_form(field: FieldSpec, n: usize) -> Result<ExactMatrix> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::BadParity(format!("sp needs even n, got {n}")));
    }
    let k = n / 2;
    Ok(ExactMatrix::from_fn(field, n, n, |i, j| {
        if i < k && j == i + k {
            field.one()
        } else if i >= k && j + k == i {
            -field.one()
        } else {
            field.zero()
        }
    }))
}

/// Gram matrix of the orthogonal form: `[[0, I], [I, 0]]` for even `n`,
/// `[[1, 0, 0], [0, 0, I], [0, I, 0]]` for odd `n`.
pub fn orthogonal_form(field: FieldSpec, n: usize) -> ExactMatrix {
    let (off, k) = if n.is_multiple_of(2) { (0, n / 2) } else { (1, n / 2) };
    ExactMatrix::from_fn(field, n, n, |i, j| {
        let hit = (off == 1 && i == 0 && j == 0) || (i >= off && i < off + k && j == i + k) || (i >= off + k && j + k == i);
        if hit {
            field.one()
        } else {
            field.zero()
        }
    })
}

fn check_char(field: FieldSpec) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::BadChar(2));
    }
    Ok(())
}

/// Basis `{G⁻¹ S}` with `S` running over symmetric (`symmetric = true`) or
/// skew-symmetric matrix units; these are exactly the `X` with
/// `Xᵀ G = -G X` when `G` is skew, respectively symmetric.
fn form_basis(field: FieldSpec, g: &ExactMatrix, symmetric: bool) -> Result<Vec<ExactMatrix>> {
    let n = g.rows();
    let g_inv = inverse(g)?;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i == j && !symmetric {
                continue;
            }
            let mut s = ExactMatrix::unit(field, n, i, j);
            if i != j {
                s[(j, i)] = if symmetric { field.one() } else { -field.one() };
            }
            out.push(g_inv.matmul(&s)?);
        }
    }
    Ok(out)
}

pub(crate) fn inverse(m: &ExactMatrix) -> Result<ExactMatrix> {
    let n = m.rows();
    let f = m.field();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let sol = m.solve(&vector::unit(f, n, i))?.ok_or(Error::DegenerateForm)?;
        if !sol.kernel.is_empty() {
            return Err(Error::DegenerateForm);
        }
        cols.push(sol.particular);
    }
    Ok(ExactMatrix::from_columns(f, n, &cols))
}

/// gl, sl, o or sp of size `n`, with o and sp relative to the fixed forms
/// [`orthogonal_form`] and [`symplectic_form`].
pub fn build_matrix_lie(series: Series, n: usize, field: FieldSpec) -> Result<MatrixLieAlgebra> {
    check_char(field)?;
    let unit = |i, j| ExactMatrix::unit(field, n, i, j);
    match series {
        Series::Gl => {
            if n == 0 {
                return Err(Error::InvalidPresentation("n must be positive".into()));
            }
            let mut basis = Vec::new();
            let mut labels = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    basis.push(unit(i, j));
                    labels.push(unit_label(n, i, j));
                }
            }
            MatrixLieAlgebra::from_basis(Some(series), n, None, field, basis, labels)
        }
        Series::Sl => {
            if n < 2 {
                return Err(Error::InvalidPresentation("sl needs n >= 2".into()));
            }
            let mut basis = Vec::new();
            let mut labels = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    basis.push(unit(i, j));
                    labels.push(unit_label(n, i, j));
                }
            }
            for i in 0..n - 1 {
                basis.push(unit(i, i).sub(&unit(i + 1, i + 1))?);
                labels.push(format!("h{}", i + 1));
            }
            for i in 0..n {
                for j in 0..i {
                    basis.push(unit(i, j));
                    labels.push(unit_label(n, i, j));
                }
            }
            if n == 2 {
                labels = vec!["e".into(), "h".into(), "f".into()];
            }
            MatrixLieAlgebra::from_basis(Some(series), n, None, field, basis, labels)
        }
        Series::Sp => {
            let g = symplectic_form(field, n)?;
            let basis = form_basis(field, &g, true)?;
            let labels = basis.iter().map(matrix_label).collect();
            MatrixLieAlgebra::from_basis(Some(series), n, Some(g), field, basis, labels)
        }
        Series::O => {
            if n < 2 {
                return Err(Error::InvalidPresentation("o needs n >= 2".into()));
            }
            let g = orthogonal_form(field, n);
            let basis = form_basis(field, &g, false)?;
            let labels = basis.iter().map(matrix_label).collect();
            MatrixLieAlgebra::from_basis(Some(series), n, Some(g), field, basis, labels)
        }
    }
}

/// The explicit square-zero matrix of the given series:
/// sl: `[[0, I], [0, 0]]` (blocks `k, k, 1` when `n` is odd);
/// sp: `[[0, I], [0, 0]]`; o: `[[0, C], [0, 0]]` with `C` skew and nonzero,
/// placed after the leading `1` block when `n` is odd.
pub fn square_zero_matrix(series: Series, n: usize, field: FieldSpec) -> Result<ExactMatrix> {
    let k = n / 2;
    let mut a = ExactMatrix::zeros(field, n, n);
    match series {
        Series::Gl | Series::Sl => {
            if n < 2 {
                return Err(Error::NoSuchElement(format!("no square-zero element for {series} n = {n}")));
            }
            for i in 0..k {
                a[(i, k + i)] = field.one();
            }
        }
        Series::Sp => {
            if n < 2 || !n.is_multiple_of(2) {
                return Err(Error::NoSuchElement(format!("no square-zero element for sp n = {n}")));
            }
            for i in 0..k {
                a[(i, k + i)] = field.one();
            }
        }
        Series::O => {
            if k < 2 {
                return Err(Error::NoSuchElement(format!("o n = {n} admits no nonzero {k}x{k} skew block")));
            }
            let off = n % 2;
            // C = E_12 - E_21 inside the k x k block
            a[(off, off + k + 1)] = field.one();
            a[(off + 1, off + k)] = -field.one();
        }
    }
    Ok(a)
}

/// [`square_zero_matrix`] as an element of `l`.
pub fn square_zero_element(l: &MatrixLieAlgebra) -> Result<AlgebraElement> {
    let series = l.series().ok_or_else(|| Error::NoSuchElement("algebra has no classical series".into()))?;
    let a = square_zero_matrix(series, l.n(), l.field())?;
    l.from_matrix(&a)
}

/// Full matrix algebra `M_n` on matrix units, index `i·n + j`.
pub fn matrix_algebra(n: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    if n == 0 {
        return Err(Error::InvalidPresentation("n must be positive".into()));
    }
    let mut entries = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                entries.push((i * n + j, j * n + k, i * n + k, field.one()));
            }
        }
    }
    let labels = (0..n * n).map(|x| unit_label(n, x / n, x % n)).collect();
    AlgebraPresentation::new_trusted(AlgebraKind::Associative, labels, StructureTable::from_entries(field, n * n, entries)?)
}

/// `A ⊕ B` with the first summand on indices `0..dim A`.
pub fn direct_sum(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    if a.kind() != b.kind() {
        return Err(Error::InvalidPresentation("summands of different kinds".into()));
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let da = a.dim();
    let mut entries: Vec<(usize, usize, usize, Scalar)> = a.table().entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
    entries.extend(b.table().entries().map(|(i, j, k, c)| (i + da, j + da, k + da, c.clone())));
    let labels = a.labels().iter().map(|l| format!("({l},0)")).chain(b.labels().iter().map(|l| format!("(0,{l})"))).collect();
    let table = StructureTable::from_entries(a.field(), da + b.dim(), entries)?;
    AlgebraPresentation::new_trusted(a.kind(), labels, table)
}

/// The opposite algebra, `a ·op b = b · a`.
pub fn opposite(a: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    let entries: Vec<_> = a.table().entries().map(|(i, j, k, c)| (j, i, k, c.clone())).collect();
    let labels = a.labels().iter().map(|l| format!("{l}^op")).collect();
    AlgebraPresentation::new_trusted(a.kind(), labels, StructureTable::from_entries(a.field(), a.dim(), entries)?)
}

/// `M_n ⊕ M_n`.
pub fn matrix_pair_algebra(n: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    let m = matrix_algebra(n, field)?;
    direct_sum(&m, &m)
}

/// A linear anti-automorphism of order two on an associative presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionMap {
    parent: AlgebraId,
    matrix: ExactMatrix,
}

impl InvolutionMap {
    /// Checks `σ² = 1` and `σ(b_i b_j) = σ(b_j) σ(b_i)` on all basis pairs.
    pub fn new(alg: &AlgebraPresentation, matrix: ExactMatrix) -> Result<Self> {
        if alg.kind() != AlgebraKind::Associative {
            return Err(Error::InvalidPresentation("involutions act on associative algebras".into()));
        }
        let d = alg.dim();
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::DimensionMismatch(format!("involution must be {d}x{d}")));
        }
        if matrix.field() != alg.field() {
            return Err(Error::FieldMismatch);
        }
        let f = alg.field();
        let cols: Vec<Vec<(usize, Scalar)>> = (0..d).map(|j| matrix.column(j).into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()).collect();
        let apply = |terms: &[(usize, Scalar)]| {
            let mut out = vector::zeros(f, d);
            for (k, c) in terms {
                for (t, x) in &cols[*k] {
                    out[*t].add_mul(c, x);
                }
            }
            out
        };
        for (i, c) in cols.iter().enumerate() {
            if apply(c) != vector::unit(f, d, i) {
                return Err(Error::InvalidPresentation(format!("involution is not of order two on b{i}")));
            }
        }
        let table = alg.table();
        for i in 0..d {
            for j in 0..d {
                let lhs = apply(table.product(i, j));
                let mut rhs = vector::zeros(f, d);
                for (a, x) in &cols[j] {
                    for (b, y) in &cols[i] {
                        let xy = x * y;
                        for (t, c) in table.product(*a, *b) {
                            rhs[*t].add_mul(&xy, c);
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::InvalidPresentation(format!("involution does not reverse the product of b{i} and b{j}")));
                }
            }
        }
        Ok(Self { parent: alg.id(), matrix })
    }

    pub fn parent(&self) -> AlgebraId {
        self.parent
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn apply(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        if a.parent() != self.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(AlgebraElement::from_parts(self.parent, self.matrix.mul_vec(a.coeffs())?))
    }
}

fn permutation_matrix(field: FieldSpec, d: usize, image: impl Fn(usize) -> usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(field, d, d);
    for j in 0..d {
        m[(image(j), j)] = field.one();
    }
    m
}

/// Transposition on [`matrix_algebra`].
pub fn transpose_involution(alg: &AlgebraPresentation, n: usize) -> Result<InvolutionMap> {
    let m = permutation_matrix(alg.field(), n * n, |x| (x % n) * n + x / n);
    InvolutionMap::new(alg, m)
}

/// `(A, B) ↦ (Bᵀ, Aᵀ)` on [`matrix_pair_algebra`].
pub fn exchange_transpose_involution(alg: &AlgebraPresentation, n: usize) -> Result<InvolutionMap> {
    let nn = n * n;
    let m = permutation_matrix(alg.field(), 2 * nn, |x| {
        let (block, y) = (x / nn, x % nn);
        let t = (y % n) * n + y / n;
        (1 - block) * nn + t
    });
    InvolutionMap::new(alg, m)
}

/// `(a, b) ↦ (b, a)` on `A ⊕ A^op` as built by [`exchange_algebra`].
pub fn exchange_involution(alg: &AlgebraPresentation) -> Result<InvolutionMap> {
    let d = alg.dim();
    if !d.is_multiple_of(2) {
        return Err(Error::DimensionMismatch("exchange needs two equal summands".into()));
    }
    let h = d / 2;
    InvolutionMap::new(alg, permutation_matrix(alg.field(), d, |x| (x + h) % d))
}

/// `A ⊕ A^op`.
pub fn exchange_algebra(a: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    direct_sum(a, &opposite(a)?)
}

/// `X ↦ G⁻¹ Xᵀ G` on [`matrix_algebra`], the adjoint for a symmetric or
/// skew Gram matrix `G`.
pub fn form_involution(alg: &AlgebraPresentation, g: &ExactMatrix) -> Result<InvolutionMap> {
    let n = g.rows();
    let f = alg.field();
    let g_inv = inverse(g)?;
    let mut cols = Vec::with_capacity(n * n);
    for x in 0..n * n {
        let e = ExactMatrix::unit(f, n, x / n, x % n);
        let img = g_inv.matmul(&e.transpose())?.matmul(g)?;
        cols.push(img.to_vec());
    }
    InvolutionMap::new(alg, ExactMatrix::from_columns(f, n * n, &cols))
}

/// `K(R, σ) = {x : σ(x) = -x}` as a Lie algebra under the commutator.
#[derive(Clone, Debug)]
pub struct SkewPart {
    presentation: AlgebraPresentation,
    source: AlgebraId,
    // basis of K inside R, in reduced echelon form
    inclusion: Echelon,
}

impl SkewPart {
    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    /// Coefficients in `R` of the `i`-th basis element of `K`.
    pub fn include_coeffs(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.presentation.field(), self.inclusion.width());
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(&mut out, c, &self.inclusion.row(i));
            }
        }
        out
    }

    pub fn include(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.presentation.check_parent(a)?;
        Ok(AlgebraElement::from_parts(self.source, self.include_coeffs(a.coeffs())))
    }

    /// The element of `K` equal to `a ∈ R`, if `a` is skew.
    pub fn restrict(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        if a.parent() != self.source {
            return Err(Error::ParentMismatch);
        }
        let c = self.inclusion.coordinates(a.coeffs()).ok_or(Error::NotInK)?;
        self.presentation.element(c)
    }

    pub fn restrict_coeffs(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.inclusion.coordinates(v)
    }

    pub fn inclusion(&self) -> &Echelon {
        &self.inclusion
    }
}

pub fn skew_part(r: &AlgebraPresentation, sigma: &InvolutionMap) -> Result<SkewPart> {
    check_char(r.field())?;
    if sigma.parent() != r.id() {
        return Err(Error::ParentMismatch);
    }
    let d = r.dim();
    let f = r.field();
    let plus = sigma.matrix().add(&ExactMatrix::identity(f, d))?;
    let mut inclusion = Echelon::new(f, d);
    for v in plus.kernel() {
        inclusion.insert(v);
    }
    let k = inclusion.rank();
    if k == 0 {
        return Err(Error::InvalidPresentation("skew part is zero".into()));
    }
    let basis = inclusion.basis();
    let sparse: Vec<Vec<(usize, Scalar)>> = basis.iter().map(|v| v.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect()).collect();
    let mut entries = Vec::new();
    let table = r.table();
    for i in 0..k {
        for j in i + 1..k {
            let mut c = vector::zeros(f, d);
            for (a, x) in &sparse[i] {
                for (b, y) in &sparse[j] {
                    let xy = x * y;
                    for (t, s) in table.product(*a, *b) {
                        c[*t].add_mul(&xy, s);
                    }
                    for (t, s) in table.product(*b, *a) {
                        c[*t].sub_mul(&xy, s);
                    }
                }
            }
            let coords = inclusion.coordinates(&c).ok_or_else(|| Error::InvariantViolation("commutator of skew elements is not skew".into()))?;
            for (t, x) in coords.into_iter().enumerate() {
                if !x.is_zero() {
                    entries.push((j, i, t, -&x));
                    entries.push((i, j, t, x));
                }
            }
        }
    }
    let labels = basis
        .iter()
        .map(|v| {
            let terms: Vec<String> = v
                .iter()
                .zip(r.labels())
                .filter(|(x, _)| !x.is_zero())
                .map(|(x, l)| {
                    if x.is_one() {
                        l.clone()
                    } else if (-x).is_one() {
                        format!("-{l}")
                    } else {
                        format!("{x}*{l}")
                    }
                })
                .collect();
            terms.join("+").replace("+-", "-")
        })
        .collect();
    let table = StructureTable::from_entries(f, k, entries)?;
    let presentation = if k <= crate::algebra::TRUSTED_ASSOCIATIVE_DIM {
        AlgebraPresentation::new(AlgebraKind::Lie, labels, table)?
    } else {
        AlgebraPresentation::new_trusted(AlgebraKind::Lie, labels, table)?
    };
    Ok(SkewPart { presentation, source: r.id(), inclusion })
}

/// Symmetric or skew bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: ExactMatrix,
    symmetric: bool,
}

impl BilinearForm {
    pub fn new(gram: ExactMatrix, symmetric: bool) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch("Gram matrix must be square".into()));
        }
        let t = gram.transpose();
        let ok = if symmetric { t == gram } else { t == gram.neg() };
        if !ok {
            return Err(Error::DegenerateForm);
        }
        Ok(Self { gram, symmetric })
    }

    pub fn symmetric(gram: ExactMatrix) -> Result<Self> {
        Self::new(gram, true)
    }

    pub fn gram(&self) -> &ExactMatrix {
        &self.gram
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    /// Orthogonal sum `self ⊥ other`.
    pub fn orthogonal_sum(&self, other: &Self) -> Result<Self> {
        if self.symmetric != other.symmetric {
            return Err(Error::DegenerateForm);
        }
        let (a, b) = (self.dim(), other.dim());
        let f = self.gram.field();
        let g = ExactMatrix::from_fn(f, a + b, a + b, |i, j| {
            if i < a && j < a {
                self.gram[(i, j)].clone()
            } else if i >= a && j >= a {
                other.gram[(i - a, j - a)].clone()
            } else {
                f.zero()
            }
        });
        Self::new(g, self.symmetric)
    }
}

/// The form on the 3-dimensional summand: `[[0, 1, 0], [1, 0, 0], [0, 0, -1]]`.
pub fn tkk_auxiliary_form(field: FieldSpec) -> BilinearForm {
    let g = ExactMatrix::from_i64(field, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
    BilinearForm::symmetric(g).expect("symmetric")
}

/// Endomorphisms of `V ⊥ W` skew relative to `h = f ⊥ g`, where `g` is
/// [`tkk_auxiliary_form`]; dimension `(m+3)(m+2)/2` for `dim V = m`.
pub fn tkk_skew(f: &BilinearForm) -> Result<MatrixLieAlgebra> {
    let field = f.gram().field();
    check_char(field)?;
    if !f.is_symmetric() || f.dim() == 0 || !f.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let h = f.orthogonal_sum(&tkk_auxiliary_form(field))?;
    let basis = form_basis(field, h.gram(), false)?;
    let labels = basis.iter().map(matrix_label).collect();
    MatrixLieAlgebra::from_basis(None, h.dim(), Some(h.gram().clone()), field, basis, labels)
}

/// Basis `x, y, z` with `[x, y] = z` central.
pub fn heisenberg(field: FieldSpec) -> Result<AlgebraPresentation> {
    let t = StructureTable::from_entries(field, 3, vec![(0, 1, 2, field.one()), (1, 0, 2, -field.one())])?;
    AlgebraPresentation::new(AlgebraKind::Lie, vec!["x".into(), "y".into(), "z".into()], t)
}

/// Symmetric `n × n` matrices under `a ∘ b = (ab + ba)/2`.
pub fn jordan_symmetric_matrices(n: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    check_char(field)?;
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut m = ExactMatrix::unit(field, n, i, j);
            m[(j, i)] = field.one();
            basis.push(m);
            labels.push(if i == j { unit_label(n, i, i) } else { format!("{}+{}", unit_label(n, i, j), unit_label(n, j, i)) });
        }
    }
    let half = field.fraction(1, 2).expect("p != 2");
    let d = basis.len();
    let mut coord = Echelon::with_pivot_limit(field, n * n + d, n * n);
    for (i, b) in basis.iter().enumerate() {
        let mut row = flatten(b);
        row.extend(vector::unit(field, d, i));
        coord.insert(row);
    }
    let mut entries = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let p = basis[i].matmul(&basis[j])?.add(&basis[j].matmul(&basis[i])?)?.scale(&half);
            let c = coordinates_in(&coord, n * n, d, &p).expect("symmetric");
            for (k, x) in c.into_iter().enumerate() {
                entries.push((i, j, k, x));
            }
        }
    }
    AlgebraPresentation::new(AlgebraKind::Jordan, labels, StructureTable::from_entries(field, d, entries)?)
}

/// The ground field as a one-dimensional algebra with `1 · 1 = 1`.
pub fn field_algebra(kind: AlgebraKind, field: FieldSpec) -> Result<AlgebraPresentation> {
    if kind == AlgebraKind::Lie {
        return Err(Error::InvalidPresentation("1 * 1 = 1 is not a Lie product".into()));
    }
    let t = StructureTable::from_entries(field, 1, vec![(0, 0, 0, field.one())])?;
    AlgebraPresentation::new(kind, vec!["1".into()], t)
}

pub fn zero_algebra(kind: AlgebraKind, dim: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    let labels = (0..dim).map(|i| format!("b{i}")).collect();
    AlgebraPresentation::new(kind, labels, StructureTable::zero(field, dim))
}

/// `F[t]/(t^k)` on the basis `1, t, …, t^{k-1}`.
pub fn truncated_polynomial(k: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    let mut entries = Vec::new();
    for i in 0..k {
        for j in 0..k - i {
            entries.push((i, j, i + j, field.one()));
        }
    }
    let labels = (0..k)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        })
        .collect();
    AlgebraPresentation::new(AlgebraKind::Associative, labels, StructureTable::from_entries(field, k, entries)?)
}

/// Upper-triangular `n × n` matrices on the units `E_ij`, `i ≤ j`, row-major.
pub fn upper_triangular(n: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    let idx: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let pos = |i: usize, j: usize| idx.iter().position(|&x| x == (i, j)).expect("upper unit");
    let mut entries = Vec::new();
    for (a, &(i, j)) in idx.iter().enumerate() {
        for (b, &(j2, k)) in idx.iter().enumerate() {
            if j == j2 {
                entries.push((a, b, pos(i, k), field.one()));
            }
        }
    }
    let labels = idx.iter().map(|&(i, j)| unit_label(n, i, j)).collect();
    AlgebraPresentation::new(AlgebraKind::Associative, labels, StructureTable::from_entries(field, idx.len(), entries)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn classical_dimensions() {
        let f = gf(11);
        assert_eq!(build_matrix_lie(Series::Gl, 3, f).unwrap().presentation().dim(), 9);
        assert_eq!(build_matrix_lie(Series::Sl, 3, f).unwrap().presentation().dim(), 8);
        assert_eq!(build_matrix_lie(Series::Sp, 4, f).unwrap().presentation().dim(), 10);
        assert_eq!(build_matrix_lie(Series::O, 5, f).unwrap().presentation().dim(), 10);
        assert_eq!(build_matrix_lie(Series::O, 4, f).unwrap().presentation().dim(), 6);
    }

    #[test]
    fn sl2_relations() {
        let l = build_matrix_lie(Series::Sl, 2, gf(11)).unwrap();
        let a = l.presentation();
        let (e, h, f) = (a.basis_element(0), a.basis_element(1), a.basis_element(2));
        assert_eq!(a.multiply(&e, &f).unwrap(), h);
        assert_eq!(a.multiply(&h, &e).unwrap(), e.scale(&gf(11).from_i64(2)));
        assert_eq!(a.multiply(&h, &f).unwrap(), f.scale(&gf(11).from_i64(-2)));
    }

    #[test]
    fn form_algebras_preserve_their_form() {
        let f = gf(11);
        for (s, n) in [(Series::Sp, 4), (Series::Sp, 6), (Series::O, 4), (Series::O, 5), (Series::O, 6)] {
            let l = build_matrix_lie(s, n, f).unwrap();
            let g = l.form().unwrap();
            for x in l.basis_matrices() {
                let lhs = x.transpose().matmul(g).unwrap();
                let rhs = g.matmul(x).unwrap().neg();
                assert_eq!(lhs, rhs, "{s} {n}");
            }
        }
    }

    #[test]
    fn characteristic_two_and_parity_rejected() {
        assert_eq!(build_matrix_lie(Series::Sl, 2, gf(2)).err(), Some(Error::BadChar(2)));
        assert!(matches!(build_matrix_lie(Series::Sp, 3, gf(11)), Err(Error::BadParity(_))));
    }

    #[test]
    fn square_zero_elements() {
        let f = gf(11);
        for (s, n) in [(Series::Sl, 2), (Series::Sl, 3), (Series::Sl, 4), (Series::Sp, 4), (Series::O, 4), (Series::O, 5)] {
            let l = build_matrix_lie(s, n, f).unwrap();
            let a = square_zero_matrix(s, n, f).unwrap();
            assert!(!a.is_zero());
            assert!(a.matmul(&a).unwrap().is_zero());
            let x = square_zero_element(&l).unwrap();
            let ad = l.presentation().ad(&x).unwrap();
            assert!(ad.pow(3).unwrap().is_zero(), "{s} {n}");
        }
        assert!(matches!(square_zero_matrix(Series::O, 3, f), Err(Error::NoSuchElement(_))));
    }

    #[test]
    fn skew_part_of_transpose() {
        let f = gf(5);
        let m3 = matrix_algebra(3, f).unwrap();
        let t = transpose_involution(&m3, 3).unwrap();
        assert_eq!(skew_part(&m3, &t).unwrap().presentation().dim(), 3);
    }

    #[test]
    fn skew_part_of_exchange_transpose() {
        let f = gf(5);
        let r = matrix_pair_algebra(3, f).unwrap();
        let s = exchange_transpose_involution(&r, 3).unwrap();
        assert_eq!(skew_part(&r, &s).unwrap().presentation().dim(), 9);
    }

    #[test]
    fn skew_part_of_exchange() {
        let f = gf(7);
        let a = upper_triangular(2, f).unwrap();
        let r = exchange_algebra(&a).unwrap();
        let s = exchange_involution(&r).unwrap();
        assert_eq!(skew_part(&r, &s).unwrap().presentation().dim(), 3);
    }

    #[test]
    fn bad_involution_rejected() {
        let f = gf(5);
        let m2 = matrix_algebra(2, f).unwrap();
        // identity is an automorphism, not an anti-automorphism, of M_2
        assert!(InvolutionMap::new(&m2, ExactMatrix::identity(f, 4)).is_err());
    }

    #[test]
    fn symplectic_adjoint_is_involution() {
        let f = gf(11);
        let m4 = matrix_algebra(4, f).unwrap();
        let g = symplectic_form(f, 4).unwrap();
        let s = form_involution(&m4, &g).unwrap();
        assert_eq!(skew_part(&m4, &s).unwrap().presentation().dim(), 10);
    }

    #[test]
    fn tkk_dimensions() {
        let f = gf(11);
        for m in 1..=4 {
            let form = BilinearForm::symmetric(ExactMatrix::identity(f, m)).unwrap();
            assert_eq!(tkk_skew(&form).unwrap().presentation().dim(), (m + 3) * (m + 2) / 2);
        }
        let degenerate = BilinearForm::symmetric(ExactMatrix::zeros(f, 2, 2)).unwrap();
        assert_eq!(tkk_skew(&degenerate).err(), Some(Error::DegenerateForm));
    }

    #[test]
    fn small_algebras_validate() {
        let f = gf(7);
        heisenberg(f).unwrap();
        assert_eq!(jordan_symmetric_matrices(2, f).unwrap().dim(), 3);
        field_algebra(AlgebraKind::Jordan, f).unwrap();
        truncated_polynomial(3, f).unwrap();
        assert_eq!(upper_triangular(3, f).unwrap().dim(), 6);
    }
}
