//! Finite-dimensional algebras given by sparse structure constants.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::ExactMatrix;
use crate::vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Lie,
    Associative,
    Jordan,
}

impl AlgebraKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            AlgebraKind::Lie => "lie",
            AlgebraKind::Associative => "associative",
            AlgebraKind::Jordan => "jordan",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "lie" => Ok(AlgebraKind::Lie),
            "associative" => Ok(AlgebraKind::Associative),
            "jordan" => Ok(AlgebraKind::Jordan),
            other => Err(Error::Parse(format!("unknown algebra kind {other:?}"))),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

type Terms = Vec<(usize, Scalar)>;

/// Bilinear product on `field^dim` stored as `b_i * b_j = Σ c_k b_k`, with
/// only nonzero products and nonzero coefficients kept. No axioms are
/// assumed; [`AlgebraPresentation`] adds the kind and its checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    field: FieldSpec,
    dim: usize,
    // rows[i] is sorted by j
    rows: Vec<Vec<(usize, Terms)>>,
}

impl StructureTable {
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self { field, dim, rows: vec![Vec::new(); dim] }
    }

    /// Builds a table from `(i, j, k, c)` entries; repeated `(i, j, k)`
    /// entries are summed and zero coefficients dropped.
    pub fn from_entries(field: FieldSpec, dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>) -> Result<Self> {
        let mut all: Vec<(usize, usize, usize, Scalar)> = Vec::new();
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidPresentation(format!("index ({i}, {j}, {k}) out of range for dim {dim}")));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            all.push((i, j, k, c));
        }
        all.sort_by_key(|a| (a.0, a.1, a.2));
        let mut table = Self::zero(field, dim);
        let mut idx = 0;
        while idx < all.len() {
            let (i, j) = (all[idx].0, all[idx].1);
            let mut terms: Terms = Vec::new();
            while idx < all.len() && all[idx].0 == i && all[idx].1 == j {
                let (_, _, k, ref c) = all[idx];
                match terms.last_mut() {
                    Some((lk, lc)) if *lk == k => *lc += c,
                    _ => terms.push((k, c.clone())),
                }
                idx += 1;
            }
            terms.retain(|(_, c)| !c.is_zero());
            if !terms.is_empty() {
                table.rows[i].push((j, terms));
            }
        }
        Ok(table)
    }

    /// Builds a table from a function returning dense product vectors.
    pub fn from_products(field: FieldSpec, dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Self {
        let mut table = Self::zero(field, dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                let terms: Terms = v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                if !terms.is_empty() {
                    table.rows[i].push((j, terms));
                }
            }
        }
        table
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sparse terms of `b_i * b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => &self.rows[i][pos].1,
            Err(_) => &[],
        }
    }

    pub fn product_vec(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = vector::zeros(self.field, self.dim);
        for (k, c) in self.product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// All entries in canonical `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| row.iter().flat_map(move |(j, terms)| terms.iter().map(move |(k, c)| (i, *j, *k, c))))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.iter().map(|(_, t)| t.len()).sum::<usize>()).sum()
    }

    /// Bilinear product of coefficient vectors.
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, terms) in &self.rows[i] {
                let bj = &b[*j];
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (k, s) in terms {
                    out[*k].add_mul(&c, s);
                }
            }
        }
        out
    }

    /// Matrix of `v ↦ a * v`; column `j` holds `a * b_j`.
    pub fn left_mul_matrix(&self, a: &[Scalar]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.field, self.dim, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, terms) in &self.rows[i] {
                for (k, s) in terms {
                    m[(*k, *j)].add_mul(ai, s);
                }
            }
        }
        m
    }

    /// Matrix of `v ↦ v * a`.
    pub fn right_mul_matrix(&self, a: &[Scalar]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.field, self.dim, self.dim);
        for i in 0..self.dim {
            for (j, terms) in &self.rows[i] {
                let aj = &a[*j];
                if aj.is_zero() {
                    continue;
                }
                for (k, s) in terms {
                    m[(*k, i)].add_mul(aj, s);
                }
            }
        }
        m
    }

    /// Sparse product of sparse vectors.
    fn mul_sparse(&self, a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> Terms {
        let mut acc: Terms = Vec::new();
        for (i, ai) in a {
            for (j, bj) in b {
                let terms = self.product(*i, *j);
                if terms.is_empty() {
                    continue;
                }
                let c = ai * bj;
                for (k, s) in terms {
                    acc.push((*k, &c * s));
                }
            }
        }
        normalize_terms(acc)
    }

    fn basis_terms(&self, i: usize) -> Terms {
        vec![(i, self.field.one())]
    }

    fn check_lie(&self) -> Result<()> {
        for i in 0..self.dim {
            if !self.product(i, i).is_empty() {
                return Err(Error::InvalidPresentation(format!("[b{i}, b{i}] != 0")));
            }
            for j in i + 1..self.dim {
                let ij = self.product(i, j);
                let ji: Terms = self.product(j, i).iter().map(|(k, c)| (*k, -c)).collect();
                if ij != ji.as_slice() {
                    return Err(Error::InvalidPresentation(format!("[b{i}, b{j}] != -[b{j}, b{i}]")));
                }
            }
        }
        // Jacobi is alternating once antisymmetry holds, so i < j < k suffices.
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let ij = self.product(i, j).to_vec();
                for k in j + 1..self.dim {
                    let jk = self.product(j, k).to_vec();
                    let ki = self.product(k, i).to_vec();
                    let mut acc = self.mul_sparse(&ij, &self.basis_terms(k));
                    acc.extend(self.mul_sparse(&jk, &self.basis_terms(i)));
                    acc.extend(self.mul_sparse(&ki, &self.basis_terms(j)));
                    if !normalize_terms(acc).is_empty() {
                        return Err(Error::InvalidPresentation(format!("Jacobi identity fails on (b{i}, b{j}, b{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.product(i, j);
                for k in 0..self.dim {
                    let jk = self.product(j, k);
                    if ij.is_empty() && jk.is_empty() {
                        continue;
                    }
                    let left = self.mul_sparse(ij, &self.basis_terms(k));
                    let right = self.mul_sparse(&self.basis_terms(i), jk);
                    if left != right {
                        return Err(Error::InvalidPresentation(format!("associativity fails on (b{i}, b{j}, b{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_jordan(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.product(i, j) != self.product(j, i) {
                    return Err(Error::InvalidPresentation(format!("b{i}∘b{j} != b{j}∘b{i}")));
                }
            }
        }
        let unit = |i: usize| self.basis_terms(i);
        // x^2 ∘ (y ∘ x) = (x^2 ∘ y) ∘ x on basis pairs
        for i in 0..self.dim {
            let x = unit(i);
            let x2 = self.mul_sparse(&x, &x);
            for j in 0..self.dim {
                let y = unit(j);
                let left = self.mul_sparse(&x2, &self.mul_sparse(&y, &x));
                let right = self.mul_sparse(&self.mul_sparse(&x2, &y), &x);
                if left != right {
                    return Err(Error::InvalidPresentation(format!("Jordan identity fails on (b{i}, b{j})")));
                }
            }
        }
        // The identity is cubic in x, so basis pairs alone do not certify it.
        // Away from characteristics 2 and 3 it is equivalent to its full
        // linearization, which is multilinear and is checked on all basis
        // quadruples (symmetric in a, b, c).
        let p = self.field.characteristic();
        if p == 0 || p > 3 {
            for a in 0..self.dim {
                for b in a..self.dim {
                    let ab = self.mul_sparse(&unit(a), &unit(b));
                    for c in b..self.dim {
                        let bc = self.mul_sparse(&unit(b), &unit(c));
                        let ca = self.mul_sparse(&unit(c), &unit(a));
                        for y in 0..self.dim {
                            let yv = unit(y);
                            let mut lhs = self.mul_sparse(&self.mul_sparse(&ab, &yv), &unit(c));
                            lhs.extend(self.mul_sparse(&self.mul_sparse(&bc, &yv), &unit(a)));
                            lhs.extend(self.mul_sparse(&self.mul_sparse(&ca, &yv), &unit(b)));
                            let mut rhs = self.mul_sparse(&ab, &self.mul_sparse(&yv, &unit(c)));
                            rhs.extend(self.mul_sparse(&bc, &self.mul_sparse(&yv, &unit(a))));
                            rhs.extend(self.mul_sparse(&ca, &self.mul_sparse(&yv, &unit(b))));
                            if normalize_terms(lhs) != normalize_terms(rhs) {
                                return Err(Error::InvalidPresentation(format!("linearized Jordan identity fails on (b{a}, b{b}, b{c}; b{y})")));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_axioms(&self, kind: AlgebraKind) -> Result<()> {
        match kind {
            AlgebraKind::Lie => self.check_lie(),
            AlgebraKind::Associative => self.check_associative(),
            AlgebraKind::Jordan => self.check_jordan(),
        }
    }
}

fn normalize_terms(mut t: Terms) -> Terms {
    t.sort_by_key(|(k, _)| *k);
    let mut out: Terms = Vec::with_capacity(t.len());
    for (k, c) in t {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => *lc += &c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Identity of a presentation; elements and subspaces record it so that
/// operations can reject operands from different algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraId(u64);

impl AlgebraId {
    fn fresh() -> Self {
        AlgebraId(NEXT_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// A validated finite-dimensional algebra of a given kind.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    id: AlgebraId,
    kind: AlgebraKind,
    labels: Vec<String>,
    table: StructureTable,
}

/// Associative presentations above this dimension built from trusted
/// constructors skip the cubic associativity scan.
pub const TRUSTED_ASSOCIATIVE_DIM: usize = 64;

impl AlgebraPresentation {
    /// Validates the kind's axioms on the basis and wraps the table.
    pub fn new(kind: AlgebraKind, labels: Vec<String>, table: StructureTable) -> Result<Self> {
        if labels.len() != table.dim() {
            return Err(Error::InvalidPresentation(format!("{} labels for dimension {}", labels.len(), table.dim())));
        }
        table.check_axioms(kind)?;
        Ok(Self { id: AlgebraId::fresh(), kind, labels, table })
    }

    /// For constructors whose axioms hold by construction (matrix-unit
    /// algebras and their direct sums). Small instances are still checked.
    pub(crate) fn new_trusted(kind: AlgebraKind, labels: Vec<String>, table: StructureTable) -> Result<Self> {
        if table.dim() <= TRUSTED_ASSOCIATIVE_DIM {
            return Self::new(kind, labels, table);
        }
        Ok(Self { id: AlgebraId::fresh(), kind, labels, table })
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn field(&self) -> FieldSpec {
        self.table.field()
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<AlgebraElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("{} coefficients for dimension {}", coeffs.len(), self.dim())));
        }
        if coeffs.iter().any(|c| c.field() != self.field()) {
            return Err(Error::FieldMismatch);
        }
        Ok(AlgebraElement { parent: self.id, coeffs })
    }

    pub fn element_from_i64(&self, coeffs: &[i64]) -> Result<AlgebraElement> {
        let f = self.field();
        self.element(coeffs.iter().map(|&c| f.from_i64(c)).collect())
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement { parent: self.id, coeffs: vector::zeros(self.field(), self.dim()) }
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement { parent: self.id, coeffs: vector::unit(self.field(), self.dim(), i) }
    }

    pub fn basis_by_label(&self, label: &str) -> Option<AlgebraElement> {
        self.labels.iter().position(|l| l == label).map(|i| self.basis_element(i))
    }

    pub fn basis(&self) -> Vec<AlgebraElement> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    pub fn check_parent(&self, a: &AlgebraElement) -> Result<()> {
        if a.parent != self.id {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    /// The algebra product: bracket, associative product or Jordan product
    /// according to the kind.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_parent(a)?;
        self.check_parent(b)?;
        Ok(AlgebraElement { parent: self.id, coeffs: self.table.mul(&a.coeffs, &b.coeffs) })
    }

    /// Product on raw coefficient vectors.
    pub fn mul_coeffs(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.table.mul(a, b)
    }

    /// Matrix of left multiplication; for Lie algebras this is `ad(a)`.
    pub fn left_mul(&self, a: &AlgebraElement) -> Result<ExactMatrix> {
        self.check_parent(a)?;
        Ok(self.table.left_mul_matrix(&a.coeffs))
    }

    pub fn right_mul(&self, a: &AlgebraElement) -> Result<ExactMatrix> {
        self.check_parent(a)?;
        Ok(self.table.right_mul_matrix(&a.coeffs))
    }

    /// `ad(a)`, the matrix of `v ↦ [a, v]`.
    pub fn ad(&self, a: &AlgebraElement) -> Result<ExactMatrix> {
        self.left_mul(a)
    }

    /// `ab - ba`. For Lie kind this is twice the bracket; use
    /// [`multiply`](Self::multiply) for the bracket itself.
    pub fn commutator(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        let ab = self.multiply(a, b)?;
        let ba = self.multiply(b, a)?;
        Ok(&ab - &ba)
    }

    /// Pretty form `2*e + 1*h`.
    pub fn format_element(&self, a: &AlgebraElement) -> String {
        let terms: Vec<String> =
            a.coeffs.iter().zip(&self.labels).filter(|(c, _)| !c.is_zero()).map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c}*{l}") }).collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Exact coefficient vector relative to a presentation's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    parent: AlgebraId,
    coeffs: Vec<Scalar>,
}

impl AlgebraElement {
    pub(crate) fn from_parts(parent: AlgebraId, coeffs: Vec<Scalar>) -> Self {
        Self { parent, coeffs }
    }

    pub fn parent(&self) -> AlgebraId {
        self.parent
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self { parent: self.parent, coeffs: vector::scale(c, &self.coeffs) }
    }

    pub fn to_strings(&self) -> Vec<String> {
        vector::to_strings(&self.coeffs)
    }

    fn assert_same_parent(&self, other: &Self) {
        assert_eq!(self.parent, other.parent, "elements of different algebras");
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.assert_same_parent(rhs);
        AlgebraElement { parent: self.parent, coeffs: vector::add(&self.coeffs, &rhs.coeffs) }
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.assert_same_parent(rhs);
        AlgebraElement { parent: self.parent, coeffs: vector::sub(&self.coeffs, &rhs.coeffs) }
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement { parent: self.parent, coeffs: vector::neg(&self.coeffs) }
    }
}
