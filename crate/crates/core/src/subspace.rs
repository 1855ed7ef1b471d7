//! Subspaces of an algebra and the closure operations built on them.

use crate::algebra::{AlgebraElement, AlgebraId, AlgebraKind, AlgebraPresentation, StructureTable};
use crate::echelon::Echelon;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::ExactMatrix;
use crate::vector;

/// A subspace held in reduced row echelon form, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    parent: AlgebraId,
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(alg: &AlgebraPresentation) -> Self {
        Self { parent: alg.id(), echelon: Echelon::new(alg.field(), alg.dim()) }
    }

    pub fn whole(alg: &AlgebraPresentation) -> Self {
        let mut s = Self::zero(alg);
        for i in 0..alg.dim() {
            s.echelon.insert(vector::unit(alg.field(), alg.dim(), i));
        }
        s
    }

    pub fn span(alg: &AlgebraPresentation, elems: &[AlgebraElement]) -> Result<Self> {
        let mut s = Self::zero(alg);
        for e in elems {
            alg.check_parent(e)?;
            s.echelon.insert(e.coeffs().to_vec());
        }
        Ok(s)
    }

    /// Span of raw coefficient vectors of `alg`.
    pub fn span_coeffs(alg: &AlgebraPresentation, vs: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut s = Self::zero(alg);
        for v in vs {
            s.echelon.insert(v);
        }
        s
    }

    pub(crate) fn from_echelon(parent: AlgebraId, echelon: Echelon) -> Self {
        Self { parent, echelon }
    }

    pub fn parent(&self) -> AlgebraId {
        self.parent
    }

    pub fn field(&self) -> FieldSpec {
        self.echelon.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.width()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.echelon.pivots()
    }

    pub fn basis_coeffs(&self) -> Vec<Vec<Scalar>> {
        self.echelon.basis()
    }

    pub fn basis(&self) -> Vec<AlgebraElement> {
        self.echelon.basis().into_iter().map(|v| AlgebraElement::from_parts(self.parent, v)).collect()
    }

    pub fn contains(&self, a: &AlgebraElement) -> bool {
        a.parent() == self.parent && self.echelon.contains(a.coeffs())
    }

    pub fn contains_coeffs(&self, v: &[Scalar]) -> bool {
        self.echelon.contains(v)
    }

    /// Inserts a vector; `true` when the subspace grew.
    pub fn insert(&mut self, a: &AlgebraElement) -> Result<bool> {
        if a.parent() != self.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(self.echelon.insert(a.coeffs().to_vec()))
    }

    pub fn insert_coeffs(&mut self, v: Vec<Scalar>) -> bool {
        self.echelon.insert(v)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.parent == other.parent && self.echelon.basis().iter().all(|v| other.echelon.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_parent(other)?;
        let mut s = self.clone();
        for v in other.echelon.basis() {
            s.echelon.insert(v);
        }
        Ok(s)
    }

    /// Intersection via the kernel of `[U | -W]`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_parent(other)?;
        let f = self.field();
        let u = self.echelon.basis();
        let w = other.echelon.basis();
        let n = self.ambient_dim();
        let mut out = Echelon::new(f, n);
        if u.is_empty() || w.is_empty() {
            return Ok(Self::from_echelon(self.parent, out));
        }
        let mut cols: Vec<Vec<Scalar>> = u.clone();
        cols.extend(w.iter().map(|v| vector::neg(v)));
        let m = ExactMatrix::from_columns(f, n, &cols);
        for k in m.kernel() {
            let mut x = vector::zeros(f, n);
            for (i, ui) in u.iter().enumerate() {
                vector::axpy(&mut x, &k[i], ui);
            }
            out.insert(x);
        }
        Ok(Self::from_echelon(self.parent, out))
    }

    /// Coordinates relative to [`Subspace::basis`].
    pub fn coordinates(&self, a: &AlgebraElement) -> Option<Vec<Scalar>> {
        if a.parent() != self.parent {
            return None;
        }
        self.echelon.coordinates(a.coeffs())
    }

    fn same_parent(&self, other: &Self) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }
}

/// Least subalgebra containing `gens`, grown pair by pair to a fixed point.
pub fn subalgebra_closure(alg: &AlgebraPresentation, gens: &[AlgebraElement]) -> Result<Subspace> {
    if gens.is_empty() {
        return Err(Error::PreconditionFailed("empty generator list".into()));
    }
    for g in gens {
        alg.check_parent(g)?;
    }
    let table = alg.table();
    let both_sides = alg.kind() == AlgebraKind::Associative;
    let mut ech = Echelon::new(alg.field(), alg.dim());
    let mut members: Vec<Vec<Scalar>> = Vec::new();
    let mut queue: Vec<Vec<Scalar>> = Vec::new();
    for g in gens {
        if ech.insert(g.coeffs().to_vec()) {
            queue.push(g.coeffs().to_vec());
        }
    }
    while let Some(v) = queue.pop() {
        if ech.is_full() {
            break;
        }
        members.push(v.clone());
        for u in &members {
            let mut products = vec![table.mul(u, &v)];
            if both_sides {
                products.push(table.mul(&v, u));
            }
            for w in products {
                if ech.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
    }
    Ok(Subspace::from_echelon(alg.id(), ech))
}

/// Least ideal containing `s` (two-sided for associative algebras).
pub fn ideal_generated(alg: &AlgebraPresentation, s: &Subspace) -> Result<Subspace> {
    if s.parent() != alg.id() {
        return Err(Error::ParentMismatch);
    }
    let ech = ideal_closure(alg.table(), alg.kind(), s.echelon().clone(), s.basis_coeffs());
    Ok(Subspace::from_echelon(alg.id(), ech))
}

pub(crate) fn ideal_closure(table: &StructureTable, kind: AlgebraKind, mut ech: Echelon, seeds: Vec<Vec<Scalar>>) -> Echelon {
    let both_sides = kind == AlgebraKind::Associative;
    let mut queue = seeds;
    let dim = table.dim();
    let field = table.field();
    while let Some(v) = queue.pop() {
        if ech.is_full() {
            break;
        }
        for b in 0..dim {
            let e = vector::unit(field, dim, b);
            let mut products = vec![table.mul(&e, &v)];
            if both_sides {
                products.push(table.mul(&v, &e));
            }
            for w in products {
                if ech.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
    }
    ech
}

/// True when every basis product with a member stays inside `s`.
pub fn is_ideal(alg: &AlgebraPresentation, s: &Subspace) -> bool {
    is_ideal_of_table(alg.table(), s.echelon())
}

pub(crate) fn is_ideal_of_table(table: &StructureTable, ech: &Echelon) -> bool {
    let dim = table.dim();
    let field = table.field();
    for v in ech.basis() {
        for b in 0..dim {
            let e = vector::unit(field, dim, b);
            if !ech.contains(&table.mul(&e, &v)) || !ech.contains(&table.mul(&v, &e)) {
                return false;
            }
        }
    }
    true
}

/// `A / I` on the coordinates not used as pivots of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    presentation: AlgebraPresentation,
    source: AlgebraId,
    ideal: Echelon,
    complement: Vec<usize>,
}

impl Quotient {
    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn into_presentation(self) -> AlgebraPresentation {
        self.presentation
    }

    /// Source coordinates spanning a complement of the ideal.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn project(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        if a.parent() != self.source {
            return Err(Error::ParentMismatch);
        }
        self.presentation.element(self.project_coeffs(a.coeffs()))
    }

    pub fn project_coeffs(&self, v: &[Scalar]) -> Vec<Scalar> {
        project_onto(&self.ideal, &self.complement, v)
    }

    /// A preimage supported on the complement coordinates.
    pub fn lift(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.presentation.check_parent(a)?;
        Ok(AlgebraElement::from_parts(self.source, self.lift_coeffs(a.coeffs())))
    }

    pub fn lift_coeffs(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.presentation.field(), self.ideal.width());
        for (c, &k) in v.iter().zip(&self.complement) {
            out[k] = c.clone();
        }
        out
    }
}

pub(crate) fn complement_of(ech: &Echelon) -> Vec<usize> {
    let pivots = ech.pivots();
    (0..ech.width()).filter(|c| pivots.binary_search(c).is_err()).collect()
}

pub(crate) fn project_onto(ideal: &Echelon, complement: &[usize], v: &[Scalar]) -> Vec<Scalar> {
    let r = ideal.reduce(v);
    complement.iter().map(|&k| r[k].clone()).collect()
}

/// Structure table induced on `complement` by `table` modulo `ideal`.
pub(crate) fn quotient_table(table: &StructureTable, ideal: &Echelon, complement: &[usize]) -> StructureTable {
    let field = table.field();
    let n = complement.len();
    StructureTable::from_products(field, n, |a, b| {
        let v = table.product_vec(complement[a], complement[b]);
        project_onto(ideal, complement, &v)
    })
}

pub fn quotient(alg: &AlgebraPresentation, ideal: &Subspace) -> Result<Quotient> {
    if ideal.parent() != alg.id() {
        return Err(Error::ParentMismatch);
    }
    if !is_ideal(alg, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let complement = complement_of(ideal.echelon());
    let table = quotient_table(alg.table(), ideal.echelon(), &complement);
    let labels = complement.iter().map(|&k| format!("[{}]", alg.labels()[k])).collect();
    let presentation = AlgebraPresentation::new_trusted(alg.kind(), labels, table)?;
    let q = Quotient { presentation, source: alg.id(), ideal: ideal.echelon().clone(), complement };
    check_projection_homomorphism(alg, &q)?;
    Ok(q)
}

fn check_projection_homomorphism(alg: &AlgebraPresentation, q: &Quotient) -> Result<()> {
    let d = alg.dim();
    let f = alg.field();
    let images: Vec<Vec<Scalar>> = (0..d).map(|i| q.project_coeffs(&vector::unit(f, d, i))).collect();
    for i in 0..d {
        for j in 0..d {
            let lhs = q.project_coeffs(&alg.table().product_vec(i, j));
            let rhs = q.presentation.mul_coeffs(&images[i], &images[j]);
            if lhs != rhs {
                return Err(Error::InvariantViolation(format!("projection fails to be multiplicative on (b{i}, b{j})")));
            }
        }
    }
    Ok(())
}

/// Elements commuting with everything: `zb = bz` for Lie and associative
/// kinds, and `[L_z, L_b] = 0` for Jordan kind.
pub fn center(alg: &AlgebraPresentation) -> Subspace {
    let d = alg.dim();
    let f = alg.field();
    let table = alg.table();
    let rows = match alg.kind() {
        AlgebraKind::Lie | AlgebraKind::Associative => {
            // column i holds the stacked (b_i b - b b_i) over all basis b
            let cols: Vec<Vec<Scalar>> = (0..d)
                .map(|i| {
                    let mut col = Vec::with_capacity(d * d);
                    for b in 0..d {
                        col.extend(vector::sub(&table.product_vec(i, b), &table.product_vec(b, i)));
                    }
                    col
                })
                .collect();
            ExactMatrix::from_columns(f, d * d, &cols)
        }
        AlgebraKind::Jordan => {
            let lmul: Vec<ExactMatrix> = (0..d).map(|i| table.left_mul_matrix(&vector::unit(f, d, i))).collect();
            let cols: Vec<Vec<Scalar>> = (0..d)
                .map(|i| {
                    let mut col = Vec::with_capacity(d * d * d);
                    for lb in &lmul {
                        let c = lmul[i].matmul(lb).and_then(|x| x.sub(&lb.matmul(&lmul[i])?)).expect("square");
                        col.extend(c.to_vec());
                    }
                    col
                })
                .collect();
            ExactMatrix::from_columns(f, d * d * d, &cols)
        }
    };
    Subspace::span_coeffs(alg, rows.kernel())
}

/// Span of all products of basis elements.
pub fn derived(alg: &AlgebraPresentation) -> Subspace {
    let d = alg.dim();
    let mut ech = Echelon::new(alg.field(), d);
    'outer: for i in 0..d {
        for j in 0..d {
            if ech.is_full() {
                break 'outer;
            }
            let terms = alg.table().product(i, j);
            if !terms.is_empty() {
                ech.insert(alg.table().product_vec(i, j));
            }
        }
    }
    Subspace::from_echelon(alg.id(), ech)
}

/// Radical of an associative algebra as the kernel of `(x, y) ↦ tr L_{xy}`,
/// valid in characteristic 0 or above the dimension. The quotient by the
/// result is checked to have zero radical, and any remainder is pulled back.
pub fn nil_radical_traceform(alg: &AlgebraPresentation) -> Result<Subspace> {
    if alg.kind() != AlgebraKind::Associative {
        return Err(Error::PreconditionFailed("radical requires an associative algebra".into()));
    }
    let p = alg.field().characteristic();
    let d = alg.dim() as u64;
    if p != 0 && p <= d {
        return Err(Error::CharTooSmall { characteristic: p, needed: d + 1 });
    }
    let mut radical = trace_form_kernel(alg.table());
    loop {
        if radical.rank() == alg.dim() {
            break;
        }
        let complement = complement_of(&radical);
        let qt = quotient_table(alg.table(), &radical, &complement);
        let extra = trace_form_kernel(&qt);
        if extra.rank() == 0 {
            break;
        }
        let width = alg.dim();
        for v in extra.basis() {
            let mut lifted = vector::zeros(alg.field(), width);
            for (c, &k) in v.iter().zip(&complement) {
                lifted[k] = c.clone();
            }
            radical.insert(lifted);
        }
    }
    Ok(Subspace::from_echelon(alg.id(), radical))
}

fn trace_form_kernel(table: &StructureTable) -> Echelon {
    let d = table.dim();
    let f = table.field();
    let traces: Vec<Scalar> = (0..d)
        .map(|k| {
            let mut t = f.zero();
            for m in 0..d {
                for (c, s) in table.product(k, m) {
                    if *c == m {
                        t += s;
                    }
                }
            }
            t
        })
        .collect();
    let gram = ExactMatrix::from_fn(f, d, d, |i, j| {
        let mut acc = f.zero();
        for (k, c) in table.product(i, j) {
            acc.add_mul(c, &traces[*k]);
        }
        acc
    });
    let mut ech = Echelon::new(f, d);
    for v in gram.transpose().kernel() {
        ech.insert(v);
    }
    ech
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureTable;

    fn matrix_units(f: FieldSpec, n: usize) -> AlgebraPresentation {
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    entries.push((i * n + j, j * n + k, i * n + k, f.one()));
                }
            }
        }
        let labels = (0..n * n).map(|x| format!("E{}{}", x / n + 1, x % n + 1)).collect();
        AlgebraPresentation::new(AlgebraKind::Associative, labels, StructureTable::from_entries(f, n * n, entries).unwrap()).unwrap()
    }

    #[test]
    fn closure_of_two_upper_units_in_m3() {
        let f = FieldSpec::prime(11).unwrap();
        let m3 = matrix_units(f, 3);
        let s = subalgebra_closure(&m3, &[m3.basis_element(1), m3.basis_element(5)]).unwrap();
        // E12, E23, E13
        assert_eq!(s.dim(), 3);
    }

    #[test]
    fn center_of_m3_is_scalars() {
        let f = FieldSpec::prime(5).unwrap();
        let m3 = matrix_units(f, 3);
        let z = center(&m3);
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&m3.element_from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1]).unwrap()));
    }

    #[test]
    fn radical_of_semisimple_is_zero() {
        let f = FieldSpec::prime(7).unwrap();
        assert!(nil_radical_traceform(&matrix_units(f, 2)).unwrap().is_zero());
    }

    #[test]
    fn radical_rejects_small_characteristic() {
        let f = FieldSpec::prime(3).unwrap();
        assert!(matches!(nil_radical_traceform(&matrix_units(f, 2)), Err(Error::CharTooSmall { .. })));
    }

    #[test]
    fn quotient_by_non_ideal_fails() {
        let f = FieldSpec::prime(7).unwrap();
        let m2 = matrix_units(f, 2);
        let s = Subspace::span(&m2, &[m2.basis_element(0)]).unwrap();
        assert_eq!(quotient(&m2, &s).err(), Some(Error::NotAnIdeal));
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let f = FieldSpec::rationals();
        let m2 = matrix_units(f, 2);
        let a = Subspace::span(&m2, &[m2.basis_element(0), m2.basis_element(1)]).unwrap();
        let b = Subspace::span(&m2, &[m2.basis_element(1), m2.basis_element(3)]).unwrap();
        let c = a.intersection(&b).unwrap();
        assert_eq!(c, Subspace::span(&m2, &[m2.basis_element(1)]).unwrap());
    }
}
