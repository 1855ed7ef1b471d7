//! Incremental reduced row echelon form.
//!
//! Rows are kept fully reduced: every pivot column is zero in every other
//! row. Reducing a vector against the basis is then one pass over the pivots.
//! Rows are stored sparsely because most spans built here (commutator spans,
//! ideal closures) consist of vectors with a handful of nonzero entries.

use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Row {
    pivot: usize,
    // sorted by column, no zero values
    entries: Vec<(usize, Scalar)>,
}

impl Row {
    fn get(&self, col: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &self.entries[i].1)
    }

    fn to_dense(&self, field: FieldSpec, width: usize) -> Vec<Scalar> {
        let mut v = vec![field.zero(); width];
        for (c, x) in &self.entries {
            v[*c] = x.clone();
        }
        v
    }
}

/// A subspace of `field^width` held in reduced row echelon form.
///
/// With a pivot limit `m < width`, pivots are only chosen among the first `m`
/// columns; the trailing columns ride along, which turns the structure into
/// a solver (augment each inserted vector with its coordinates and read off
/// linear relations from what remains after reduction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    field: FieldSpec,
    width: usize,
    pivot_limit: usize,
    // sorted by pivot
    rows: Vec<Row>,
}

impl Echelon {
    pub fn new(field: FieldSpec, width: usize) -> Self {
        Self { field, width, pivot_limit: width, rows: Vec::new() }
    }

    pub fn with_pivot_limit(field: FieldSpec, width: usize, pivot_limit: usize) -> Self {
        assert!(pivot_limit <= width);
        Self { field, width, pivot_limit, rows: Vec::new() }
    }

    pub fn from_vectors<'a>(field: FieldSpec, width: usize, vs: impl IntoIterator<Item = &'a Vec<Scalar>>) -> Self {
        let mut e = Self::new(field, width);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.pivot_limit
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.pivot).collect()
    }

    /// Dense copies of the basis rows, ordered by pivot column.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|r| r.to_dense(self.field, self.width)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.rows[i].to_dense(self.field, self.width)
    }

    /// Subtracts the span's contribution in place; the result has zeros in
    /// every pivot column.
    pub fn reduce_in_place(&self, v: &mut [Scalar]) {
        debug_assert_eq!(v.len(), self.width);
        for row in &self.rows {
            let c = v[row.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (col, x) in &row.entries {
                v[*col].sub_mul(&c, x);
            }
        }
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` relative to [`Echelon::basis`], if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.rows.iter().map(|r| v[r.pivot].clone()).collect())
    }

    /// Reduces and, if something new remains in the pivot range, adds it.
    /// Returns `true` when the span grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = v;
        self.reduce_in_place(&mut v);
        self.insert_reduced(v).is_none()
    }

    /// Inserts an already reduced vector. When nothing remains in the pivot
    /// range, returns the vector unchanged (its tail holds the relation).
    pub fn insert_reduced(&mut self, mut v: Vec<Scalar>) -> Option<Vec<Scalar>> {
        let pivot = match v[..self.pivot_limit].iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return Some(v),
        };
        let inv = v[pivot].inv().expect("nonzero pivot");
        let entries: Vec<(usize, Scalar)> = v.drain(..).enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, &x * &inv)).collect();
        let new_row = Row { pivot, entries };
        for row in &mut self.rows {
            if let Some(c) = row.get(pivot).cloned() {
                row.entries = combine(&row.entries, &c, &new_row.entries);
            }
        }
        let at = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(at, new_row);
        None
    }
}

/// `a - c * b` for sorted sparse rows.
fn combine(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -&(c * &b[j].1)));
            j += 1;
        } else {
            let mut x = a[i].1.clone();
            x.sub_mul(c, &b[j].1);
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: FieldSpec, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn rows_stay_reduced() {
        let f = FieldSpec::prime(7).unwrap();
        let mut e = Echelon::new(f, 3);
        assert!(e.insert(v(f, &[1, 2, 3])));
        assert!(e.insert(v(f, &[0, 1, 1])));
        assert!(!e.insert(v(f, &[1, 3, 4])));
        assert_eq!(e.rank(), 2);
        let b = e.basis();
        assert_eq!(b[0], v(f, &[1, 0, 1]));
        assert_eq!(b[1], v(f, &[0, 1, 1]));
        assert_eq!(e.coordinates(&v(f, &[2, 3, 5])), Some(v(f, &[2, 3])));
        assert_eq!(e.coordinates(&v(f, &[0, 0, 1])), None);
    }

    #[test]
    fn pivot_limit_exposes_relations() {
        let q = FieldSpec::rationals();
        // columns: 2 data + 3 tracking
        let mut e = Echelon::with_pivot_limit(q, 5, 2);
        assert!(e.insert(v(q, &[1, 1, 1, 0, 0])));
        assert!(e.insert(v(q, &[1, -1, 0, 1, 0])));
        let mut w = v(q, &[2, 0, 0, 0, 1]);
        e.reduce_in_place(&mut w);
        let rel = e.insert_reduced(w).expect("dependent");
        // 2*x0 = x1 + x2  =>  tail records 1*x2 - x0 - x1 = 0
        assert_eq!(&rel[2..], &v(q, &[-1, -1, 1])[..]);
    }
}
