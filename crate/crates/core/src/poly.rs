//! Univariate polynomials over a [`FieldSpec`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::ExactMatrix;

/// Coefficients are stored lowest degree first with no trailing zeros; the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// `t^k`
    pub fn monomial(field: FieldSpec, k: usize) -> Self {
        let mut c = vec![field.zero(); k + 1];
        c[k] = field.one();
        Self::new(field, c)
    }

    /// `t - a`
    pub fn linear(a: &Scalar) -> Self {
        let f = a.field();
        Self::new(f, vec![-a, f.one()])
    }

    /// Monic polynomial from integer coefficients, lowest degree first.
    pub fn from_i64(field: FieldSpec, cs: &[i64]) -> Self {
        Self::new(field, cs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                Self::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let cs = (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z)).collect();
        Self::new(self.field, cs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let cs = (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z)).collect();
        Self::new(self.field, cs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut cs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                cs[i + j].add_mul(a, b);
            }
        }
        Self::new(self.field, cs)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|x| c * x).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len().saturating_sub(dd);
        let mut quot = vec![self.field.zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j].sub_mul(&c, d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(self.field, quot), Self::new(self.field, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::constant(f.one()), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::constant(f.one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.inv().unwrap();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &ExactMatrix) -> Result<ExactMatrix> {
        if a.rows() != a.cols() {
            return Err(Error::DimensionMismatch("polynomial evaluated at non-square matrix".into()));
        }
        let n = a.rows();
        let mut acc = ExactMatrix::zeros(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.matmul(a)?;
            acc = acc.add(&ExactMatrix::identity(self.field, n).scale(c))?;
        }
        Ok(acc)
    }

    /// Multiplicity of `t` as a factor and the cofactor: `self = t^s * u`, `u(0) != 0`.
    pub fn split_at_zero(&self) -> (usize, Self) {
        let s = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (s, Self::new(self.field, self.coeffs[s..].to_vec()))
    }

    /// Roots in the ground field with multiplicity, sorted by residue
    /// (GF(p)) or by value (rationals).
    ///
    /// Over GF(p) roots are found by testing every residue, so this is meant
    /// for the small primes used at desk scale. Over the rationals the
    /// rational root theorem is applied to the integer-cleared polynomial.
    pub fn roots(&self) -> Result<Vec<(Scalar, usize)>> {
        if self.is_zero() {
            return Err(Error::PreconditionFailed("roots of the zero polynomial".into()));
        }
        let candidates: Vec<Scalar> = match self.field.order() {
            Some(p) => {
                if p > 1 << 20 {
                    return Err(Error::PreconditionFailed(format!("root search in GF({p}) is too large")));
                }
                self.field.elements()?.collect()
            }
            None => self.rational_root_candidates(),
        };
        let mut out = Vec::new();
        for r in candidates {
            let lin = Self::linear(&r);
            let mut q = self.clone();
            let mut m = 0;
            loop {
                let (quot, rem) = q.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                m += 1;
                q = quot;
            }
            if m > 0 {
                out.push((r, m));
            }
        }
        Ok(out)
    }

    /// True when the polynomial is a product of linear factors over the field.
    pub fn splits(&self) -> Result<bool> {
        let total: usize = self.roots()?.iter().map(|(_, m)| m).sum();
        Ok(Some(total) == self.degree())
    }

    fn rational_root_candidates(&self) -> Vec<Scalar> {
        let (_, core) = self.split_at_zero();
        let mut out = vec![self.field.zero()];
        if core.degree().unwrap_or(0) == 0 {
            return out;
        }
        // clear denominators
        let mut lcm = BigInt::from(1);
        for c in &core.coeffs {
            if let Scalar::Rational(r) = c {
                lcm = lcm.lcm(r.denom());
            }
        }
        let ints: Vec<BigInt> = core
            .coeffs
            .iter()
            .map(|c| match c {
                Scalar::Rational(r) => (r * num_rational::BigRational::from_integer(lcm.clone())).to_integer(),
                _ => unreachable!(),
            })
            .collect();
        let divisors = |n: &BigInt| -> Vec<BigInt> {
            let n = n.abs().to_u64().unwrap_or(0);
            if n == 0 || n > 1_000_000_000_000 {
                return Vec::new();
            }
            let mut ds = Vec::new();
            let mut d = 1u64;
            while d * d <= n {
                if n.is_multiple_of(d) {
                    ds.push(BigInt::from(d));
                    if d * d != n {
                        ds.push(BigInt::from(n / d));
                    }
                }
                d += 1;
            }
            ds
        };
        let ps = divisors(&ints[0]);
        let qs = divisors(ints.last().unwrap());
        let mut cands: Vec<num_rational::BigRational> = Vec::new();
        for p in &ps {
            for q in &qs {
                for sign in [1, -1] {
                    let r = num_rational::BigRational::new(p * BigInt::from(sign), q.clone());
                    if !r.is_zero() && !cands.contains(&r) {
                        cands.push(r);
                    }
                }
            }
        }
        cands.sort();
        out.extend(cands.into_iter().map(Scalar::Rational));
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if c.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let f = FieldSpec::prime(11).unwrap();
        // (t-2)(t+2) t
        let a = Polynomial::from_i64(f, &[0, -4, 0, 1]);
        let b = Polynomial::from_i64(f, &[-2, 1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, Polynomial::from_i64(f, &[0, 2, 1]));
        assert_eq!(a.gcd(&Polynomial::from_i64(f, &[0, 0, 1])), Polynomial::from_i64(f, &[0, 1]));
    }

    #[test]
    fn ext_gcd_is_bezout() {
        let q = FieldSpec::rationals();
        let a = Polynomial::from_i64(q, &[0, 0, 1]);
        let b = Polynomial::from_i64(q, &[-2, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, Polynomial::from_i64(q, &[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn roots_with_multiplicity() {
        let f = FieldSpec::prime(7).unwrap();
        // t^2 (t-3)
        let p = Polynomial::from_i64(f, &[0, 0, -3, 1]);
        let roots = p.roots().unwrap();
        assert_eq!(roots, vec![(f.from_i64(0), 2), (f.from_i64(3), 1)]);
        assert!(p.splits().unwrap());
        // t^2 + 1 is irreducible mod 7
        assert!(!Polynomial::from_i64(f, &[1, 0, 1]).splits().unwrap());
    }

    #[test]
    fn rational_roots() {
        let q = FieldSpec::rationals();
        // (2t - 1)(t + 3) = 2t^2 + 5t - 3
        let p = Polynomial::from_i64(q, &[-3, 5, 2]);
        let roots = p.roots().unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().any(|(r, _)| *r == q.parse("1/2").unwrap()));
        assert!(roots.iter().any(|(r, _)| *r == q.from_i64(-3)));
        assert!(!Polynomial::from_i64(q, &[-2, 0, 1]).splits().unwrap());
    }
}
