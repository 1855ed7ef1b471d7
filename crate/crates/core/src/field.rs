//! Exact scalars over GF(p) and the rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest supported prime characteristic. Products of residues are taken in
/// `u128`, primality is checked by trial division.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// The ground field: the rationals (characteristic 0) or GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::BadCharacteristic(p));
        }
        Ok(Self { characteristic: p })
    }

    /// `0` for the rationals, otherwise a prime.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            Ok(Self::RATIONALS)
        } else {
            Self::prime(characteristic)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic != 0
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then_some(self.characteristic)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            p => {
                let r = v.rem_euclid(p as i64) as u64;
                Scalar::Mod { value: r, p }
            }
        }
    }

    pub fn from_u64(&self, v: u64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            p => Scalar::Mod { value: v % p, p },
        }
    }

    /// `num / den` in this field; `None` when `den` vanishes in the field.
    pub fn fraction(&self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den);
        d.inv().map(|inv| &self.from_i64(num) * &inv)
    }

    /// Parses the decimal string forms `"3"`, `"-1"`, `"-1/2"`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad scalar {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match self.characteristic {
            0 => Ok(Scalar::Rational(BigRational::new(num, den))),
            p => {
                let pb = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u64().expect("residue fits")
                };
                let n = Scalar::Mod { value: reduce(&num), p };
                let d = Scalar::Mod { value: reduce(&den), p };
                let dinv = d.inv().ok_or_else(|| Error::Parse(format!("denominator of {s:?} vanishes mod {p}")))?;
                Ok(&n * &dinv)
            }
        }
    }

    /// `n!` in this field.
    pub fn factorial(&self, n: usize) -> Scalar {
        (1..=n as u64).fold(self.one(), |acc, k| &acc * &self.from_u64(k))
    }

    /// Enumerates all field elements in residue order. Finite fields only.
    pub fn elements(&self) -> Result<impl Iterator<Item = Scalar> + '_> {
        let p = self.order().ok_or(Error::InfiniteField)?;
        Ok((0..p).map(move |v| Scalar::Mod { value: v, p }))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "GF({p})"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A field element in canonical form: a residue in `[0, p)` or a reduced
/// fraction with positive denominator.
///
/// Arithmetic between scalars of different fields is a logic error and
/// panics; containers check field agreement up front.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u64, p: u64 },
    Rational(BigRational),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Mod { p, .. } => FieldSpec { characteristic: *p },
            Scalar::Rational(_) => FieldSpec::RATIONALS,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rational(r) => r.is_one(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Mod { value, p } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Mod { value: pow_mod(*value, p - 2, *p), p: *p })
                }
            }
            Scalar::Rational(r) => (!r.is_zero()).then(|| Scalar::Rational(r.recip())),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer representative: for GF(p) the residue in
    /// `[-(p-1)/2, (p-1)/2]`, for the rationals the value if it is an integer.
    pub fn to_signed(&self) -> Option<i64> {
        match self {
            Scalar::Mod { value, p } => {
                let v = *value as i64;
                let p = *p as i64;
                Some(if v <= (p - 1) / 2 { v } else { v - p })
            }
            Scalar::Rational(r) => r.is_integer().then(|| r.to_integer().to_i64()).flatten(),
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        match (self, other) {
            (Scalar::Mod { p: a, .. }, Scalar::Mod { p: b, .. }) if a == b => {}
            (Scalar::Rational(_), Scalar::Rational(_)) => {}
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), other.field()),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => {
                let s = a + b;
                Scalar::Mod { value: if s >= *p { s - p } else { s }, p: *p }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod { value: if a >= b { a - b } else { a + p - b }, p: *p },
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod { value: mul_mod(*a, *b, *p), p: *p },
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, p } => Scalar::Mod { value: if *value == 0 { 0 } else { p - value }, p: *p },
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                let s = *a + b;
                *a = if s >= *p { s - *p } else { s };
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => self.assert_same_field(rhs),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                *a = if *a >= *b { *a - b } else { *a + *p - b };
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            _ => self.assert_same_field(rhs),
        }
    }
}

impl Scalar {
    /// `self += a * b` without an intermediate allocation on the GF(p) path.
    #[inline]
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::Mod { value, p }, Scalar::Mod { value: x, .. }, Scalar::Mod { value: y, .. }) => {
                let prod = mul_mod(*x, *y, *p);
                let s = *value + prod;
                *value = if s >= *p { s - *p } else { s };
            }
            _ => {
                let prod = a * b;
                *self += &prod;
            }
        }
    }

    /// `self -= a * b`.
    #[inline]
    pub fn sub_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::Mod { value, p }, Scalar::Mod { value: x, .. }, Scalar::Mod { value: y, .. }) => {
                let prod = mul_mod(*x, *y, *p);
                *value = if *value >= prod { *value - prod } else { *value + *p - prod };
            }
            _ => {
                let prod = a * b;
                *self -= &prod;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_are_canonical() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.from_i64(-1), Scalar::Mod { value: 6, p: 7 });
        assert_eq!(f.parse("-1/2").unwrap(), f.from_i64(3));
        assert_eq!((&f.from_i64(3) * &f.from_i64(5)).to_string(), "1");
        assert_eq!(f.from_i64(4).inv().unwrap(), f.from_i64(2));
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn rationals_reduce() {
        let q = FieldSpec::rationals();
        let x = q.parse("6/-4").unwrap();
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(q.parse("10/5").unwrap().to_string(), "2");
        assert!(q.parse("1/0").is_err());
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(FieldSpec::new(4), Err(Error::BadCharacteristic(4)));
        assert_eq!(FieldSpec::new(1), Err(Error::BadCharacteristic(1)));
        assert!(FieldSpec::new(0).is_ok());
        assert!(FieldSpec::new(11).is_ok());
    }

    #[test]
    fn signed_representatives() {
        let f = FieldSpec::prime(11).unwrap();
        assert_eq!(f.from_i64(-2).to_signed(), Some(-2));
        assert_eq!(f.from_i64(5).to_signed(), Some(5));
        assert_eq!(f.from_i64(6).to_signed(), Some(-5));
    }

    #[test]
    fn factorial_vanishes_at_p() {
        let f = FieldSpec::prime(5).unwrap();
        assert!(!f.factorial(4).is_zero());
        assert!(f.factorial(5).is_zero());
    }

    #[test]
    fn fused_ops_match_plain_ones() {
        for field in [FieldSpec::prime(13).unwrap(), FieldSpec::rationals()] {
            let (a, b, c) = (field.from_i64(7), field.from_i64(-5), field.from_i64(9));
            let mut x = c.clone();
            x.add_mul(&a, &b);
            assert_eq!(x, &c + &(&a * &b));
            let mut y = c.clone();
            y.sub_mul(&a, &b);
            assert_eq!(y, &c - &(&a * &b));
        }
    }
}
