//! Seeded random scalars and vectors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldSpec, Scalar};

/// Range of integers drawn for rational coordinates.
pub const RATIONAL_SPREAD: i64 = 5;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform residue over GF(p); an integer in `[-5, 5]` over the rationals.
pub fn scalar(field: FieldSpec, rng: &mut impl Rng) -> Scalar {
    match field.order() {
        Some(p) => field.from_u64(rng.random_range(0..p)),
        None => field.from_i64(rng.random_range(-RATIONAL_SPREAD..=RATIONAL_SPREAD)),
    }
}

pub fn vector(field: FieldSpec, n: usize, rng: &mut impl Rng) -> Vec<Scalar> {
    (0..n).map(|_| scalar(field, rng)).collect()
}

pub fn nonzero_scalar(field: FieldSpec, rng: &mut impl Rng) -> Scalar {
    loop {
        let s = scalar(field, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn nonzero_vector(field: FieldSpec, n: usize, rng: &mut impl Rng) -> Vec<Scalar> {
    loop {
        let v = vector(field, n, rng);
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}
