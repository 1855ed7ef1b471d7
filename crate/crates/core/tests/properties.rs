use num_rational::BigRational;
use proptest::prelude::*;

use lielab::constructions::build_matrix_lie;
use lielab::grading::{exp_ad, is_automorphism};
use lielab::io::{from_json, to_json};
use lielab::poly::Polynomial;
use lielab::subspace::Subspace;
use lielab::{ExactMatrix, FieldSpec, Scalar, Series};

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn scalars(field: FieldSpec, vs: &[i64]) -> Vec<Scalar> {
    vs.iter().map(|&v| field.from_i64(v)).collect()
}

fn matrix(field: FieldSpec, n: usize, vs: &[i64]) -> ExactMatrix {
    ExactMatrix::new(field, n, n, scalars(field, &vs[..n * n])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prime_field_matches_integer_arithmetic(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
        let f = gf(101);
        let (x, y, z) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(&(&x + &y) * &z, f.from_i64((a + b) * c));
        prop_assert_eq!(&x - &y, f.from_i64(a - b));
        if let Some(inv) = x.inv() {
            prop_assert!((&inv * &x).is_one());
        } else {
            prop_assert_eq!(a.rem_euclid(101), 0);
        }
    }

    #[test]
    fn rationals_match_bigrational(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let q = FieldSpec::rationals();
        let (x, y) = (q.fraction(a, b).unwrap(), q.fraction(c, d).unwrap());
        let oracle = BigRational::new(a.into(), b.into()) * BigRational::new(c.into(), d.into())
            + BigRational::new(a.into(), b.into());
        prop_assert_eq!((&(&x * &y) + &x).to_string(), oracle.to_string());
    }

    #[test]
    fn polynomial_division(a in prop::collection::vec(-20i64..20, 1..8), b in prop::collection::vec(-20i64..20, 1..5)) {
        let f = gf(13);
        let pa = Polynomial::from_i64(f, &a);
        let pb = Polynomial::from_i64(f, &b);
        prop_assume!(!pb.is_zero());
        let (q, r) = pa.div_rem(&pb);
        prop_assert_eq!(q.mul(&pb).add(&r), pa);
        prop_assert!(r.is_zero() || r.degree() < pb.degree());
    }

    #[test]
    fn rank_nullity(vs in prop::collection::vec(-3i64..4, 20)) {
        let f = gf(7);
        let m = ExactMatrix::new(f, 4, 5, scalars(f, &vs)).unwrap();
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), 5);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in prop::collection::vec(-5i64..6, 9), b in prop::collection::vec(-5i64..6, 9)) {
        let q = FieldSpec::rationals();
        let (ma, mb) = (matrix(q, 3, &a), matrix(q, 3, &b));
        let lhs = ma.matmul(&mb).unwrap().determinant().unwrap();
        prop_assert_eq!(lhs, &ma.determinant().unwrap() * &mb.determinant().unwrap());
    }

    #[test]
    fn subspace_dimension_formula(u in prop::collection::vec(-2i64..3, 24), v in prop::collection::vec(-2i64..3, 16)) {
        let f = gf(5);
        let l = build_matrix_lie(Series::Sl, 3, f).unwrap();
        let a = l.presentation();
        let su = Subspace::span_coeffs(a, u.chunks(8).map(|c| scalars(f, c)));
        let sv = Subspace::span_coeffs(a, v.chunks(8).map(|c| scalars(f, c)));
        let sum = su.sum(&sv).unwrap();
        let meet = su.intersection(&sv).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), su.dim() + sv.dim());
        prop_assert!(meet.is_subspace_of(&su) && meet.is_subspace_of(&sv));
    }

    #[test]
    fn exp_ad_is_an_automorphism_with_inverse(c in prop::collection::vec(-10i64..11, 3), xi in -10i64..11) {
        let f = gf(11);
        let l = build_matrix_lie(Series::Sl, 3, f).unwrap();
        let a = l.presentation();
        let mut upper = ExactMatrix::zeros(f, 3, 3);
        for (k, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
            upper = upper.add(&ExactMatrix::unit(f, 3, i, j).scale(&f.from_i64(c[k]))).unwrap();
        }
        let x = l.from_matrix(&upper).unwrap();
        let fwd = exp_ad(a, &x, &f.from_i64(xi)).unwrap();
        let back = exp_ad(a, &x, &f.from_i64(-xi)).unwrap();
        prop_assert!(is_automorphism(a, &fwd).unwrap());
        prop_assert_eq!(fwd.matmul(&back).unwrap(), ExactMatrix::identity(f, 8));
    }

    #[test]
    fn json_round_trip(series in prop_oneof![Just(Series::Sl), Just(Series::Sp), Just(Series::O)], p in prop_oneof![Just(5u64), Just(7), Just(11)]) {
        let n = if series == Series::O { 3 } else { 2 };
        let l = build_matrix_lie(series, n, gf(p)).unwrap();
        let text = to_json(l.presentation(), None);
        let back = from_json(&text).unwrap();
        prop_assert_eq!(back.algebra.table(), l.presentation().table());
        prop_assert_eq!(back.algebra.labels(), l.presentation().labels());
        prop_assert_eq!(to_json(&back.algebra, None), text);
    }
}
