//! Library results against brute-force matrix computations that avoid the
//! structure-table code paths.

use lielab::constructions::build_matrix_lie;
use lielab::degeneracy::sandwich_set;
use lielab::grading::exp_ad;
use lielab::{sampling, ExactMatrix, FieldSpec, Scalar, Series};

type Mat = Vec<Vec<u64>>;

fn mat_mul(a: &Mat, b: &Mat, p: u64) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum::<u64>() % p).collect()).collect()
}

fn bracket(a: &Mat, b: &Mat, p: u64) -> Mat {
    let ab = mat_mul(a, b, p);
    let ba = mat_mul(b, a, p);
    ab.iter().zip(&ba).map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x + p - y) % p).collect()).collect()
}

fn is_zero(a: &Mat) -> bool {
    a.iter().flatten().all(|&v| v == 0)
}

/// Unit matrices off the diagonal, then `E_ii - E_(i+1)(i+1)`.
fn sl_basis(n: usize, p: u64) -> Vec<Mat> {
    let unit = |i: usize, j: usize| -> Mat { (0..n).map(|r| (0..n).map(|c| u64::from(r == i && c == j)).collect()).collect() };
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(unit(i, j));
            }
        }
    }
    for i in 0..n - 1 {
        let mut h = unit(i, i);
        h[i + 1][i + 1] = p - 1;
        out.push(h);
    }
    out
}

fn combination(basis: &[Mat], coeffs: &[u64], p: u64) -> Mat {
    let n = basis[0].len();
    let mut m = vec![vec![0; n]; n];
    for (b, &c) in basis.iter().zip(coeffs) {
        for i in 0..n {
            for j in 0..n {
                m[i][j] = (m[i][j] + c * b[i][j]) % p;
            }
        }
    }
    m
}

fn is_sandwich(x: &Mat, basis: &[Mat], p: u64) -> bool {
    basis.iter().all(|y| is_zero(&bracket(x, &bracket(x, y, p), p)))
        && basis.iter().all(|y| basis.iter().all(|z| is_zero(&bracket(x, &bracket(y, &bracket(x, z, p), p), p))))
}

fn brute_force_sandwiches(n: usize, p: u64) -> Vec<Mat> {
    let basis = sl_basis(n, p);
    let d = basis.len() as u32;
    let mut found = Vec::new();
    for idx in 1..p.pow(d) {
        let coeffs: Vec<u64> = (0..d).map(|k| idx / p.pow(k) % p).collect();
        let x = combination(&basis, &coeffs, p);
        if is_sandwich(&x, &basis, p) {
            found.push(x);
        }
    }
    found
}

fn to_plain(m: &ExactMatrix, p: u64) -> Mat {
    (0..m.rows()).map(|i| m.row(i).iter().map(|s| s.to_signed().unwrap().rem_euclid(p as i64) as u64).collect()).collect()
}

fn library_sandwiches(n: usize, p: u64) -> Vec<Mat> {
    let l = build_matrix_lie(Series::Sl, n, FieldSpec::prime(p).unwrap()).unwrap();
    let report = sandwich_set(l.presentation(), 1_000_000).unwrap();
    let mut out: Vec<Mat> = report.sandwiches.iter().map(|s| to_plain(&l.to_matrix(s).unwrap(), p)).collect();
    out.sort();
    out
}

#[test]
fn sl2_gf5_has_no_sandwiches() {
    assert!(brute_force_sandwiches(2, 5).is_empty());
    assert!(library_sandwiches(2, 5).is_empty());
}

#[test]
fn sl3_gf3_sandwiches_match_brute_force() {
    let mut expected = brute_force_sandwiches(3, 3);
    expected.sort();
    // scalar matrices are traceless in characteristic 3
    assert_eq!(expected.len(), 2);
    assert_eq!(library_sandwiches(3, 3), expected);
}

fn exact_bracket(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.matmul(b).unwrap().sub(&b.matmul(a).unwrap()).unwrap()
}

#[test]
fn exp_ad_matches_matrix_series() {
    let gf = FieldSpec::prime(11).unwrap();
    let l = build_matrix_lie(Series::Sl, 3, gf).unwrap();
    let alg = l.presentation();
    let mut rng = sampling::rng(5);
    for _ in 0..10 {
        let upper = ExactMatrix::from_fn(gf, 3, 3, |i, j| if i < j { sampling::scalar(gf, &mut rng) } else { gf.zero() });
        let x = l.from_matrix(&upper).unwrap();
        let xi = sampling::scalar(gf, &mut rng);
        let e = exp_ad(alg, &x, &xi).unwrap();
        for (k, b) in l.basis_matrices().iter().enumerate() {
            // Σ ξ^j/j! ad_x^j b, truncated where ad_x^5 = 0
            let mut term = b.clone();
            let mut total = b.clone();
            for j in 1..5u64 {
                term = exact_bracket(&upper, &term);
                let c: Scalar = &xi.pow(j) * &gf.factorial(j as usize).inv().unwrap();
                total = total.add(&term.scale(&c)).unwrap();
            }
            let image = l.to_matrix(&alg.element(e.column(k)).unwrap()).unwrap();
            assert_eq!(image, total);
        }
    }
}
