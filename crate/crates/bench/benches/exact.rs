use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use lielab::constructions::{build_matrix_lie, heisenberg, square_zero_element};
use lielab::degeneracy::sandwich_set;
use lielab::jordan::build_L_x;
use lielab::subspace::{derived, ideal_generated, Subspace};
use lielab::tower::TowerLevel;
use lielab::{sampling, ExactMatrix, FieldSpec, Series};

fn rref(c: &mut Criterion) {
    for (label, field) in [("gf101", FieldSpec::prime(101).unwrap()), ("q", FieldSpec::rationals())] {
        let mut rng = sampling::rng(1);
        let data = (0..40 * 40).map(|_| sampling::scalar(field, &mut rng)).collect();
        let m = ExactMatrix::new(field, 40, 40, data).unwrap();
        c.bench_function(&format!("rref 40x40 {label}"), |b| b.iter(|| black_box(&m).rref()));
    }
}

fn ideals(c: &mut Criterion) {
    let gf = FieldSpec::prime(11).unwrap();
    let sl4 = build_matrix_lie(Series::Sl, 4, gf).unwrap();
    let l = sl4.presentation();
    let x = square_zero_element(&sl4).unwrap();
    let seed = Subspace::span(l, std::slice::from_ref(&x)).unwrap();
    c.bench_function("ideal closure sl4 gf11", |b| b.iter(|| ideal_generated(l, black_box(&seed)).unwrap()));
    c.bench_function("derived sl4 gf11", |b| b.iter(|| derived(black_box(l))));
    c.bench_function("jordan quotient sl4 gf11", |b| b.iter(|| build_L_x(l, black_box(&x)).unwrap()));
}

fn tower(c: &mut Criterion) {
    let mut group = c.benchmark_group("tower");
    group.sample_size(10);
    group.bench_function("level 1 p=3 over Q", |b| b.iter(|| TowerLevel::build(1, 3, FieldSpec::rationals(), 200).unwrap()));
    group.finish();
}

fn sandwiches(c: &mut Criterion) {
    let h = heisenberg(FieldSpec::prime(5).unwrap()).unwrap();
    let sl2 = build_matrix_lie(Series::Sl, 2, FieldSpec::prime(5).unwrap()).unwrap();
    c.bench_function("sandwich enumeration heisenberg gf5", |b| b.iter(|| sandwich_set(black_box(&h), 1_000_000).unwrap()));
    c.bench_function("sandwich enumeration sl2 gf5", |b| b.iter(|| sandwich_set(black_box(sl2.presentation()), 1_000_000).unwrap()));
}

criterion_group!(benches, rref, ideals, tower, sandwiches);
criterion_main!(benches);
