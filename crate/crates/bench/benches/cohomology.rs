//! Benchmarks over the worked examples: full cohomology summaries, the
//! degree-two coboundary matrix, rational row reduction, and a complete
//! lifting report. Exact arithmetic dominates all of these, so the numbers
//! track coefficient growth rather than dimension alone.

use criterion::{criterion_group, criterion_main, Criterion};
use leibniz2::fixtures::{fix_b, fix_d, psi_extension, Lcg};
use leibniz2::{adjoint_rep, aut_induce, cohomology, d2_matrix, AutPair, Hom2, Mat, MultiMap};

fn bench_cohomology(c: &mut Criterion) {
    let g = fix_b();
    let rep = adjoint_rep(&g).unwrap();
    c.bench_function("cohomology fix_b adjoint", |b| {
        b.iter(|| cohomology(&g, &rep).unwrap())
    });
}

fn bench_d2_matrix(c: &mut Criterion) {
    let g = fix_d();
    let rep = adjoint_rep(&g).unwrap();
    c.bench_function("d2 matrix fix_d adjoint", |b| {
        b.iter(|| d2_matrix(&g, &rep).unwrap())
    });
}

fn bench_rref(c: &mut Criterion) {
    // dense square matrix with structured rational entries; rank deficient
    // by one so elimination runs the full reduction path
    let n = 24;
    let mut rng = Lcg::new(97);
    let mut data = Vec::with_capacity(n * n);
    for _ in 0..n * n {
        data.push(rng.scalar(-6, 6));
    }
    let mut m = Mat::new(n, n, data).unwrap();
    for c0 in 0..n {
        let x = m.at(0, c0).clone();
        m.set(n - 1, c0, x);
    }
    c.bench_function("rref 24x24 rational", |b| b.iter(|| m.rref()));
}

fn bench_aut_induce(c: &mut Criterion) {
    let e = psi_extension();
    let two = Mat::from_rows(vec![vec![leibniz2::scalar::int(2)]]).unwrap();
    let pair = AutPair {
        beta0: two.clone(),
        beta1: two.clone(),
        alpha: Hom2 {
            f0: Mat::identity(1),
            f1: two,
            f2: MultiMap::zeros(vec![1, 1], 1),
        },
    };
    c.bench_function("aut_induce psi extension", |b| {
        b.iter(|| aut_induce(&e, &pair).unwrap())
    });
}

criterion_group!(benches, bench_cohomology, bench_d2_matrix, bench_rref, bench_aut_induce);
criterion_main!(benches);
