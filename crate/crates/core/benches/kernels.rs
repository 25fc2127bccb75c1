//! Parallel-vs-sequential comparison of the data-parallel kernels.
//!
//! Each kernel runs twice: once through rayon (default path) and once with
//! the sequential fallback forced, so a single binary measures both. Run
//! with `cargo bench -p dcpoly`.

use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use std::hint::black_box;

use dcpoly::abscissa::Descriptor;
use dcpoly::dseries::{compose_inner, dmul, DirichletSeries};
use dcpoly::families::{family_from_generator, verify_family};
use dcpoly::parallel::run_sequential;
use dcpoly::polyalg::{rat, SymbolicScalar};

fn numeric_series(order: usize, phase: f64) -> DirichletSeries<Complex64> {
    DirichletSeries::from_fn(order, |n| {
        if n == 1 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new((n as f64 * phase).sin() / n as f64, 0.0)
        }
    })
}

fn bench_dmul(c: &mut Criterion) {
    let n = 1 << 14;
    let a = numeric_series(n, 0.7);
    let b = numeric_series(n, 1.3);
    let mut group = c.benchmark_group("dmul_16k");
    group.bench_function("parallel", |bench| {
        bench.iter(|| black_box(dmul(&a, &b).unwrap()))
    });
    group.bench_function("sequential", |bench| {
        bench.iter(|| run_sequential(|| black_box(dmul(&a, &b).unwrap())))
    });
    group.finish();
}

fn bench_compose_inner(c: &mut Criterion) {
    let n = 1 << 10;
    let f = numeric_series(n, 0.9);
    let g = numeric_series(n, 2.1);
    let w = Complex64::new(0.37, 0.0);
    let mut group = c.benchmark_group("compose_inner_1k");
    group.bench_function("parallel", |bench| {
        bench.iter(|| black_box(compose_inner(&f, &g, &w).unwrap()))
    });
    group.bench_function("sequential", |bench| {
        bench.iter(|| run_sequential(|| black_box(compose_inner(&f, &g, &w).unwrap())))
    });
    group.finish();
}

fn bench_verify_family(c: &mut Criterion) {
    let n = 64;
    let f = DirichletSeries::<SymbolicScalar>::from_fn(n, |m| {
        if m == 1 {
            SymbolicScalar::zero()
        } else {
            SymbolicScalar::constant(rat((m % 5) as i64 - 2, (m % 3 + 1) as i64))
        }
    });
    let fam = family_from_generator(&f).unwrap();
    let mut group = c.benchmark_group("verify_family_64");
    group.sample_size(20);
    group.bench_function("parallel", |bench| {
        bench.iter(|| black_box(verify_family(&fam)))
    });
    group.bench_function("sequential", |bench| {
        bench.iter(|| run_sequential(|| black_box(verify_family(&fam))))
    });
    group.finish();
}

fn bench_abscissa_eval(c: &mut Criterion) {
    let d = Descriptor::zeta_shift(2).with_cutoff(1_000_000);
    let mut group = c.benchmark_group("partial_sum_1m");
    group.sample_size(20);
    group.bench_function("parallel", |bench| bench.iter(|| black_box(d.f_cut(0.5))));
    group.bench_function("sequential", |bench| {
        bench.iter(|| run_sequential(|| black_box(d.f_cut(0.5))))
    });
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(30);
    targets = bench_dmul, bench_compose_inner, bench_verify_family, bench_abscissa_eval
}
criterion_main!(benches);
