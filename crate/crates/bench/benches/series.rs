use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use wilfkit::{s_bivariate, schroeder_gf, solve_functional_equation, verify_functional_equation};

fn closed_forms(c: &mut Criterion) {
    c.bench_function("schroeder_gf_40", |b| {
        b.iter(|| schroeder_gf(black_box(40)))
    });
    c.bench_function("s_bivariate_12", |b| b.iter(|| s_bivariate(black_box(12))));
}

fn functional_equation(c: &mut Criterion) {
    let mut group = c.benchmark_group("functional_equation");
    group.sample_size(10);
    group.bench_function("verify_20", |b| {
        b.iter(|| verify_functional_equation(black_box(20)).unwrap())
    });
    group.bench_function("bootstrap_12", |b| {
        b.iter(|| solve_functional_equation(black_box(12)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, closed_forms, functional_equation);
criterion_main!(benches);
