use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use evsym_core::{build_kostka_system, power_to_monomial, DegreeGuard};

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("kostka build");
    group.sample_size(10);
    for degree in [8u32, 10, 12, 14] {
        group.bench_with_input(BenchmarkId::from_parameter(degree), &degree, |b, &d| {
            b.iter(|| build_kostka_system(black_box(d), DegreeGuard::default()).unwrap());
        });
    }
    group.finish();
}

fn bench_inverse(c: &mut Criterion) {
    let mut group = c.benchmark_group("kostka inverse");
    group.sample_size(10);
    for degree in [10u32, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(degree), &degree, |b, &d| {
            b.iter(|| {
                let system = build_kostka_system(d, DegreeGuard::default()).unwrap();
                system.inverse().len()
            });
        });
    }
    group.finish();
}

fn bench_solve(c: &mut Criterion) {
    let guard = DegreeGuard::default();
    let system = build_kostka_system(12, guard).unwrap();
    let p = power_to_monomial(&evsym_bench::partition(&[2; 6]), guard).unwrap();
    c.bench_function("triangular solve deg 12", |b| {
        b.iter(|| system.monomial_to_schur(black_box(&p)).unwrap());
    });
}

criterion_group!(benches, bench_build, bench_inverse, bench_solve);
criterion_main!(benches);
