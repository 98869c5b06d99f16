use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use evsym_bench::{example_lambda, partition};
use evsym_core::{
    monomial_product, theorem_rhs, CacheConfig, CharacterBackend, DegreeGuard, Engine,
    MonomialExpansion,
};

fn bench_products(c: &mut Criterion) {
    let m22 = MonomialExpansion::monomial(partition(&[2, 2]));
    let m11 = MonomialExpansion::monomial(partition(&[1, 1]));
    c.bench_function("m22 * m11", |b| {
        b.iter(|| monomial_product(black_box(&m22), black_box(&m11)));
    });
    let guard = DegreeGuard::default();
    c.bench_function("theorem rhs (1^8)", |b| {
        b.iter(|| theorem_rhs(black_box(&partition(&[1; 8])), guard).unwrap());
    });
}

fn bench_theorem(c: &mut Criterion) {
    let mut group = c.benchmark_group("identity check");
    group.sample_size(10);
    let engine = Engine::default();
    for lam in [example_lambda(), partition(&[1; 6]), partition(&[3, 2, 1])] {
        group.bench_function(format!("verify {lam}"), |b| {
            b.iter(|| engine.verify_theorem(black_box(&lam)).unwrap());
        });
    }
    group.finish();
}

fn bench_conjecture(c: &mut Criterion) {
    let mut group = c.benchmark_group("conjecture report");
    group.sample_size(10);
    group.bench_function("lambda (2,2,1), N=2, fresh engine", |b| {
        b.iter(|| {
            let engine = Engine::new(
                DegreeGuard::default(),
                CharacterBackend::Schur,
                CacheConfig::disabled(),
            );
            engine.conjecture_report(black_box(&example_lambda()), 2).unwrap()
        });
    });
    group.finish();
}

criterion_group!(benches, bench_products, bench_theorem, bench_conjecture);
criterion_main!(benches);
