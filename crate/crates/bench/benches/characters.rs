use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use evsym_bench::partition;
use evsym_core::{mn_character, CacheConfig, CharacterBackend, CharacterCache, DegreeGuard, Engine};

fn bench_mn(c: &mut Criterion) {
    let mu = partition(&[4, 4, 2]);
    let lam = partition(&[2, 2, 2, 2, 2]);
    c.bench_function("mn chi cold cache deg 10", |b| {
        b.iter(|| {
            let cache = CharacterCache::new();
            mn_character(black_box(&mu), black_box(&lam), &cache).unwrap()
        });
    });
    let warm = CharacterCache::new();
    mn_character(&mu, &lam, &warm).unwrap();
    c.bench_function("mn chi warm cache deg 10", |b| {
        b.iter(|| mn_character(black_box(&mu), black_box(&lam), &warm).unwrap());
    });
}

fn bench_schur_route(c: &mut Criterion) {
    let mut group = c.benchmark_group("schur route");
    group.sample_size(10);
    group.bench_function("full column deg 10", |b| {
        b.iter(|| {
            // Fresh engine: measures system build plus one class solve.
            let engine = Engine::new(
                DegreeGuard::default(),
                CharacterBackend::Schur,
                CacheConfig::disabled(),
            )
            .without_cross_check();
            engine
                .character(
                    black_box(&partition(&[4, 4, 2])),
                    black_box(&partition(&[2, 2, 2, 2, 2])),
                )
                .unwrap()
        });
    });
    group.finish();
}

criterion_group!(benches, bench_mn, bench_schur_route);
criterion_main!(benches);
