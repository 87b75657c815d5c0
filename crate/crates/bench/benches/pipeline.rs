//! Benchmarks for the hot paths: the rank-4 motive assembly (cold cache),
//! type enumeration for the busiest configuration, and the SL_2(F_13)
//! brute-force point count.

use criterion::{criterion_group, criterion_main, Criterion};

use torus_motives::ffcheck::count_pairs;
use torus_motives::typeenum::enumerate_types;
use torus_motives::{EigenConfig, FfParams, MotiveEngine};

fn bench_rank4_m_irr(c: &mut Criterion) {
    c.bench_function("m_irr(4, 2, 3) cold cache", |b| {
        b.iter(|| {
            let mut engine = MotiveEngine::new();
            engine.m_irr(4, 2, 3).unwrap()
        })
    });
}

fn bench_type_enumeration(c: &mut Criterion) {
    let cfg = EigenConfig::new(vec![1, 1, 1, 1], vec![1, 1, 1, 1]).unwrap();
    c.bench_function("enumerate_types ((1,1,1,1),(1,1,1,1))", |b| {
        b.iter(|| enumerate_types(&cfg).unwrap())
    });
}

fn bench_ffcount(c: &mut Criterion) {
    let params = FfParams::new(13, 2, 3).unwrap();
    let mut group = c.benchmark_group("ffcount");
    group.sample_size(10);
    group.bench_function("count_pairs SL_2(F_13) trefoil", |b| {
        b.iter(|| count_pairs(&params))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_rank4_m_irr,
    bench_type_enumeration,
    bench_ffcount
);
criterion_main!(benches);
