//! Benchmarks for the pair-graph construction (sequential vs rayon) and
//! the end-to-end deciders.
//!
//! Run with `cargo bench -p observa-core`; add
//! `--no-default-features` to measure the build without rayon (the
//! parallel entry then falls back to the sequential implementation).

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use observa_core::*;

fn bench_pair_graph_builds(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_pair_graph");
    for &n in &[30usize, 60, 90] {
        let g = generators::random_colored_graph(n, 4, 0.08, 11).unwrap();
        for kind in [PairKind::Strict, PairKind::Relaxed] {
            group.bench_with_input(
                BenchmarkId::new(format!("sequential/{kind:?}"), n),
                &g,
                |b, g| b.iter(|| build_pair_graph_sequential(g, kind)),
            );
            group.bench_with_input(
                BenchmarkId::new(format!("parallel/{kind:?}"), n),
                &g,
                |b, g| b.iter(|| build_pair_graph(g, kind)),
            );
        }
    }
    group.finish();
}

fn bench_deciders(c: &mut Criterion) {
    let g = generators::random_colored_graph(60, 4, 0.08, 11).unwrap();
    c.bench_function("is_observable/random-n60-m4", |b| {
        b.iter(|| is_observable(&g).unwrap())
    });
    c.bench_function("is_partly_observable/random-n60-m4", |b| {
        b.iter(|| is_partly_observable(&g).unwrap())
    });

    let family = generators::worst_case_family(8).unwrap();
    c.bench_function("min_observation_time/worst-case-n8", |b| {
        b.iter(|| min_observation_time(&family).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let g = generators::random_colored_graph(5, 3, 0.3, 17).unwrap();
    let budget = OracleBudget::default();
    c.bench_function("oracle_is_observable/random-n5-m3", |b| {
        b.iter(|| oracle::oracle_is_observable(&g, &budget).unwrap())
    });
}

criterion_group!(
    benches,
    bench_pair_graph_builds,
    bench_deciders,
    bench_oracle
);
criterion_main!(benches);
