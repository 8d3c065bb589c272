use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use toeplitz_core::partition::{find_resolving_partition, PdOptions};
use toeplitz_core::{
    build_family, char_poly, integer_spectrum, k_domination_number, metric_dimension,
    partition_dimension, DistanceMatrix,
};

fn distances(c: &mut Criterion) {
    let mut group = c.benchmark_group("distances");
    for n in [4, 8, 16, 32] {
        let g = build_family(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(2 * n), &g, |b, g| {
            b.iter(|| DistanceMatrix::new(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_poly");
    for n in [4, 8, 10, 16] {
        let g = build_family(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(2 * n), &g, |b, g| {
            b.iter(|| integer_spectrum(&char_poly(black_box(g)).unwrap()))
        });
    }
    group.finish();
}

fn partition(c: &mut Criterion) {
    let mut group = c.benchmark_group("partition_dimension");
    group.sample_size(10);
    for n in [4, 6] {
        let g = build_family(n).unwrap();
        group.bench_with_input(BenchmarkId::new("family", 2 * n), &g, |b, g| {
            b.iter(|| partition_dimension(black_box(g)).unwrap())
        });
    }
    // refuting k = 4 on T_12 without the family-specific rules
    let g = build_family(6).unwrap();
    let opts = PdOptions { family_rules: false, ..PdOptions::default() };
    group.bench_function("refute_k4_T12", |b| {
        b.iter(|| find_resolving_partition(black_box(&g), 4, &opts).unwrap())
    });
    group.finish();
}

fn resolving_and_domination(c: &mut Criterion) {
    let mut group = c.benchmark_group("subset_solvers");
    for n in [6, 8] {
        let g = build_family(n).unwrap();
        group.bench_with_input(BenchmarkId::new("metric_dimension", 2 * n), &g, |b, g| {
            b.iter(|| metric_dimension(black_box(g)).unwrap())
        });
    }
    let g = build_family(10).unwrap();
    group.bench_function("gamma_4_T20", |b| {
        b.iter(|| k_domination_number(black_box(&g), 4).unwrap())
    });
    group.finish();
}

criterion_group!(benches, distances, spectrum, partition, resolving_and_domination);
criterion_main!(benches);
