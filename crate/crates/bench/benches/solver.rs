use std::hint::black_box;

use compel_bench::random_of_order;
use compel_core::generators::{cycle, path, random_mop};
use compel_core::invariants::chromatic_number;
use compel_core::{chi_p, PropertyKind};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn chi_edge_paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("chi_edge_path");
    for n in [6, 8, 10, 12] {
        let g = path(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| chi_p(black_box(g), PropertyKind::Edge).unwrap())
        });
    }
    group.finish();
}

fn chi_connected_cycles(c: &mut Criterion) {
    let mut group = c.benchmark_group("chi_connected_cycle");
    for n in [5, 7, 9] {
        let g = cycle(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| chi_p(black_box(g), PropertyKind::Connected).unwrap())
        });
    }
    group.finish();
}

fn chi_connected_mops(c: &mut Criterion) {
    let mut group = c.benchmark_group("chi_connected_mop");
    for n in [6, 8, 10] {
        let g = random_mop(n, 1).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| chi_p(black_box(g), PropertyKind::Connected).unwrap())
        });
    }
    group.finish();
}

fn chromatic(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic_number");
    for n in [8, 11, 14] {
        let graphs = random_of_order(n, 10);
        group.bench_with_input(BenchmarkId::from_parameter(n), &graphs, |b, gs| {
            b.iter(|| {
                gs.iter()
                    .map(|g| chromatic_number(black_box(g)).unwrap())
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    chi_edge_paths,
    chi_connected_cycles,
    chi_connected_mops,
    chromatic
);
criterion_main!(benches);
