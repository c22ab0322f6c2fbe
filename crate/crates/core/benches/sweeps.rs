use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use g2color::algebra::{build_basis, structure_constants_with};
use g2color::search::{search_with, SearchOptions};
use g2color::verify::{verify_a_products_with, verify_derivation_with, verify_jacobi_basis};
use g2color::{Execution, SignFactor};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("products");
    for (name, mode) in MODES {
        group.bench_function(name, |b| b.iter(|| black_box(verify_a_products_with(mode))));
    }
    group.finish();

    let mut group = c.benchmark_group("derivation");
    for (name, mode) in MODES {
        group.bench_function(name, |b| b.iter(|| black_box(verify_derivation_with(mode))));
    }
    group.finish();

    let g2 = build_basis("g2").unwrap();
    let mut group = c.benchmark_group("table");
    for (name, mode) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                black_box(structure_constants_with(&g2, &SignFactor::zero(3), false, mode).unwrap())
            })
        });
    }
    group.finish();
}

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    group.sample_size(10);
    let c1 = build_basis("color-case1").unwrap();
    for (name, mode) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| black_box(verify_jacobi_basis(&c1, &SignFactor::case1(), mode).unwrap()))
        });
    }
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(20);
    let g2 = build_basis("g2").unwrap();
    for delta in [SignFactor::case1(), SignFactor::case3()] {
        for (name, mode) in MODES {
            let opts = SearchOptions {
                execution: mode,
                ..SearchOptions::default()
            };
            group.bench_with_input(BenchmarkId::new(name, delta.spec()), &delta, |b, d| {
                b.iter(|| black_box(search_with(d, &g2, &opts).unwrap()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sweeps, jacobi, search);
criterion_main!(benches);
