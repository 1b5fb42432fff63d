use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rootpoly_core::bracket::{coxeter_c, coxeter_d, nc_reduce, AlgebraMode, ReduceOptions};
use rootpoly_core::subdivision::{reduced_form, CommutativeAlgebra, TreeOptions};
use rootpoly_core::{SignedGraph, Strategy};

fn noncommutative(c: &mut Criterion) {
    let mut group = c.benchmark_group("nc_reduce");
    for n in [3, 4, 5] {
        let wc = coxeter_c(n).unwrap();
        let wd = coxeter_d(n).unwrap();
        group.bench_with_input(BenchmarkId::new("C", n), &wc, |b, w| {
            b.iter(|| {
                nc_reduce(
                    black_box(w),
                    ReduceOptions::new(AlgebraMode::C, Strategy::First),
                )
                .unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("Cb", n), &wc, |b, w| {
            b.iter(|| {
                nc_reduce(
                    black_box(w),
                    ReduceOptions::new(AlgebraMode::CBeta, Strategy::Seeded(3)),
                )
                .unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("D", n), &wd, |b, w| {
            b.iter(|| {
                nc_reduce(
                    black_box(w),
                    ReduceOptions::new(AlgebraMode::D, Strategy::First),
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

fn commutative(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduced_form");
    for n in [3, 4, 5] {
        let g = SignedGraph::p_l(n);
        for (name, algebra) in [("S", CommutativeAlgebra::S), ("Bc", CommutativeAlgebra::Bc)] {
            let opts = TreeOptions {
                algebra,
                ..TreeOptions::default()
            };
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| reduced_form(black_box(g), opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, noncommutative, commutative);
criterion_main!(benches);
