use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tropfw_bench::dense_lp;
use tropfw_core::degeneracy::find_similar_pair;
use tropfw_core::fermat_weber::instances::{segment_sample, triangle_sample};
use tropfw_core::fermat_weber::{fw_polytope_with, FwMethod};
use tropfw_core::rational::int;
use tropfw_core::treespace::{four_tree_unique_sample, fw_intersect_treespace};
use tropfw_core::*;

fn lp(c: &mut Criterion) {
    let mut g = c.benchmark_group("lp_solve");
    for d in [4, 8, 12] {
        let p = dense_lp(d);
        g.bench_with_input(BenchmarkId::from_parameter(d), &p, |b, p| b.iter(|| lp_solve(black_box(p))));
    }
    g.finish();
}

fn fermat_weber(c: &mut Criterion) {
    let b = Budgets::default();
    let triangle = triangle_sample();
    c.bench_function("fw_polytope/triangle/extended", |bn| {
        bn.iter(|| fw_polytope_with(black_box(&triangle), FwMethod::Extended, &b))
    });
    c.bench_function("fw_polytope/triangle/direct", |bn| {
        bn.iter(|| fw_polytope_with(black_box(&triangle), FwMethod::Direct, &b))
    });
    let mut g = c.benchmark_group("fw_polytope/circulant");
    for n in [4, 6, 8] {
        let s = circulant_instance(n).expect("n >= 4");
        g.bench_with_input(BenchmarkId::from_parameter(n), &s, |bn, s| bn.iter(|| fw_polytope(black_box(s))));
    }
    g.finish();
    c.bench_function("min_sum_combinatorial/segment", |bn| {
        let s = segment_sample();
        bn.iter(|| min_sum_combinatorial(black_box(&s), &b))
    });
    c.bench_function("k_ellipse/triangle/a=50", |bn| {
        let spec = EllipseSpec { foci: triangle_sample(), a: int(50) };
        bn.iter(|| k_ellipse(black_box(&spec)))
    });
}

fn degeneracy(c: &mut Criterion) {
    let b = Budgets::default();
    let s = segment_sample();
    c.bench_function("find_similar_pair/segment", |bn| bn.iter(|| find_similar_pair(black_box(&s), &b)));
}

fn treespace(c: &mut Criterion) {
    let b = Budgets::default();
    let trees = four_tree_unique_sample();
    let mut g = c.benchmark_group("treespace");
    g.sample_size(20);
    g.bench_function("fw_intersect_treespace/four_trees", |bn| {
        bn.iter(|| fw_intersect_treespace(black_box(&trees), &b))
    });
    g.finish();
}

criterion_group!(benches, lp, fermat_weber, degeneracy, treespace);
criterion_main!(benches);
