use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use posr_bench::{census, rings};
use posr_core::enumerate::{canonical_form, enumerate_posemirings, Mode};
use posr_core::graphs::{classify_shape, posemiring_zdgraph};
use posr_core::ringlab::ideal_semiring;

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for n in [4, 5, 6] {
        g.bench_with_input(BenchmarkId::new("fast", n), &n, |b, &n| {
            b.iter(|| enumerate_posemirings(black_box(n), Mode::Fast).unwrap())
        });
    }
    g.bench_function("naive/4", |b| {
        b.iter(|| enumerate_posemirings(black_box(4), Mode::Naive).unwrap())
    });
    g.finish();
}

fn canonical(c: &mut Criterion) {
    let members = census(6);
    c.bench_function("canonical_form/census-6", |b| {
        b.iter(|| {
            members
                .iter()
                .map(|a| canonical_form(black_box(a)).len())
                .sum::<usize>()
        })
    });
}

fn ideals(c: &mut Criterion) {
    let mut g = c.benchmark_group("ideal_semiring");
    for (name, r) in rings() {
        g.bench_function(name, |b| b.iter(|| ideal_semiring(black_box(&r)).unwrap()));
    }
    g.finish();
}

fn shapes(c: &mut Criterion) {
    let graphs: Vec<_> = census(6).iter().map(posemiring_zdgraph).collect();
    c.bench_function("classify_shape/census-6", |b| {
        b.iter(|| {
            graphs
                .iter()
                .map(|g| classify_shape(black_box(g)).clique_number)
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, enumerate, canonical, ideals, shapes);
criterion_main!(benches);
