use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rrreg_bench::{counterexample, small_corpus};
use rrreg_core::{
    build_membership, eu_check, hilbert_samuel, power_sumsets, Analyzer, Cap, Limits,
};

fn bench_membership(c: &mut Criterion) {
    c.bench_function("membership/157_to_4000", |b| {
        b.iter(|| build_membership(black_box(&[0, 35, 98, 157]), 4000))
    });
    c.bench_function("membership/unit_gen_to_4000", |b| {
        b.iter(|| build_membership(black_box(&[0, 1, 3]), 4000))
    });
}

fn bench_sumsets(c: &mut Criterion) {
    let spec = counterexample();
    c.bench_function("sumsets/157_n25", |b| {
        b.iter(|| power_sumsets(black_box(&spec), 25, Limits::default()).unwrap())
    });
}

fn bench_regularity(c: &mut Criterion) {
    let spec = counterexample();
    c.bench_function("verdict/157_35_98", |b| {
        b.iter(|| Analyzer::new(black_box(&spec)).verdict(Cap::Auto).unwrap())
    });
    c.bench_function("eu_check/157_35_98", |b| {
        b.iter(|| eu_check(black_box(&spec), Cap::Auto).unwrap())
    });
    let corpus = small_corpus();
    c.bench_function("verdict/small_corpus", |b| {
        b.iter(|| {
            for spec in &corpus {
                black_box(Analyzer::new(spec).verdict(Cap::Auto).unwrap());
            }
        })
    });
}

fn bench_hilbert(c: &mut Criterion) {
    let spec = counterexample();
    c.bench_function("hilbert_samuel/157_n21", |b| {
        b.iter(|| hilbert_samuel(black_box(&spec), 21).unwrap())
    });
}

criterion_group!(
    benches,
    bench_membership,
    bench_sumsets,
    bench_regularity,
    bench_hilbert
);
criterion_main!(benches);
