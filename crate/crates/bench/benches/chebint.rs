use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use chebint_core::{
    antider_hyper, classify, exceptionality_report, gauss_2f1, quadrature_oracle,
    search_triples, HypergeomParams, Rational,
};

fn bench_classify(c: &mut Criterion) {
    let db = chebint_core::flt_binomial(7).unwrap();
    c.bench_function("classify_flt_n7", |b| {
        b.iter(|| classify(black_box(&db)))
    });
    c.bench_function("exceptionality_report_2_1000", |b| {
        b.iter(|| exceptionality_report(black_box(2), black_box(1000)))
    });
}

fn bench_hypergeom(c: &mut Criterion) {
    let params = HypergeomParams {
        p: Rational::new(-1, 3),
        q: Rational::new(1, 3),
        r: Rational::new(4, 3),
        z: 0.5_f64.powi(3),
    };
    c.bench_function("gauss_2f1_n3", |b| {
        b.iter(|| gauss_2f1(black_box(&params), 1e-14).unwrap())
    });
    c.bench_function("antider_hyper_n3_x05", |b| {
        b.iter(|| antider_hyper(3, black_box(0.5), 1e-14).unwrap())
    });
}

fn bench_quadrature(c: &mut Criterion) {
    c.bench_function("quadrature_oracle_n2_x1", |b| {
        b.iter(|| quadrature_oracle(2, black_box(1.0), 1e-12).unwrap())
    });
}

fn bench_search(c: &mut Criterion) {
    c.bench_function("search_triples_n2_z100", |b| {
        b.iter(|| search_triples(2, black_box(100)))
    });
}

criterion_group!(
    benches,
    bench_classify,
    bench_hypergeom,
    bench_quadrature,
    bench_search
);
criterion_main!(benches);
