use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use singline_core::{ch_sym_adams, ch_sym_direct, count_closed_form, count_via_pipeline, SurfaceQuery};

fn bench_count(c: &mut Criterion) {
    let q = SurfaceQuery::new(7, 3).unwrap();
    c.bench_function("count_via_pipeline(7,3)", |b| {
        b.iter(|| count_via_pipeline(black_box(&q)).unwrap())
    });
    c.bench_function("count_closed_form(7,3)", |b| {
        b.iter(|| count_closed_form(black_box(&q)).unwrap())
    });
    let big = SurfaceQuery::new(40, 20).unwrap();
    c.bench_function("count_via_pipeline(40,20)", |b| {
        b.iter(|| count_via_pipeline(black_box(&big)).unwrap())
    });
}

fn bench_sym(c: &mut Criterion) {
    c.bench_function("ch_sym_direct(60)", |b| b.iter(|| ch_sym_direct(black_box(60))));
    c.bench_function("ch_sym_adams(60)", |b| b.iter(|| ch_sym_adams(black_box(60)).unwrap()));
}

fn bench_table(c: &mut Criterion) {
    c.bench_function("table dmax=7", |b| {
        b.iter(|| {
            SurfaceQuery::grid(black_box(7))
                .map(|q| count_via_pipeline(&q).unwrap().n)
                .collect::<Vec<_>>()
        })
    });
}

criterion_group!(benches, bench_count, bench_sym, bench_table);
criterion_main!(benches);
