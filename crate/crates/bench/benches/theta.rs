use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use graphsign::*;

const DENSE: &str = "v 4\ne 0 1\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ne 0 0\ne 2 2";

fn automorphisms(c: &mut Criterion) {
    let g = parse_graph(DENSE).unwrap();
    c.bench_function("enumerate_automorphisms/dense4", |b| b.iter(|| enumerate_automorphisms(black_box(&g))));
    let loops = parse_graph("v 2\ne 0 0\ne 0 0\ne 0 0\ne 1 1\ne 1 1\ne 1 1").unwrap();
    c.bench_function("enumerate_automorphisms/loops4608", |b| b.iter(|| count_automorphisms(black_box(&loops))));
}

fn characters(c: &mut Criterion) {
    let g = parse_graph(DENSE).unwrap();
    let o = reference_orientation(&g);
    let basis = fundamental_cycles(&g, &o, &spanning_forest(&g)).unwrap();
    let auts = enumerate_automorphisms(&g);
    c.bench_function("theta_s/all", |b| b.iter(|| auts.iter().map(|a| theta_s(&g, &o, a)).product::<Sign>()));
    c.bench_function("theta_k/all", |b| {
        b.iter(|| auts.iter().map(|a| theta_k(&g, &o, &basis, a).unwrap()).product::<Sign>())
    });
    c.bench_function("determinant_relation_check/all", |b| {
        b.iter(|| auts.iter().filter(|a| determinant_relation_check(&g, &o, &basis, a).unwrap().relation_holds).count())
    });
}

fn determinants(c: &mut Criterion) {
    let rows: Vec<Vec<i64>> = (0..6).map(|i| (0..6).map(|j| ((i * 7 + j * 3) % 5) as i64 - 2).collect()).collect();
    let m = IntMatrix::from_rows(&rows);
    c.bench_function("bareiss/6x6", |b| b.iter(|| black_box(&m).determinant().unwrap()));
}

fn sweep(c: &mut Criterion) {
    let p = SweepParams::new(4, 5, 2).unwrap().loops(true).connected_only(true);
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("connected n<=4 |E|<=5 mult<=2", |b| b.iter(|| sweep_verify(p)));
    group.finish();
}

criterion_group!(benches, automorphisms, characters, determinants, sweep);
criterion_main!(benches);
