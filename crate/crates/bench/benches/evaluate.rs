use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hurwitz_asym::{eval_dn, eval_zeta1_asym, zeta1_reference, CoeffTable, EMConfig, SPoint};
use hurwitz_asym_bench::{large_t_case, X};
use num_complex::Complex64;
use std::hint::black_box;

fn asymptotic(c: &mut Criterion) {
    let table = CoeffTable::build(3);
    let mut group = c.benchmark_group("eval_zeta1_asym");
    for t in [1e4, 1e5, 1e6] {
        let (s, p) = large_t_case(t, 2);
        group.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, _| {
            b.iter(|| eval_zeta1_asym(black_box(s), black_box(&p), &table).unwrap())
        });
    }
    group.finish();
}

fn reference(c: &mut Criterion) {
    let mut group = c.benchmark_group("zeta1_reference");
    group.sample_size(10);
    for t in [1e4, 1e5, 1e6] {
        let s = SPoint::new(0.5, t).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, _| {
            b.iter(|| zeta1_reference(X, black_box(s), &EMConfig::default()).unwrap())
        });
    }
    group.finish();
}

fn coefficients(c: &mut Criterion) {
    c.bench_function("coeff_table_build_12", |b| {
        b.iter(|| CoeffTable::build(black_box(12)))
    });
    let table = CoeffTable::build(6);
    let s = SPoint::new(0.5, 1e5).unwrap();
    let z = Complex64::new(0.0, -2500.0);
    c.bench_function("eval_dn_6", |b| {
        b.iter(|| eval_dn(&table, 6, black_box(z), black_box(41.3), s).unwrap())
    });
}

criterion_group!(benches, asymptotic, reference, coefficients);
criterion_main!(benches);
