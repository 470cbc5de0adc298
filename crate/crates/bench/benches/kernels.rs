use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use prozeta::exactalg::factor_mod_p;
use prozeta::padic::{count_in_s, LocalFieldSpec, DEFAULT_ENUM_BUDGET};
use prozeta::zeta::{dirichlet_coeffs, local_factor};
use prozeta::{DecompType, IntPoly};

fn bench_local_factor(c: &mut Criterion) {
    let mut group = c.benchmark_group("local_factor");
    for n in [3u32, 5, 8] {
        let split = DecompType::unramified(vec![1; n as usize]).unwrap();
        group.bench_with_input(BenchmarkId::new("split", n), &split, |b, d| {
            b.iter(|| local_factor(n as usize, black_box(d)).unwrap())
        });
    }
    group.finish();
}

fn bench_series(c: &mut Criterion) {
    let d = DecompType::new(vec![1, 2, 1], vec![1, 1, 2]).unwrap();
    c.bench_function("dirichlet_coeffs n=5 p=13 K=30", |b| {
        b.iter(|| dirichlet_coeffs(5, black_box(&d), 13, 30).unwrap())
    });
}

fn bench_factor(c: &mut Criterion) {
    let mut group = c.benchmark_group("factor_mod_p");
    let f = IntPoly::from_i64(&[-1, -1, 0, 0, 0, 0, 0, 0, 1]);
    for p in [3u64, 101, 1_000_003] {
        group.bench_with_input(BenchmarkId::new("x^8-x-1", p), &p, |b, &p| {
            b.iter(|| factor_mod_p(black_box(&f), p).unwrap())
        });
    }
    group.finish();
}

fn bench_cosets(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_in_s");
    group.sample_size(10);
    for (q, e, v) in [(3u64, 1u32, 3u32), (4, 2, 2), (7, 3, 3)] {
        let field = LocalFieldSpec::from_q(q, e, LocalFieldSpec::default_precision(e * v)).unwrap();
        let id = format!("q={q} e={e} v={v}");
        group.bench_function(id, |b| {
            b.iter(|| count_in_s(black_box(&field), v, DEFAULT_ENUM_BUDGET).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_local_factor,
    bench_series,
    bench_factor,
    bench_cosets
);
criterion_main!(benches);
