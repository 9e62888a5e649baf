use criterion::{black_box, criterion_group, criterion_main, Criterion};
use lagcomb::{
    combination_zeros, eval_laguerre, laguerre_zeros, CombinationSpec, Family, ParamSet,
};

fn bench_eval(c: &mut Criterion) {
    c.bench_function("eval_laguerre n=50", |b| {
        b.iter(|| eval_laguerre(black_box(50), black_box(1.45), black_box(37.0)).unwrap())
    });
}

fn bench_laguerre_zeros(c: &mut Criterion) {
    let mut group = c.benchmark_group("laguerre_zeros");
    for n in [10u32, 25, 50] {
        group.bench_function(format!("n={n}"), |b| {
            b.iter(|| laguerre_zeros(black_box(n), black_box(1.45)).unwrap())
        });
    }
    group.finish();
}

fn bench_combination_zeros(c: &mut Criterion) {
    let spec = CombinationSpec::new(
        Family::S,
        ParamSet { n: 25, alpha: 1.45, t: 1.5, coeff: 2.33 },
    )
    .unwrap();
    c.bench_function("combination_zeros S n=25", |b| {
        b.iter(|| combination_zeros(black_box(&spec)).unwrap())
    });
}

criterion_group!(benches, bench_eval, bench_laguerre_zeros, bench_combination_zeros);
criterion_main!(benches);
