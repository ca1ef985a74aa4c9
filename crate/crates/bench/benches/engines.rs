use criterion::{black_box, criterion_group, criterion_main, Criterion};

use linbound::element_orders::{
    construct_even_order_element, dixon_mortimer_lower_log2, order_dimension_lower_bound, sieve,
    OrderMethod,
};
use linbound::exactmath::{log2_of_natural, Natural};
use linbound::factorial_bounds::{
    counting_dimension_lower_bound, EngineKind, FactorialBoundEngine, GroupKind,
};
use linbound::oracles::{
    gl_max_even_order_exhaustive, landau_constrained_exact, PartitionConstraint,
};

fn bench_exactmath(c: &mut Criterion) {
    let mut group = c.benchmark_group("exactmath");
    let fact = Natural::factorial(10_000).unwrap();
    group.bench_function("log2_of_10000_factorial_128_bits", |b| {
        b.iter(|| log2_of_natural(black_box(&fact), 128).unwrap())
    });
    group.bench_function("factorial_65536", |b| {
        b.iter(|| Natural::factorial(black_box(65_536)).unwrap())
    });
    group.bench_function("dixon_mortimer_2_pow_128", |b| {
        let points = Natural::pow2(128);
        b.iter(|| dixon_mortimer_lower_log2(black_box(&points), 128).unwrap())
    });
    group.finish();
}

fn bench_engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("engines");
    for kind in [EngineKind::Elementary, EngineKind::Stirling] {
        group.bench_function(format!("counting_128_alt_{kind:?}"), |b| {
            let engine = FactorialBoundEngine::new(kind, 128);
            b.iter(|| counting_dimension_lower_bound(128, GroupKind::Alt, &engine).unwrap())
        });
    }
    group.bench_function("order_analytic_128", |b| {
        b.iter(|| order_dimension_lower_bound(128, OrderMethod::Analytic, 128).unwrap())
    });
    group.finish();
}

fn bench_oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracles");
    group.sample_size(10);
    group.bench_function("sieve_10_pow_6", |b| b.iter(|| sieve(black_box(1_000_000))));
    group.bench_function("construct_2_pow_20_points", |b| {
        b.iter(|| construct_even_order_element(black_box(1 << 20), 64).unwrap())
    });
    group.bench_function("landau_40_points_constrained", |b| {
        let constraint = PartitionConstraint {
            require_even_parity: true,
            require_even_order: true,
        };
        b.iter(|| landau_constrained_exact(black_box(40), constraint).unwrap())
    });
    group.bench_function("gl4_exhaustive_max_even_order", |b| {
        b.iter(|| gl_max_even_order_exhaustive(black_box(4)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_exactmath, bench_engines, bench_oracles);
criterion_main!(benches);
