//! Criterion groups for the series and table kernels. Run with
//! `cargo bench -p overcrank-bench`.

use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use overcrank::bivariate::{bgf_crank, bgf_kcrank, bgf_overline_crank};
use overcrank::enumerate::oracle_table;
use overcrank::series::{euler_function, partition_numbers, poch_inf, FactorSign};
use overcrank::verify::{check_identity, TableCache};
use overcrank::Statistic;

pub fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for order in [200, 1000] {
        g.bench_with_input(
            BenchmarkId::new("euler_pentagonal", order),
            &order,
            |b, &n| b.iter(|| euler_function(black_box(n))),
        );
        g.bench_with_input(
            BenchmarkId::new("poch_inf_generic", order),
            &order,
            |b, &n| b.iter(|| poch_inf(1, 1, FactorSign::Minus, false, black_box(n)).unwrap()),
        );
        g.bench_with_input(
            BenchmarkId::new("partition_numbers", order),
            &order,
            |b, &n| b.iter(|| partition_numbers(black_box(n))),
        );
        let p = partition_numbers(order);
        let e = euler_function(order);
        g.bench_with_input(BenchmarkId::new("mul", order), &order, |b, _| {
            b.iter(|| black_box(&p) * black_box(&e))
        });
    }
    g.finish();
}

pub fn generating_functions(c: &mut Criterion) {
    let mut g = c.benchmark_group("bivariate");
    g.sample_size(10);
    for order in [100, 300] {
        g.bench_with_input(BenchmarkId::new("crank", order), &order, |b, &n| {
            b.iter(|| bgf_crank(black_box(n)))
        });
        g.bench_with_input(BenchmarkId::new("ocrank", order), &order, |b, &n| {
            b.iter(|| bgf_overline_crank(black_box(n)))
        });
    }
    g.bench_function("kcrank_6_200", |b| {
        b.iter(|| bgf_kcrank(6, black_box(200)).unwrap())
    });
    g.finish();
}

pub fn oracles(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("crank_40", |b| {
        b.iter(|| oracle_table(Statistic::Crank, black_box(40)))
    });
    g.bench_function("ocrank_20", |b| {
        b.iter(|| oracle_table(Statistic::OverlineCrank, black_box(20)))
    });
    g.bench_function("kcrank_3_15", |b| {
        b.iter(|| oracle_table(Statistic::KCrank(3), black_box(15)))
    });
    g.finish();
}

pub fn identities(c: &mut Criterion) {
    let mut g = c.benchmark_group("identity");
    g.sample_size(10);
    g.bench_function("andrews_merca_1000", |b| {
        b.iter(|| check_identity("andrews-merca", black_box(1000), &TableCache::new()))
    });
    g.finish();
}
