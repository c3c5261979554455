use criterion::{criterion_group, criterion_main};

criterion_group!(
    benches,
    overcrank_bench::series,
    overcrank_bench::generating_functions,
    overcrank_bench::oracles,
    overcrank_bench::identities
);
criterion_main!(benches);
