use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hopfmin_bench::{cartan_braiding, specialized_braiding};
use hopfmin_core::datum::CartanType;
use hopfmin_core::shapovalov::{eliminate, rank_reports, symmetrizer, BlockOptions, DEFAULT_BLOCK_LIMIT};
use hopfmin_core::MultiDegree;
use std::hint::black_box;

fn blocks(c: &mut Criterion) {
    let mut group = c.benchmark_group("symmetrizer");
    for (ty, deg) in [(CartanType::A2, vec![3, 3]), (CartanType::B2, vec![3, 2]), (CartanType::G2, vec![3, 2])] {
        let b = cartan_braiding(ty);
        let deg = MultiDegree(deg);
        group.bench_with_input(BenchmarkId::new(ty.to_string(), &deg), &deg, |bench, deg| {
            bench.iter(|| black_box(symmetrizer(&b, deg, DEFAULT_BLOCK_LIMIT).unwrap()))
        });
    }
    group.finish();
}

fn ranks(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    let deg = MultiDegree(vec![3, 3]);
    let generic = symmetrizer(&cartan_braiding(CartanType::A2), &deg, DEFAULT_BLOCK_LIMIT).unwrap();
    let special = symmetrizer(&specialized_braiding(CartanType::A2, 6), &deg, DEFAULT_BLOCK_LIMIT).unwrap();
    group.bench_function("A2 (3,3) over Q(t)", |bench| bench.iter(|| black_box(eliminate(&generic))));
    group.bench_function("A2 (3,3) over Q(zeta_6)", |bench| bench.iter(|| black_box(eliminate(&special))));
    group.finish();
}

fn tables(c: &mut Criterion) {
    let b = cartan_braiding(CartanType::A2);
    let opts = BlockOptions::default();
    c.bench_function("rank_reports A2 up to 6", |bench| {
        bench.iter(|| black_box(rank_reports(&b, 6, &opts, None).unwrap()))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = blocks, ranks, tables
}
criterion_main!(benches);
