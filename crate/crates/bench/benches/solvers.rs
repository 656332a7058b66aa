use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use distlat::dualize;
use distlat::reductions::{self, Target};
use distlat::split::SplitContext;
use distlat::trianglefree;
use distlat::TransversalCaps;
use distlat_bench as work;

fn generic_itrans(c: &mut Criterion) {
    let mut group = c.benchmark_group("generic_itrans");
    for n in [8, 12, 16] {
        let inst = work::itrans(n, n / 2, 7);
        group.bench_with_input(BenchmarkId::from_parameter(n), &inst, |b, inst| {
            b.iter(|| dualize::itrans_enum_generic(inst, &TransversalCaps::default()).unwrap())
        });
    }
    group.finish();
}

fn split_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("split_enumeration");
    group.sample_size(10);
    for n in [50, 100, 200] {
        let inst = work::split(n / 2, n - n / 2, 11);
        let ctx = SplitContext::from_instance(&inst).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &ctx, |b, ctx| b.iter(|| ctx.enumerate().count()));
    }
    group.finish();
}

fn trianglefree_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("trianglefree_enumeration");
    for n in [10, 16, 22] {
        let inst = work::trianglefree(n, n / 3, 13);
        group.bench_with_input(BenchmarkId::from_parameter(n), &inst, |b, inst| {
            b.iter(|| trianglefree::enum_trianglefree(inst, &TransversalCaps::default()).unwrap())
        });
    }
    group.finish();
}

fn reductions(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce");
    let inst = work::itrans(40, 20, 17);
    for t in Target::ALL {
        group.bench_with_input(BenchmarkId::from_parameter(t), &inst, |b, inst| {
            b.iter(|| reductions::reduce(inst, t).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, generic_itrans, split_enumeration, trianglefree_enumeration, reductions);
criterion_main!(benches);
