//! Sequential vs data-parallel throughput on the enumeration folds that
//! dominate every distribution: a full histogram over B_6 and the mixed
//! inversion statistic over S_8.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use widthk::{distribution, EnumCaps, ExecMode, Group, StatKind};

fn modes() -> Vec<(&'static str, ExecMode)> {
    vec![
        ("sequential", ExecMode::Sequential),
        #[cfg(feature = "parallel")]
        ("parallel", ExecMode::Parallel),
    ]
}

fn bench_signed_descents(c: &mut Criterion) {
    let caps = EnumCaps::default();
    let mut group = c.benchmark_group("desB_2 histogram over B_6");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                distribution(StatKind::DesBK, Group::Hyperoctahedral, 6, 2, &caps, mode).unwrap()
            })
        });
    }
    group.finish();
}

fn bench_inversions(c: &mut Criterion) {
    let caps = EnumCaps::default();
    let mut group = c.benchmark_group("invA_3 histogram over S_8");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                distribution(StatKind::InvAK, Group::Symmetric, 8, 3, &caps, mode).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_signed_descents, bench_inversions);
criterion_main!(benches);
