use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qcatalan::paths::{gen_dyck, peak_to_tunnel};
use qcatalan::permstats::gen_av321;
use qcatalan::polyomino::gen_sp;
use qcatalan::OracleBounds;

fn bench_generators(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate");
    for n in [8usize, 10, 12] {
        group.bench_with_input(BenchmarkId::new("avoiders", n), &n, |b, &n| {
            b.iter(|| gen_av321(black_box(n)).count())
        });
    }
    for n in [8usize, 10] {
        group.bench_with_input(BenchmarkId::new("dyck", n), &n, |b, &n| {
            b.iter(|| gen_dyck(black_box(n)).count())
        });
    }
    let bounds = OracleBounds::default();
    for n in [6usize, 8] {
        group.bench_with_input(BenchmarkId::new("shortened-polyominoes", n), &n, |b, &n| {
            b.iter(|| gen_sp(black_box(n), &bounds).unwrap().len())
        });
    }
    group.finish();
}

fn bench_transfer_map(c: &mut Criterion) {
    let paths: Vec<_> = gen_dyck(9).collect();
    c.bench_function("peak_to_tunnel/D9", |b| {
        b.iter(|| {
            paths
                .iter()
                .map(|p| peak_to_tunnel(black_box(p)).sum_tunnels())
                .sum::<usize>()
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_generators, bench_transfer_map
}
criterion_main!(benches);
