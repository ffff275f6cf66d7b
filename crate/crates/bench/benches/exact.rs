use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use localdkw::{invert_radius, left_exceedance, RadiusQuery, TailSide, UnitInterval};
use localdkw_bench::LOW_FAMILY;

fn exceedance(c: &mut Criterion) {
    let mut group = c.benchmark_group("left_exceedance");
    for n in [10usize, 100, 1000] {
        for (lo, hi) in [(0.0, 1.0), (0.2, 0.6), (0.5, 1.0)] {
            let iv = UnitInterval::new(lo, hi).unwrap();
            group.bench_with_input(BenchmarkId::new(format!("[{lo},{hi}]"), n), &n, |b, &n| {
                b.iter(|| left_exceedance(black_box(n), black_box(0.05), iv).unwrap())
            });
        }
    }
    group.finish();
}

fn inversion(c: &mut Criterion) {
    let mut group = c.benchmark_group("invert_radius");
    group.sample_size(20);
    for (lo, hi) in LOW_FAMILY {
        let iv = UnitInterval::new(lo, hi).unwrap();
        group.bench_function(format!("n=100 [{lo},{hi}]"), |b| {
            b.iter(|| {
                invert_radius(&RadiusQuery::new(100, 0.05, iv, TailSide::EmpiricalAbove)).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, exceedance, inversion);
criterion_main!(benches);
