//! Benchmarks for the exact counting routines: the bitmask DP over gapless
//! shapes and the closed-form products.

use criterion::{criterion_group, criterion_main, Criterion};
use gogmagog::{asm_count, count_gapless_shapes, rho};
use std::hint::black_box;

fn bench_counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_gapless_shapes");
    for n in [8usize, 10, 12] {
        group.bench_function(format!("n={n}"), |b| {
            b.iter(|| count_gapless_shapes(black_box(n)).unwrap())
        });
    }
    group.finish();

    c.bench_function("asm_count/n=50", |b| b.iter(|| asm_count(black_box(50))));
    c.bench_function("rho/m=p=40", |b| {
        b.iter(|| rho(black_box(40), black_box(40)))
    });
}

criterion_group!(benches, bench_counting);
criterion_main!(benches);
