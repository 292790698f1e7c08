//! Benchmarks for the 312-subpattern detector on Gog words. Gapless words
//! are the worst case: the search scans every position without an early hit.

use criterion::{criterion_group, criterion_main, Criterion};
use gogmagog::{
    monotone_to_gog_word, shape_to_triangle, successors, word_312_first_position, ColumnWord,
    GogWord, Shape,
};
use std::hint::black_box;

/// Deterministic pseudo-random gapless Gog words built from successor
/// chains, using a xorshift generator for the branch choices.
fn sample_gapless_words(n: usize, count: usize) -> Vec<GogWord> {
    let mut state = 0x9E37_79B9_7F4A_7C15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..count)
        .map(|_| {
            let mut chain: Vec<ColumnWord> = Vec::new();
            let mut g = ColumnWord::empty();
            for _ in 0..n - 1 {
                let succ = successors(&g);
                let h = succ[(next() % succ.len() as u64) as usize];
                chain.push(h);
                g = h;
            }
            let shape = Shape::from_column_words(&chain).unwrap();
            monotone_to_gog_word(&shape_to_triangle(&shape))
        })
        .collect()
}

fn bench_detection(c: &mut Criterion) {
    let mut group = c.benchmark_group("word_312_first_position");
    for n in [10usize, 20, 40] {
        let words = sample_gapless_words(n, 32);
        group.bench_function(format!("gapless/n={n}"), |b| {
            b.iter(|| {
                for w in &words {
                    black_box(word_312_first_position(black_box(w)));
                }
            })
        });
    }
    // A word with an early hit: the detector should return almost instantly.
    let gapped: GogWord = "31(234)3".parse().unwrap();
    group.bench_function("gapped/early-hit", |b| {
        b.iter(|| black_box(word_312_first_position(black_box(&gapped))))
    });
    group.finish();
}

criterion_group!(benches, bench_detection);
criterion_main!(benches);
