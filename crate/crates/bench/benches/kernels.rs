//! Benchmarks for the hot kernels: GF(2) row reduction, Adem rewriting,
//! minimal resolutions, and the cobar complexes.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use stems_core::ext::{classical_cobar, minimal_resolution, motivic_cobar, Budget};
use stems_core::f2::BitMatrix;
use stems_core::steenrod::{adem_reduce, SqWord};

fn dense_matrix(rows: usize, cols: usize) -> BitMatrix {
    // deterministic fill with an xorshift stream
    let mut state = 0x243f6a8885a308d3u64;
    let mut m = BitMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if state & 1 == 1 {
                m.set(r, c, true);
            }
        }
    }
    m
}

fn bench_rref(c: &mut Criterion) {
    let m = dense_matrix(256, 256);
    c.bench_function("rref 256x256", |b| b.iter(|| black_box(&m).rref().rank));
}

fn bench_adem(c: &mut Criterion) {
    let word = SqWord::new(vec![1, 2, 3, 4, 5, 6]);
    c.bench_function("adem reduce Sq1..Sq6", |b| {
        b.iter(|| adem_reduce(black_box(&word)))
    });
}

fn bench_resolution(c: &mut Criterion) {
    c.bench_function("minimal resolution s<=6 t<=16", |b| {
        b.iter(|| minimal_resolution(6, 16, Budget::default()).unwrap())
    });
}

fn bench_cobar(c: &mut Criterion) {
    c.bench_function("classical cobar s<=4 t<=10", |b| {
        b.iter(|| classical_cobar(4, 10, Budget::default()).unwrap())
    });
    c.bench_function("motivic cobar s<=4 stem<=6", |b| {
        b.iter(|| motivic_cobar(4, 6, Budget::default()).unwrap())
    });
}

criterion_group!(benches, bench_rref, bench_adem, bench_resolution, bench_cobar);
criterion_main!(benches);
