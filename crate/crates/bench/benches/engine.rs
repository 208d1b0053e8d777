use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;
use treegroups::abelian::{smith_normal_form, IntMatrix};
use treegroups::lie::{FreeLie, LieSystem};
use treegroups::nilpotent::{magnus, GroupWord};
use treegroups::tree_groups::{compare_presentations, d_group, tree_group, InftyOptions};
use treegroups::trees::{enumerate_trees, Alphabet, DEFAULT_TREE_CAP};

fn scrambled(n: usize) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(((i * 7 + j * 13 + i * j) % 11) as i64 - 5)).collect())
        .collect();
    IntMatrix::from_rows(&rows, n)
}

fn smith(c: &mut Criterion) {
    let mut g = c.benchmark_group("smith");
    for n in [8, 16, 32] {
        let a = scrambled(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| b.iter(|| smith_normal_form(black_box(a))));
    }
    g.finish();
}

fn trees(c: &mut Criterion) {
    c.bench_function("enumerate order 4, m=3", |b| {
        b.iter(|| enumerate_trees(4, Alphabet::Strands(3), DEFAULT_TREE_CAP).unwrap())
    });
    c.bench_function("T_3(3)", |b| b.iter(|| tree_group(3, Alphabet::Strands(3), DEFAULT_TREE_CAP).unwrap()));
    c.bench_function("compare T~_3(2)", |b| {
        b.iter(|| compare_presentations(3, Alphabet::Strands(2), InftyOptions::default(), DEFAULT_TREE_CAP).unwrap())
    });
}

fn lie(c: &mut Criterion) {
    c.bench_function("Lyndon basis L_7(3)", |b| {
        b.iter(|| FreeLie::new(Alphabet::Strands(3)).degree(7))
    });
    c.bench_function("D_3(3)", |b| {
        b.iter(|| d_group(3, &LieSystem::new(Alphabet::Strands(3))).unwrap())
    });
}

fn nilpotent(c: &mut Criterion) {
    let w = GroupWord::from_letters((0..40).map(|i| (i * 5 % 3, if i % 4 == 0 { -1 } else { 1 })));
    c.bench_function("magnus length 40, cutoff 6", |b| b.iter(|| magnus(black_box(&w), 6)));
}

criterion_group!(benches, smith, trees, lie, nilpotent);
criterion_main!(benches);
