//! Values checked against independent computations: brute force, closed-form
//! orbit counts, and determinantal divisors.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use treegroups::abelian::{invariant_factors, IntMatrix, PresentedGroup};
use treegroups::lie::{is_lyndon, lyndon_words, witt_rank, BracketRing, FreeLie};
use treegroups::trees::{enumerate_trees, Alphabet, DEFAULT_TREE_CAP};

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Multisets of size `k` from `n` kinds.
fn multichoose(n: usize, k: usize) -> usize {
    binom(n + k - 1, k)
}

/// Unoriented labeled trees counted by shape. `p` is the number of labeled cherries.
fn tree_count(order: usize, m: usize) -> usize {
    let p = multichoose(m, 2);
    match order {
        0 => multichoose(m, 2),
        1 => multichoose(m, 3),
        2 => multichoose(p, 2),
        3 => m * multichoose(p, 2),
        4 => multichoose(p, 3) + multichoose(p * m, 2),
        _ => unreachable!(),
    }
}

#[test]
fn tree_counts_match_orbit_counting() {
    for m in 1..=3u32 {
        for order in 0..=4 {
            let got = enumerate_trees(order, Alphabet::Strands(m), DEFAULT_TREE_CAP).unwrap().len();
            assert_eq!(got, tree_count(order, m as usize), "order {order}, m = {m}");
        }
    }
}

fn all_words(n: usize, m: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..m as u8).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// Strictly smaller than each proper rotation.
fn lyndon_by_rotation(w: &[u8]) -> bool {
    (1..w.len()).all(|i| {
        let mut r = w[i..].to_vec();
        r.extend_from_slice(&w[..i]);
        w < r.as_slice()
    })
}

#[test]
fn lyndon_words_by_brute_force() {
    for m in 1..=3usize {
        for n in 1..=6usize {
            let brute: BTreeSet<Vec<u8>> = all_words(n, m).into_iter().filter(|w| lyndon_by_rotation(w)).collect();
            let got: BTreeSet<Vec<u8>> = lyndon_words(n, m).into_iter().collect();
            assert_eq!(got, brute, "n = {n}, m = {m}");
            assert_eq!(brute.len() as u128, witt_rank(n as u32, m as u64));
            assert!(brute.iter().all(|w| is_lyndon(w)));
        }
    }
}

#[test]
fn witt_values() {
    let m2: Vec<u128> = (1..=6).map(|n| witt_rank(n, 2)).collect();
    assert_eq!(m2, [2, 1, 2, 3, 6, 9]);
    assert_eq!(witt_rank(6, 3), 116);
}

#[test]
fn lie_presentation_ranks_match_basis() {
    for m in 1..=3u32 {
        let ring = BracketRing::lie(Alphabet::Strands(m));
        let lie = FreeLie::new(Alphabet::Strands(m));
        for n in 1..=5 {
            let g = ring.group(n);
            assert_eq!(g.free_rank(), lie.rank(n));
            assert!(g.torsion().is_empty());
        }
    }
}

fn minors_gcd(a: &IntMatrix, k: usize) -> BigInt {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    let mut g = BigInt::zero();
    for rs in subsets(a.rows(), k) {
        for cs in subsets(a.cols(), k) {
            let rows: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| a.get(i, j).clone()).collect())
                .collect();
            g = g.gcd(&IntMatrix::from_rows(&rows, k).determinant());
        }
    }
    g
}

#[test]
fn smith_form_matches_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let r = rng.random_range(1..=4);
        let c = rng.random_range(1..=4);
        let rows: Vec<Vec<BigInt>> = (0..r)
            .map(|_| (0..c).map(|_| BigInt::from(rng.random_range(-6i64..=6))).collect())
            .collect();
        let a = IntMatrix::from_rows(&rows, c);
        let d = invariant_factors(&a);
        let mut prod = BigInt::from(1);
        for k in 1..=r.min(c) {
            let dk = d.get(k - 1).cloned().unwrap_or_default();
            prod *= &dk;
            assert_eq!(prod.abs(), minors_gcd(&a, k), "matrix {rows:?}, k = {k}");
        }
    }
}

#[test]
fn presented_group_invariants_by_hand() {
    let g = PresentedGroup::present_dense(
        vec!["a".into(), "b".into(), "c".into()],
        &[
            vec![2.into(), 4.into(), 0.into()],
            vec![0.into(), 6.into(), 0.into()],
        ],
    );
    // Relation matrix [[2,4],[0,6]] has invariant factors 2, 6; c is free.
    assert_eq!(g.free_rank(), 1);
    assert_eq!(g.torsion(), vec![BigInt::from(2), BigInt::from(6)]);
}
