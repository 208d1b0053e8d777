use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use treegroups::abelian::group::{sparse_from_dense, SparseVec};
use treegroups::abelian::{smith_normal_form, IntMatrix, PresentedGroup};
use treegroups::lie::{FreeLie, LieSystem, Poly};
use treegroups::nilpotent::{artin, lcs_degree, magnus, milnor_first_nonvanishing, GroupWord, LcsDegree};
use treegroups::tree_groups::{bracket_map, eta, half_eta_doubled, sl_map};
use treegroups::trees::{Alphabet, Label, RootedTree, UnitrivalentTree};

fn rooted(m: u32, depth: u32) -> impl Strategy<Value = RootedTree> {
    (1..=m).prop_map(RootedTree::strand).prop_recursive(depth, 24, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| RootedTree::node(a, b))
    })
}

fn rooted_with_leaves(m: u32, leaves: usize) -> BoxedStrategy<RootedTree> {
    if leaves == 1 {
        return (1..=m).prop_map(RootedTree::strand).boxed();
    }
    (1..leaves)
        .prop_flat_map(move |k| (rooted_with_leaves(m, k), rooted_with_leaves(m, leaves - k)))
        .prop_map(|(a, b)| RootedTree::node(a, b))
        .boxed()
}

fn word(m: usize, max_len: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((0..m, any::<bool>()), 0..=max_len)
        .prop_map(|ls| GroupWord::from_letters(ls.into_iter().map(|(g, s)| (g, if s { 1 } else { -1 }))))
}

fn matrix(max: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r).prop_map(move |rows| {
            let rows: Vec<Vec<BigInt>> = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            IntMatrix::from_rows(&rows, c)
        })
    })
}

fn shuffles(u: &[u8], v: &[u8]) -> BTreeMap<Vec<u8>, BigInt> {
    let mut out = BTreeMap::new();
    if u.is_empty() || v.is_empty() {
        let w = if u.is_empty() { v } else { u };
        out.insert(w.to_vec(), BigInt::one());
        return out;
    }
    for (first, rest_u, rest_v) in [(u[0], &u[1..], v), (v[0], u, &v[1..])] {
        for (mut w, c) in shuffles(rest_u, rest_v) {
            w.insert(0, first);
            *out.entry(w).or_insert_with(BigInt::zero) += c;
        }
    }
    out
}

fn pairing(p: &Poly, q: &BTreeMap<Vec<u8>, BigInt>) -> BigInt {
    q.iter().map(|(w, c)| p.get(w).map_or_else(BigInt::zero, |x| x * c)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_is_a_unimodular_diagonalization(a in matrix(5)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(s.d.is_diagonal());
        let one = BigInt::one();
        prop_assert_eq!(num_traits::Signed::abs(&s.u.determinant()), one.clone());
        prop_assert_eq!(num_traits::Signed::abs(&s.v.determinant()), one);
        let d = s.diagonal();
        for w in d.windows(2) {
            prop_assert!(w[0] >= BigInt::zero());
            if !w[0].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            } else {
                prop_assert!(w[1].is_zero());
            }
        }
    }

    #[test]
    fn reduction_is_idempotent_and_additive(
        rels in prop::collection::vec(prop::collection::vec(-6i64..=6, 4), 0..4),
        a in prop::collection::vec(-20i64..=20, 4),
        b in prop::collection::vec(-20i64..=20, 4),
    ) {
        let rels: Vec<SparseVec> = rels
            .iter()
            .map(|r| sparse_from_dense(&r.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()))
            .collect();
        let g = PresentedGroup::present((0..4).map(|i| format!("g{i}")).collect(), rels);
        let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
        let b: Vec<BigInt> = b.into_iter().map(BigInt::from).collect();
        let ra = g.reduce(&a);
        prop_assert_eq!(g.reduce(&ra), ra.clone());
        prop_assert!(g.equal(&ra, &a));
        let sum: Vec<BigInt> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let rsum: Vec<BigInt> = ra.iter().zip(g.reduce(&b)).map(|(x, y)| x + y).collect();
        prop_assert_eq!(g.reduce(&sum), g.reduce(&rsum));
    }

    #[test]
    fn canonical_form_is_independent_of_the_rooting(body in rooted(3, 4), root in 1..=3u32) {
        let t = UnitrivalentTree::planted(Label::Strand(root), &body);
        let c = t.canonicalize().unwrap();
        let again = c.tree.to_tree().canonicalize().unwrap();
        prop_assert_eq!(&again.tree, &c.tree);
        prop_assert_eq!(again.sign, 1);
        for v in t.leaf_vertices() {
            let r = UnitrivalentTree::planted(t.label(v).unwrap(), &t.root_at(v).unwrap());
            let rc = r.canonicalize().unwrap();
            prop_assert_eq!(&rc.tree, &c.tree);
            prop_assert!(rc.sign == c.sign || c.symmetric);
        }
    }

    #[test]
    fn rooting_undoes_planting(body in rooted(3, 4), root in 1..=3u32) {
        let t = UnitrivalentTree::planted(Label::Strand(root), &body);
        prop_assert_eq!(t.root_at(0).unwrap(), body);
    }

    #[test]
    fn lie_elements_kill_shuffles(t in rooted(3, 4), split in 1usize..8) {
        prop_assume!(t.num_leaves() >= 2);
        let lie = FreeLie::new(Alphabet::Strands(3));
        let p = lie.expand_tree(&t).unwrap();
        let n = t.num_leaves();
        let k = 1 + split % (n - 1);
        for w in p.keys().take(3) {
            let s = shuffles(&w[..k], &w[k..]);
            prop_assert!(pairing(&p, &s).is_zero());
        }
    }

    #[test]
    fn magnus_is_multiplicative(u in word(3, 12), v in word(3, 12)) {
        prop_assert_eq!(magnus(&u.mul(&v), 5), magnus(&u, 5).mul(&magnus(&v, 5)));
    }

    #[test]
    fn commutators_are_primitive(t in rooted(3, 3)) {
        prop_assume!(!t.is_leaf());
        let lie = FreeLie::new(Alphabet::Strands(3));
        let k = t.num_leaves();
        let w = GroupWord::letter_tree(&t, Alphabet::Strands(3)).unwrap();
        prop_assert_eq!(magnus(&w, k).degree_part(k), lie.expand_tree(&t).unwrap());
    }

    #[test]
    fn commutators_deepen(u in word(3, 6), v in word(3, 6)) {
        let lie = FreeLie::new(Alphabet::Strands(3));
        let cap = 7;
        let du = lcs_degree(&u, cap, &lie).unwrap().degree().unwrap_or(cap);
        let dv = lcs_degree(&v, cap, &lie).unwrap().degree().unwrap_or(cap);
        let c = GroupWord::commutator(&u, &v);
        let dc = lcs_degree(&c, cap, &lie).unwrap().degree().unwrap_or(cap);
        prop_assert!(dc >= (du + dv).min(cap));
    }

    #[test]
    fn eta_lands_in_the_bracket_kernel(body in rooted(3, 4), root in 1..=3u32) {
        let lie = FreeLie::new(Alphabet::Strands(3));
        let c = UnitrivalentTree::planted(Label::Strand(root), &body).canonicalize().unwrap();
        prop_assert!(bracket_map(&eta(&c.tree, &lie).unwrap(), &lie).is_zero());
    }

    #[test]
    fn sl_is_additive(j in rooted_with_leaves(3, 3), k in rooted_with_leaves(3, 3)) {
        let sys = LieSystem::new(Alphabet::Strands(3));
        let a = half_eta_doubled(&j, &sys).unwrap();
        let b = half_eta_doubled(&k, &sys).unwrap();
        let lhs = sl_map(&a.add(&b), &sys).unwrap();
        let rhs = sl_map(&a, &sys).unwrap().add(&sl_map(&b, &sys).unwrap()).mod2();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn validated_artin_data_has_milnor_tensor_in_d(
        k in 1i64..4,
        perturb in prop::collection::vec((word(3, 3), word(3, 3), word(3, 3)), 3),
    ) {
        let a = Alphabet::Strands(3);
        let lie = FreeLie::new(a);
        let base = ["[x2,x3]", "[x3,x1]", "[x1,x2]"];
        let ls: Vec<GroupWord> = base
            .iter()
            .zip(&perturb)
            .map(|(b, (p, q, r))| {
                let deep = GroupWord::commutator(&GroupWord::commutator(p, q), r);
                GroupWord::parse(b, a).unwrap().pow(k).mul(&deep)
            })
            .collect();
        let f = artin(&ls, 2).unwrap();
        prop_assert!(f.validated());
        let mu = milnor_first_nonvanishing(&f, &lie).unwrap();
        prop_assert!(mu.in_d);
        prop_assert_eq!(mu.degree, 1);
    }

    #[test]
    fn clasper_classes_are_multilinear(
        a1 in word(3, 4), a1b in word(3, 4), a2 in word(3, 4), a3 in word(3, 4),
    ) {
        let lie = FreeLie::new(Alphabet::Strands(3));
        let class3 = |x: &GroupWord, y: &GroupWord, z: &GroupWord| {
            let c = GroupWord::commutator(x, &GroupWord::commutator(y, z));
            lie.to_basis(&magnus(&c, 3).degree_part(3), 3).unwrap()
        };
        let lhs = class3(&a1.mul(&a1b), &a2, &a3);
        let rhs = class3(&a1, &a2, &a3).add(&class3(&a1b, &a2, &a3));
        prop_assert_eq!(lhs, rhs);
        if let LcsDegree::Exact(3, l) = lcs_degree(&GroupWord::commutator(&a1, &GroupWord::commutator(&a2, &a3)), 4, &lie).unwrap() {
            prop_assert_eq!(l, class3(&a1, &a2, &a3));
        }
    }
}
