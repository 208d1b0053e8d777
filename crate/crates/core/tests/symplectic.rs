use treegroups::lie::{FreeLie, LieSystem};
use treegroups::nilpotent::{symplectic_d_element, GroupWord, NilpotentMap};
use treegroups::tree_groups::half_eta_doubled;
use treegroups::trees::{sorted_rooted_trees, Alphabet, Label, RootedTree, UnitrivalentTree, DEFAULT_TREE_CAP};

/// `f(z) = z ψ(z)` with `ψ(y_i)` collecting `(J−J)_v` for leaves `v` of `J` labeled `x_i`,
/// and `ψ(x_i)` collecting the inverses for leaves labeled `y_i`.
fn realize(j: &RootedTree, a: Alphabet) -> NilpotentMap {
    let (jj, from_j) = UnitrivalentTree::graft_marked(j, j);
    let mut psi = vec![GroupWord::identity(); a.size()];
    for v in from_j {
        let w = GroupWord::letter_tree(&jj.root_at(v).unwrap(), a).unwrap();
        match jj.label(v).unwrap() {
            Label::X(i) => {
                let s = a.letter(Label::Y(i)).unwrap();
                psi[s] = psi[s].mul(&w);
            }
            Label::Y(i) => {
                let s = a.letter(Label::X(i)).unwrap();
                psi[s] = psi[s].mul(&w.inverse());
            }
            other => panic!("unexpected label {other}"),
        }
    }
    let images = psi
        .into_iter()
        .enumerate()
        .map(|(i, p)| GroupWord::generator(i).mul(&p))
        .collect();
    NilpotentMap::from_images(a, images, 2 * j.order() + 2).unwrap()
}

#[test]
fn doubled_tree_automorphisms_give_half_eta() {
    for g in 1..=2u32 {
        let a = Alphabet::Symplectic(g);
        let lie = FreeLie::new(a);
        let sys = LieSystem::new(a);
        for j in sorted_rooted_trees(2, &a.labels(), DEFAULT_TREE_CAP).unwrap() {
            let f = realize(&j, a);
            let d = symplectic_d_element(&f, 2 * j.order(), &lie).unwrap();
            assert!(d.in_d, "J = {j}");
            assert_eq!(d.tensor, half_eta_doubled(&j, &sys).unwrap(), "J = {j}");
        }
    }
}

#[test]
fn identity_gives_zero() {
    let a = Alphabet::Symplectic(2);
    let lie = FreeLie::new(a);
    let f = NilpotentMap::from_images(a, (0..4).map(GroupWord::generator).collect(), 4).unwrap();
    let d = symplectic_d_element(&f, 2, &lie).unwrap();
    assert!(d.tensor.is_zero() && d.in_d);
}
