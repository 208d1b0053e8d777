//! The tree groups `T_n` and the two presentations of the framed quotient.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::sums::TreeSum;
use crate::abelian::group::SparseVec;
use crate::abelian::{GroupHom, GroupReport, PresentedGroup};
use crate::error::{Error, Result};
use crate::trees::{
    enumerate_infty_trees, enumerate_trees, graft_canonical, Alphabet, CanonicalTree, Label,
    RootedTree, UnitrivalentTree,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TreeGroupKind {
    /// `T_n`
    Tree,
    /// `T_{2n-1}` modulo the image of the framing map.
    FramedQuotient,
    /// Trees of order `2n-1` and inf-trees of order `n`, with boundary twists.
    FramedInfty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InftyOptions {
    /// Add `2 J^inf = 0` for every inf-tree generator.
    pub include_2jinf: bool,
    /// Include the boundary twist relators; turning this off is a negative control.
    pub boundary_twists: bool,
}

impl Default for InftyOptions {
    fn default() -> Self {
        InftyOptions {
            include_2jinf: false,
            boundary_twists: true,
        }
    }
}

/// A tree group with its canonical generators.
#[derive(Clone, Debug)]
pub struct TreeGroup {
    pub kind: TreeGroupKind,
    pub order: usize,
    pub alphabet: Alphabet,
    generators: Vec<CanonicalTree>,
    index: HashMap<CanonicalTree, usize>,
    group: Arc<PresentedGroup>,
}

impl TreeGroup {
    fn build(
        kind: TreeGroupKind,
        order: usize,
        alphabet: Alphabet,
        generators: Vec<CanonicalTree>,
        relators: impl FnOnce(&dyn Fn(&TreeSum) -> Result<SparseVec>) -> Result<Vec<SparseVec>>,
    ) -> Result<Self> {
        let index: HashMap<CanonicalTree, usize> = generators
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let to_vec = |s: &TreeSum| sum_vector(&index, s);
        let rel = relators(&to_vec)?;
        let names = generators.iter().map(ToString::to_string).collect();
        Ok(TreeGroup {
            kind,
            order,
            alphabet,
            group: Arc::new(PresentedGroup::present(names, rel)),
            generators,
            index,
        })
    }

    pub fn generators(&self) -> &[CanonicalTree] {
        &self.generators
    }

    pub fn group(&self) -> &Arc<PresentedGroup> {
        &self.group
    }

    pub fn index_of(&self, t: &CanonicalTree) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn sparse(&self, s: &TreeSum) -> Result<SparseVec> {
        sum_vector(&self.index, s)
    }

    pub fn vector(&self, s: &TreeSum) -> Result<Vec<BigInt>> {
        let sv = self.sparse(s)?;
        Ok(crate::abelian::group::dense_from_sparse(&sv, self.group.ngens()))
    }

    pub fn report(&self) -> GroupReport {
        self.group.report()
    }

    /// Normal form of a tree sum, written back as a tree sum.
    pub fn reduce(&self, s: &TreeSum) -> Result<TreeSum> {
        let v = self.group.reduce(&self.vector(s)?);
        let mut out = TreeSum::new();
        for (i, c) in v.iter().enumerate() {
            out.add_canonical(&self.generators[i], c);
        }
        Ok(out)
    }
}

fn sum_vector(index: &HashMap<CanonicalTree, usize>, s: &TreeSum) -> Result<SparseVec> {
    let mut out = SparseVec::new();
    for (t, c) in s.terms() {
        let i = index.get(t).ok_or_else(|| {
            Error::InvalidArgument(format!("tree {t} is not a generator of this group"))
        })?;
        out.insert(*i, c.clone());
    }
    Ok(out)
}

/// Jacobi triples at every edge between two internal nodes of a rooted body.
fn ihx_bodies(t: &RootedTree) -> Vec<[RootedTree; 3]> {
    let RootedTree::Node(l, r) = t else {
        return Vec::new();
    };
    let n = RootedTree::node;
    let mut out = Vec::new();
    if let RootedTree::Node(a, b) = l.as_ref() {
        let (a, b, c) = ((**a).clone(), (**b).clone(), (**r).clone());
        out.push([
            n(n(a.clone(), b.clone()), c.clone()),
            n(n(b.clone(), c.clone()), a.clone()),
            n(n(c, a), b),
        ]);
    }
    if let RootedTree::Node(a, b) = r.as_ref() {
        let (a, b, c) = ((**a).clone(), (**b).clone(), (**l).clone());
        out.push([
            n(c.clone(), n(a.clone(), b.clone())),
            n(a.clone(), n(b.clone(), c.clone())),
            n(b, n(c, a)),
        ]);
    }
    for tr in ihx_bodies(l) {
        out.push(tr.map(|x| n(x, (**r).clone())));
    }
    for tr in ihx_bodies(r) {
        out.push(tr.map(|x| n((**l).clone(), x)));
    }
    out
}

/// IHX relators generated at the internal edges of a canonical tree.
pub fn ihx_relators(t: &CanonicalTree) -> Vec<TreeSum> {
    let mut out = Vec::new();
    for triple in ihx_bodies(t.body()) {
        let mut s = TreeSum::new();
        for body in &triple {
            let f = UnitrivalentTree::planted(t.root(), body)
                .canonicalize()
                .expect("IHX terms of a valid tree are valid");
            s.add_form(&f, &BigInt::one());
        }
        if !s.is_empty() {
            out.push(s);
        }
    }
    out
}

/// IHX relators plus `2t` for symmetric trees, deduplicated up to sign.
fn as_ihx_relators(trees: &[CanonicalTree]) -> Vec<TreeSum> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut keep = |s: TreeSum, out: &mut Vec<TreeSum>| {
        let key: Vec<(CanonicalTree, BigInt)> = s.terms().iter().map(|(t, c)| (t.clone(), c.clone())).collect();
        let neg: Vec<(CanonicalTree, BigInt)> = key.iter().map(|(t, c)| (t.clone(), -c)).collect();
        if !seen.contains(&neg) && seen.insert(key) {
            out.push(s);
        }
    };
    for t in trees {
        if t.form().symmetric {
            let mut s = TreeSum::new();
            s.add_canonical(t, &BigInt::from(2));
            keep(s, &mut out);
        }
        for r in ihx_relators(t) {
            keep(r, &mut out);
        }
    }
    out
}

/// `T_n`: trees of order `n` modulo AS and IHX.
pub fn tree_group(order: usize, alphabet: Alphabet, cap: usize) -> Result<TreeGroup> {
    let gens: Vec<CanonicalTree> = enumerate_trees(order, alphabet, cap)?
        .into_iter()
        .map(|f| f.tree)
        .collect();
    let rels = as_ihx_relators(&gens);
    TreeGroup::build(TreeGroupKind::Tree, order, alphabet, gens, |v| {
        rels.iter().map(v).collect()
    })
}

/// `Δ(t) = Σ_v ℓ(v) −< (T_v(t), T_v(t))`, a sum of trees of order `2 order(t) + 1`.
pub fn delta(t: &CanonicalTree) -> TreeSum {
    let mut s = TreeSum::new();
    for (label, tv) in t.rootings() {
        let f = graft_canonical(&RootedTree::Leaf(label), &RootedTree::node(tv.clone(), tv));
        s.add_form(&f, &BigInt::one());
    }
    s
}

fn check_odd(order: usize) -> Result<usize> {
    if order.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "framing relations exist only in odd orders, got {order}"
        )));
    }
    Ok(order.div_ceil(2))
}

/// `T_{2n-1} / Im Δ`.
pub fn framed_quotient(order: usize, alphabet: Alphabet, cap: usize) -> Result<TreeGroup> {
    let n = check_odd(order)?;
    let gens: Vec<CanonicalTree> = enumerate_trees(order, alphabet, cap)?
        .into_iter()
        .map(|f| f.tree)
        .collect();
    let mut rels = as_ihx_relators(&gens);
    for f in enumerate_trees(n - 1, alphabet, cap)? {
        rels.push(delta(&f.tree));
    }
    TreeGroup::build(TreeGroupKind::FramedQuotient, order, alphabet, gens, |v| {
        rels.iter().map(v).collect()
    })
}

/// Every planar rooted tree with the given number of leaves.
fn planar_rooted(leaves: usize, labels: &[Label]) -> Vec<RootedTree> {
    if leaves == 1 {
        return labels.iter().map(|&l| RootedTree::Leaf(l)).collect();
    }
    let mut out = Vec::new();
    for i in 1..leaves {
        let left = planar_rooted(i, labels);
        let right = planar_rooted(leaves - i, labels);
        for a in &left {
            for b in &right {
                out.push(RootedTree::node(a.clone(), b.clone()));
            }
        }
    }
    out
}

/// The boundary twist `h −< (∞, J) − h −< (J, J)` for a label `h` and rooted `J`.
pub fn boundary_twist(h: Label, j: &RootedTree) -> TreeSum {
    let leaf = RootedTree::Leaf(h);
    let mut s = TreeSum::new();
    s.add_form(
        &graft_canonical(&leaf, &RootedTree::node(RootedTree::Leaf(Label::Infinity), j.clone())),
        &BigInt::one(),
    );
    s.add_form(
        &graft_canonical(&leaf, &RootedTree::node(j.clone(), j.clone())),
        &-BigInt::one(),
    );
    s
}

/// Generators: trees of order `2n-1` followed by inf-trees of order `n`.
pub fn framed_infty(order: usize, alphabet: Alphabet, options: InftyOptions, cap: usize) -> Result<TreeGroup> {
    let n = check_odd(order)?;
    let mut gens: Vec<CanonicalTree> = enumerate_trees(order, alphabet, cap)?
        .into_iter()
        .map(|f| f.tree)
        .collect();
    let infty: Vec<CanonicalTree> = enumerate_infty_trees(n, alphabet, cap)?
        .into_iter()
        .map(|f| f.tree)
        .collect();
    let mut rels = as_ihx_relators(&gens);
    rels.extend(as_ihx_relators(&infty));
    if options.boundary_twists {
        for j in planar_rooted(n, &alphabet.labels()) {
            for h in alphabet.labels() {
                rels.push(boundary_twist(h, &j));
            }
        }
    }
    if options.include_2jinf {
        for t in &infty {
            let mut s = TreeSum::new();
            s.add_canonical(t, &BigInt::from(2));
            rels.push(s);
        }
    }
    gens.extend(infty);
    TreeGroup::build(TreeGroupKind::FramedInfty, order, alphabet, gens, |v| {
        rels.iter().map(v).collect()
    })
}

/// Image of an inf-tree `∞ −< (J, K)` in trees: `Σ_{v ∈ J} ℓ(v) −< (T_v(J−K), T_v(J−K))`.
pub fn untwist(t: &CanonicalTree) -> Result<TreeSum> {
    let ut = t.to_tree();
    let v = ut
        .leaf_vertices()
        .into_iter()
        .find(|&v| ut.label(v) == Some(Label::Infinity))
        .ok_or_else(|| Error::InvalidArgument(format!("{t} has no inf leaf")))?;
    let RootedTree::Node(j, k) = ut.root_at(v)? else {
        return Err(Error::InvalidArgument("an inf-tree needs a trivalent vertex".into()));
    };
    let (jk, j_leaves) = UnitrivalentTree::graft_marked(&j, &k);
    let mut s = TreeSum::new();
    for w in j_leaves {
        let tv = jk.root_at(w)?;
        let f = graft_canonical(
            &RootedTree::Leaf(jk.label(w).unwrap()),
            &RootedTree::node(tv.clone(), tv),
        );
        s.add_form(&f, &BigInt::one());
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub order: usize,
    pub options: InftyOptions,
    pub quotient: GroupReport,
    pub presented: GroupReport,
    pub forward_well_defined: bool,
    pub backward_well_defined: bool,
    pub mutually_inverse: bool,
    /// First failure, if any.
    pub failure: Option<String>,
}

impl ComparisonReport {
    pub fn isomorphic(&self) -> bool {
        self.forward_well_defined && self.backward_well_defined && self.mutually_inverse
    }
}

/// Builds both presentations of the framed quotient and checks that the maps
/// between them are well defined and mutually inverse.
pub fn compare_presentations(
    order: usize,
    alphabet: Alphabet,
    options: InftyOptions,
    cap: usize,
) -> Result<ComparisonReport> {
    let q = framed_quotient(order, alphabet, cap)?;
    let p = framed_infty(order, alphabet, options, cap)?;
    let mut report = ComparisonReport {
        order,
        options,
        quotient: q.report(),
        presented: p.report(),
        forward_well_defined: false,
        backward_well_defined: false,
        mutually_inverse: false,
        failure: None,
    };
    let fwd_images: Result<Vec<SparseVec>> = q
        .generators()
        .iter()
        .map(|t| p.sparse(&unit_sum(t)))
        .collect();
    let forward = GroupHom::from_sparse_images(q.group().clone(), p.group().clone(), fwd_images?);
    let mut bwd_images = Vec::new();
    for t in p.generators() {
        let s = if t.is_infty() { untwist(t)? } else { unit_sum(t) };
        bwd_images.push(q.sparse(&s)?);
    }
    let backward = GroupHom::from_sparse_images(p.group().clone(), q.group().clone(), bwd_images);
    match (&forward, &backward) {
        (Err(e), _) => report.failure = Some(format!("forward map: {e}")),
        (_, Err(e)) => report.failure = Some(format!("backward map: {e}")),
        _ => {}
    }
    report.forward_well_defined = forward.is_ok();
    report.backward_well_defined = backward.is_ok();
    if let (Ok(f), Ok(b)) = (forward, backward) {
        let mut inverse = true;
        for (i, g) in [(0, &f.then(&b)?), (1, &b.then(&f)?)] {
            let dom = g.domain();
            for k in 0..dom.ngens() {
                let e = dom.generator_vector(k);
                let mut diff = g.apply(&e);
                diff[k] -= BigInt::one();
                if !dom.is_zero(&diff) {
                    inverse = false;
                    report.failure = Some(format!(
                        "{} composite moves generator {}",
                        if i == 0 { "quotient" } else { "inf" },
                        dom.generators()[k]
                    ));
                    break;
                }
            }
            if !inverse {
                break;
            }
        }
        report.mutually_inverse = inverse;
    }
    Ok(report)
}

pub(crate) fn unit_sum(t: &CanonicalTree) -> TreeSum {
    let mut s = TreeSum::new();
    s.add_canonical(t, &BigInt::one());
    s
}
