use std::fmt;

use serde::{Deserialize, Serialize};

use super::label::Label;
use super::rooted::RootedTree;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Vertex {
    Leaf { label: Label, nbr: usize },
    /// Neighbours in cyclic order.
    Tri { nbrs: [usize; 3] },
}

/// A labeled unitrivalent tree with a cyclic order of edges at each trivalent vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitrivalentTree {
    verts: Vec<Vertex>,
}

/// A canonical representative: the tree planted at its leaf `root` with a
/// sorted rooted body. Ordered by (order, label multiset, root, body).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalTree {
    order: usize,
    labels: Vec<Label>,
    root: Label,
    #[serde(with = "rooted_text")]
    body: RootedTree,
}

mod rooted_text {
    use super::RootedTree;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(t: &RootedTree, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&t.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<RootedTree, D::Error> {
        let text = String::deserialize(d)?;
        crate::trees::parse::parse_rooted(&text).map_err(serde::de::Error::custom)
    }
}

/// Result of canonicalization: `tree = sign * canonical` under AS.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub tree: CanonicalTree,
    pub sign: i32,
    /// An orientation-reversing automorphism exists, so `2 * tree = 0` under AS.
    pub symmetric: bool,
}

impl UnitrivalentTree {
    /// The tree obtained by attaching a leaf labeled `root` to the root of `body`.
    pub fn planted(root: Label, body: &RootedTree) -> Self {
        let mut verts = vec![Vertex::Leaf { label: root, nbr: 1 }];
        add_rooted(&mut verts, body, 0);
        UnitrivalentTree { verts }
    }

    /// Joins the roots of `j` and `k` by an edge. A root node's cyclic order
    /// becomes (other side, left, right).
    pub fn graft(j: &RootedTree, k: &RootedTree) -> Self {
        match (j, k) {
            (RootedTree::Leaf(a), _) => Self::planted(*a, k),
            (_, RootedTree::Leaf(b)) => Self::planted(*b, j),
            _ => {
                let mut verts = Vec::new();
                // Reserve vertex 0 for the root of j, then build k hanging off it.
                let jr = add_rooted(&mut verts, j, usize::MAX);
                let kr = add_rooted(&mut verts, k, jr);
                if let Vertex::Tri { nbrs } = &mut verts[jr] {
                    nbrs[0] = kr;
                }
                UnitrivalentTree { verts }
            }
        }
    }

    /// `graft(j, k)` together with the univalent vertices that came from `j`.
    pub fn graft_marked(j: &RootedTree, k: &RootedTree) -> (Self, Vec<usize>) {
        let t = Self::graft(j, k);
        let leaves = t.leaf_vertices();
        let from_j = match (j, k) {
            (RootedTree::Leaf(_), _) => vec![0],
            (_, RootedTree::Leaf(_)) => leaves.into_iter().filter(|&v| v != 0).collect(),
            // j occupies the first vertices, followed by k.
            _ => {
                let size_j = 2 * j.order() + 1;
                leaves.into_iter().filter(|&v| v < size_j).collect()
            }
        };
        (t, from_j)
    }

    /// Three rooted branches around one trivalent vertex, in cyclic order.
    pub fn tripod(a: &RootedTree, b: &RootedTree, c: &RootedTree) -> Self {
        let mut verts = vec![Vertex::Tri { nbrs: [0; 3] }];
        let mut nbrs = [0; 3];
        for (i, br) in [a, b, c].into_iter().enumerate() {
            nbrs[i] = add_rooted(&mut verts, br, 0);
        }
        verts[0] = Vertex::Tri { nbrs };
        UnitrivalentTree { verts }
    }

    pub fn order(&self) -> usize {
        self.verts
            .iter()
            .filter(|v| matches!(v, Vertex::Tri { .. }))
            .count()
    }

    /// Indices of the univalent vertices, in construction order.
    pub fn leaf_vertices(&self) -> Vec<usize> {
        (0..self.verts.len())
            .filter(|&i| matches!(self.verts[i], Vertex::Leaf { .. }))
            .collect()
    }

    pub fn label(&self, v: usize) -> Option<Label> {
        match self.verts.get(v) {
            Some(Vertex::Leaf { label, .. }) => Some(*label),
            _ => None,
        }
    }

    pub fn labels(&self) -> Vec<Label> {
        self.leaf_vertices()
            .iter()
            .map(|&v| self.label(v).unwrap())
            .collect()
    }

    /// Checks valences, connectivity, acyclicity, and label consistency.
    pub fn validate(&self) -> Result<()> {
        let n = self.verts.len();
        let bad = |m: String| Err(Error::MalformedTree(m));
        if n < 2 {
            return bad("a tree needs at least two univalent vertices".into());
        }
        let mut edges = 0usize;
        for (i, v) in self.verts.iter().enumerate() {
            let nbrs: Vec<usize> = match v {
                Vertex::Leaf { nbr, .. } => vec![*nbr],
                Vertex::Tri { nbrs } => nbrs.to_vec(),
            };
            for &w in &nbrs {
                if w >= n || w == i {
                    return bad(format!("vertex {i} has an invalid neighbour {w}"));
                }
                let back = match &self.verts[w] {
                    Vertex::Leaf { nbr, .. } => usize::from(*nbr == i),
                    Vertex::Tri { nbrs } => nbrs.iter().filter(|&&x| x == i).count(),
                };
                if back != nbrs.iter().filter(|&&x| x == w).count() {
                    return bad(format!("edge {i}-{w} is not symmetric"));
                }
            }
            edges += nbrs.len();
        }
        if edges != 2 * (n - 1) {
            return bad("edge count does not match a tree".into());
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            let nbrs: Vec<usize> = match &self.verts[v] {
                Vertex::Leaf { nbr, .. } => vec![*nbr],
                Vertex::Tri { nbrs } => nbrs.to_vec(),
            };
            for w in nbrs {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("tree is disconnected".into());
        }
        let labels = self.labels();
        if labels.iter().any(Label::is_strand) && labels.iter().any(Label::is_symplectic) {
            return bad("strand and symplectic labels mixed".into());
        }
        if labels.iter().filter(|l| l.is_infinity()).count() > 1 {
            return bad("more than one inf label".into());
        }
        Ok(())
    }

    pub fn has_infinity(&self) -> bool {
        self.labels().iter().any(Label::is_infinity)
    }

    /// The rooted tree seen from univalent vertex `v`.
    pub fn root_at(&self, v: usize) -> Result<RootedTree> {
        match self.verts.get(v) {
            Some(Vertex::Leaf { nbr, .. }) => Ok(self.hang(*nbr, v)),
            _ => Err(Error::InvalidArgument(format!("vertex {v} is not univalent"))),
        }
    }

    /// Subtree at `v` entered from `from`: cyclic order (from, left, right).
    fn hang(&self, v: usize, from: usize) -> RootedTree {
        match &self.verts[v] {
            Vertex::Leaf { label, .. } => RootedTree::Leaf(*label),
            Vertex::Tri { nbrs } => {
                let i = nbrs.iter().position(|&x| x == from).expect("edge exists");
                let l = nbrs[(i + 1) % 3];
                let r = nbrs[(i + 2) % 3];
                RootedTree::node(self.hang(l, v), self.hang(r, v))
            }
        }
    }

    pub fn canonicalize(&self) -> Result<CanonicalForm> {
        self.validate()?;
        Ok(self.canonicalize_unchecked())
    }

    fn canonicalize_unchecked(&self) -> CanonicalForm {
        let mut best: Option<(Label, RootedTree, i32)> = None;
        let mut symmetric = false;
        for v in self.leaf_vertices() {
            let label = self.label(v).unwrap();
            if let Some((bl, _, _)) = &best {
                if label > *bl {
                    continue;
                }
            }
            let (body, sign, sym) = self.root_at(v).unwrap().canonical();
            symmetric |= sym;
            match &best {
                Some((bl, bb, bs)) if (label, &body) == (*bl, bb) => {
                    if sign != *bs {
                        symmetric = true;
                    }
                }
                Some((bl, bb, _)) if (label, &body) > (*bl, bb) => {}
                _ => best = Some((label, body, sign)),
            }
        }
        let (root, body, sign) = best.expect("a tree has leaves");
        let mut labels = body.leaves();
        labels.push(root);
        labels.sort();
        let order = body.order();
        CanonicalForm {
            tree: CanonicalTree {
                order,
                labels,
                root,
                body,
            },
            sign,
            symmetric,
        }
    }
}

/// Appends `t` as a subtree whose root is adjacent to `parent`; returns its vertex.
fn add_rooted(verts: &mut Vec<Vertex>, t: &RootedTree, parent: usize) -> usize {
    let me = verts.len();
    match t {
        RootedTree::Leaf(l) => {
            verts.push(Vertex::Leaf {
                label: *l,
                nbr: parent,
            });
        }
        RootedTree::Node(a, b) => {
            verts.push(Vertex::Tri {
                nbrs: [parent, 0, 0],
            });
            let la = add_rooted(verts, a, me);
            let lb = add_rooted(verts, b, me);
            verts[me] = Vertex::Tri {
                nbrs: [parent, la, lb],
            };
        }
    }
    me
}

impl CanonicalTree {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Sorted leaf labels.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn root(&self) -> Label {
        self.root
    }

    pub fn body(&self) -> &RootedTree {
        &self.body
    }

    pub fn is_infty(&self) -> bool {
        self.labels.last().is_some_and(Label::is_infinity)
    }

    pub fn to_tree(&self) -> UnitrivalentTree {
        UnitrivalentTree::planted(self.root, &self.body)
    }

    /// `(label of v, T_v)` for every univalent vertex `v`.
    pub fn rootings(&self) -> Vec<(Label, RootedTree)> {
        let t = self.to_tree();
        t.leaf_vertices()
            .into_iter()
            .map(|v| (t.label(v).unwrap(), t.root_at(v).unwrap()))
            .collect()
    }

    /// Canonical data of an already canonical tree, including its symmetry flag.
    pub fn form(&self) -> CanonicalForm {
        self.to_tree().canonicalize_unchecked()
    }
}

impl fmt::Display for CanonicalTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            RootedTree::Leaf(b) => write!(f, "{}-{}", self.root, b),
            RootedTree::Node(a, b) => write!(f, "<{},{},{}>", self.root, a, b),
        }
    }
}

impl fmt::Display for UnitrivalentTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let leaves = self.leaf_vertices();
        let v = leaves[0];
        match self.root_at(v).expect("leaf") {
            RootedTree::Leaf(b) => write!(f, "{}-{}", self.label(v).unwrap(), b),
            RootedTree::Node(a, b) => write!(f, "<{},{},{}>", self.label(v).unwrap(), a, b),
        }
    }
}

/// Canonical form of `graft(j, k)`.
pub fn graft_canonical(j: &RootedTree, k: &RootedTree) -> CanonicalForm {
    UnitrivalentTree::graft(j, k).canonicalize_unchecked()
}

/// `J^inf`: the tree with the root of `j` labeled by `inf`.
pub fn cap_infty(j: &RootedTree) -> Result<UnitrivalentTree> {
    if j.is_leaf() {
        return Err(Error::InvalidArgument(
            "an inf-tree needs a trivalent vertex".into(),
        ));
    }
    let t = UnitrivalentTree::planted(Label::Infinity, j);
    t.validate()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: u32) -> RootedTree {
        RootedTree::strand(i)
    }

    fn n(a: RootedTree, b: RootedTree) -> RootedTree {
        RootedTree::node(a, b)
    }

    #[test]
    fn order_zero() {
        let f = UnitrivalentTree::graft(&s(2), &s(1)).canonicalize().unwrap();
        assert_eq!(f.tree.to_string(), "1-2");
        assert_eq!(f.sign, 1);
        assert!(!f.symmetric);
    }

    #[test]
    fn y_trees() {
        let f = UnitrivalentTree::tripod(&s(1), &s(1), &s(1)).canonicalize().unwrap();
        assert!(f.symmetric);
        let f = UnitrivalentTree::tripod(&s(1), &s(3), &s(2)).canonicalize().unwrap();
        assert_eq!(f.tree.to_string(), "<1,2,3>");
        assert_eq!(f.sign, -1);
        assert!(!f.symmetric);
        let g = UnitrivalentTree::tripod(&s(2), &s(3), &s(1)).canonicalize().unwrap();
        assert_eq!(g.sign, 1);
        assert_eq!(g.tree, f.tree);
    }

    #[test]
    fn rooting() {
        let y = UnitrivalentTree::tripod(&s(1), &s(2), &s(3));
        let v = y.leaf_vertices().into_iter().find(|&v| y.label(v) == Some(Label::Strand(1))).unwrap();
        assert_eq!(y.root_at(v).unwrap(), n(s(2), s(3)));
        let h = UnitrivalentTree::graft(&n(s(1), s(2)), &n(s(3), s(4)));
        let v = h.leaf_vertices().into_iter().find(|&v| h.label(v) == Some(Label::Strand(1))).unwrap();
        assert_eq!(h.root_at(v).unwrap(), n(s(2), n(s(3), s(4))));
        let e = UnitrivalentTree::graft(&s(1), &s(2));
        assert_eq!(e.root_at(0).unwrap(), s(2));
        assert!(y.root_at(y.leaf_vertices().len() + 10).is_err());
    }

    #[test]
    fn doubled_tree_symmetry() {
        // Swapping the halves of J-J preserves every cyclic order.
        let j = n(s(1), s(2));
        let f = UnitrivalentTree::graft(&j, &j).canonicalize().unwrap();
        assert!(!f.symmetric);
        assert_eq!(f.tree.order(), 2);
        // An equal pair of siblings does reverse one cyclic order.
        let g = UnitrivalentTree::graft(&n(s(1), s(1)), &s(2)).canonicalize().unwrap();
        assert!(g.symmetric);
    }

    #[test]
    fn graft_orders() {
        let y = UnitrivalentTree::graft(&n(s(1), s(2)), &s(3)).canonicalize().unwrap();
        assert_eq!(y.tree.to_string(), "<1,2,3>");
        assert_eq!(y.sign, 1);
    }

    #[test]
    fn infinity_cap() {
        let t = cap_infty(&n(s(1), s(2))).unwrap();
        let f = t.canonicalize().unwrap();
        assert!(f.tree.is_infty());
        assert_eq!(f.tree.to_string(), "<1,2,inf>");
        assert!(cap_infty(&s(1)).is_err());
        assert_eq!(cap_infty(&n(n(s(1), s(2)), s(3))).unwrap().order(), 2);
    }

    #[test]
    fn mixed_labels_rejected() {
        let t = UnitrivalentTree::tripod(&s(1), &RootedTree::leaf(Label::X(1)), &s(2));
        assert!(matches!(t.canonicalize(), Err(Error::MalformedTree(_))));
    }
}
