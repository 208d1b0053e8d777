use std::cmp::Ordering;
use std::fmt;

use super::label::Label;

/// A rooted planar binary tree with labeled leaves, read as a bracket monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootedTree {
    Leaf(Label),
    Node(Box<RootedTree>, Box<RootedTree>),
}

impl RootedTree {
    pub fn leaf(label: Label) -> Self {
        RootedTree::Leaf(label)
    }

    pub fn node(left: RootedTree, right: RootedTree) -> Self {
        RootedTree::Node(Box::new(left), Box::new(right))
    }

    pub fn strand(i: u32) -> Self {
        RootedTree::Leaf(Label::Strand(i))
    }

    /// Number of internal nodes.
    pub fn order(&self) -> usize {
        match self {
            RootedTree::Leaf(_) => 0,
            RootedTree::Node(a, b) => 1 + a.order() + b.order(),
        }
    }

    pub fn num_leaves(&self) -> usize {
        self.order() + 1
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, RootedTree::Leaf(_))
    }

    /// Leaf labels, left to right.
    pub fn leaves(&self) -> Vec<Label> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Label>) {
        match self {
            RootedTree::Leaf(l) => out.push(*l),
            RootedTree::Node(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn map_labels(&self, f: &impl Fn(Label) -> Label) -> RootedTree {
        match self {
            RootedTree::Leaf(l) => RootedTree::Leaf(f(*l)),
            RootedTree::Node(a, b) => RootedTree::node(a.map_labels(f), b.map_labels(f)),
        }
    }

    pub fn count_label(&self, label: Label) -> usize {
        self.leaves().iter().filter(|l| **l == label).count()
    }

    /// Sorts the children at every node, returning the sorted tree, the sign
    /// `(-1)^(number of swaps)`, and whether some node has two equal children.
    pub fn canonical(&self) -> (RootedTree, i32, bool) {
        match self {
            RootedTree::Leaf(_) => (self.clone(), 1, false),
            RootedTree::Node(a, b) => {
                let (ca, sa, ya) = a.canonical();
                let (cb, sb, yb) = b.canonical();
                let sym = ya || yb;
                match ca.cmp(&cb) {
                    Ordering::Greater => (RootedTree::node(cb, ca), -sa * sb, sym),
                    Ordering::Equal => (RootedTree::node(ca, cb), sa * sb, true),
                    Ordering::Less => (RootedTree::node(ca, cb), sa * sb, sym),
                }
            }
        }
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootedTree::Leaf(l) => write!(f, "{l}"),
            RootedTree::Node(a, b) => write!(f, "({a},{b})"),
        }
    }
}
