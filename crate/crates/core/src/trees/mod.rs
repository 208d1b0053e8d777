//! Labeled vertex-oriented unitrivalent trees, rooted trees and inf-trees.
//!
//! Rooting convention: at a trivalent vertex entered along edge `e`, with
//! cyclic order `(e, a, b)`, the rooted subtree is `Node(a, b)`.

pub mod enumerate;
pub mod label;
pub mod parse;
pub mod rooted;
pub mod unitrivalent;

pub use enumerate::{enumerate_infty_trees, enumerate_trees, sorted_rooted_trees, DEFAULT_TREE_CAP};
pub use label::{Alphabet, Label};
pub use parse::{parse_label, parse_rooted, parse_rooted_sum, parse_tensor_sum, parse_tree, parse_tree_sum};
pub use rooted::RootedTree;
pub use unitrivalent::{cap_infty, graft_canonical, CanonicalForm, CanonicalTree, UnitrivalentTree};
