use std::collections::BTreeSet;

use super::label::{Alphabet, Label};
use super::rooted::RootedTree;
use super::unitrivalent::{CanonicalForm, CanonicalTree, UnitrivalentTree};
use crate::error::{Error, Result};

/// Default bound on the number of canonical trees one enumeration may return.
pub const DEFAULT_TREE_CAP: usize = 200_000;

/// Rooted trees with `leaves` leaves over `labels`, children sorted at every node.
pub fn sorted_rooted_trees(leaves: usize, labels: &[Label], cap: usize) -> Result<Vec<RootedTree>> {
    let mut by_size: Vec<Vec<RootedTree>> = vec![Vec::new()];
    by_size.push(labels.iter().map(|&l| RootedTree::Leaf(l)).collect());
    for k in 2..=leaves {
        let mut out = Vec::new();
        for i in 1..=k / 2 {
            let (small, big) = (&by_size[i], &by_size[k - i]);
            for a in small {
                for b in big {
                    if i == k - i && a > b {
                        continue;
                    }
                    let (x, y) = if a <= b { (a, b) } else { (b, a) };
                    out.push(RootedTree::node(x.clone(), y.clone()));
                }
            }
            if out.len() > cap {
                return Err(Error::ResourceCap {
                    what: format!("rooted trees with {k} leaves"),
                    count: out.len(),
                    cap,
                });
            }
        }
        out.sort();
        out.dedup();
        by_size.push(out);
    }
    Ok(by_size.swap_remove(leaves))
}

fn collect(order: usize, alphabet: Alphabet, infty: bool, cap: usize) -> Result<Vec<CanonicalForm>> {
    let ordinary = alphabet.labels();
    let mut body_labels = ordinary.clone();
    if infty {
        body_labels.push(Label::Infinity);
    }
    let bodies = sorted_rooted_trees(order + 1, &body_labels, cap.saturating_mul(64))?;
    let mut found = BTreeSet::new();
    for body in &bodies {
        let leaves = body.leaves();
        let n_inf = leaves.iter().filter(|l| l.is_infinity()).count();
        if n_inf != usize::from(infty) {
            continue;
        }
        let min = leaves.iter().min().copied().expect("nonempty");
        for &root in ordinary.iter().filter(|&&l| l <= min) {
            let form = UnitrivalentTree::planted(root, body).canonicalize()?;
            if form.tree.root() == root && form.tree.body() == body {
                found.insert(form.tree);
                if found.len() > cap {
                    return Err(Error::ResourceCap {
                        what: format!("canonical trees of order {order}"),
                        count: found.len(),
                        cap,
                    });
                }
            }
        }
    }
    Ok(found.into_iter().map(|t| t.form()).collect())
}

/// All canonical trees of the given order over the alphabet, strictly increasing.
pub fn enumerate_trees(order: usize, alphabet: Alphabet, cap: usize) -> Result<Vec<CanonicalForm>> {
    if alphabet.size() == 0 {
        return Err(Error::InvalidArgument("empty label alphabet".into()));
    }
    collect(order, alphabet, false, cap)
}

/// All canonical trees of the given order with exactly one leaf labeled `inf`.
pub fn enumerate_infty_trees(
    order: usize,
    alphabet: Alphabet,
    cap: usize,
) -> Result<Vec<CanonicalForm>> {
    if alphabet.size() == 0 {
        return Err(Error::InvalidArgument("empty label alphabet".into()));
    }
    if order == 0 {
        return Ok(Vec::new());
    }
    collect(order, alphabet, true, cap)
}

/// Canonical trees only, for callers that index generators.
pub fn tree_list(forms: &[CanonicalForm]) -> Vec<CanonicalTree> {
    forms.iter().map(|f| f.tree.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let t = enumerate_trees(0, Alphabet::Strands(2), DEFAULT_TREE_CAP).unwrap();
        let names: Vec<String> = t.iter().map(|f| f.tree.to_string()).collect();
        assert_eq!(names, vec!["1-1", "1-2", "2-2"]);
        assert_eq!(enumerate_trees(1, Alphabet::Strands(1), DEFAULT_TREE_CAP).unwrap().len(), 1);
        assert_eq!(enumerate_infty_trees(1, Alphabet::Strands(1), DEFAULT_TREE_CAP).unwrap().len(), 1);
        assert!(enumerate_infty_trees(0, Alphabet::Strands(3), DEFAULT_TREE_CAP).unwrap().is_empty());
    }

    #[test]
    fn cap_is_reported() {
        let err = enumerate_trees(3, Alphabet::Strands(3), 5).unwrap_err();
        assert!(matches!(err, Error::ResourceCap { cap: 5, .. }));
    }
}
