//! Commutators realized by tree claspers and their leading classes.

use num_bigint::BigInt;

use super::magnus::{lcs_degree, LcsDegree};
use super::word::GroupWord;
use crate::error::{Error, Result};
use crate::lie::{FreeLie, LieElement};
use crate::trees::{Label, RootedTree};

/// The group element of a clasper surgery, up to higher commutators.
#[derive(Clone, Debug)]
pub struct ClasperCommutator {
    /// `±1`
    pub sign: i32,
    pub commutator: GroupWord,
    /// Lower central series degree of the commutator.
    pub degree: usize,
    /// Leading class of the commutator.
    pub leading: LieElement,
    /// `sign · leading`, the class of the surgery effect.
    pub class: LieElement,
}

fn substitute(t: &RootedTree, words: &[GroupWord], omega: Option<&GroupWord>) -> Result<GroupWord> {
    GroupWord::from_tree(t, &|l| match l {
        Label::Strand(i) if (i as usize) <= words.len() => Ok(words[i as usize - 1].clone()),
        Label::Infinity => omega
            .cloned()
            .ok_or_else(|| Error::MalformedTree("inf leaf needs a twisted clasper".into())),
        other => Err(Error::InvalidArgument(format!("no leaf word for label {other}"))),
    })
}

fn finish(sign: i32, commutator: GroupWord, lie: &FreeLie, cap: usize) -> Result<ClasperCommutator> {
    match lcs_degree(&commutator, cap, lie)? {
        LcsDegree::Exact(degree, leading) => Ok(ClasperCommutator {
            sign,
            class: leading.scale(&BigInt::from(sign)),
            commutator,
            degree,
            leading,
        }),
        LcsDegree::AtLeast(_) => Err(Error::ResourceCap {
            what: "lower central series degree".into(),
            count: cap,
            cap,
        }),
    }
}

/// Surgery on a tree clasper of order `n` whose leaves grab `α_1..α_{n+1}`
/// (leaf label `i` of `tree` refers to `words[i-1]`) multiplies by
/// `c^{(-1)^{n-1}}` modulo higher commutators.
pub fn clasper_commutator(tree: &RootedTree, words: &[GroupWord], lie: &FreeLie, cap: usize) -> Result<ClasperCommutator> {
    if tree.is_leaf() {
        return Err(Error::MalformedTree("a clasper needs at least one node".into()));
    }
    if words.len() != tree.num_leaves() {
        return Err(Error::InvalidArgument(format!(
            "a clasper with {} leaves needs {} words, got {}",
            tree.num_leaves(),
            tree.num_leaves(),
            words.len()
        )));
    }
    let n = tree.order();
    let c = substitute(tree, words, None)?;
    let sign = if n % 2 == 1 { 1 } else { -1 };
    finish(sign, c, lie, cap)
}

/// Twisted clasper: the `inf` leaf of `tree` is replaced by `omega`; the sign is `+1`.
pub fn twisted_clasper_commutator(
    tree: &RootedTree,
    words: &[GroupWord],
    omega: &GroupWord,
    lie: &FreeLie,
    cap: usize,
) -> Result<ClasperCommutator> {
    if tree.count_label(Label::Infinity) != 1 {
        return Err(Error::MalformedTree("a twisted clasper has exactly one inf leaf".into()));
    }
    let c = substitute(tree, words, Some(omega))?;
    finish(1, c, lie, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{parse_rooted, Alphabet};

    #[test]
    fn order_two_sign() {
        let a = Alphabet::Strands(3);
        let lie = FreeLie::new(a);
        let words: Vec<GroupWord> = (0..3).map(GroupWord::generator).collect();
        let r = clasper_commutator(&parse_rooted("(1,(2,3))").unwrap(), &words, &lie, 6).unwrap();
        assert_eq!(r.sign, -1);
        assert_eq!(r.degree, 3);
        let one = clasper_commutator(&parse_rooted("(1,2)").unwrap(), &words[..2], &lie, 6).unwrap();
        assert_eq!(one.sign, 1);
        assert_eq!(one.degree, 2);
    }
}
