//! Truncated Magnus expansion `x_i ↦ 1 + X_i`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::word::GroupWord;
use crate::error::{Error, Result};
use crate::lie::{FreeLie, LieElement, Poly};

/// Noncommutative power series in `X_0..X_{m-1}` truncated above degree `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusSeries {
    pub cutoff: usize,
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl MagnusSeries {
    pub fn one(cutoff: usize) -> Self {
        MagnusSeries {
            cutoff,
            terms: BTreeMap::from([(Vec::new(), BigInt::one())]),
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u8>, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, word: &[u8]) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `1 + X_i` or its inverse `Σ (-X_i)^k`.
    pub fn letter(g: usize, exp: i8, cutoff: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), BigInt::one());
        if exp > 0 {
            if cutoff >= 1 {
                terms.insert(vec![g as u8], BigInt::one());
            }
        } else {
            for k in 1..=cutoff {
                let sign = if k % 2 == 1 { -1 } else { 1 };
                terms.insert(vec![g as u8; k], BigInt::from(sign));
            }
        }
        MagnusSeries { cutoff, terms }
    }

    pub fn mul(&self, other: &MagnusSeries) -> Self {
        let cutoff = self.cutoff.min(other.cutoff);
        let mut terms: BTreeMap<Vec<u8>, BigInt> = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if u.len() + v.len() > cutoff {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                *terms.entry(w).or_insert_with(BigInt::zero) += a * b;
            }
        }
        terms.retain(|_, x| !x.is_zero());
        MagnusSeries { cutoff, terms }
    }

    /// Homogeneous part of degree `k`.
    pub fn degree_part(&self, k: usize) -> Poly {
        self.terms
            .iter()
            .filter(|(w, _)| w.len() == k)
            .map(|(w, x)| (w.clone(), x.clone()))
            .collect()
    }

    /// Smallest positive degree with a nonzero term.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).filter(|&d| d > 0).min()
    }

    /// Smallest word (by degree, then lexicographically) where two series differ.
    pub fn first_difference(&self, other: &MagnusSeries) -> Option<(Vec<u8>, BigInt)> {
        let mut keys: Vec<&Vec<u8>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        keys.dedup();
        keys.into_iter().find_map(|w| {
            let d = self.coefficient(w) - other.coefficient(w);
            (!d.is_zero()).then(|| (w.clone(), d))
        })
    }
}

pub fn magnus(w: &GroupWord, cutoff: usize) -> MagnusSeries {
    let mut s = MagnusSeries::one(cutoff);
    for &(g, e) in w.letters() {
        s = s.mul(&MagnusSeries::letter(g, e, cutoff));
    }
    s
}

/// Position of a word in the lower central series, with its leading Lie class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LcsDegree {
    /// `w ∈ F_k \ F_{k+1}`, with the class of `w` in `F_k / F_{k+1} ≅ L_k`.
    Exact(usize, LieElement),
    /// `w ∈ F_cap`; nothing is visible below the cutoff.
    AtLeast(usize),
}

impl LcsDegree {
    pub fn degree(&self) -> Option<usize> {
        match self {
            LcsDegree::Exact(k, _) => Some(*k),
            LcsDegree::AtLeast(_) => None,
        }
    }

    pub fn leading(&self) -> Option<&LieElement> {
        match self {
            LcsDegree::Exact(_, e) => Some(e),
            LcsDegree::AtLeast(_) => None,
        }
    }
}

/// Detects the lower central series degree of `w` below `cap`.
pub fn lcs_degree(w: &GroupWord, cap: usize, lie: &FreeLie) -> Result<LcsDegree> {
    if let Some(g) = w.max_generator() {
        if g >= lie.letters() {
            return Err(Error::InvalidArgument(format!(
                "word uses generator {} beyond the alphabet",
                g + 1
            )));
        }
    }
    let s = magnus(w, cap.saturating_sub(1));
    match s.lowest_degree() {
        None => Ok(LcsDegree::AtLeast(cap)),
        Some(k) => {
            let leading = lie.to_basis(&s.degree_part(k), k).map_err(|_| {
                Error::Consistency("leading Magnus term of a group element is not primitive".into())
            })?;
            Ok(LcsDegree::Exact(k, leading))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::Alphabet;

    fn series(entries: &[(&[u8], i64)]) -> BTreeMap<Vec<u8>, BigInt> {
        entries.iter().map(|(w, x)| (w.to_vec(), BigInt::from(*x))).collect()
    }

    #[test]
    fn small_expansions() {
        let x1 = GroupWord::generator(0);
        assert_eq!(magnus(&x1, 3).terms(), &series(&[(&[], 1), (&[0], 1)]));
        assert_eq!(
            magnus(&x1.inverse(), 2).terms(),
            &series(&[(&[], 1), (&[0], -1), (&[0, 0], 1)])
        );
        let c = GroupWord::commutator(&x1, &GroupWord::generator(1));
        assert_eq!(magnus(&c, 2).terms(), &series(&[(&[], 1), (&[0, 1], 1), (&[1, 0], -1)]));
    }

    #[test]
    fn lcs() {
        let lie = FreeLie::new(Alphabet::Strands(3));
        let a = Alphabet::Strands(3);
        let w = GroupWord::parse("[x1,[x2,x3]]", a).unwrap();
        let d = lcs_degree(&w, 6, &lie).unwrap();
        let expect = lie.tree(&crate::trees::parse_rooted("(1,(2,3))").unwrap()).unwrap();
        assert_eq!(d, LcsDegree::Exact(3, expect));
        assert_eq!(lcs_degree(&GroupWord::identity(), 6, &lie).unwrap(), LcsDegree::AtLeast(6));
        assert_eq!(lcs_degree(&GroupWord::generator(0), 6, &lie).unwrap().degree(), Some(1));
    }
}
