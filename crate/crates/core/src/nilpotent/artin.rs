//! Automorphisms of free nilpotent quotients: Artin data, Johnson order and
//! first non-vanishing Milnor invariants.

use num_bigint::BigInt;

use super::magnus::{lcs_degree, magnus, LcsDegree};
use super::word::GroupWord;
use crate::error::{Error, Result};
use crate::lie::FreeLie;
use crate::tree_groups::eta::{bracket_map, TensorElement};
use crate::trees::Alphabet;

/// A discrepancy between two words modulo `F_class`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub monomial: Vec<u8>,
    pub difference: BigInt,
}

/// An endomorphism `x_i ↦ images[i]` of `F / F_class`.
#[derive(Clone, Debug)]
pub struct NilpotentMap {
    alphabet: Alphabet,
    class: usize,
    images: Vec<GroupWord>,
    conjugators: Option<Vec<GroupWord>>,
    violation: Option<Violation>,
}

/// Whether `u ≡ v` modulo `F_class`; on failure reports the first differing monomial.
pub fn congruent(u: &GroupWord, v: &GroupWord, class: usize) -> Option<Violation> {
    let cutoff = class.saturating_sub(1);
    magnus(u, cutoff)
        .first_difference(&magnus(v, cutoff))
        .map(|(monomial, difference)| Violation {
            monomial,
            difference,
        })
}

impl NilpotentMap {
    pub fn from_images(alphabet: Alphabet, images: Vec<GroupWord>, class: usize) -> Result<Self> {
        if images.len() != alphabet.size() {
            return Err(Error::InvalidArgument(format!(
                "expected {} images, got {}",
                alphabet.size(),
                images.len()
            )));
        }
        check_letters(&images, alphabet.size())?;
        Ok(NilpotentMap {
            alphabet,
            class,
            images,
            conjugators: None,
            violation: None,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn images(&self) -> &[GroupWord] {
        &self.images
    }

    /// False when built from longitudes that fail the product condition.
    pub fn validated(&self) -> bool {
        self.violation.is_none()
    }

    pub fn violation(&self) -> Option<&Violation> {
        self.violation.as_ref()
    }

    pub fn conjugators(&self) -> Option<&[GroupWord]> {
        self.conjugators.as_deref()
    }

    /// Image of an arbitrary word.
    pub fn apply(&self, w: &GroupWord) -> GroupWord {
        GroupWord::from_letters(w.letters().iter().flat_map(|&(g, e)| {
            let img = if e > 0 {
                self.images[g].clone()
            } else {
                self.images[g].inverse()
            };
            img.letters().to_vec()
        }))
    }

    /// Whether the map fixes `w` modulo `F_class`.
    pub fn fixes(&self, w: &GroupWord) -> Option<Violation> {
        congruent(&self.apply(w), w, self.class)
    }

    /// `x_i^{-1} f(x_i)`.
    pub fn deviation(&self, i: usize) -> GroupWord {
        GroupWord::generator(i).inverse().mul(&self.images[i])
    }
}

fn check_letters(words: &[GroupWord], m: usize) -> Result<()> {
    for w in words {
        if let Some(g) = w.max_generator() {
            if g >= m {
                return Err(Error::InvalidArgument(format!(
                    "word {w} uses a generator outside the {m}-letter alphabet"
                )));
            }
        }
    }
    Ok(())
}

/// Artin data of a string link: `x_i ↦ λ_i x_i λ_i^{-1}` on `F / F_{n+2}`,
/// checked against `∏ λ_i x_i λ_i^{-1} ≡ x_1 ⋯ x_m`. A failed check leaves the
/// map unvalidated and records the first differing Magnus monomial.
pub fn artin(longitudes: &[GroupWord], n: usize) -> Result<NilpotentMap> {
    let m = longitudes.len();
    if m == 0 {
        return Err(Error::InvalidArgument("at least one longitude is required".into()));
    }
    check_letters(longitudes, m)?;
    let images: Vec<GroupWord> = longitudes
        .iter()
        .enumerate()
        .map(|(i, l)| GroupWord::generator(i).conjugate_by(l))
        .collect();
    let class = n + 2;
    let product = images.iter().fold(GroupWord::identity(), |a, b| a.mul(b));
    let target = (0..m).fold(GroupWord::identity(), |a, i| a.mul(&GroupWord::generator(i)));
    let violation = congruent(&product, &target, class);
    Ok(NilpotentMap {
        alphabet: Alphabet::Strands(m as u32),
        class,
        images,
        conjugators: Some(longitudes.to_vec()),
        violation,
    })
}

/// Johnson filtration degree of a nilpotent map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JohnsonOrder {
    /// Identity on `F / F_{n+1}` but not on `F / F_{n+2}`: order `n - 1`
    /// is the largest `k` with the map trivial on `F / F_{k+2}`.
    Exact(usize),
    /// Trivial on everything the map can see.
    AtLeast(usize),
}

/// The largest `n` with the map the identity on `F / F_{n+2}`.
/// Returns an error if the map is not even the identity on `F / F_2`.
pub fn johnson_order(f: &NilpotentMap) -> Result<JohnsonOrder> {
    let cutoff = f.class.saturating_sub(1);
    let mut first: Option<usize> = None;
    for i in 0..f.images.len() {
        let d = magnus(&f.images[i], cutoff)
            .first_difference(&magnus(&GroupWord::generator(i), cutoff))
            .map(|(w, _)| w.len());
        first = match (first, d) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    match first {
        None => Ok(JohnsonOrder::AtLeast(f.class.saturating_sub(2))),
        Some(d) if d < 2 => Err(Error::Precondition(
            "map does not induce the identity on the abelianization".into(),
        )),
        Some(d) => Ok(JohnsonOrder::Exact(d - 2)),
    }
}

/// First non-vanishing Milnor invariant `μ_k = Σ x_i ⊗ [λ_i]` in `L_1 ⊗ L_{k+1}`.
#[derive(Clone, Debug)]
pub struct MilnorInvariant {
    pub degree: usize,
    pub tensor: TensorElement,
    /// Whether the bracket of the tensor vanishes, i.e. it lies in `D_k`.
    pub in_d: bool,
}

pub fn milnor_first_nonvanishing(f: &NilpotentMap, lie: &FreeLie) -> Result<MilnorInvariant> {
    if !f.validated() {
        return Err(Error::Precondition("longitudes fail the product condition".into()));
    }
    let longitudes = f
        .conjugators
        .as_ref()
        .ok_or_else(|| Error::Precondition("map was not built from longitudes".into()))?;
    let k = match johnson_order(f)? {
        JohnsonOrder::AtLeast(c) => {
            return Err(Error::Precondition(format!("no finite order below the cap {c}")))
        }
        JohnsonOrder::Exact(k) => k,
    };
    if k == 0 {
        return Err(Error::Precondition(
            "linking numbers are nonzero; the invariant is not a tree invariant".into(),
        ));
    }
    let mut components = Vec::with_capacity(longitudes.len());
    for (i, l) in longitudes.iter().enumerate() {
        let class = match lcs_degree(l, k + 2, lie)? {
            LcsDegree::AtLeast(_) => lie.zero(k + 1),
            LcsDegree::Exact(d, e) if d == k + 1 => e,
            LcsDegree::Exact(d, _) => {
                return Err(Error::Precondition(format!(
                    "longitude {} lies in F_{d} but not F_{}; adjust its framing",
                    i + 1,
                    k + 1
                )))
            }
        };
        components.push(class);
    }
    let tensor = TensorElement {
        degree: k,
        components,
    };
    let in_d = bracket_map(&tensor, lie).is_zero();
    Ok(MilnorInvariant {
        degree: k,
        tensor,
        in_d,
    })
}

/// For a map on the symplectic free group that is the identity on `F / F_{k+1}`,
/// the tensor `Σ x_i ⊗ ψ(y_i) - y_i ⊗ ψ(x_i)` where `f(z) = z ψ(z)`.
pub fn symplectic_d_element(f: &NilpotentMap, k: usize, lie: &FreeLie) -> Result<MilnorInvariant> {
    let g = match f.alphabet {
        Alphabet::Symplectic(g) => g as usize,
        Alphabet::Strands(_) => {
            return Err(Error::InvalidArgument("a symplectic alphabet is required".into()))
        }
    };
    if f.class < k + 2 {
        return Err(Error::InvalidArgument(format!(
            "map is only defined modulo F_{}, need F_{}",
            f.class,
            k + 2
        )));
    }
    let mut psi = Vec::with_capacity(2 * g);
    for i in 0..2 * g {
        let c = match lcs_degree(&f.deviation(i), k + 2, lie)? {
            LcsDegree::AtLeast(_) => lie.zero(k + 1),
            LcsDegree::Exact(d, e) if d == k + 1 => e,
            LcsDegree::Exact(d, _) => {
                return Err(Error::Precondition(format!(
                    "map is not the identity on F/F_{}: generator {} moves in degree {d}",
                    k + 1,
                    f.alphabet.label(i)
                )))
            }
        };
        psi.push(c);
    }
    let mut components = vec![lie.zero(k + 1); 2 * g];
    for i in 0..g {
        components[2 * i] = psi[2 * i + 1].clone();
        components[2 * i + 1] = psi[2 * i].neg();
    }
    let tensor = TensorElement {
        degree: k,
        components,
    };
    let in_d = bracket_map(&tensor, lie).is_zero();
    Ok(MilnorInvariant {
        degree: k,
        tensor,
        in_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, a: Alphabet) -> GroupWord {
        GroupWord::parse(s, a).unwrap()
    }

    #[test]
    fn borromean() {
        let a = Alphabet::Strands(3);
        let lie = FreeLie::new(a);
        let ls = [w("[x2,x3]", a), w("[x3,x1]", a), w("[x1,x2]", a)];
        let f = artin(&ls, 2).unwrap();
        assert_eq!(johnson_order(&f).unwrap(), JohnsonOrder::Exact(1));
        let mu = milnor_first_nonvanishing(&f, &lie).unwrap();
        assert!(mu.in_d);
        let y = crate::trees::parse_tree("<1,2,3>").unwrap().canonicalize().unwrap();
        let expect = crate::tree_groups::eta(&y.tree, &lie).unwrap().scale(&BigInt::from(y.sign));
        assert_eq!(mu.tensor, expect);
    }

    #[test]
    fn product_condition_is_checked() {
        let a = Alphabet::Strands(3);
        let ls = [w("[x2,x3]", a), w("1", a), w("1", a)];
        let bad = artin(&ls, 2).unwrap();
        assert!(!bad.validated());
        assert_eq!(bad.violation().unwrap().monomial.len(), 3);
        assert!(artin(&ls, 1).unwrap().validated());
        let id = artin(&[GroupWord::identity(), GroupWord::identity()], 3).unwrap();
        assert_eq!(johnson_order(&id).unwrap(), JohnsonOrder::AtLeast(3));
        assert!(milnor_first_nonvanishing(&id, &FreeLie::new(Alphabet::Strands(2))).is_err());
    }

    #[test]
    fn symplectic_example() {
        let s = Alphabet::Symplectic(2);
        let lie = FreeLie::new(s);
        let f = NilpotentMap::from_images(
            s,
            vec![w("x1 [x2,y2]", s), w("y1", s), w("x2 [y1,x2]", s), w("y2 [y1,y2]", s)],
            3,
        )
        .unwrap();
        let d = symplectic_d_element(&f, 1, &lie).unwrap();
        assert!(d.in_d);
        assert!(!d.tensor.is_zero());
    }
}
