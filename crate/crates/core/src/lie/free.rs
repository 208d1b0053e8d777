//! The free Lie algebra over the integers, in the Lyndon basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::lyndon::{lyndon_words, standard_bracket, standard_factorization, Word};
use crate::error::{Error, Result};
use crate::trees::{Alphabet, RootedTree};

/// Homogeneous element of the tensor algebra: word -> coefficient.
pub type Poly = BTreeMap<Word, BigInt>;

pub fn poly_add_scaled(dst: &mut Poly, k: &BigInt, src: &Poly) {
    if k.is_zero() {
        return;
    }
    for (w, x) in src {
        let e = dst.entry(w.clone()).or_insert_with(BigInt::zero);
        *e += k * x;
        if e.is_zero() {
            dst.remove(w);
        }
    }
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (u, x) in a {
        for (v, y) in b {
            let mut w = u.clone();
            w.extend_from_slice(v);
            let e = out.entry(w).or_insert_with(BigInt::zero);
            *e += x * y;
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

/// `ab - ba`
pub fn poly_commutator(a: &Poly, b: &Poly) -> Poly {
    let mut out = poly_mul(a, b);
    poly_add_scaled(&mut out, &-BigInt::one(), &poly_mul(b, a));
    out
}

/// An element of `L_n`: coefficients over the Lyndon words of length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    pub degree: usize,
    pub coeffs: Vec<BigInt>,
}

impl LieElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        assert_eq!(self.degree, other.degree, "adding elements of different degree");
        LieElement {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> LieElement {
        LieElement {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&-BigInt::one())
    }

    /// Coefficients reduced into `{0, 1}`.
    pub fn mod2(&self) -> LieElement {
        let two = BigInt::from(2);
        LieElement {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|a| num_integer::Integer::mod_floor(a, &two))
                .collect(),
        }
    }
}

/// Basis data for one degree.
#[derive(Debug)]
pub struct LieDegree {
    pub words: Vec<Word>,
    pub index: HashMap<Word, usize>,
    /// Tensor-algebra expansion of each standard bracket.
    pub expansions: Vec<Poly>,
}

/// Free Lie algebra on an alphabet, with lazily cached per-degree bases.
#[derive(Debug)]
pub struct FreeLie {
    alphabet: Alphabet,
    cache: Mutex<BTreeMap<usize, Arc<LieDegree>>>,
}

impl FreeLie {
    pub fn new(alphabet: Alphabet) -> Self {
        FreeLie {
            alphabet,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> usize {
        self.alphabet.size()
    }

    pub fn degree(&self, n: usize) -> Arc<LieDegree> {
        assert!(n >= 1, "degree starts at 1");
        if let Some(d) = self.cache.lock().unwrap().get(&n) {
            return d.clone();
        }
        let words = lyndon_words(n, self.letters());
        let mut expansions = Vec::with_capacity(words.len());
        for w in &words {
            expansions.push(self.word_expansion(w));
        }
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let d = Arc::new(LieDegree {
            words,
            index,
            expansions,
        });
        self.cache.lock().unwrap().entry(n).or_insert(d).clone()
    }

    fn word_expansion(&self, w: &[u8]) -> Poly {
        if w.len() == 1 {
            return Poly::from([(w.to_vec(), BigInt::one())]);
        }
        let (u, v) = standard_factorization(w);
        let pu = self.basis_expansion(u);
        let pv = self.basis_expansion(v);
        poly_commutator(&pu, &pv)
    }

    fn basis_expansion(&self, w: &[u8]) -> Poly {
        let d = self.degree(w.len());
        d.expansions[d.index[w]].clone()
    }

    pub fn rank(&self, n: usize) -> usize {
        self.degree(n).words.len()
    }

    pub fn basis_trees(&self, n: usize) -> Vec<RootedTree> {
        self.degree(n)
            .words
            .iter()
            .map(|w| standard_bracket(w, self.alphabet))
            .collect()
    }

    pub fn zero(&self, n: usize) -> LieElement {
        LieElement {
            degree: n,
            coeffs: vec![BigInt::zero(); self.rank(n)],
        }
    }

    pub fn basis_element(&self, n: usize, i: usize) -> LieElement {
        let mut e = self.zero(n);
        e.coeffs[i] = BigInt::one();
        e
    }

    pub fn generator(&self, letter: usize) -> LieElement {
        self.basis_element(1, letter)
    }

    /// Expansion of a bracket monomial in the tensor algebra.
    pub fn expand_tree(&self, t: &RootedTree) -> Result<Poly> {
        Ok(match t {
            RootedTree::Leaf(l) => {
                let i = self.alphabet.letter(*l)?;
                Poly::from([(vec![i as u8], BigInt::one())])
            }
            RootedTree::Node(a, b) => poly_commutator(&self.expand_tree(a)?, &self.expand_tree(b)?),
        })
    }

    pub fn expand(&self, a: &LieElement) -> Poly {
        let d = self.degree(a.degree);
        let mut out = Poly::new();
        for (c, p) in a.coeffs.iter().zip(&d.expansions) {
            poly_add_scaled(&mut out, c, p);
        }
        out
    }

    /// Rewrites a homogeneous Lie polynomial of degree `n` in the Lyndon basis.
    ///
    /// The smallest word in the support of a Lie polynomial is Lyndon, and each
    /// basis expansion has its own word as smallest term with coefficient 1.
    pub fn to_basis(&self, p: &Poly, n: usize) -> Result<LieElement> {
        if let Some(w) = p.keys().find(|w| w.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "term of length {} in a degree {n} element",
                w.len()
            )));
        }
        let d = self.degree(n);
        let mut rest = p.clone();
        let mut out = self.zero(n);
        while let Some((w, c)) = rest.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            let Some(&i) = d.index.get(&w) else {
                return Err(Error::InvalidArgument(
                    "polynomial is not a Lie element".into(),
                ));
            };
            poly_add_scaled(&mut rest, &-&c, &d.expansions[i]);
            out.coeffs[i] += c;
        }
        Ok(out)
    }

    pub fn tree(&self, t: &RootedTree) -> Result<LieElement> {
        self.to_basis(&self.expand_tree(t)?, t.num_leaves())
    }

    /// Integer combination of Lyndon brackets, e.g. `(1,2) - 2*(1,(1,2))`.
    pub fn display(&self, a: &LieElement) -> String {
        let basis = self.basis_trees(a.degree);
        let mut out = String::new();
        for (t, c) in basis.iter().zip(&a.coeffs) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let k = c.abs();
            if !k.is_one() {
                out.push_str(&format!("{k}*"));
            }
            out.push_str(&t.to_string());
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> LieElement {
        let p = poly_commutator(&self.expand(a), &self.expand(b));
        self.to_basis(&p, a.degree + b.degree)
            .expect("brackets of Lie elements are Lie elements")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::parse_rooted;

    #[test]
    fn basics() {
        let l = FreeLie::new(Alphabet::Strands(3));
        let e12 = l.tree(&parse_rooted("(1,2)").unwrap()).unwrap();
        assert_eq!(e12.coeffs, vec![BigInt::one(), BigInt::zero(), BigInt::zero()]);
        assert!(l.tree(&parse_rooted("(1,1)").unwrap()).unwrap().is_zero());
        let a = l.tree(&parse_rooted("((1,2),1)").unwrap()).unwrap();
        let b = l.tree(&parse_rooted("(1,(1,2))").unwrap()).unwrap();
        assert_eq!(a, b.neg());
    }

    #[test]
    fn jacobi() {
        let l = FreeLie::new(Alphabet::Strands(3));
        let x: Vec<LieElement> = (0..3).map(|i| l.generator(i)).collect();
        let j = l
            .bracket(&x[0], &l.bracket(&x[1], &x[2]))
            .add(&l.bracket(&x[1], &l.bracket(&x[2], &x[0])))
            .add(&l.bracket(&x[2], &l.bracket(&x[0], &x[1])));
        assert!(j.is_zero());
    }

    #[test]
    fn non_lie_rejected() {
        let l = FreeLie::new(Alphabet::Strands(2));
        let p = Poly::from([(vec![1, 0], BigInt::one())]);
        assert!(l.to_basis(&p, 2).is_err());
        assert!(l.to_basis(&p, 3).is_err());
    }
}
