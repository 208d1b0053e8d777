//! Free quasi-Lie rings (and, with `alternating`, free Lie rings) built degree
//! by degree as presented abelian groups.
//!
//! Degree `n` is generated by symbols `[e, f]` where `e` and `f` run over the
//! Smith coordinate generators of degrees `p` and `n - p`. Relators: the
//! torsion of each factor, antisymmetry `[e,f] + [f,e]`, the Jacobi identity on
//! all triples of coordinate generators, and `[e,e]` when alternating.

use std::collections::{BTreeMap, HashSet};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abelian::group::{sparse_axpy, SparseVec};
use crate::abelian::PresentedGroup;
use crate::error::{Error, Result};
use crate::trees::{Alphabet, RootedTree};

/// An element of a graded piece, in Smith coordinates of that degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiLieElement {
    pub degree: usize,
    pub coords: Vec<BigInt>,
}

impl QuasiLieElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// One graded piece.
#[derive(Debug)]
pub struct RingDegree {
    pub degree: usize,
    pub group: Arc<PresentedGroup>,
    /// `offsets[p]` is the index of `[slot 0 of degree p, slot 0 of degree n-p]`.
    offsets: Vec<usize>,
    /// Smith coordinates of every generator symbol.
    generator_coords: Vec<Vec<BigInt>>,
}

impl RingDegree {
    pub fn nslots(&self) -> usize {
        self.group.nslots()
    }
}

#[derive(Debug)]
pub struct BracketRing {
    alphabet: Alphabet,
    alternating: bool,
    degrees: Mutex<Vec<Arc<RingDegree>>>,
}

impl BracketRing {
    pub fn quasi(alphabet: Alphabet) -> Self {
        Self::new(alphabet, false)
    }

    pub fn lie(alphabet: Alphabet) -> Self {
        Self::new(alphabet, true)
    }

    fn new(alphabet: Alphabet, alternating: bool) -> Self {
        BracketRing {
            alphabet,
            alternating,
            degrees: Mutex::new(Vec::new()),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_alternating(&self) -> bool {
        self.alternating
    }

    pub fn degree(&self, n: usize) -> Arc<RingDegree> {
        assert!(n >= 1, "degree starts at 1");
        let mut built = self.degrees.lock().unwrap();
        while built.len() < n {
            let next = self.build(built.len() + 1, &built);
            built.push(Arc::new(next));
        }
        built[n - 1].clone()
    }

    pub fn group(&self, n: usize) -> Arc<PresentedGroup> {
        self.degree(n).group.clone()
    }

    /// Index of the generator `[slot i of degree p, slot j of degree n - p]`.
    fn symbol(lower: &[Arc<RingDegree>], offsets: &[usize], n: usize, p: usize, i: usize, j: usize) -> usize {
        offsets[p] + i * lower[n - p - 1].nslots() + j
    }

    fn build(&self, n: usize, lower: &[Arc<RingDegree>]) -> RingDegree {
        if n == 1 {
            let m = self.alphabet.size();
            let group = Arc::new(PresentedGroup::free(
                self.alphabet.labels().iter().map(ToString::to_string).collect(),
            ));
            let generator_coords = (0..m).map(|i| group.coords(&group.generator_vector(i))).collect();
            return RingDegree {
                degree: 1,
                group,
                offsets: vec![0, 0],
                generator_coords,
            };
        }
        let slots = |d: usize| lower[d - 1].nslots();
        let orders = |d: usize| lower[d - 1].group.slot_orders();
        let mut offsets = vec![0; n];
        let mut total = 0;
        for p in 1..n {
            offsets[p] = total;
            total += slots(p) * slots(n - p);
        }
        let sym = |p: usize, i: usize, j: usize| Self::symbol(lower, &offsets, n, p, i, j);
        let mut names = Vec::with_capacity(total);
        for p in 1..n {
            for i in 0..slots(p) {
                for j in 0..slots(n - p) {
                    names.push(format!("[{p}.{i},{}.{j}]", n - p));
                }
            }
        }
        let mut relators: Vec<SparseVec> = Vec::new();
        let mut seen: HashSet<Vec<(usize, BigInt)>> = HashSet::new();
        let mut push = |r: SparseVec, relators: &mut Vec<SparseVec>| {
            if r.is_empty() {
                return;
            }
            let key: Vec<(usize, BigInt)> = r.iter().map(|(k, v)| (*k, v.clone())).collect();
            if seen.insert(key) {
                relators.push(r);
            }
        };
        for p in 1..n {
            let q = n - p;
            let (op, oq) = (orders(p), orders(q));
            for i in 0..slots(p) {
                for j in 0..slots(q) {
                    let s = sym(p, i, j);
                    for d in [&op[i], &oq[j]] {
                        if !d.is_zero() {
                            push(SparseVec::from([(s, d.clone())]), &mut relators);
                        }
                    }
                    let t = sym(q, j, i);
                    let mut r = SparseVec::new();
                    sparse_axpy(&mut r, &BigInt::one(), &SparseVec::from([(s, BigInt::one())]));
                    sparse_axpy(&mut r, &BigInt::one(), &SparseVec::from([(t, BigInt::one())]));
                    push(r, &mut relators);
                    if self.alternating && p == q && i == j {
                        push(SparseVec::from([(s, BigInt::one())]), &mut relators);
                    }
                }
            }
        }
        // [a,[b,c]] expressed through the coordinates of [b,c].
        let outer = |p: usize, a: usize, q: usize, b: usize, r: usize, c: usize| -> SparseVec {
            let inner = &lower[q + r - 1];
            let s = Self::symbol(lower, &inner.offsets, q + r, q, b, c);
            let mut out = SparseVec::new();
            for (k, x) in inner.generator_coords[s].iter().enumerate() {
                if !x.is_zero() {
                    out.insert(sym(p, a, k), x.clone());
                }
            }
            out
        };
        for p in 1..n {
            for q in 1..n - p {
                let r = n - p - q;
                for a in 0..slots(p) {
                    for b in 0..slots(q) {
                        for c in 0..slots(r) {
                            // One representative per cyclic rotation class.
                            let keys = [(p, a), (q, b), (r, c)];
                            if keys[0] > keys[1] || keys[0] > keys[2] {
                                continue;
                            }
                            let mut row = outer(p, a, q, b, r, c);
                            sparse_axpy(&mut row, &BigInt::one(), &outer(q, b, r, c, p, a));
                            sparse_axpy(&mut row, &BigInt::one(), &outer(r, c, p, a, q, b));
                            push(row, &mut relators);
                        }
                    }
                }
            }
        }
        let group = Arc::new(PresentedGroup::present(names, relators));
        let generator_coords = (0..total)
            .map(|s| group.coords(&group.generator_vector(s)))
            .collect();
        RingDegree {
            degree: n,
            group,
            offsets,
            generator_coords,
        }
    }

    /// Vector over the generator symbols of degree `p + q` representing `[a, b]`.
    pub fn bracket_vector(&self, a: &QuasiLieElement, b: &QuasiLieElement) -> Vec<BigInt> {
        let n = a.degree + b.degree;
        let top = self.degree(n);
        let mut out = vec![BigInt::zero(); top.group.ngens()];
        let lower = self.degrees.lock().unwrap().clone();
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    out[Self::symbol(&lower, &top.offsets, n, a.degree, i, j)] += x * y;
                }
            }
        }
        out
    }

    pub fn bracket(&self, a: &QuasiLieElement, b: &QuasiLieElement) -> QuasiLieElement {
        let v = self.bracket_vector(a, b);
        self.element(a.degree + b.degree, &v)
    }

    /// The element with the given vector over the generator symbols of degree `n`.
    pub fn element(&self, n: usize, v: &[BigInt]) -> QuasiLieElement {
        QuasiLieElement {
            degree: n,
            coords: self.degree(n).group.coords(v),
        }
    }

    pub fn zero(&self, n: usize) -> QuasiLieElement {
        QuasiLieElement {
            degree: n,
            coords: vec![BigInt::zero(); self.degree(n).nslots()],
        }
    }

    pub fn generator(&self, letter: usize) -> QuasiLieElement {
        let mut z = self.zero(1);
        z.coords[letter] = BigInt::one();
        z
    }

    /// Value of a bracket monomial.
    pub fn tree(&self, t: &RootedTree) -> Result<QuasiLieElement> {
        match t {
            RootedTree::Leaf(l) => Ok(self.generator(self.alphabet.letter(*l)?)),
            RootedTree::Node(a, b) => Ok(self.bracket(&self.tree(a)?, &self.tree(b)?)),
        }
    }

    /// Vector over generator symbols of a bracket monomial of order at least one.
    pub fn tree_vector(&self, t: &RootedTree) -> Result<Vec<BigInt>> {
        match t {
            RootedTree::Leaf(_) => Err(Error::InvalidArgument(
                "a single letter has no bracket symbol".into(),
            )),
            RootedTree::Node(a, b) => Ok(self.bracket_vector(&self.tree(a)?, &self.tree(b)?)),
        }
    }

    pub fn add(&self, a: &QuasiLieElement, b: &QuasiLieElement) -> QuasiLieElement {
        assert_eq!(a.degree, b.degree);
        let group = self.group(a.degree);
        let v: Vec<BigInt> = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        QuasiLieElement {
            degree: a.degree,
            coords: group.coords(&group.section(&v)),
        }
    }

    pub fn scale(&self, a: &QuasiLieElement, k: &BigInt) -> QuasiLieElement {
        let group = self.group(a.degree);
        let v: Vec<BigInt> = a.coords.iter().map(|x| x * k).collect();
        QuasiLieElement {
            degree: a.degree,
            coords: group.coords(&group.section(&v)),
        }
    }

    /// A vector over generator symbols representing the element.
    pub fn section(&self, a: &QuasiLieElement) -> Vec<BigInt> {
        self.group(a.degree).section(&a.coords)
    }

    /// Generator symbol of each coordinate slot, as a bracket of slots one level down.
    pub fn describe_symbols(&self, n: usize) -> BTreeMap<usize, (usize, usize, usize)> {
        let d = self.degree(n);
        let lower = self.degrees.lock().unwrap().clone();
        let mut out = BTreeMap::new();
        for p in 1..n {
            for i in 0..lower[p - 1].nslots() {
                for j in 0..lower[n - p - 1].nslots() {
                    out.insert(Self::symbol(&lower, &d.offsets, n, p, i, j), (p, i, j));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_structures() {
        let q = BracketRing::quasi(Alphabet::Strands(2));
        let g2 = q.group(2);
        assert_eq!(g2.free_rank(), 1);
        assert_eq!(g2.torsion(), vec![BigInt::from(2), BigInt::from(2)]);
        let g3 = q.group(3);
        assert_eq!((g3.free_rank(), g3.torsion().len()), (2, 0));
        let g4 = q.group(4);
        assert_eq!(g4.free_rank(), 3);
        assert_eq!(g4.torsion(), vec![BigInt::from(2)]);

        let l = BracketRing::lie(Alphabet::Strands(2));
        assert_eq!(l.group(2).free_rank(), 1);
        assert!(l.group(2).torsion().is_empty());
    }

    #[test]
    fn squares_are_nonzero_torsion() {
        let q = BracketRing::quasi(Alphabet::Strands(2));
        let x = q.generator(0);
        let s = q.bracket(&x, &x);
        assert!(!s.is_zero());
        assert!(q.scale(&s, &BigInt::from(2)).is_zero());
    }
}
