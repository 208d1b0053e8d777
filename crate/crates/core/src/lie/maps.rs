//! Maps between the free Lie algebra `L` and the free quasi-Lie algebra `L'`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::free::{FreeLie, LieElement};
use super::lyndon::standard_bracket;
use super::quasi::{BracketRing, QuasiLieElement};
use crate::abelian::group::SparseVec;
use crate::abelian::{GroupHom, PresentedGroup};
use crate::error::{Error, Result};
use crate::trees::Alphabet;

#[derive(Default, Debug)]
struct Caches {
    symbol_images: BTreeMap<usize, Arc<Vec<LieElement>>>,
    lie_groups: BTreeMap<usize, Arc<PresentedGroup>>,
    lie_mod2_groups: BTreeMap<usize, Arc<PresentedGroup>>,
}

/// `L` and `L'` over one alphabet, with the maps between them.
#[derive(Debug)]
pub struct LieSystem {
    pub lie: FreeLie,
    pub quasi: BracketRing,
    caches: Mutex<Caches>,
}

impl LieSystem {
    pub fn new(alphabet: Alphabet) -> Self {
        LieSystem {
            lie: FreeLie::new(alphabet),
            quasi: BracketRing::quasi(alphabet),
            caches: Mutex::new(Caches::default()),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.lie.alphabet()
    }

    /// Image in `L_n` of every generator symbol of `L'_n`.
    pub fn symbol_images(&self, n: usize) -> Arc<Vec<LieElement>> {
        if let Some(v) = self.caches.lock().unwrap().symbol_images.get(&n) {
            return v.clone();
        }
        let images: Vec<LieElement> = if n == 1 {
            (0..self.lie.letters()).map(|i| self.lie.generator(i)).collect()
        } else {
            let symbols = self.quasi.describe_symbols(n);
            let mut slot_cache: BTreeMap<usize, Vec<LieElement>> = BTreeMap::new();
            let mut out = Vec::with_capacity(symbols.len());
            for &(p, i, j) in symbols.values() {
                for d in [p, n - p] {
                    slot_cache.entry(d).or_insert_with(|| self.slot_images(d));
                }
                let a = &slot_cache[&p][i];
                let b = &slot_cache[&(n - p)][j];
                out.push(self.lie.bracket(a, b));
            }
            out
        };
        let images = Arc::new(images);
        self.caches
            .lock()
            .unwrap()
            .symbol_images
            .entry(n)
            .or_insert(images)
            .clone()
    }

    /// Image in `L_n` of each Smith coordinate generator of `L'_n`.
    fn slot_images(&self, n: usize) -> Vec<LieElement> {
        let group = self.quasi.group(n);
        let sym = self.symbol_images(n);
        (0..group.nslots())
            .map(|k| {
                let mut e = vec![BigInt::zero(); group.nslots()];
                e[k] = BigInt::one();
                self.lie_of_vector(n, &group.section(&e), &sym)
            })
            .collect()
    }

    fn lie_of_vector(&self, n: usize, v: &[BigInt], sym: &[LieElement]) -> LieElement {
        let mut out = self.lie.zero(n);
        for (c, img) in v.iter().zip(sym) {
            if !c.is_zero() {
                out = out.add(&img.scale(c));
            }
        }
        out
    }

    /// The projection `L' -> L` imposing `[X,X] = 0`.
    pub fn quasi_to_lie(&self, q: &QuasiLieElement) -> LieElement {
        let v = self.quasi.section(q);
        self.lie_of_vector(q.degree, &v, &self.symbol_images(q.degree))
    }

    /// Vector over the generator symbols of `L'_n` for the basis bracket `P'_w`.
    pub fn basis_symbol_vector(&self, n: usize, i: usize) -> Vec<BigInt> {
        let w = &self.lie.degree(n).words[i];
        if n == 1 {
            let mut v = vec![BigInt::zero(); self.lie.letters()];
            v[w[0] as usize] = BigInt::one();
            return v;
        }
        self.quasi
            .tree_vector(&standard_bracket(w, self.alphabet()))
            .expect("standard brackets use alphabet letters")
    }

    pub fn basis_quasi(&self, n: usize, i: usize) -> QuasiLieElement {
        self.quasi.element(n, &self.basis_symbol_vector(n, i))
    }

    /// Lift of an odd-degree Lie element to `L'`, where the projection is invertible.
    pub fn lie_to_quasi_odd(&self, a: &LieElement) -> Result<QuasiLieElement> {
        if a.degree.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "no canonical lift in even degree {}",
                a.degree
            )));
        }
        Ok(self.quasi.element(a.degree, &self.lift_vector(a)))
    }

    fn lift_vector(&self, a: &LieElement) -> Vec<BigInt> {
        let n = a.degree;
        let mut v = vec![BigInt::zero(); self.quasi.group(n).ngens()];
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, x) in v.iter_mut().zip(self.basis_symbol_vector(n, i)) {
                *o += c * x;
            }
        }
        v
    }

    /// `sq(sum a_w P_w) = sum (a_w mod 2) [P'_w, P'_w]`, as a symbol vector of `L'_{2k}`.
    pub fn sq_vector(&self, a: &LieElement) -> Vec<BigInt> {
        let k = a.degree;
        let mut v = vec![BigInt::zero(); self.quasi.group(2 * k).ngens()];
        let two = BigInt::from(2);
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.mod_floor(&two).is_zero() {
                continue;
            }
            let p = self.basis_quasi(k, i);
            for (o, x) in v.iter_mut().zip(self.quasi.bracket_vector(&p, &p)) {
                *o += x;
            }
        }
        v
    }

    pub fn sq(&self, a: &LieElement) -> QuasiLieElement {
        self.quasi.element(2 * a.degree, &self.sq_vector(a))
    }

    /// `L_n` as a free group on the Lyndon words.
    pub fn lie_group(&self, n: usize) -> Arc<PresentedGroup> {
        if let Some(g) = self.caches.lock().unwrap().lie_groups.get(&n) {
            return g.clone();
        }
        let g = Arc::new(PresentedGroup::free(self.lyndon_names(n)));
        self.caches.lock().unwrap().lie_groups.entry(n).or_insert(g).clone()
    }

    /// `Z/2 ⊗ L_n`.
    pub fn lie_mod2_group(&self, n: usize) -> Arc<PresentedGroup> {
        if let Some(g) = self.caches.lock().unwrap().lie_mod2_groups.get(&n) {
            return g.clone();
        }
        let names = self.lyndon_names(n);
        let rel = (0..names.len())
            .map(|i| SparseVec::from([(i, BigInt::from(2))]))
            .collect();
        let g = Arc::new(PresentedGroup::present(names, rel));
        self.caches
            .lock()
            .unwrap()
            .lie_mod2_groups
            .entry(n)
            .or_insert(g)
            .clone()
    }

    fn lyndon_names(&self, n: usize) -> Vec<String> {
        self.lie
            .basis_trees(n)
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    pub fn sq_hom(&self, k: usize) -> Result<GroupHom> {
        let images = (0..self.lie.rank(k))
            .map(|i| self.sq_vector(&self.lie.basis_element(k, i)))
            .collect();
        GroupHom::new(self.lie_mod2_group(k), self.quasi.group(2 * k), images)
    }

    pub fn projection_hom(&self, n: usize) -> Result<GroupHom> {
        let images = self
            .symbol_images(n)
            .iter()
            .map(|e| e.coeffs.clone())
            .collect();
        GroupHom::new(self.quasi.group(n), self.lie_group(n), images)
    }

    pub fn lift_hom_odd(&self, n: usize) -> Result<GroupHom> {
        if n.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!("no canonical lift in even degree {n}")));
        }
        let images = (0..self.lie.rank(n))
            .map(|i| self.basis_symbol_vector(n, i))
            .collect();
        GroupHom::new(self.lie_group(n), self.quasi.group(n), images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::verify_short_exact;

    #[test]
    fn sq_of_sum_drops_cross_term() {
        let s = LieSystem::new(Alphabet::Strands(2));
        let x1 = s.lie.generator(0);
        let x2 = s.lie.generator(1);
        let lhs = s.sq(&x1.add(&x2));
        let rhs = s.quasi.add(&s.sq(&x1), &s.sq(&x2));
        assert_eq!(lhs, rhs);
        assert!(!s.sq(&x1).is_zero());
        assert!(s.sq(&s.lie.zero(1)).is_zero());
    }

    #[test]
    fn split_sequence_degree_two() {
        let s = LieSystem::new(Alphabet::Strands(2));
        let f = s.sq_hom(1).unwrap();
        let g = s.projection_hom(2).unwrap();
        let c = f.certify();
        assert!(c.injective);
        assert_eq!(c.cokernel.free_rank(), 1);
        assert!(verify_short_exact(&f, &g).unwrap().passed());
    }

    #[test]
    fn odd_round_trip() {
        let s = LieSystem::new(Alphabet::Strands(2));
        for i in 0..s.lie.rank(3) {
            let a = s.lie.basis_element(3, i);
            assert_eq!(s.quasi_to_lie(&s.lie_to_quasi_odd(&a).unwrap()), a);
        }
        assert!(s.lie_to_quasi_odd(&s.lie.zero(2)).is_err());
    }
}
