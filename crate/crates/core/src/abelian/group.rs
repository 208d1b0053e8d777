//! Finitely presented abelian groups.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntMatrix;
use super::smith::smith_columns;

/// Sparse integer vector keyed by generator index.
pub type SparseVec = BTreeMap<usize, BigInt>;

pub fn sparse_from_dense(v: &[BigInt]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for (&i, x) in v {
        out[i] += x;
    }
    out
}

/// `dst += k * src`, dropping entries that cancel.
pub fn sparse_axpy(dst: &mut SparseVec, k: &BigInt, src: &SparseVec) {
    if k.is_zero() {
        return;
    }
    for (&i, x) in src {
        let e = dst.entry(i).or_insert_with(BigInt::zero);
        *e += k * x;
        if e.is_zero() {
            dst.remove(&i);
        }
    }
}

/// Structure summary, as serialized in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
    pub generators: usize,
    pub relators: usize,
}

/// An abelian group given by generators and integer relators.
///
/// Elements are dense integer vectors over the original generators. Unit
/// pivots are eliminated sparsely first; the residual relation matrix is put
/// in Smith form and the column transform is cached, which gives normal forms.
#[derive(Clone)]
pub struct PresentedGroup {
    generators: Vec<String>,
    relators: Vec<SparseVec>,
    eliminations: Vec<(usize, SparseVec)>,
    survivors: Vec<usize>,
    survivor_pos: HashMap<usize, usize>,
    /// Smith diagonal over survivors, zero-padded to `survivors.len()`.
    diag: Vec<BigInt>,
    v: IntMatrix,
    v_inv: IntMatrix,
    /// Smith slots with diagonal entry other than 1; these index coordinates.
    slots: Vec<usize>,
}

impl PresentedGroup {
    pub fn present(generators: Vec<String>, relators: Vec<SparseVec>) -> Self {
        let n = generators.len();
        for r in &relators {
            if let Some((&i, _)) = r.iter().next_back() {
                assert!(i < n, "relator mentions generator {i} of {n}");
            }
        }
        let (eliminations, residual) = eliminate_units(n, &relators);
        let eliminated: BTreeSet<usize> = eliminations.iter().map(|(g, _)| *g).collect();
        let survivors: Vec<usize> = (0..n).filter(|g| !eliminated.contains(g)).collect();
        let survivor_pos: HashMap<usize, usize> =
            survivors.iter().enumerate().map(|(p, &g)| (g, p)).collect();
        let s = survivors.len();
        let dense: Vec<Vec<BigInt>> = residual
            .iter()
            .map(|r| {
                let mut row = vec![BigInt::zero(); s];
                for (g, x) in r {
                    row[survivor_pos[g]] = x.clone();
                }
                row
            })
            .collect();
        let mat = IntMatrix::from_rows(&dense, s);
        let (mut diag, v, v_inv) = smith_columns(&mat);
        diag.resize(s, BigInt::zero());
        let slots = (0..s).filter(|&t| !diag[t].is_one()).collect();
        PresentedGroup {
            generators,
            relators,
            eliminations,
            survivors,
            survivor_pos,
            diag,
            v,
            v_inv,
            slots,
        }
    }

    pub fn present_dense(generators: Vec<String>, relators: &[Vec<BigInt>]) -> Self {
        let rel = relators.iter().map(|r| sparse_from_dense(r)).collect();
        Self::present(generators, rel)
    }

    pub fn free(generators: Vec<String>) -> Self {
        Self::present(generators, Vec::new())
    }

    pub fn free_of_rank(n: usize) -> Self {
        Self::free((0..n).map(|i| format!("e{i}")).collect())
    }

    pub fn trivial() -> Self {
        Self::free(Vec::new())
    }

    /// Cyclic group of order `n` (`n == 0` gives Z).
    pub fn cyclic(n: u64) -> Self {
        let rel = if n == 0 {
            vec![]
        } else {
            vec![SparseVec::from([(0, BigInt::from(n))])]
        };
        Self::present(vec!["g".into()], rel)
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[SparseVec] {
        &self.relators
    }

    pub fn free_rank(&self) -> usize {
        self.diag.iter().filter(|d| d.is_zero()).count()
    }

    /// Invariant factors `>= 2`, each dividing the next.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    /// Order of each coordinate slot (`0` for a free slot).
    pub fn slot_orders(&self) -> Vec<BigInt> {
        self.slots.iter().map(|&t| self.diag[t].clone()).collect()
    }

    pub fn nslots(&self) -> usize {
        self.slots.len()
    }

    pub fn is_trivial_group(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    /// Product of torsion coefficients.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion().iter().product()
    }

    pub fn report(&self) -> GroupReport {
        GroupReport {
            free_rank: self.free_rank(),
            torsion: self
                .torsion()
                .iter()
                .map(|d| d.to_u64().expect("torsion coefficient exceeds u64"))
                .collect(),
            generators: self.ngens(),
            relators: self.relators.len(),
        }
    }

    fn survivor_vector(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ngens(), "element has the wrong length");
        let mut sv = sparse_from_dense(v);
        for (g, expr) in &self.eliminations {
            if let Some(c) = sv.remove(g) {
                sparse_axpy(&mut sv, &c, expr);
            }
        }
        let mut out = vec![BigInt::zero(); self.survivors.len()];
        for (g, x) in sv {
            out[self.survivor_pos[&g]] = x;
        }
        out
    }

    /// Coordinates in the Smith decomposition; torsion slots reduced into `[0, d)`.
    pub fn coords(&self, v: &[BigInt]) -> Vec<BigInt> {
        let w = self.v.left_mul_vec(&self.survivor_vector(v));
        self.slots
            .iter()
            .map(|&t| {
                let d = &self.diag[t];
                if d.is_zero() {
                    w[t].clone()
                } else {
                    w[t].mod_floor(d)
                }
            })
            .collect()
    }

    pub fn coords_sparse(&self, v: &SparseVec) -> Vec<BigInt> {
        self.coords(&dense_from_sparse(v, self.ngens()))
    }

    /// A vector over the generators representing the given coordinates.
    pub fn section(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.slots.len());
        let mut w = vec![BigInt::zero(); self.survivors.len()];
        for (&t, c) in self.slots.iter().zip(coords) {
            w[t] = c.clone();
        }
        let vs = self.v_inv.left_mul_vec(&w);
        let mut out = vec![BigInt::zero(); self.ngens()];
        for (p, &g) in self.survivors.iter().enumerate() {
            out[g] = vs[p].clone();
        }
        out
    }

    /// Canonical representative of the class of `v`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.section(&self.coords(v))
    }

    pub fn is_zero(&self, v: &[BigInt]) -> bool {
        self.coords(v).iter().all(Zero::is_zero)
    }

    pub fn is_zero_sparse(&self, v: &SparseVec) -> bool {
        self.is_zero(&dense_from_sparse(v, self.ngens()))
    }

    pub fn equal(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        self.coords(a) == self.coords(b)
    }

    pub fn generator_vector(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.ngens()];
        v[i] = BigInt::one();
        v
    }

    /// Order of an element, `0` if infinite.
    pub fn element_order(&self, v: &[BigInt]) -> BigInt {
        let c = self.coords(v);
        let mut ord = BigInt::one();
        for (x, d) in c.iter().zip(self.slot_orders()) {
            if x.is_zero() {
                continue;
            }
            if d.is_zero() {
                return BigInt::zero();
            }
            let o = &d / x.gcd(&d);
            ord = ord.lcm(&o);
        }
        ord
    }

    /// Relation lattice of the coordinate space: `d_t e_t` for every torsion slot.
    pub(crate) fn torsion_rows(&self) -> Vec<Vec<BigInt>> {
        let orders = self.slot_orders();
        let k = orders.len();
        orders
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(t, d)| {
                let mut r = vec![BigInt::zero(); k];
                r[t] = d.clone();
                r
            })
            .collect()
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank() > 0 {
            parts.push(if self.free_rank() == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.free_rank())
            });
        }
        let mut counts: BTreeMap<BigInt, usize> = BTreeMap::new();
        for d in self.torsion() {
            *counts.entry(d).or_default() += 1;
        }
        for (d, c) in counts {
            parts.push(if c == 1 {
                format!("Z/{d}")
            } else {
                format!("(Z/{d})^{c}")
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for PresentedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedGroup")
            .field("generators", &self.generators.len())
            .field("relators", &self.relators.len())
            .field("structure", &self.describe())
            .finish()
    }
}

/// Sparse elimination of generators that occur with coefficient ±1 in some relator.
///
/// Returns the substitutions in the order performed and the residual relators,
/// which mention only surviving generators.
fn eliminate_units(n: usize, relators: &[SparseVec]) -> (Vec<(usize, SparseVec)>, Vec<SparseVec>) {
    let mut rows: Vec<Option<SparseVec>> = relators
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| Some(r.clone()))
        .collect();
    let mut occurs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (i, r) in rows.iter().enumerate() {
        for &g in r.as_ref().unwrap().keys() {
            occurs[g].insert(i);
        }
    }
    let mut eliminations = Vec::new();
    loop {
        let mut order: Vec<(usize, usize)> = rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().map(|r| (r.len(), i)))
            .collect();
        order.sort_unstable();
        let mut progress = false;
        for (_, ri) in order {
            let Some(row) = rows[ri].as_ref() else { continue };
            let pivot = row
                .iter()
                .filter(|(_, x)| x.abs().is_one())
                .min_by_key(|(g, _)| (occurs[**g].len(), **g))
                .map(|(g, x)| (*g, x.clone()));
            let Some((g, c)) = pivot else { continue };
            let row = rows[ri].take().unwrap();
            for &h in row.keys() {
                occurs[h].remove(&ri);
            }
            // c*g + rest = 0 with c = ±1, so g = -c * rest.
            let mut expr = row;
            expr.remove(&g);
            let neg_c = -&c;
            for x in expr.values_mut() {
                *x *= &neg_c;
            }
            let touched: Vec<usize> = occurs[g].iter().copied().collect();
            for ti in touched {
                let mut r = rows[ti].take().unwrap();
                let before: BTreeSet<usize> = r.keys().copied().collect();
                let k = r.remove(&g).unwrap();
                sparse_axpy(&mut r, &k, &expr);
                let after: BTreeSet<usize> = r.keys().copied().collect();
                for h in before.difference(&after) {
                    occurs[*h].remove(&ti);
                }
                for h in after.difference(&before) {
                    occurs[*h].insert(ti);
                }
                if !r.is_empty() {
                    rows[ti] = Some(r);
                }
            }
            occurs[g].clear();
            eliminations.push((g, expr));
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let residual = rows.into_iter().flatten().collect();
    (eliminations, residual)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, x)| (i, BigInt::from(x))).collect()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclic_two() {
        let g = PresentedGroup::present(vec!["g".into()], vec![sv(&[(0, 2)])]);
        assert_eq!(g.free_rank(), 0);
        assert_eq!(g.torsion(), vec![BigInt::from(2)]);
        assert_eq!(g.reduce(&big(&[3])), big(&[1]));
        assert!(g.is_zero(&big(&[2])));
    }

    #[test]
    fn free_and_identified() {
        let g = PresentedGroup::free_of_rank(3);
        assert_eq!(g.free_rank(), 3);
        let h = PresentedGroup::present(vec!["a".into(), "b".into()], vec![sv(&[(0, 1), (1, -1)])]);
        assert_eq!(h.free_rank(), 1);
        assert!(h.torsion().is_empty());
        assert!(h.equal(&big(&[1, 0]), &big(&[0, 1])));
    }

    #[test]
    fn elimination_chain() {
        // a = 2b, b = 3c, 12c = 0  ->  Z/12 generated by c.
        let g = PresentedGroup::present(
            vec!["a".into(), "b".into(), "c".into()],
            vec![sv(&[(0, 1), (1, -2)]), sv(&[(1, 1), (2, -3)]), sv(&[(2, 12)])],
        );
        assert_eq!(g.torsion(), vec![BigInt::from(12)]);
        assert_eq!(g.element_order(&big(&[1, 0, 0])), BigInt::from(2));
        assert!(g.is_zero(&big(&[1, 0, -6])));
    }
}
