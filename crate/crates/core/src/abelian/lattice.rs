//! Integer row lattices: echelon bases, canonical remainders, and exact solves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type Row = Vec<BigInt>;

/// Echelon basis of the lattice spanned by a list of integer rows.
///
/// Pivots are positive and strictly increasing by column. With tracking enabled,
/// `transform[k]` writes basis row `k` as a combination of the input rows and
/// `kernel` is a basis of the relations among the input rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    basis: Vec<Row>,
    pivots: Vec<usize>,
    transform: Option<Vec<Row>>,
    kernel: Vec<Row>,
}

fn axpy(dst: &mut [BigInt], k: &BigInt, src: &[BigInt]) {
    if k.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += k * s;
        }
    }
}

fn unit_row(n: usize, i: usize) -> Row {
    let mut r = vec![BigInt::zero(); n];
    r[i] = BigInt::from(1);
    r
}

impl Echelon {
    pub fn new(rows: &[Row], ncols: usize, track: bool) -> Self {
        let nrows = rows.len();
        let mut a: Vec<Row> = rows.to_vec();
        let mut t: Vec<Row> = if track {
            (0..nrows).map(|i| unit_row(nrows, i)).collect()
        } else {
            Vec::new()
        };
        let mut r = 0;
        let mut pivots = Vec::new();
        for c in 0..ncols {
            if r == a.len() {
                break;
            }
            let mut found = false;
            loop {
                let mut best: Option<usize> = None;
                for i in r..a.len() {
                    if a[i][c].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|b| a[i][c].abs() < a[b][c].abs()) {
                        best = Some(i);
                    }
                }
                let Some(b) = best else { break };
                found = true;
                a.swap(r, b);
                if track {
                    t.swap(r, b);
                }
                let mut done = true;
                let (head, tail) = a.split_at_mut(r + 1);
                let prow = &head[r];
                for (off, row) in tail.iter_mut().enumerate() {
                    if row[c].is_zero() {
                        continue;
                    }
                    let q = -row[c].div_floor(&prow[c]);
                    axpy(row, &q, prow);
                    if track {
                        let (th, tt) = t.split_at_mut(r + 1);
                        axpy(&mut tt[off], &q, &th[r]);
                    }
                    if !row[c].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if found {
                if a[r][c].is_negative() {
                    for x in a[r].iter_mut() {
                        *x = -std::mem::take(x);
                    }
                    if track {
                        for x in t[r].iter_mut() {
                            *x = -std::mem::take(x);
                        }
                    }
                }
                pivots.push(c);
                r += 1;
            }
        }
        // Reduce entries above each pivot into [0, pivot).
        for k in 0..r {
            let c = pivots[k];
            for i in 0..k {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = -a[i][c].div_floor(&a[k][c]);
                let (head, tail) = a.split_at_mut(k);
                axpy(&mut head[i], &q, &tail[0]);
                if track {
                    let (th, tt) = t.split_at_mut(k);
                    axpy(&mut th[i], &q, &tt[0]);
                }
            }
        }
        let kernel = if track { t.split_off(r) } else { Vec::new() };
        a.truncate(r);
        Echelon {
            ncols,
            basis: a,
            pivots,
            transform: track.then_some(t),
            kernel,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn basis(&self) -> &[Row] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis of the left kernel of the input rows (requires tracking).
    pub fn kernel(&self) -> &[Row] {
        &self.kernel
    }

    /// Canonical representative of `v` modulo the lattice, plus the basis coefficients removed.
    pub fn reduce_with_coeffs(&self, v: &[BigInt]) -> (Row, Row) {
        assert_eq!(v.len(), self.ncols);
        let mut r = v.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.basis.len()];
        for (k, (row, &c)) in self.basis.iter().zip(&self.pivots).enumerate() {
            if r[c].is_zero() {
                continue;
            }
            let q = r[c].div_floor(&row[c]);
            axpy(&mut r, &-&q, row);
            coeffs[k] = q;
        }
        (r, coeffs)
    }

    pub fn reduce(&self, v: &[BigInt]) -> Row {
        self.reduce_with_coeffs(v).0
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coefficients over the echelon basis, if `v` lies in the lattice.
    pub fn solve_in_basis(&self, v: &[BigInt]) -> Option<Row> {
        let (r, coeffs) = self.reduce_with_coeffs(v);
        r.iter().all(Zero::is_zero).then_some(coeffs)
    }

    /// Coefficients over the original input rows (requires tracking).
    pub fn solve(&self, v: &[BigInt]) -> Option<Row> {
        let t = self.transform.as_ref().expect("solve needs a tracked echelon");
        let coeffs = self.solve_in_basis(v)?;
        let n = t.first().map_or(self.kernel.first().map_or(0, |k| k.len()), |r| r.len());
        let mut out = vec![BigInt::zero(); n];
        for (c, row) in coeffs.iter().zip(t) {
            axpy(&mut out, c, row);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(x: &[&[i64]]) -> Vec<Row> {
        x.iter()
            .map(|r| r.iter().map(|&a| BigInt::from(a)).collect())
            .collect()
    }

    #[test]
    fn echelon_and_kernel() {
        let input = rows(&[&[2, 4, 6], &[1, 2, 3], &[0, 3, 1]]);
        let e = Echelon::new(&input, 3, true);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.kernel().len(), 1);
        let k = &e.kernel()[0];
        for c in 0..3 {
            let s: BigInt = (0..3).map(|i| &k[i] * &input[i][c]).sum();
            assert!(s.is_zero());
        }
        let target = rows(&[&[3, 9, 10]])[0].clone();
        let x = e.solve(&target).unwrap();
        for c in 0..3 {
            let s: BigInt = (0..3).map(|i| &x[i] * &input[i][c]).sum();
            assert_eq!(s, target[c]);
        }
        assert!(e.solve(&rows(&[&[0, 0, 1]])[0]).is_none());
    }

    #[test]
    fn remainder_is_canonical() {
        let a = Echelon::new(&rows(&[&[1, 5], &[0, 10]]), 2, false);
        let b = Echelon::new(&rows(&[&[1, -5], &[0, 10]]), 2, false);
        let v = rows(&[&[1, 0]])[0].clone();
        assert_eq!(a.reduce(&v), b.reduce(&v));
    }
}
