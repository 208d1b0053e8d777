//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `u * a * v == d`, with `d` diagonal, nonnegative, each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// Diagonal entries `d[0], d[1], ...` up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let mut w = Worker::new(a.clone(), true, true, false);
    w.run();
    Smith {
        u: w.u.expect("tracked"),
        d: w.a,
        v: w.v.expect("tracked"),
    }
}

/// Diagonal of the Smith form together with `V` and `V^-1`, without tracking `U`.
pub(crate) fn smith_columns(a: &IntMatrix) -> (Vec<BigInt>, IntMatrix, IntMatrix) {
    let mut w = Worker::new(a.clone(), false, true, true);
    w.run();
    let diag = (0..w.a.rows().min(w.a.cols()))
        .map(|i| w.a.get(i, i).clone())
        .collect();
    (diag, w.v.expect("tracked"), w.v_inv.expect("tracked"))
}

/// Diagonal only.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let mut w = Worker::new(a.clone(), false, false, false);
    w.run();
    (0..w.a.rows().min(w.a.cols()))
        .map(|i| w.a.get(i, i).clone())
        .collect()
}

struct Worker {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl Worker {
    fn new(a: IntMatrix, track_u: bool, track_v: bool, track_v_inv: bool) -> Self {
        let (m, n) = (a.rows(), a.cols());
        Worker {
            a,
            u: track_u.then(|| IntMatrix::identity(m)),
            v: track_v.then(|| IntMatrix::identity(n)),
            v_inv: track_v_inv.then(|| IntMatrix::identity(n)),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, k);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, k);
        }
        if let Some(vi) = &mut self.v_inv {
            // (A E)^-1 side: E^-1 V^-1 subtracts k * row dst from row src.
            vi.add_row_multiple(src, dst, &-k);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
    }

    /// Smallest nonzero entry in the trailing block starting at `(t, t)`.
    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|b| ax < b.2) {
                    let unit = ax.is_one();
                    best = Some((i, j, ax));
                    if unit {
                        let b = best.unwrap();
                        return Some((b.0, b.1));
                    }
                }
            }
        }
        best.map(|b| (b.0, b.1))
    }

    fn run(&mut self) {
        let (m, n) = (self.a.rows(), self.a.cols());
        for t in 0..m.min(n) {
            let Some((pi, pj)) = self.smallest_in_block(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..m {
                    if self.a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = self.a.get(i, t).div_floor(self.a.get(t, t));
                    self.add_row(i, t, &-q);
                    if !self.a.get(i, t).is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..n {
                    if self.a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = self.a.get(t, j).div_floor(self.a.get(t, t));
                    self.add_col(j, t, &-q);
                    if !self.a.get(t, j).is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    // Bring the smallest remainder in row/column t to the pivot.
                    let mut best = self.a.get(t, t).abs();
                    let mut pos = None;
                    for i in t + 1..m {
                        let x = self.a.get(i, t).abs();
                        if !x.is_zero() && x < best {
                            best = x;
                            pos = Some((i, true));
                        }
                    }
                    for j in t + 1..n {
                        let x = self.a.get(t, j).abs();
                        if !x.is_zero() && x < best {
                            best = x;
                            pos = Some((j, false));
                        }
                    }
                    match pos {
                        Some((i, true)) => self.swap_rows(t, i),
                        Some((j, false)) => self.swap_cols(t, j),
                        None => {}
                    }
                    continue;
                }
                // Row and column are clear; enforce divisibility of the trailing block.
                let p = self.a.get(t, t).clone();
                let bad = (t + 1..m).find(|&i| {
                    (t + 1..n).any(|j| !self.a.get(i, j).is_multiple_of(&p))
                });
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a.get(t, t).is_negative() {
                self.negate_row(t);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> Smith {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        s
    }

    #[test]
    fn two_by_two() {
        let s = check(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn identity_and_zero() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
        let s = check(&IntMatrix::from_i64(&[&[0]]));
        assert_eq!(s.diagonal(), vec![BigInt::zero()]);
    }

    #[test]
    fn columns_variant_tracks_inverse() {
        let a = IntMatrix::from_i64(&[&[4, 6, 2], &[2, 8, 10], &[6, 0, 4]]);
        let (diag, v, vi) = smith_columns(&a);
        assert_eq!(v.mul(&vi), IntMatrix::identity(3));
        assert_eq!(diag, smith_normal_form(&a).diagonal());
    }
}
