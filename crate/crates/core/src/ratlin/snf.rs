use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use super::{IntMatrix, Integer};

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal, `d_i | d_{i+1}`,
/// `d_i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<Integer> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Invariant factors other than 0 and 1.
    pub fn torsion(&self) -> Vec<Integer> {
        self.diagonal().into_iter().filter(|d| !d.is_zero() && *d != Integer::from(1)).collect()
    }
}

struct Calc {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Calc {
    fn add_row(&mut self, src: usize, dst: usize, k: &Integer) {
        for m in [&mut self.a, &mut self.u] {
            for j in 0..m.cols() {
                let v = &m[(dst, j)] + k * &m[(src, j)];
                m[(dst, j)] = v;
            }
        }
    }

    fn add_col(&mut self, src: usize, dst: usize, k: &Integer) {
        for m in [&mut self.a, &mut self.v] {
            for i in 0..m.rows() {
                let v = &m[(i, dst)] + k * &m[(i, src)];
                m[(i, dst)] = v;
            }
        }
    }

    fn swap_rows(&mut self, x: usize, y: usize) {
        self.a.swap_rows(x, y);
        self.u.swap_rows(x, y);
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        self.a.swap_cols(x, y);
        self.v.swap_cols(x, y);
    }

    fn negate_row(&mut self, r: usize) {
        for m in [&mut self.a, &mut self.u] {
            for j in 0..m.cols() {
                let v = -&m[(r, j)];
                m[(r, j)] = v;
            }
        }
    }

    /// Smallest nonzero |entry| in the trailing block starting at `t`.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.map_or(true, |(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn process(&mut self) {
        let n = self.a.rows().min(self.a.cols());
        for t in 0..n {
            let Some((pi, pj)) = self.min_entry(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..self.a.rows() {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                    self.add_row(t, i, &-q);
                    if !self.a[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..self.a.cols() {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                    self.add_col(t, j, &-q);
                    if !self.a[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    // a remainder is now smaller than the pivot; move it up and retry
                    let (pi, pj) = self.min_in_cross(t);
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                // row and column are clear; enforce divisibility of the rest
                let p = self.a[(t, t)].clone();
                let bad = (t + 1..self.a.rows())
                    .find(|&i| (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(&p)));
                match bad {
                    Some(i) => self.add_row(i, t, &Integer::from(1)),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
    }

    fn min_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let cand = (t..self.a.rows())
            .map(|i| (i, t))
            .chain((t + 1..self.a.cols()).map(|j| (t, j)));
        for (i, j) in cand {
            let x = &self.a[(i, j)];
            if !x.is_zero() && x.abs() < self.a[best].abs() {
                best = (i, j);
            }
        }
        best
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut calc = Calc {
        a: a.clone(),
        u: IntMatrix::identity(a.rows()),
        v: IntMatrix::identity(a.cols()),
    };
    calc.process();
    SmithDecomposition { u: calc.u, d: calc.a, v: calc.v }
}
