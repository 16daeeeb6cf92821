use num_traits::{One, Zero};

use super::{Rational, RationalMatrix};

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &RationalMatrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].recip();
        for j in c..cols {
            let v = &a[(r, j)] * &inv;
            a[(r, j)] = v;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let v = &a[(i, j)] - &f * &a[(r, j)];
                a[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { matrix: a, pivots }
}

pub fn rank(m: &RationalMatrix) -> usize {
    rref(m).pivots.len()
}

/// Basis of the right null space `{v : M v = 0}`, one vector per free column.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let Rref { matrix: r, pivots } = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `M x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(m: &RationalMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(b.len(), m.rows(), "right-hand side length does not match row count");
    let augmented = RationalMatrix::from_fn(m.rows(), m.cols() + 1, |i, j| {
        if j < m.cols() {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let Rref { matrix: r, pivots } = rref(&augmented);
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![Rational::zero(); m.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, m.cols())].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::rat;

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(kernel_basis(&RationalMatrix::identity(3)).is_empty());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let k = kernel_basis(&RationalMatrix::zeros(2, 2));
        assert_eq!(k.len(), 2);
        assert_eq!(rank(&RationalMatrix::from_rows(k).unwrap()), 2);
    }

    #[test]
    fn kernel_of_single_equation() {
        let m = RationalMatrix::from_i64(1, 2, &[1, 1]).unwrap();
        assert_eq!(kernel_basis(&m), vec![vec![rat(-1, 1), rat(1, 1)]]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = RationalMatrix::from_i64(2, 2, &[2, 0, 0, 0]).unwrap();
        assert_eq!(solve(&m, &[rat(3, 1), rat(0, 1)]), Some(vec![rat(3, 2), rat(0, 1)]));
        assert_eq!(solve(&m, &[rat(3, 1), rat(1, 1)]), None);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = RationalMatrix::from_i64(3, 3, &[1, 2, 3, 2, 4, 6, 1, 0, 1]).unwrap();
        assert_eq!(rank(&m), 2);
        for v in kernel_basis(&m) {
            assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }
}
