use num_traits::{Signed, Zero};

use super::{LinAlgError, RationalMatrix};

/// Signature (positive minus negative inertia) of a symmetric rational matrix.
///
/// Congruence diagonalization: pivot on the first nonzero diagonal entry of
/// the remaining block; if the diagonal is zero but some off-diagonal entry is
/// not, split off the hyperbolic 2x2 block `[[0, b], [b, 0]]`, which has
/// signature 0. Each step replaces the rest of the matrix by its Schur
/// complement.
pub fn signature_of_symmetric(m: &RationalMatrix) -> Result<i64, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::Shape(format!(
            "signature needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if let Some((row, col)) = m.first_asymmetry() {
        return Err(LinAlgError::NotSymmetric { row, col });
    }

    let n = m.rows();
    let mut a = m.clone();
    let mut sig = 0i64;
    let mut p = 0;
    while p < n {
        if let Some(k) = (p..n).find(|&k| !a[(k, k)].is_zero()) {
            a.swap_rows(p, k);
            a.swap_cols(p, k);
            let d = a[(p, p)].clone();
            sig += if d.is_positive() { 1 } else { -1 };
            for i in p + 1..n {
                if a[(i, p)].is_zero() {
                    continue;
                }
                let f = &a[(i, p)] / &d;
                for j in p + 1..n {
                    if a[(p, j)].is_zero() {
                        continue;
                    }
                    let v = &a[(i, j)] - &f * &a[(p, j)];
                    a[(i, j)] = v;
                }
            }
            p += 1;
            continue;
        }

        let Some((i, j)) = (p..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[(i, j)].is_zero())
        else {
            break;
        };
        a.swap_rows(p, i);
        a.swap_cols(p, i);
        a.swap_rows(p + 1, j);
        a.swap_cols(p + 1, j);
        let b = a[(p, p + 1)].clone();
        // S' = S - C B^{-1} C^T with B^{-1} = [[0, 1/b], [1/b, 0]]
        for k in p + 2..n {
            for l in p + 2..n {
                let cross = &a[(k, p)] * &a[(l, p + 1)] + &a[(k, p + 1)] * &a[(l, p)];
                if cross.is_zero() {
                    continue;
                }
                let v = &a[(k, l)] - cross / &b;
                a[(k, l)] = v;
            }
        }
        p += 2;
    }
    Ok(sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: usize, data: &[i64]) -> i64 {
        signature_of_symmetric(&RationalMatrix::from_i64(n, n, data).unwrap()).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(sig(1, &[2]), 1);
        assert_eq!(sig(2, &[1, 0, 0, -3]), 0);
        assert_eq!(sig(2, &[0, 1, 1, 0]), 0);
        assert_eq!(sig(0, &[]), 0);
        assert_eq!(sig(2, &[-1, 0, 0, -1]), -2);
    }

    #[test]
    fn hyperbolic_block_with_tail() {
        // [[0,1,1],[1,0,0],[1,0,-1]]: det = 1, trace -1 -> eigenvalue signs (+,-,-)
        assert_eq!(sig(3, &[0, 1, 1, 1, 0, 0, 1, 0, -1]), -1);
        // zero diagonal 3x3 all-ones off-diagonal: eigenvalues 2, -1, -1
        assert_eq!(sig(3, &[0, 1, 1, 1, 0, 1, 1, 1, 0]), -1);
    }

    #[test]
    fn degenerate_form() {
        // [[1,1],[1,1]] has eigenvalues 2 and 0
        assert_eq!(sig(2, &[1, 1, 1, 1]), 1);
        assert_eq!(sig(3, &[0; 9]), 0);
    }

    #[test]
    fn rejects_non_symmetric_and_non_square() {
        let m = RationalMatrix::from_i64(2, 2, &[0, 1, 2, 0]).unwrap();
        assert_eq!(
            signature_of_symmetric(&m),
            Err(LinAlgError::NotSymmetric { row: 0, col: 1 })
        );
        let m = RationalMatrix::from_i64(1, 2, &[0, 1]).unwrap();
        assert!(matches!(signature_of_symmetric(&m), Err(LinAlgError::Shape(_))));
    }
}
