//! Small exact linear solves shared by vertex enumeration and envelope
//! evaluation.

use crate::numeric::Scalar;

/// Solves the square system `M x = b` by exact Gauss-Jordan elimination;
/// `None` when the matrix is singular.
pub fn solve_square_system(m: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = b.len();
    debug_assert!(m.len() == n && m.iter().all(|r| r.len() == n));
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        let p = a[col][col].clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &p;
                for c in col..n {
                    a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                }
                rhs[r] = &rhs[r] - &(&f * &rhs[col]);
            }
        }
    }
    Some((0..n).map(|i| &rhs[i] / &a[i][i]).collect())
}
