//! Exact Phase-I simplex feasibility over the scalar field. Inputs must be
//! exact scalars; pivoting uses Bland's rule, so termination is guaranteed.

use crate::numeric::Scalar;

/// Decides whether `{x >= 0 : A x = b}` is nonempty.
pub fn feasible(a: &[Vec<Scalar>], b: &[Scalar]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let k = a[0].len();
    debug_assert!(a.iter().all(|row| row.len() == k));
    debug_assert!(
        a.iter().flatten().all(Scalar::is_exact) && b.iter().all(Scalar::is_exact),
        "simplex requires exact scalars"
    );

    // Tableau: k structural columns, m artificial columns, rhs.
    let width = k + m + 1;
    let mut t: Vec<Vec<Scalar>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row: Vec<Scalar> = Vec::with_capacity(width);
        let flip = b[i].is_negative();
        for j in 0..k {
            row.push(if flip { -&a[i][j] } else { a[i][j].clone() });
        }
        for j in 0..m {
            row.push(if i == j { Scalar::one() } else { Scalar::zero() });
        }
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }
    // Phase-I objective: minimize the sum of artificials. Stored as the
    // negated reduced-cost row so optimality is "no positive entry".
    let mut cost: Vec<Scalar> = vec![Scalar::zero(); width];
    for row in &t {
        for (c, v) in cost.iter_mut().zip(row.iter()) {
            *c = &*c + v;
        }
    }
    for j in k..k + m {
        cost[j] = Scalar::zero();
    }
    let mut basis: Vec<usize> = (k..k + m).collect();

    loop {
        // Bland: smallest index with positive reduced cost.
        let Some(pivot_col) = (0..k + m).find(|&j| cost[j].is_positive()) else {
            break;
        };
        // Ratio test, ties broken by smallest basis index.
        let mut pivot_row: Option<usize> = None;
        let mut best: Option<Scalar> = None;
        for i in 0..m {
            if t[i][pivot_col].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][pivot_col];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b
                            || (ratio == *b
                                && basis[i] < basis[pivot_row.expect("row set with best")])
                    }
                };
                if better {
                    best = Some(ratio);
                    pivot_row = Some(i);
                }
            }
        }
        let Some(r) = pivot_row else {
            // Unbounded Phase-I cannot happen; treat as infeasible.
            return false;
        };
        // Pivot.
        let piv = t[r][pivot_col].clone();
        for v in t[r].iter_mut() {
            *v = &*v / &piv;
        }
        for i in 0..m {
            if i != r && !t[i][pivot_col].is_zero() {
                let f = t[i][pivot_col].clone();
                for j in 0..width {
                    t[i][j] = &t[i][j] - &(&f * &t[r][j]);
                }
            }
        }
        if !cost[pivot_col].is_zero() {
            let f = cost[pivot_col].clone();
            for j in 0..width {
                cost[j] = &cost[j] - &(&f * &t[r][j]);
            }
        }
        basis[r] = pivot_col;
    }

    // Feasible iff every artificial has value zero.
    (0..m).all(|i| basis[i] < k || t[i][width - 1].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn simple_feasibility() {
        // x + y = 1, x, y >= 0: feasible.
        assert!(feasible(&[vec![s(1), s(1)]], &[s(1)]));
        // x + y = -1: infeasible.
        assert!(!feasible(&[vec![s(1), s(1)]], &[s(-1)]));
        // x = 2, x + y = 1 with x,y >= 0: infeasible (y = -1).
        assert!(!feasible(
            &[vec![s(1), s(0)], vec![s(1), s(1)]],
            &[s(2), s(1)]
        ));
    }

    #[test]
    fn convex_combination() {
        // Is (1,1) a convex combination of (0,0), (2,0), (0,2)? Yes.
        let a = vec![
            vec![s(0), s(2), s(0)],
            vec![s(0), s(0), s(2)],
            vec![s(1), s(1), s(1)],
        ];
        assert!(feasible(&a, &[s(1), s(1), s(1)]));
        // (2,2) is not.
        assert!(!feasible(&a, &[s(2), s(2), s(1)]));
    }
}
