//! Exact linear algebra over rationals: reduced row echelon form, linear
//! solves, and nullspace bases.
//!
//! Pivoting is deterministic; among the nonzero candidates in a column the
//! entry with the smallest bit footprint is chosen to curb coefficient
//! growth. Exactness is unaffected by the choice.

use num_traits::{Signed, Zero};

use crate::exact::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Outcome of solving `A x = b` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Unique solution.
    Unique(Vec<Rational>),
    /// Consistent but rank-deficient; the particular solution sets every
    /// free variable to zero.
    Underdetermined(Vec<Rational>),
    Inconsistent,
}

fn bit_size(q: &Rational) -> u64 {
    q.numer().abs().bits() + q.denom().bits()
}

/// In-place reduced row echelon form. Returns, per pivot row, the column of
/// its leading 1.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        // smallest nonzero entry in this column at or below `row`
        let mut best: Option<(usize, u64)> = None;
        for r in row..rows {
            if !m[r][col].is_zero() {
                let sz = bit_size(&m[r][col]);
                if best.map_or(true, |(_, b)| sz < b) {
                    best = Some((r, sz));
                }
            }
        }
        let Some((prow, _)) = best else { continue };
        m.swap(row, prow);
        let inv = {
            let p = &m[row][col];
            p.recip()
        };
        for c in col..cols {
            let v = &m[row][c] * &inv;
            m[row][c] = v;
        }
        for r in 0..rows {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..cols {
                let v = &m[r][c] - &factor * &m[row][c];
                m[r][c] = v;
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    pivot_cols
}

/// Solves `A x = b` exactly.
pub fn solve(a: &Matrix, b: &[Rational]) -> SolveOutcome {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    if a.is_empty() {
        return SolveOutcome::Underdetermined(Vec::new());
    }
    let cols = a[0].len();
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivot_cols = rref(&mut aug);
    // a pivot in the augmented column means 0 = 1
    if pivot_cols.contains(&cols) {
        return SolveOutcome::Inconsistent;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &col) in pivot_cols.iter().enumerate() {
        x[col] = aug[row][cols].clone();
    }
    if pivot_cols.len() == cols {
        SolveOutcome::Unique(x)
    } else {
        SolveOutcome::Underdetermined(x)
    }
}

/// Basis of the right nullspace of `A`, one vector per free column of the
/// reduced form, in column order.
pub fn nullspace(a: &Matrix) -> Vec<Vec<Rational>> {
    if a.is_empty() {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut m = a.clone();
    let pivot_cols = rref(&mut m);
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; cols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::from_integer(1.into());
        for (row, &pcol) in pivot_cols.iter().enumerate() {
            v[pcol] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn unique_solve() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        let b = vec![int(3), int(1)];
        assert_eq!(solve(&a, &b), SolveOutcome::Unique(vec![int(2), int(1)]));
    }

    #[test]
    fn inconsistent_solve() {
        let a = vec![vec![int(1), int(1)], vec![int(2), int(2)]];
        let b = vec![int(1), int(3)];
        assert_eq!(solve(&a, &b), SolveOutcome::Inconsistent);
    }

    #[test]
    fn underdetermined_solve_zeroes_free_vars() {
        let a = vec![vec![int(1), int(1)]];
        let b = vec![ratio(1, 2)];
        match solve(&a, &b) {
            SolveOutcome::Underdetermined(x) => assert_eq!(x, vec![ratio(1, 2), int(0)]),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn nullspace_of_rank_one() {
        // kernel of (1 2) is spanned by (-2, 1)
        let a = vec![vec![int(1), int(2)]];
        let ns = nullspace(&a);
        assert_eq!(ns, vec![vec![int(-2), int(1)]]);
    }

    #[test]
    fn nullspace_verifies() {
        let a = vec![
            vec![int(1), int(2), int(3), int(4)],
            vec![int(2), int(4), int(6), int(9)],
        ];
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let dot: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
