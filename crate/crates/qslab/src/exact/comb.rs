//! Binomial coefficients, factorials, and Stirling numbers of the second kind.

use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!`.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Stirling number of the second kind `S(r, j)`: the number of ways to
/// partition an `r`-element set into `j` nonempty blocks.
///
/// Computed by the triangular recurrence `S(r, j) = j*S(r-1, j) + S(r-1, j-1)`
/// with the triangle cached up to the largest requested row.
///
/// Panics when `j > r`.
pub fn stirling2(r: u32, j: u32) -> BigInt {
    assert!(j <= r, "stirling2: j = {j} exceeds r = {r}");
    static TRIANGLE: OnceLock<Mutex<Vec<Vec<BigInt>>>> = OnceLock::new();
    let table = TRIANGLE.get_or_init(|| Mutex::new(vec![vec![BigInt::one()]]));
    let mut rows = table.lock().expect("stirling table poisoned");
    while rows.len() <= r as usize {
        let prev = rows.last().expect("triangle seeded").clone();
        let rr = rows.len();
        let mut row = Vec::with_capacity(rr + 1);
        for jj in 0..=rr {
            let mut v = BigInt::zero();
            if jj <= rr - 1 {
                v += BigInt::from(jj) * &prev[jj];
            }
            if jj >= 1 {
                v += &prev[jj - 1];
            }
            row.push(v);
        }
        rows.push(row);
    }
    rows[r as usize][j as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    /// Brute-force oracle: assign each of `r` labeled elements to a block in
    /// first-appearance order and tally distinct partitions by block count.
    fn set_partitions_by_blocks(r: usize) -> HashMap<usize, u64> {
        fn rec(assign: &mut Vec<usize>, r: usize, out: &mut HashMap<usize, u64>) {
            if assign.len() == r {
                let blocks = assign.iter().copied().max().map_or(0, |m| m + 1);
                *out.entry(blocks).or_insert(0) += 1;
                return;
            }
            let next_free = assign.iter().copied().max().map_or(0, |m| m + 1);
            for b in 0..=next_free {
                assign.push(b);
                rec(assign, r, out);
                assign.pop();
            }
        }
        let mut out = HashMap::new();
        if r == 0 {
            out.insert(0, 1);
            return out;
        }
        rec(&mut Vec::new(), r, &mut out);
        out
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(3, 7), BigInt::zero());
        assert_eq!(binomial(200, 10).to_string(), "22451004309013280");
    }

    #[test]
    fn factorial_basics() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(10, 5), BigInt::from(42525));
    }

    #[test]
    fn stirling_matches_partition_enumeration() {
        // independent oracle: enumerate set partitions of 4 and 5 elements
        for r in 1..=5usize {
            let counts = set_partitions_by_blocks(r);
            for j in 1..=r {
                assert_eq!(
                    stirling2(r as u32, j as u32),
                    BigInt::from(counts.get(&j).copied().unwrap_or(0)),
                    "S({r},{j})"
                );
            }
        }
    }

    #[test]
    #[should_panic]
    fn stirling_rejects_j_above_r() {
        let _ = stirling2(2, 3);
    }
}
