//! Generalized harmonic numbers `H_k(n) = sum_{i=1..n} 1/i^k`, exact.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{bigint_pow, Rational};

/// Largest `n` kept in the incremental sweep tables. Sweeps over `n = 0..N`
/// (the moment-fitting use) stay O(1) amortized per step; isolated large
/// arguments go through the balanced-tree summation instead, which keeps
/// every gcd near the final operand size rather than reducing after each of
/// `n` additions.
const TABLE_MAX: usize = 4096;

/// Exact `H_k(n)`. `H_k(0) = 0`.
///
/// Values are memoized per `k`; the tables only grow and are guarded by a
/// lock, so concurrent callers are safe.
///
/// Panics when `k == 0`.
pub fn harmonic(k: u32, n: usize) -> Rational {
    assert!(k >= 1, "harmonic: power k must be >= 1");
    static TABLES: OnceLock<Mutex<HashMap<u32, Vec<Rational>>>> = OnceLock::new();
    static SPOT: OnceLock<Mutex<HashMap<(u32, usize), Rational>>> = OnceLock::new();

    if n > TABLE_MAX {
        let spot = SPOT.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(v) = spot.lock().expect("harmonic spot cache poisoned").get(&(k, n)) {
            return v.clone();
        }
        let value = tree_sum(k, 1, n);
        spot.lock()
            .expect("harmonic spot cache poisoned")
            .insert((k, n), value.clone());
        return value;
    }

    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = tables.lock().expect("harmonic table poisoned");
    let table = map.entry(k).or_insert_with(|| vec![Rational::zero()]);
    while table.len() <= n {
        let i = table.len();
        let step = Rational::new(BigInt::one(), bigint_pow(&BigInt::from(i), k));
        let next = table.last().expect("seeded with H(0)") + step;
        table.push(next);
    }
    table[n].clone()
}

/// `sum_{i=lo..=hi} 1/i^k` by balanced splitting.
fn tree_sum(k: u32, lo: usize, hi: usize) -> Rational {
    if lo == hi {
        return Rational::new(BigInt::one(), bigint_pow(&BigInt::from(lo), k));
    }
    let mid = lo + (hi - lo) / 2;
    tree_sum(k, lo, mid) + tree_sum(k, mid + 1, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn known_values() {
        assert_eq!(harmonic(1, 0), int(0));
        assert_eq!(harmonic(1, 3), ratio(11, 6));
        assert_eq!(harmonic(2, 2), ratio(5, 4));
        assert_eq!(harmonic(1, 4), ratio(25, 12));
        assert_eq!(harmonic(3, 2), ratio(9, 8));
    }

    #[test]
    fn increment_identity() {
        for k in 1..=4u32 {
            for n in 1..=50usize {
                let diff = harmonic(k, n) - harmonic(k, n - 1);
                assert_eq!(diff, Rational::new(1.into(), BigInt::from(n).pow(k)));
            }
        }
    }

    #[test]
    fn tree_path_agrees_with_table_path() {
        for k in 1..=3u32 {
            for n in [1usize, 2, 17, 100] {
                assert_eq!(tree_sum(k, 1, n), harmonic(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    #[should_panic]
    fn rejects_zero_power() {
        let _ = harmonic(0, 3);
    }
}
