//! Per-partition probability kernels.
//!
//! These are the conditional swap distributions of a single partition step,
//! entering the recurrences as polynomial factors:
//!
//! - [`per_prob`]: SwapV2's first partition given pivot position and rank.
//! - [`ip_prob`]: SwapV4's first partition given the pivot rank.
//! - [`pivot_weight_v5`]: SwapV5's non-uniform pivot-rank distribution.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{binomial, int, ratio, Rational, UniPoly};

/// Swap-count generating function of SwapV2's first partition for a list of
/// length `n` whose pivot sits at position `i` and has rank `k`.
///
/// A swap is incurred by every element standing before the pivot but greater
/// than it, or after the pivot but smaller; with `j` elements before the
/// pivot and smaller, the count is `i + k - 2 - 2j`, and `j` ranges over
/// `max(k-1-n+i, 0) ..= min(i-1, k-1)`.
///
/// Panics unless `n >= 2` and `1 <= k, i <= n`.
pub fn per_prob(n: usize, k: usize, i: usize) -> UniPoly {
    assert!(n >= 2, "per_prob: n must be >= 2");
    assert!((1..=n).contains(&k), "per_prob: rank k out of range");
    assert!((1..=n).contains(&i), "per_prob: position i out of range");

    let j_lo = (k as i64 - 1 - n as i64 + i as i64).max(0) as usize;
    let j_hi = (i - 1).min(k - 1);
    let mut coeffs = vec![Rational::zero(); i + k - 1];
    for j in j_lo..=j_hi {
        let mut p = Rational::from_integer(binomial((i - 1) as u64, j as u64));
        // probability that exactly j of the i-1 earlier elements are smaller
        for s in 0..j {
            p *= ratio((k - 1 - s) as i64, (n - 1 - s) as i64);
        }
        for s in 0..i.saturating_sub(j + 1) {
            p *= ratio((n - k - s) as i64, (n - 1 - j - s) as i64);
        }
        coeffs[i + k - 2 - 2 * j] += p;
    }
    UniPoly::from_coeffs(coeffs)
}

/// Sum of [`per_prob`] over all pivot positions `i = 1..=n`; the SwapV2
/// recurrence consumes this aggregate per rank.
///
/// The straightforward evaluation costs `O(n^3)` products per rank; here
/// successive terms are derived by ratio updates — along `i` for the `j = 0`
/// head term and along `j` within a position — and positions with a
/// nonzero lower `j` bound are covered through the reflection
/// `Q(n,k,i) = Q(n, n+1-k, n+1-i)`, so the whole sum costs one rational
/// multiply per emitted term.
pub(crate) fn per_prob_position_sum(n: usize, k: usize) -> UniPoly {
    let mut coeffs = vec![Rational::zero(); 2 * n];
    accumulate_head_terms(n, k, false, &mut coeffs);
    // positions i > n+1-k have j_lo > 0; their reflections through
    // (k, i) -> (n+1-k, n+1-i) have j_lo = 0, excluding the shared boundary
    // position i = n+1-k which the direct pass already covered
    accumulate_head_terms(n, n + 1 - k, true, &mut coeffs);
    UniPoly::from_coeffs(coeffs)
}

/// Adds `per_prob(n, k, i)` for every position `i` with `j_lo = 0`, i.e.
/// `i <= n+1-k`. With `reflect`, adds the reflected images instead (same
/// coefficients; only the caller's interpretation differs), skipping the
/// boundary `i = n+1-k` to avoid double counting.
fn accumulate_head_terms(n: usize, k: usize, reflect: bool, coeffs: &mut [Rational]) {
    let hi = n + 1 - k;
    let lo = 1;
    // head term for position i: the j = 0 summand
    // B0(i) = prod_{s=0..i-2} (n-k-s)/(n-1-s), updated along i
    let mut head = Rational::one();
    for i in lo..=hi {
        if i >= 2 {
            // extend the product by its s = i-2 factor
            head *= ratio((n - k) as i64 - (i as i64 - 2), (n - 1) as i64 - (i as i64 - 2));
        }
        if reflect && i == hi {
            break;
        }
        // walk j upward from the head term
        let j_hi = (i - 1).min(k - 1);
        let mut term = head.clone();
        let mut exponent = i + k - 2;
        coeffs[exponent] += &term;
        for j in 1..=j_hi {
            // term(j) = term(j-1) * (i-j)(k-j) / (j (n-k-i+j+1))
            let den = n as i64 - k as i64 - i as i64 + j as i64 + 1;
            term *= ratio(((i - j) * (k - j)) as i64, j as i64 * den);
            exponent -= 2;
            coeffs[exponent] += &term;
        }
    }
}

/// Swap-count generating function of SwapV4's first partition for a list of
/// length `n` whose last element (the pivot) has rank `k`.
///
/// For `k < n` the count `s` ranges over `1..=k` with probability
/// `(n-k)/(n-1) * C(k-1, k-s)/C(n-2, k-s)`; a pivot that is already the
/// maximum needs no swap at all, so `k = n` yields the constant 1.
///
/// Panics unless `n >= 2` and `1 <= k <= n`.
pub fn ip_prob(n: usize, k: usize) -> UniPoly {
    assert!(n >= 2, "ip_prob: n must be >= 2");
    assert!((1..=n).contains(&k), "ip_prob: rank k out of range");
    if k == n {
        return UniPoly::one();
    }
    let mut coeffs = vec![Rational::zero(); k + 1];
    // s = 1 term, then ratio updates: coeff(s+1)/coeff(s) = (n-1-k+s)/s
    let mut term = ratio((n - k) as i64, (n - 1) as i64)
        * Rational::new(BigInt::one(), binomial((n - 2) as u64, (k - 1) as u64));
    coeffs[1] = term.clone();
    for s in 1..k {
        term *= ratio((n - 1 - k + s) as i64, s as i64);
        coeffs[s + 1] = term.clone();
    }
    UniPoly::from_coeffs(coeffs)
}

/// SwapV5's probability that the chosen pivot has rank `k` in a list of
/// length `n`: the pivot is whichever of the first and last elements lies
/// closer to the middle rank, ties broken by a fair coin.
///
/// Panics unless `1 <= k <= n`.
pub fn pivot_weight_v5(n: usize, k: usize) -> Rational {
    assert!(n >= 1, "pivot_weight_v5: n must be >= 1");
    assert!((1..=n).contains(&k), "pivot_weight_v5: rank k out of range");
    if n == 1 {
        return int(1);
    }
    // symmetric in k <-> n + 1 - k
    let k = k.min(n + 1 - k);
    if n % 2 == 0 {
        let m = (n / 2) as i64;
        ratio(4 * k as i64 - 3, (2 * m - 1) * 2 * m)
    } else {
        let m = ((n + 1) / 2) as i64;
        if (k as i64) < m {
            ratio(4 * k as i64 - 3, (2 * m - 1) * (2 * m - 2))
        } else {
            ratio(2, 2 * m - 1)
        }
    }
}

/// Independent oracle for [`pivot_weight_v5`]: enumerate all ordered
/// (first, last) rank pairs and apply the closer-to-middle rule directly.
/// Exposed for tests.
pub fn pivot_weight_v5_by_enumeration(n: usize, k: usize) -> Rational {
    assert!((1..=n).contains(&k));
    if n == 1 {
        return int(1);
    }
    // distance of rank r from the middle (n+1)/2, doubled to stay integral
    let dist = |r: usize| (2 * r as i64 - (n as i64 + 1)).abs();
    let mut favorable = Rational::zero();
    for a in 1..=n {
        for b in 1..=n {
            if a == b {
                continue;
            }
            let (da, db) = (dist(a), dist(b));
            let chosen_weight = if da < db {
                if a == k { int(1) } else { int(0) }
            } else if db < da {
                if b == k { int(1) } else { int(0) }
            } else {
                let mut w = Rational::zero();
                if a == k {
                    w += ratio(1, 2);
                }
                if b == k {
                    w += ratio(1, 2);
                }
                w
            };
            favorable += chosen_weight;
        }
    }
    favorable / Rational::from_integer(BigInt::from(n as i64 * (n as i64 - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn per_prob_displayed_example() {
        // the published value for (n, k, i) = (9, 5, 5)
        let p = per_prob(9, 5, 5);
        let expect = UniPoly::from_coeffs(vec![
            ratio(1, 70),
            int(0),
            ratio(8, 35),
            int(0),
            ratio(18, 35),
            int(0),
            ratio(8, 35),
            int(0),
            ratio(1, 70),
        ]);
        assert_eq!(p, expect);
    }

    #[test]
    fn per_prob_trivial_cases() {
        assert_eq!(per_prob(7, 1, 1), UniPoly::one());
        // pivot at position 1 with rank k: exactly k-1 swaps
        for k in 1..=6 {
            assert_eq!(per_prob(6, k, 1), UniPoly::monomial(k - 1, int(1)));
        }
    }

    #[test]
    fn per_prob_matches_permutation_enumeration() {
        // enumerate permutations of [n] with value k at position i and count
        // elements before-and-greater plus after-and-smaller
        fn brute(n: usize, k: usize, i: usize) -> UniPoly {
            let mut values: Vec<usize> = (1..=n).filter(|&v| v != k).collect();
            let mut counts = vec![Rational::zero(); 2 * n];
            let mut total = 0u64;
            permute(&mut values, 0, &mut |rest| {
                let mut swaps = 0usize;
                for (pos, &v) in rest.iter().enumerate() {
                    let before = pos < i - 1;
                    if before && v > k {
                        swaps += 1;
                    }
                    if !before && v < k {
                        swaps += 1;
                    }
                }
                counts[swaps] += Rational::one();
                total += 1;
            });
            UniPoly::from_coeffs(counts).scale(&Rational::new(1.into(), total.into()))
        }
        fn permute(v: &mut Vec<usize>, start: usize, f: &mut impl FnMut(&[usize])) {
            if start == v.len() {
                f(v);
                return;
            }
            for i in start..v.len() {
                v.swap(start, i);
                permute(v, start + 1, f);
                v.swap(start, i);
            }
        }
        for (n, k, i) in [(4, 2, 3), (5, 3, 2), (5, 5, 4), (4, 1, 4)] {
            assert_eq!(per_prob(n, k, i), brute(n, k, i), "({n},{k},{i})");
        }
    }

    #[test]
    fn per_prob_reflection_symmetry() {
        for n in 2..=9 {
            for k in 1..=n {
                for i in 1..=n {
                    assert_eq!(per_prob(n, k, i), per_prob(n, n + 1 - k, n + 1 - i));
                }
            }
        }
    }

    #[test]
    fn per_prob_normalized() {
        for n in 2..=9 {
            for k in 1..=n {
                for i in 1..=n {
                    assert!(per_prob(n, k, i).eval_one().is_one());
                }
            }
        }
    }

    #[test]
    fn position_sum_matches_naive_sum() {
        for n in 2..=12 {
            for k in 1..=n {
                let mut naive = UniPoly::zero();
                for i in 1..=n {
                    naive = naive.add(&per_prob(n, k, i));
                }
                assert_eq!(per_prob_position_sum(n, k), naive, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn ip_prob_examples() {
        assert_eq!(ip_prob(2, 1), UniPoly::monomial(1, int(1)));
        assert_eq!(ip_prob(6, 6), UniPoly::one());
        assert!(ip_prob(5, 3).eval_one().is_one());
        for n in 2..=12 {
            for k in 1..=n {
                assert!(ip_prob(n, k).eval_one().is_one(), "ip_prob({n},{k})");
            }
        }
    }

    #[test]
    fn pivot_weights_normalize_and_match_enumeration() {
        for n in 1..=50 {
            let mut total = Rational::zero();
            for k in 1..=n {
                let w = pivot_weight_v5(n, k);
                assert_eq!(w, pivot_weight_v5_by_enumeration(n, k), "n={n} k={k}");
                total += w;
            }
            assert!(total.is_one(), "weights for n={n} sum to {total}");
        }
    }

    #[test]
    fn pivot_weight_examples() {
        assert_eq!(pivot_weight_v5(1, 1), int(1));
        assert_eq!(pivot_weight_v5(4, 2), ratio(5, 12));
        // odd middle rank: the closer-to-middle rule concentrates mass there
        assert_eq!(pivot_weight_v5(3, 2), ratio(2, 3));
        assert_eq!(pivot_weight_v5(3, 1), ratio(1, 6));
    }

    #[test]
    #[should_panic]
    fn per_prob_rejects_out_of_range() {
        let _ = per_prob(5, 6, 1);
    }

    #[test]
    #[should_panic]
    fn ip_prob_rejects_out_of_range() {
        let _ = ip_prob(4, 0);
    }
}
