//! Exhaustive distribution oracle for small instances.
//!
//! For every permutation of `1..=n`, the variant's operational algorithm is
//! replayed with each internal random choice expanded into weighted branches
//! (pivot positions at `1/n` each, coin flips at `1/2`), and the cost
//! distributions of independent sublists are convolved. Averaging over all
//! `n!` permutations yields the exact cost distribution — with no reference
//! to the recurrences it is meant to check.

use crate::exact::{factorial, ratio, Rational, UniPoly};
use crate::pgf::{Family, VariantId};

use super::partition::{
    dual_comp_partition, dual_swap_partition, kpivot_partition, lomuto_partition,
    parip_partition, parip_partition_with_pivot, v1_partition, v2_partition, v5_pick,
    ScanPolicy, V5Pick,
};

/// The exact cost distribution of `variant` on uniformly random
/// permutations of length `n`, by exhaustive enumeration.
///
/// Panics for `n > 7`; the cost is `n!` times the interior branching.
pub fn exhaustive_distribution(variant: VariantId, n: usize) -> UniPoly {
    assert!(n <= 7, "exhaustive enumeration is limited to n <= 7");
    let mut perm: Vec<i64> = (1..=n as i64).collect();
    let mut total = UniPoly::zero();
    permute(&mut perm, 0, &mut |p| {
        total = total.add(&cost_dist(variant, p));
    });
    total.scale(&Rational::new(1.into(), factorial(n as u64)))
}

fn permute(v: &mut Vec<i64>, start: usize, f: &mut impl FnMut(&[i64])) {
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

/// Cost distribution of one concrete list, all internal randomness expanded.
fn cost_dist(variant: VariantId, list: &[i64]) -> UniPoly {
    let n = list.len();
    match variant.family() {
        Family::Comp1Pivot => comp1_dist(list),
        Family::SwapV1 => {
            if n <= 1 {
                return UniPoly::one();
            }
            let s = v1_partition(list);
            seq_dist(variant, &[&s.left, &s.right]).shift_up(s.swaps as usize)
        }
        Family::SwapV2 => {
            if n <= 1 {
                return UniPoly::one();
            }
            let mut acc = UniPoly::zero();
            for idx in 0..n {
                let s = v2_partition(list, idx);
                let branch = seq_dist(variant, &[&s.left, &s.right]).shift_up(s.swaps as usize);
                acc = acc.add(&branch);
            }
            acc.scale(&ratio(1, n as i64))
        }
        Family::SwapV3 => {
            if n <= 1 {
                return UniPoly::one();
            }
            let s = lomuto_partition(list);
            seq_dist(variant, &[&s.left, &s.right]).shift_up(s.swaps as usize)
        }
        Family::SwapV4 => {
            if n <= 1 {
                return UniPoly::one();
            }
            let s = parip_partition(list);
            seq_dist(variant, &[&s.left, &s.right]).shift_up(s.swaps as usize)
        }
        Family::SwapV5 => {
            if n <= 1 {
                return UniPoly::one();
            }
            // enumerate the two candidate positions; the chosen pivot is
            // relocated to the back and the sublists recurse as the plain
            // same-index-suppressing scheme
            let v4 = VariantId::new(Family::SwapV4);
            let branch = |pos: usize| {
                let s = parip_partition_with_pivot(list, pos);
                seq_dist(v4, &[&s.left, &s.right]).shift_up(s.swaps as usize)
            };
            let mut acc = UniPoly::zero();
            for a in 0..n {
                for b in a + 1..n {
                    let d = match v5_pick(list, list[a], list[b]) {
                        V5Pick::A => branch(a),
                        V5Pick::B => branch(b),
                        V5Pick::Tie => branch(a)
                            .scale(&ratio(1, 2))
                            .add(&branch(b).scale(&ratio(1, 2))),
                    };
                    acc = acc.add(&d);
                }
            }
            acc.scale(&Rational::new(2.into(), (n as i64 * (n as i64 - 1)).into()))
        }
        Family::CompDual => {
            if n <= 1 {
                return UniPoly::one();
            }
            let mut acc = UniPoly::zero();
            for a in 0..n {
                for b in a + 1..n {
                    let s = dual_comp_partition(list, a, b);
                    let branch =
                        seq_dist(variant, &[&s.l1, &s.l2, &s.l3]).shift_up(s.count as usize);
                    acc = acc.add(&branch);
                }
            }
            acc.scale(&Rational::new(2.into(), (n as i64 * (n as i64 - 1)).into()))
        }
        Family::SwapDual => {
            if n <= 1 {
                return UniPoly::one();
            }
            let s = dual_swap_partition(list);
            seq_dist(variant, &[&s.l1, &s.l2, &s.l3]).shift_up(s.count as usize)
        }
        Family::CompThreePivot => kpivot_dist(variant, 3, ScanPolicy::Binary, list),
        Family::CompKPivotLinear => {
            kpivot_dist(variant, variant.pivots() as usize, ScanPolicy::Linear, list)
        }
        Family::CompKPivotBinary => {
            kpivot_dist(variant, variant.pivots() as usize, ScanPolicy::Binary, list)
        }
    }
}

/// 1-pivot comparison distribution of a concrete list (uniform pivot
/// position expanded into branches).
fn comp1_dist(list: &[i64]) -> UniPoly {
    let n = list.len();
    if n <= 1 {
        return UniPoly::one();
    }
    let mut acc = UniPoly::zero();
    for p in 0..n {
        let pivot = list[p];
        let left: Vec<i64> = list.iter().copied().filter(|&v| v < pivot).collect();
        let right: Vec<i64> = list.iter().copied().filter(|&v| v > pivot).collect();
        let branch = comp1_dist(&left).mul(&comp1_dist(&right)).shift_up(n - 1);
        acc = acc.add(&branch);
    }
    acc.scale(&ratio(1, n as i64))
}

/// Convolution of the recursive distributions of independent sublists.
fn seq_dist(variant: VariantId, sublists: &[&[i64]]) -> UniPoly {
    let mut acc = UniPoly::one();
    for sub in sublists {
        acc = acc.mul(&cost_dist(variant, sub));
    }
    acc
}

fn kpivot_dist(variant: VariantId, k: usize, policy: ScanPolicy, list: &[i64]) -> UniPoly {
    let n = list.len();
    if n < k {
        return comp1_dist(list);
    }
    let mut acc = UniPoly::zero();
    let mut count = 0u64;
    let mut positions = Vec::with_capacity(k);
    subsets(n, k, 0, &mut positions, &mut |pos| {
        let s = kpivot_partition(list, pos, policy);
        let mut branch = comp1_dist(&s.pivots_in_order);
        for sub in &s.sublists {
            branch = branch.mul(&cost_dist(variant, sub));
        }
        acc = acc.add(&branch.shift_up(s.scan_comparisons as usize));
        count += 1;
    });
    acc.scale(&Rational::new(1.into(), count.into()))
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    let remaining = k - cur.len();
    for i in start..=n - remaining {
        cur.push(i);
        subsets(n, k, i + 1, cur, f);
        cur.pop();
    }
}
