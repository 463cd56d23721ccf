//! Operational, counting implementations of every variant, plus the
//! exhaustive small-instance oracle and a seeded Monte Carlo harness.
//!
//! [`run_variant`] executes one sort, counting comparisons and swaps under
//! the variant's own cost model. [`exhaustive_distribution`] enumerates all
//! permutations and all internal random choices with exact probability
//! weights, returning the cost distribution — the independent check of every
//! recurrence. [`monte_carlo`] estimates means over random permutations with
//! per-trial derived random streams, so results are reproducible regardless
//! of scheduling.

mod oracle;
mod partition;

pub use oracle::exhaustive_distribution;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::pgf::{CostKind, Family, VariantId};

use partition::{
    dual_comp_partition, dual_swap_partition, kpivot_partition, lomuto_partition,
    parip_partition, parip_partition_with_pivot, v1_partition, v2_partition, v5_pick,
    ScanPolicy, V5Pick,
};

/// One instrumented sort.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountedRun {
    pub sorted_output: Vec<i64>,
    pub comparisons: u64,
    pub swaps: u64,
}

/// Aggregate of a Monte Carlo experiment. Identical `(variant, n, trials,
/// seed)` inputs produce identical stats.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialStats {
    pub variant: VariantId,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub mean: f64,
    pub sample_variance: f64,
}

#[derive(Debug, Error)]
pub enum SimError {
    #[error("input contains duplicate elements; only distinct values are supported")]
    DuplicateElements,
}

#[derive(Default)]
struct Counters {
    comparisons: u64,
    swaps: u64,
}

/// Sorts `input` under `variant`'s operational definition, counting
/// comparisons and swaps.
pub fn run_variant<R: Rng + ?Sized>(
    variant: VariantId,
    input: &[i64],
    rng: &mut R,
) -> Result<CountedRun, SimError> {
    let mut sorted_check = input.to_vec();
    sorted_check.sort_unstable();
    if sorted_check.windows(2).any(|w| w[0] == w[1]) {
        return Err(SimError::DuplicateElements);
    }
    let mut counters = Counters::default();
    let sorted_output = sort_rec(variant, input.to_vec(), rng, &mut counters);
    Ok(CountedRun {
        sorted_output,
        comparisons: counters.comparisons,
        swaps: counters.swaps,
    })
}

fn sort_rec<R: Rng + ?Sized>(
    variant: VariantId,
    list: Vec<i64>,
    rng: &mut R,
    c: &mut Counters,
) -> Vec<i64> {
    let n = list.len();
    match variant.family() {
        Family::Comp1Pivot => {
            if n <= 1 {
                return list;
            }
            let p = rng.random_range(0..n);
            let pivot = list[p];
            c.comparisons += (n - 1) as u64;
            let left: Vec<i64> = list.iter().copied().filter(|&v| v < pivot).collect();
            let right: Vec<i64> = list.iter().copied().filter(|&v| v > pivot).collect();
            let mut out = sort_rec(variant, left, rng, c);
            out.push(pivot);
            out.extend(sort_rec(variant, right, rng, c));
            out
        }
        Family::SwapV1 | Family::SwapV2 | Family::SwapV3 | Family::SwapV4 | Family::SwapV5 => {
            if n <= 1 {
                return list;
            }
            // the two-candidate scheme improves only the first partition;
            // its sublists are handed to the same-index-suppressing scheme
            let (split, recurse_as) = match variant.family() {
                Family::SwapV1 => (v1_partition(&list), variant),
                Family::SwapV2 => {
                    let idx = rng.random_range(0..n);
                    (v2_partition(&list, idx), variant)
                }
                Family::SwapV3 => (lomuto_partition(&list), variant),
                Family::SwapV4 => (parip_partition(&list), variant),
                Family::SwapV5 => {
                    let (a, b) = two_distinct(rng, n);
                    let pos = match v5_pick(&list, list[a], list[b]) {
                        V5Pick::A => a,
                        V5Pick::B => b,
                        V5Pick::Tie => {
                            if rng.random_range(0..2u8) == 0 {
                                a
                            } else {
                                b
                            }
                        }
                    };
                    (
                        parip_partition_with_pivot(&list, pos),
                        VariantId::new(Family::SwapV4),
                    )
                }
                _ => unreachable!(),
            };
            c.comparisons += split.comparisons;
            c.swaps += split.swaps;
            let mut out = sort_rec(recurse_as, split.left, rng, c);
            out.push(split.pivot);
            out.extend(sort_rec(recurse_as, split.right, rng, c));
            out
        }
        Family::CompDual => {
            if n <= 1 {
                return list;
            }
            let (a, b) = two_distinct(rng, n);
            let split = dual_comp_partition(&list, a, b);
            c.comparisons += split.count;
            let (p1, p2) = {
                let (x, y) = (list[a], list[b]);
                (x.min(y), x.max(y))
            };
            let mut out = sort_rec(variant, split.l1, rng, c);
            out.push(p1);
            out.extend(sort_rec(variant, split.l2, rng, c));
            out.push(p2);
            out.extend(sort_rec(variant, split.l3, rng, c));
            out
        }
        Family::SwapDual => {
            if n <= 1 {
                return list;
            }
            let split = dual_swap_partition(&list);
            c.swaps += split.count;
            let (p1, p2) = {
                let (x, y) = (list[0], list[n - 1]);
                (x.min(y), x.max(y))
            };
            let mut out = sort_rec(variant, split.l1, rng, c);
            out.push(p1);
            out.extend(sort_rec(variant, split.l2, rng, c));
            out.push(p2);
            out.extend(sort_rec(variant, split.l3, rng, c));
            out
        }
        Family::CompThreePivot => kpivot_sort(variant, 3, ScanPolicy::Binary, list, rng, c),
        Family::CompKPivotLinear => kpivot_sort(
            variant,
            variant.pivots() as usize,
            ScanPolicy::Linear,
            list,
            rng,
            c,
        ),
        Family::CompKPivotBinary => kpivot_sort(
            variant,
            variant.pivots() as usize,
            ScanPolicy::Binary,
            list,
            rng,
            c,
        ),
    }
}

fn kpivot_sort<R: Rng + ?Sized>(
    variant: VariantId,
    k: usize,
    policy: ScanPolicy,
    list: Vec<i64>,
    rng: &mut R,
    c: &mut Counters,
) -> Vec<i64> {
    let n = list.len();
    if n < k {
        // short lists fall back to 1-pivot Quicksort
        return sort_rec(VariantId::new(Family::Comp1Pivot), list, rng, c);
    }
    let positions = k_distinct_sorted(rng, n, k);
    let split = kpivot_partition(&list, &positions, policy);
    c.comparisons += split.scan_comparisons;
    // the pivots themselves are sorted with 1-pivot Quicksort
    let sorted_pivots = sort_rec(
        VariantId::new(Family::Comp1Pivot),
        split.pivots_in_order,
        rng,
        c,
    );
    let mut out = Vec::with_capacity(n);
    for (i, sub) in split.sublists.into_iter().enumerate() {
        out.extend(sort_rec(variant, sub, rng, c));
        if i < sorted_pivots.len() {
            out.push(sorted_pivots[i]);
        }
    }
    out
}

fn two_distinct<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (usize, usize) {
    let a = rng.random_range(0..n);
    let mut b = rng.random_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    (a.min(b), a.max(b))
}

fn k_distinct_sorted<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Vec<usize> {
    // partial Fisher-Yates over the index range
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.random_range(i..n);
        idx.swap(i, j);
    }
    let mut chosen = idx[..k].to_vec();
    chosen.sort_unstable();
    chosen
}

/// The statistic a variant's generating function tracks.
fn tracked_count(variant: VariantId, run: &CountedRun) -> u64 {
    match variant.cost_kind() {
        CostKind::Comparisons => run.comparisons,
        CostKind::Swaps => run.swaps,
    }
}

/// Mean and sample variance of the tracked count over `trials` uniform
/// random permutations of `1..=n`.
///
/// Each trial runs on its own random substream derived from `(seed, trial)`,
/// so the aggregate is independent of evaluation order.
pub fn monte_carlo(variant: VariantId, n: usize, trials: u64, seed: u64) -> TrialStats {
    assert!(trials >= 1, "at least one trial required");
    let mut sum: u128 = 0;
    let mut sum_sq: u128 = 0;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial.wrapping_add(1));
        let mut perm: Vec<i64> = (1..=n as i64).collect();
        // Fisher-Yates
        for i in (1..perm.len()).rev() {
            let j = rng.random_range(0..=i);
            perm.swap(i, j);
        }
        let run = run_variant(variant, &perm, &mut rng).expect("permutations are distinct");
        let x = tracked_count(variant, &run) as u128;
        sum += x;
        sum_sq += x * x;
    }
    let t = trials as f64;
    let mean = sum as f64 / t;
    let sample_variance = if trials > 1 {
        ((sum_sq as f64) - (sum as f64) * (sum as f64) / t) / (t - 1.0)
    } else {
        0.0
    };
    TrialStats {
        variant,
        n,
        trials,
        seed,
        mean,
        sample_variance,
    }
}
