//! Deterministic partition steps shared by the sampled runner and the
//! exhaustive oracle.
//!
//! Each function performs one partition of one variant given all random
//! choices, returning the swap/comparison counts it incurred and the actual
//! sublists in the order the operational algorithm leaves them.

/// Outcome of a single-pivot partition.
pub(crate) struct Split {
    pub comparisons: u64,
    pub swaps: u64,
    pub pivot: i64,
    pub left: Vec<i64>,
    pub right: Vec<i64>,
}

/// First element is the pivot; each smaller element is shifted in front of
/// it (one swap each), larger elements keep their relative order.
pub(crate) fn v1_partition(list: &[i64]) -> Split {
    let pivot = list[0];
    let rest = &list[1..];
    let left: Vec<i64> = rest.iter().copied().filter(|&v| v < pivot).collect();
    let right: Vec<i64> = rest.iter().copied().filter(|&v| v > pivot).collect();
    Split {
        comparisons: rest.len() as u64,
        swaps: left.len() as u64,
        pivot,
        left,
        right,
    }
}

/// Pivot at `pivot_idx`. Earlier elements greater than the pivot are moved
/// to the end of the list; later elements smaller than the pivot are moved
/// to the pivot's slot. Each move is one swap.
pub(crate) fn v2_partition(list: &[i64], pivot_idx: usize) -> Split {
    let pivot = list[pivot_idx];
    let prefix = &list[..pivot_idx];
    let suffix = &list[pivot_idx + 1..];
    let prefix_small: Vec<i64> = prefix.iter().copied().filter(|&v| v < pivot).collect();
    let prefix_large: Vec<i64> = prefix.iter().copied().filter(|&v| v > pivot).collect();
    let suffix_small: Vec<i64> = suffix.iter().copied().filter(|&v| v < pivot).collect();
    let suffix_large: Vec<i64> = suffix.iter().copied().filter(|&v| v > pivot).collect();
    let swaps = (prefix_large.len() + suffix_small.len()) as u64;
    let mut left = prefix_small;
    left.extend_from_slice(&suffix_small);
    let mut right = suffix_large;
    right.extend_from_slice(&prefix_large);
    Split {
        comparisons: (list.len() - 1) as u64,
        swaps,
        pivot,
        left,
        right,
    }
}

/// The classic single-pass in-place partition, pivot last: swaps are counted
/// literally, including same-index swaps and the final pivot swap.
pub(crate) fn lomuto_partition(list: &[i64]) -> Split {
    let mut s = list.to_vec();
    let n = s.len();
    let pivot = s[n - 1];
    let mut i = 0;
    let mut swaps = 0u64;
    for j in 0..n - 1 {
        if s[j] < pivot {
            s.swap(i, j);
            swaps += 1;
            i += 1;
        }
    }
    s.swap(i, n - 1);
    swaps += 1;
    Split {
        comparisons: (n - 1) as u64,
        swaps,
        pivot,
        left: s[..i].to_vec(),
        right: s[i + 1..].to_vec(),
    }
}

/// The same scheme but suppressing same-index swaps and the final swap when
/// the pivot is already in place.
pub(crate) fn parip_partition(list: &[i64]) -> Split {
    let mut s = list.to_vec();
    let n = s.len();
    let pivot = s[n - 1];
    let mut i = 0;
    let mut swaps = 0u64;
    for j in 0..n - 1 {
        if s[j] <= pivot {
            if i != j {
                s.swap(i, j);
                swaps += 1;
            }
            i += 1;
        }
    }
    if i != n - 1 {
        s.swap(i, n - 1);
        swaps += 1;
    }
    Split {
        comparisons: (n - 1) as u64,
        swaps,
        pivot,
        left: s[..i].to_vec(),
        right: s[i + 1..].to_vec(),
    }
}

/// Moves the element at `pivot_pos` to the back (a bookkeeping move, not a
/// counted swap), then runs the swap-suppressing partition.
pub(crate) fn parip_partition_with_pivot(list: &[i64], pivot_pos: usize) -> Split {
    let mut arranged = Vec::with_capacity(list.len());
    arranged.extend_from_slice(&list[..pivot_pos]);
    arranged.extend_from_slice(&list[pivot_pos + 1..]);
    arranged.push(list[pivot_pos]);
    parip_partition(&arranged)
}

/// Which of two pivot candidates the closer-to-middle rule picks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum V5Pick {
    A,
    B,
    /// Both candidates equally close to the middle value.
    Tie,
}

/// Compares two candidate values' distance to the middle of the list's
/// value range (integer arithmetic on doubled distances).
pub(crate) fn v5_pick(list: &[i64], a: i64, b: i64) -> V5Pick {
    let min = *list.iter().min().expect("nonempty");
    let max = *list.iter().max().expect("nonempty");
    let dist = |v: i64| (2 * v - min - max).abs();
    if dist(a) < dist(b) {
        V5Pick::A
    } else if dist(b) < dist(a) {
        V5Pick::B
    } else {
        V5Pick::Tie
    }
}

/// Dual-pivot partition outcome.
pub(crate) struct DualSplit {
    pub count: u64,
    pub l1: Vec<i64>,
    pub l2: Vec<i64>,
    pub l3: Vec<i64>,
}

/// Dual-pivot swap model: first and last elements are the pivots; one swap
/// orders them when needed; each element below the small pivot or above the
/// large pivot costs one swap.
pub(crate) fn dual_swap_partition(list: &[i64]) -> DualSplit {
    let n = list.len();
    let (a, b) = (list[0], list[n - 1]);
    let init = u64::from(a > b);
    let (p1, p2) = (a.min(b), a.max(b));
    let middle = &list[1..n - 1];
    let l1: Vec<i64> = middle.iter().copied().filter(|&v| v < p1).collect();
    let l2: Vec<i64> = middle.iter().copied().filter(|&v| v > p1 && v < p2).collect();
    let l3: Vec<i64> = middle.iter().copied().filter(|&v| v > p2).collect();
    DualSplit {
        count: init + l1.len() as u64 + l3.len() as u64,
        l1,
        l2,
        l3,
    }
}

/// Dual-pivot comparison model: pivots at the two given positions, one
/// comparison to order them, then each element is compared with the small
/// pivot first and with the large one only if needed.
pub(crate) fn dual_comp_partition(list: &[i64], pos_a: usize, pos_b: usize) -> DualSplit {
    let (p1, p2) = {
        let (x, y) = (list[pos_a], list[pos_b]);
        (x.min(y), x.max(y))
    };
    let mut count = 1u64;
    let mut l1 = Vec::new();
    let mut l2 = Vec::new();
    let mut l3 = Vec::new();
    for (idx, &v) in list.iter().enumerate() {
        if idx == pos_a || idx == pos_b {
            continue;
        }
        if v < p1 {
            count += 1;
            l1.push(v);
        } else {
            count += 2;
            if v < p2 {
                l2.push(v);
            } else {
                l3.push(v);
            }
        }
    }
    DualSplit { count, l1, l2, l3 }
}

/// How non-pivot elements are classified against the sorted pivots.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum ScanPolicy {
    /// Compare with pivots in increasing order; landing in sublist `m`
    /// (1-based) costs `min(m, k)` comparisons.
    Linear,
    /// Binary search over the pivot array, probing `mid = (lo + hi) / 2`
    /// with lo inclusive and hi exclusive, one comparison per probe.
    Binary,
}

/// Multi-pivot partition outcome.
pub(crate) struct KSplit {
    /// Comparisons spent classifying non-pivot elements (pivot sorting is
    /// accounted separately by the caller).
    pub scan_comparisons: u64,
    /// Pivot values in their order of appearance in the list.
    pub pivots_in_order: Vec<i64>,
    /// The k+1 sublists, each preserving the original relative order.
    pub sublists: Vec<Vec<i64>>,
}

/// Partitions around the pivots at the given (sorted, distinct) positions.
pub(crate) fn kpivot_partition(list: &[i64], positions: &[usize], policy: ScanPolicy) -> KSplit {
    let k = positions.len();
    let pivots_in_order: Vec<i64> = positions.iter().map(|&p| list[p]).collect();
    let mut sorted_pivots = pivots_in_order.clone();
    sorted_pivots.sort_unstable();
    let mut sublists = vec![Vec::new(); k + 1];
    let mut scan = 0u64;
    for (idx, &v) in list.iter().enumerate() {
        if positions.binary_search(&idx).is_ok() {
            continue;
        }
        let (gap, cost) = match policy {
            ScanPolicy::Linear => {
                let mut gap = k;
                let mut cost = k as u64;
                for (m, &p) in sorted_pivots.iter().enumerate() {
                    if v < p {
                        gap = m;
                        cost = (m + 1) as u64;
                        break;
                    }
                }
                (gap, cost)
            }
            ScanPolicy::Binary => {
                let (mut lo, mut hi) = (0usize, k);
                let mut probes = 0u64;
                while lo < hi {
                    let mid = (lo + hi) / 2;
                    probes += 1;
                    if v < sorted_pivots[mid] {
                        hi = mid;
                    } else {
                        lo = mid + 1;
                    }
                }
                (lo, probes)
            }
        };
        scan += cost;
        sublists[gap].push(v);
    }
    KSplit {
        scan_comparisons: scan,
        pivots_in_order,
        sublists,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v1_counts_smaller_elements() {
        let s = v1_partition(&[3, 5, 1, 2, 4]);
        assert_eq!(s.swaps, 2);
        assert_eq!(s.left, vec![1, 2]);
        assert_eq!(s.right, vec![5, 4]);
    }

    #[test]
    fn v2_counts_out_of_place_elements() {
        // pivot 4 at index 2 in [6, 1, 4, 2, 5]: prefix misfit 6, suffix misfit 2
        let s = v2_partition(&[6, 1, 4, 2, 5], 2);
        assert_eq!(s.swaps, 2);
        assert_eq!(s.left, vec![1, 2]);
        assert_eq!(s.right, vec![5, 6]);
    }

    #[test]
    fn lomuto_counts_rank_many_swaps() {
        // pivot rank k always gives exactly k swaps
        assert_eq!(lomuto_partition(&[2, 1]).swaps, 1);
        assert_eq!(lomuto_partition(&[1, 2]).swaps, 2);
        assert_eq!(lomuto_partition(&[3, 1, 4, 2]).swaps, 2);
        assert_eq!(lomuto_partition(&[1, 2, 3, 4]).swaps, 4);
    }

    #[test]
    fn parip_suppresses_trivial_swaps() {
        // sorted input, pivot is the maximum: no swaps at all
        assert_eq!(parip_partition(&[1, 2]).swaps, 0);
        assert_eq!(parip_partition(&[1, 2, 3, 4]).swaps, 0);
        // pivot rank 1: only the final pivot swap
        assert_eq!(parip_partition(&[2, 1]).swaps, 1);
        let s = parip_partition(&[3, 1, 4, 2]);
        assert_eq!(s.left, vec![1]);
        assert_eq!(s.right, vec![4, 3]);
        assert_eq!(s.swaps, 2);
    }

    #[test]
    fn pivot_relocation_is_uncounted() {
        // [3,1,4,2] with pivot 4 relocated from index 2: [3,1,2,4], rank 4
        let s = parip_partition_with_pivot(&[3, 1, 4, 2], 2);
        assert_eq!(s.swaps, 0);
        assert_eq!(s.left, vec![3, 1, 2]);
        assert!(s.right.is_empty());
    }

    #[test]
    fn v5_pick_rules() {
        assert_eq!(v5_pick(&[1, 2, 3], 1, 2), V5Pick::B);
        assert_eq!(v5_pick(&[1, 2, 3], 2, 3), V5Pick::A);
        assert_eq!(v5_pick(&[1, 2, 3], 1, 3), V5Pick::Tie);
    }

    #[test]
    fn dual_swap_counts() {
        // pivots 4 and 2 (out of order): init swap, 1 below 2, 1 above 4
        let s = dual_swap_partition(&[4, 1, 3, 5, 2]);
        assert_eq!(s.count, 3);
        assert_eq!(s.l1, vec![1]);
        assert_eq!(s.l2, vec![3]);
        assert_eq!(s.l3, vec![5]);
    }

    #[test]
    fn dual_comp_counts() {
        // pivots 2 and 4 at positions 1 and 3 in [1, 2, 3, 4, 5]
        let s = dual_comp_partition(&[1, 2, 3, 4, 5], 1, 3);
        // 1 to sort pivots, 1 for the low element, 2 each for 3 and 5
        assert_eq!(s.count, 6);
        assert_eq!(s.l1, vec![1]);
        assert_eq!(s.l2, vec![3]);
        assert_eq!(s.l3, vec![5]);
    }

    #[test]
    fn binary_scan_for_three_pivots_costs_two_probes() {
        let list = [1, 2, 3, 4, 5, 6, 7];
        let split = kpivot_partition(&list, &[1, 3, 5], ScanPolicy::Binary);
        // four non-pivot elements, two probes each
        assert_eq!(split.scan_comparisons, 8);
        assert_eq!(split.sublists, vec![vec![1], vec![3], vec![5], vec![7]]);
    }

    #[test]
    fn linear_scan_costs() {
        let list = [1, 2, 3, 4, 5, 6, 7];
        let split = kpivot_partition(&list, &[1, 3, 5], ScanPolicy::Linear);
        // costs: 1 (below first pivot), 2, 3, 3 (above last pivot)
        assert_eq!(split.scan_comparisons, 9);
        assert_eq!(split.pivots_in_order, vec![2, 4, 6]);
    }
}
