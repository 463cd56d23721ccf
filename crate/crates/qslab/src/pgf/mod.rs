//! Quicksort variant catalog and the generating-function engine.
//!
//! Each variant is identified by a [`VariantId`]. The [`PgfEngine`] computes
//! the exact distribution `P_n(t)` of the variant's cost (comparisons or
//! swaps) by iterating the variant's recurrence bottom-up with memoization,
//! either over full polynomials or over truncated series in `w = t - 1`.

mod algebra;
mod engine;
mod kernels;

pub use engine::PgfEngine;
pub use kernels::{ip_prob, per_prob, pivot_weight_v5, pivot_weight_v5_by_enumeration};

use std::fmt;
use std::str::FromStr;

/// The cost statistic a variant's generating function tracks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CostKind {
    Comparisons,
    Swaps,
}

/// Variant families.
///
/// The `Swap` families count swaps of single-pivot partition schemes; the
/// `Comp` families count comparisons. `CompKPivotBinary` is simulation-only:
/// its per-element comparison count depends on binary-search boundary policy,
/// so it has no generating-function recurrence here.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    /// Comparisons of classic 1-pivot Quicksort (pivot position uniform).
    Comp1Pivot,
    /// Swaps when the first element is the pivot and smaller elements are
    /// shifted in front of it.
    SwapV1,
    /// Swaps when the pivot position is uniform; out-of-place elements are
    /// shifted to the far end or to the pivot's slot.
    SwapV2,
    /// Swaps of the classic single-pass in-place partition (pivot last,
    /// unconditional swap plus the final pivot swap).
    SwapV3,
    /// Swaps of the in-place partition that skips same-index swaps and the
    /// final swap when the pivot is already last.
    SwapV4,
    /// SwapV4's partition with the pivot drawn from the closer-to-middle of
    /// the first and last elements.
    SwapV5,
    /// Comparisons of dual-pivot Quicksort.
    CompDual,
    /// Swaps of the dual-pivot variant with first/last elements as pivots.
    SwapDual,
    /// Comparisons of 3-pivot Quicksort with binary-search classification.
    CompThreePivot,
    /// Comparisons of k-pivot Quicksort with linear-scan classification.
    CompKPivotLinear,
    /// Comparisons of k-pivot Quicksort with binary-search classification
    /// (simulation only).
    CompKPivotBinary,
}

impl Family {
    pub fn all() -> &'static [Family] {
        use Family::*;
        &[
            Comp1Pivot,
            SwapV1,
            SwapV2,
            SwapV3,
            SwapV4,
            SwapV5,
            CompDual,
            SwapDual,
            CompThreePivot,
            CompKPivotLinear,
            CompKPivotBinary,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Comp1Pivot => "comp1pivot",
            Family::SwapV1 => "swapv1",
            Family::SwapV2 => "swapv2",
            Family::SwapV3 => "swapv3",
            Family::SwapV4 => "swapv4",
            Family::SwapV5 => "swapv5",
            Family::CompDual => "compdual",
            Family::SwapDual => "swapdual",
            Family::CompThreePivot => "comp3pivot",
            Family::CompKPivotLinear => "kpivotlinear",
            Family::CompKPivotBinary => "kpivotbinary",
        }
    }

    /// Pivot count fixed by the family, or `None` when it is a parameter.
    pub fn fixed_pivots(&self) -> Option<u32> {
        match self {
            Family::Comp1Pivot
            | Family::SwapV1
            | Family::SwapV2
            | Family::SwapV3
            | Family::SwapV4
            | Family::SwapV5 => Some(1),
            Family::CompDual | Family::SwapDual => Some(2),
            Family::CompThreePivot => Some(3),
            Family::CompKPivotLinear | Family::CompKPivotBinary => None,
        }
    }

    pub fn cost_kind(&self) -> CostKind {
        match self {
            Family::SwapV1
            | Family::SwapV2
            | Family::SwapV3
            | Family::SwapV4
            | Family::SwapV5
            | Family::SwapDual => CostKind::Swaps,
            _ => CostKind::Comparisons,
        }
    }

    /// Whether the engine has a generating-function recurrence for this
    /// family.
    pub fn has_pgf(&self) -> bool {
        !matches!(self, Family::CompKPivotBinary)
    }
}

/// A fully specified variant: family plus pivot count.
///
/// The pivot count is normalized to the family's fixed value where one
/// exists, so two ids for the same variant always compare equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct VariantId {
    family: Family,
    pivots: u32,
}

impl VariantId {
    /// Variant with the family's own pivot count. For the k-pivot families
    /// this defaults to `k = 3`; use [`VariantId::with_pivots`] to choose.
    pub fn new(family: Family) -> Self {
        let pivots = family.fixed_pivots().unwrap_or(3);
        VariantId { family, pivots }
    }

    /// Variant with an explicit pivot count (meaningful for the k-pivot
    /// families; ignored and normalized for all others).
    ///
    /// Panics when `pivots == 0`.
    pub fn with_pivots(family: Family, pivots: u32) -> Self {
        assert!(pivots >= 1, "pivot count must be >= 1");
        let pivots = family.fixed_pivots().unwrap_or(pivots);
        VariantId { family, pivots }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn pivots(&self) -> u32 {
        self.pivots
    }

    pub fn cost_kind(&self) -> CostKind {
        self.family.cost_kind()
    }

    /// Directory component used by the on-disk cache:
    /// `<family>` or `<family>_k<pivots>` for the k-pivot families.
    pub fn dir_name(&self) -> String {
        if self.family.fixed_pivots().is_some() {
            self.family.name().to_string()
        } else {
            format!("{}_k{}", self.family.name(), self.pivots)
        }
    }
}

impl fmt::Display for VariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.fixed_pivots().is_some() {
            write!(f, "{}", self.family.name())
        } else {
            write!(f, "{}(k={})", self.family.name(), self.pivots)
        }
    }
}

/// Parses a family name as printed by [`Family::name`].
impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::all()
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Family::all().iter().map(|f| f.name()).collect();
                format!("unknown variant '{s}' (expected one of: {})", names.join(", "))
            })
    }
}
