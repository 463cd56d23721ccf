//! Exact analysis of Quicksort variants.
//!
//! The crate computes the full probability distribution of the number of
//! comparisons or swaps for a catalog of Quicksort variants by iterating each
//! variant's generating-function recurrence in exact rational arithmetic, and
//! then mines that data:
//!
//! - [`exact`] — big-rational arithmetic, dense polynomials ([`UniPoly`]),
//!   truncated series in `w = t - 1` ([`TruncSeries`]), harmonic numbers,
//!   Stirling numbers.
//! - [`pgf`] — the variant catalog ([`VariantId`]) and the memoizing
//!   [`PgfEngine`] that computes every `P_n(t)` bottom-up, in full polynomial
//!   form or as truncated factorial-moment series.
//! - [`moments`] — raw/central/factorial moments, moment sequences, and the
//!   scaled moment profile of the normalized distribution.
//! - [`fit`] — recovery of exact closed forms in `n` and harmonic numbers
//!   `H_k(n)` by exact interpolation with holdout verification.
//! - [`findrec`] — discovery of linear difference equations with polynomial
//!   coefficients annihilating a moment sequence.
//! - [`simulate`] — instrumented operational sorters, the exhaustive
//!   small-instance distribution oracle, and a seeded Monte Carlo harness.
//! - [`cache`] — the on-disk store for computed generating functions.

pub mod cache;
pub mod exact;
pub mod findrec;
pub mod fit;
pub mod linalg;
pub mod moments;
pub mod pgf;
pub mod simulate;

pub use exact::{Rational, TruncSeries, UniPoly};
pub use pgf::{Family, PgfEngine, VariantId};
