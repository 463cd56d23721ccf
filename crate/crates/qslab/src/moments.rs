//! Raw, central, factorial, and scaled moments extracted from the
//! generating functions.
//!
//! Two computation paths exist with an explicit crossover: the full
//! polynomial for small `n` and the truncated factorial-moment series beyond
//! (default switch at `n = 60`). Truncated-series arithmetic is exact for
//! every factorial moment up to the truncation order — a product coefficient
//! at `w^r` reads only factors of order `<= r` — so the two paths agree
//! wherever both apply; a flag pins either path for cross-checking.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{binomial, factorial, stirling2, to_f64, Rational, TruncSeries};
use crate::pgf::{PgfEngine, VariantId};

/// Which statistic a [`MomentSequence`] holds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MomentKind {
    Raw,
    Central,
    Mean,
}

impl MomentKind {
    pub fn name(&self) -> &'static str {
        match self {
            MomentKind::Raw => "raw",
            MomentKind::Central => "central",
            MomentKind::Mean => "mean",
        }
    }
}

/// Which computation path to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ComputePath {
    /// Full polynomial up to `n_switch`, truncated series beyond.
    #[default]
    Auto,
    FullPgf,
    Truncated,
}

#[derive(Clone, Debug)]
pub struct MomentOptions {
    pub path: ComputePath,
    /// Largest `n` still computed on the full polynomial under `Auto`.
    pub n_switch: usize,
    /// Floor for the series truncation order (the order is never below the
    /// requested moment order; raising it lets one series ladder serve
    /// several moment orders).
    pub min_trunc_order: usize,
}

impl Default for MomentOptions {
    fn default() -> Self {
        MomentOptions {
            path: ComputePath::Auto,
            n_switch: 60,
            min_trunc_order: 1,
        }
    }
}

impl MomentOptions {
    pub fn truncated() -> Self {
        MomentOptions {
            path: ComputePath::Truncated,
            ..Default::default()
        }
    }

    pub fn with_min_order(mut self, order: usize) -> Self {
        self.min_trunc_order = order;
        self
    }
}

/// A per-length sweep of one moment statistic; `values[i]` is the value at
/// list length `n = i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence {
    pub variant: VariantId,
    pub order: u32,
    pub kind: MomentKind,
    pub values: Vec<Rational>,
}

#[derive(Debug, Error)]
pub enum MomentError {
    #[error("{variant} has zero variance at n = {n}; scaled moments are undefined")]
    ZeroVariance { variant: VariantId, n: usize },
}

fn use_truncated(n: usize, opts: &MomentOptions) -> bool {
    match opts.path {
        ComputePath::Auto => n > opts.n_switch,
        ComputePath::FullPgf => false,
        ComputePath::Truncated => true,
    }
}

/// Raw moments `E[X^0..=X^r]` from one source fetch.
fn raw_moments_upto(
    engine: &PgfEngine,
    variant: VariantId,
    n: usize,
    r: u32,
    opts: &MomentOptions,
) -> Vec<Rational> {
    if r == 0 {
        return vec![Rational::one()];
    }
    if use_truncated(n, opts) {
        let order = (r as usize).max(opts.min_trunc_order);
        let series = engine.truncated(variant, n, order);
        let factorials = series.factorial_moments();
        (0..=r)
            .map(|rr| raw_from_factorials(&factorials, rr))
            .collect()
    } else {
        let p = engine.pgf(variant, n);
        (0..=r).map(|rr| p.theta_moment(rr)).collect()
    }
}

fn raw_from_factorials(factorials: &[Rational], r: u32) -> Rational {
    let mut acc = Rational::zero();
    for j in 0..=r.min(factorials.len() as u32 - 1) {
        let s = stirling2(r, j);
        if s.is_zero() {
            continue;
        }
        acc += Rational::from_integer(s) * &factorials[j as usize];
    }
    acc
}

/// Exact `r`-th raw moment `E[X_n^r]`.
pub fn raw_moment(
    engine: &PgfEngine,
    variant: VariantId,
    n: usize,
    r: u32,
    opts: &MomentOptions,
) -> Rational {
    raw_moments_upto(engine, variant, n, r, opts)
        .pop()
        .expect("nonempty")
}

/// Exact `r`-th moment about the mean, from raw moments by binomial
/// expansion.
pub fn central_moment(
    engine: &PgfEngine,
    variant: VariantId,
    n: usize,
    r: u32,
    opts: &MomentOptions,
) -> Rational {
    assert!(r >= 1, "central moment order must be >= 1");
    let raws = raw_moments_upto(engine, variant, n, r, opts);
    central_from_raws(&raws, r)
}

fn central_from_raws(raws: &[Rational], r: u32) -> Rational {
    let mean = raws[1].clone();
    let mut acc = Rational::zero();
    let mut neg_mean_pow = vec![Rational::one()];
    for _ in 0..r {
        let last = neg_mean_pow.last().unwrap() * -mean.clone();
        neg_mean_pow.push(last);
    }
    for i in 0..=r {
        let c = Rational::from_integer(binomial(r as u64, i as u64));
        acc += c * &raws[i as usize] * &neg_mean_pow[(r - i) as usize];
    }
    acc
}

/// Moments for every length `1..=upto`.
pub fn moment_sequence(
    engine: &PgfEngine,
    variant: VariantId,
    r: u32,
    kind: MomentKind,
    upto: usize,
    opts: &MomentOptions,
) -> MomentSequence {
    assert!(upto >= 1, "sequence length must be >= 1");
    if kind == MomentKind::Mean {
        assert!(r == 1, "mean sequences have order 1");
    }
    let values = (1..=upto)
        .map(|n| match kind {
            MomentKind::Mean => raw_moment(engine, variant, n, 1, opts),
            MomentKind::Raw => raw_moment(engine, variant, n, r, opts),
            MomentKind::Central => central_moment(engine, variant, n, r, opts),
        })
        .collect();
    MomentSequence {
        variant,
        order: r,
        kind,
        values,
    }
}

/// The truncated factorial-moment series `P_n(1+w)` up to `w^order`.
pub fn truncated_factorial_series(
    engine: &PgfEngine,
    variant: VariantId,
    n: usize,
    order: usize,
) -> TruncSeries {
    assert!(order >= 1, "truncation order must be >= 1");
    engine.truncated(variant, n, order)
}

/// Raw moments `E[X^0..=X^R]` from factorial moments `E[(X)_0..=(X)_R]` via
/// Stirling numbers of the second kind.
pub fn factorial_to_raw(factorials: &[Rational]) -> Vec<Rational> {
    (0..factorials.len() as u32)
        .map(|r| raw_from_factorials(factorials, r))
        .collect()
}

/// Central moments of `(X_n - mean)/sqrt(variance)` for orders `3..=r_max`,
/// computed exactly and converted to floating point at the end.
pub fn scaled_moment_profile(
    engine: &PgfEngine,
    variant: VariantId,
    n: usize,
    r_max: u32,
    opts: &MomentOptions,
) -> Result<Vec<f64>, MomentError> {
    assert!(r_max >= 3, "profile needs at least order 3");
    let raws = raw_moments_upto(engine, variant, n, r_max, opts);
    let m2 = central_from_raws(&raws, 2);
    if m2.is_zero() {
        return Err(MomentError::ZeroVariance { variant, n });
    }
    let m2f = to_f64(&m2);
    let mut out = Vec::with_capacity(r_max as usize - 2);
    for r in 3..=r_max {
        let mr = central_from_raws(&raws, r);
        let denom = m2f.powi((r / 2) as i32) * if r % 2 == 1 { m2f.sqrt() } else { 1.0 };
        out.push(to_f64(&mr) / denom);
    }
    Ok(out)
}

/// Exact factorial of small arguments, re-exported for callers assembling
/// factorial moments by hand.
pub fn small_factorial(n: u64) -> BigInt {
    factorial(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::pgf::Family;

    fn engine() -> PgfEngine {
        PgfEngine::new()
    }

    #[test]
    fn simple_raw_moments() {
        let eng = engine();
        let opts = MomentOptions::default();
        assert_eq!(
            raw_moment(&eng, VariantId::new(Family::SwapV1), 1, 1, &opts),
            int(0)
        );
        assert_eq!(
            raw_moment(&eng, VariantId::new(Family::Comp1Pivot), 2, 1, &opts),
            int(1)
        );
    }

    #[test]
    fn central_moment_examples() {
        let eng = engine();
        let opts = MomentOptions::default();
        // any variant: first central moment vanishes
        assert!(central_moment(&eng, VariantId::new(Family::SwapV4), 7, 1, &opts).is_zero());
        // comparisons at n = 3: distribution 2/3 t^3 + 1/3 t^2, variance 2/9
        assert_eq!(
            central_moment(&eng, VariantId::new(Family::Comp1Pivot), 3, 2, &opts),
            ratio(2, 9)
        );
        // single-pass in-place scheme at n = 2: (t + t^2)/2, variance 1/4
        assert_eq!(
            central_moment(&eng, VariantId::new(Family::SwapV3), 2, 2, &opts),
            ratio(1, 4)
        );
    }

    #[test]
    fn factorial_to_raw_examples() {
        assert_eq!(factorial_to_raw(&[int(1), int(3)]), vec![int(1), int(3)]);
        // point mass at 1: E[(X)_2] = 0, E[X^2] = 1
        assert_eq!(
            factorial_to_raw(&[int(1), int(1), int(0)]),
            vec![int(1), int(1), int(1)]
        );
        // three-point distribution {0: 1/2, 1: 1/4, 3: 1/4}:
        // E[(X)_1] = 1, E[(X)_2] = 3/2, E[(X)_3] = 3/2
        // E[X^2] = 1/4 + 9/4 = 5/2; check S(2,1) f1 + S(2,2) f2 = 1 + 3/2
        let raws = factorial_to_raw(&[int(1), int(1), ratio(3, 2), ratio(3, 2)]);
        assert_eq!(raws[2], ratio(5, 2));
        assert_eq!(raws[3], int(1) * ratio(1, 1) + ratio(3, 2) * int(3) + ratio(3, 2));
    }

    #[test]
    fn truncated_path_matches_full_path() {
        let eng = engine();
        let full = MomentOptions {
            path: ComputePath::FullPgf,
            ..Default::default()
        };
        let trunc = MomentOptions::truncated().with_min_order(4);
        for family in [
            Family::Comp1Pivot,
            Family::SwapV1,
            Family::SwapV2,
            Family::SwapV3,
            Family::SwapV4,
            Family::SwapV5,
            Family::CompDual,
            Family::SwapDual,
            Family::CompThreePivot,
        ] {
            let v = VariantId::new(family);
            for n in 1..=12 {
                for r in 1..=4 {
                    assert_eq!(
                        raw_moment(&eng, v, n, r, &full),
                        raw_moment(&eng, v, n, r, &trunc),
                        "{v} n={n} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn mean_sequence_published_values() {
        let eng = engine();
        let seq = moment_sequence(
            &eng,
            VariantId::new(Family::SwapV4),
            1,
            MomentKind::Mean,
            5,
            &MomentOptions::default(),
        );
        assert_eq!(
            seq.values,
            vec![int(0), ratio(1, 2), ratio(7, 6), int(2), ratio(179, 60)]
        );
    }

    #[test]
    fn degenerate_variance_is_an_error() {
        let eng = engine();
        let err = scaled_moment_profile(
            &eng,
            VariantId::new(Family::Comp1Pivot),
            2,
            4,
            &MomentOptions::default(),
        );
        assert!(err.is_err());
    }

    #[test]
    fn scaled_profile_two_point() {
        // SwapV3 at n = 2 is (t + t^2)/2: symmetric, skew 0
        let eng = engine();
        let prof = scaled_moment_profile(
            &eng,
            VariantId::new(Family::SwapV3),
            2,
            4,
            &MomentOptions::default(),
        )
        .unwrap();
        assert_eq!(prof.len(), 2);
        assert!(prof[0].abs() < 1e-12);
        assert!(prof[1].is_finite());
    }
}
