//! Property-based and invariant tests across the crate.

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use qslab::exact::{harmonic, int, ratio, Rational, TruncSeries, UniPoly};
use qslab::fit::{build_basis, fit};
use qslab::moments::{central_moment, moment_sequence, MomentKind, MomentOptions};
use qslab::pgf::{Family, PgfEngine, VariantId};
use qslab::simulate::run_variant;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rational(), 0..=max_deg + 1).prop_map(UniPoly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_ops_stay_canonical(a in small_rational(), b in small_rational()) {
        for v in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(v.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(v.numer(), v.denom()).is_one()
                || v.numer().is_zero());
        }
    }

    #[test]
    fn poly_mul_commutative_associative(
        a in small_poly(6),
        b in small_poly(6),
        c in small_poly(4),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn theta_moment_zero_is_value_at_one(p in small_poly(8)) {
        prop_assert_eq!(p.theta_moment(0), p.eval_one());
    }

    #[test]
    fn truncated_product_matches_full_expansion(
        a in small_poly(12),
        b in small_poly(12),
        order in 1usize..=6,
    ) {
        let full = TruncSeries::from_poly(&a.mul(&b), order);
        let truncated = TruncSeries::from_poly(&a, order).mul(&TruncSeries::from_poly(&b, order));
        prop_assert_eq!(full, truncated);
    }
}

#[test]
fn harmonic_increments_up_to_200() {
    for k in 1..=4u32 {
        for n in 1..=200usize {
            let diff = harmonic(k, n) - harmonic(k, n - 1);
            let step = Rational::new(
                1.into(),
                num_bigint::BigInt::from(n).pow(k),
            );
            assert_eq!(diff, step, "k={k} n={n}");
        }
    }
}

fn pgf_variants() -> Vec<VariantId> {
    let mut v: Vec<VariantId> = Family::all()
        .iter()
        .filter(|f| f.has_pgf() && f.fixed_pivots().is_some())
        .map(|f| VariantId::new(*f))
        .collect();
    for k in [1, 2, 3, 4] {
        v.push(VariantId::with_pivots(Family::CompKPivotLinear, k));
    }
    v
}

#[test]
fn pgfs_are_distributions_up_to_25() {
    let eng = PgfEngine::new();
    for v in pgf_variants() {
        for n in 0..=25usize {
            let p = eng.pgf(v, n);
            assert!(p.eval_one().is_one(), "{v} n={n}: sums to {}", p.eval_one());
            assert!(
                p.coeffs().iter().all(|c| !c.is_negative()),
                "{v} n={n}: negative coefficient in {p}"
            );
        }
    }
}

#[test]
fn even_central_moments_nonnegative() {
    let eng = PgfEngine::new();
    let opts = MomentOptions::default();
    for v in pgf_variants() {
        for n in 1..=12usize {
            let m2 = central_moment(&eng, v, n, 2, &opts);
            let m4 = central_moment(&eng, v, n, 4, &opts);
            assert!(!m2.is_negative(), "{v} n={n}: m2 = {m2}");
            assert!(!m4.is_negative(), "{v} n={n}: m4 = {m4}");
            // variance is strictly positive from n = 2, except that every
            // comparison-counting family is deterministic on pairs
            let degenerate_pair =
                n == 2 && v.cost_kind() == qslab::pgf::CostKind::Comparisons;
            if n >= 2 && !degenerate_pair {
                assert!(m2.is_positive(), "{v} n={n}: variance vanishes");
            }
        }
    }
}

#[test]
fn dual_mean_sequence_equals_single_pivot() {
    let eng = PgfEngine::new();
    let opts = MomentOptions::default();
    let a = moment_sequence(
        &eng,
        VariantId::new(Family::CompDual),
        1,
        MomentKind::Mean,
        20,
        &opts,
    );
    let b = moment_sequence(
        &eng,
        VariantId::new(Family::Comp1Pivot),
        1,
        MomentKind::Mean,
        20,
        &opts,
    );
    assert_eq!(a.values, b.values);
}

#[test]
fn fitting_is_deterministic() {
    let eng = PgfEngine::new();
    let data = moment_sequence(
        &eng,
        VariantId::new(Family::SwapV1),
        1,
        MomentKind::Mean,
        30,
        &MomentOptions::default(),
    );
    let basis = build_basis(1, false);
    let first = fit(&data.values, &basis, 0).unwrap();
    let second = fit(&data.values, &basis, 0).unwrap();
    assert_eq!(first, second);
    assert_eq!(build_basis(1, false), basis);
}

#[test]
fn every_variant_sorts_many_random_permutations() {
    use rand::{Rng, SeedableRng};
    let mut variants = pgf_variants();
    variants.push(VariantId::with_pivots(Family::CompKPivotBinary, 3));
    variants.push(VariantId::with_pivots(Family::CompKPivotBinary, 5));
    for variant in variants {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7 + variant.pivots() as u64);
        for trial in 0..10_000usize {
            let n = trial % 100 + 1;
            let mut perm: Vec<i64> = (1..=n as i64).collect();
            for i in (1..n).rev() {
                let j = rng.random_range(0..=i);
                perm.swap(i, j);
            }
            let run = run_variant(variant, &perm, &mut rng).unwrap();
            let expect: Vec<i64> = (1..=n as i64).collect();
            assert_eq!(run.sorted_output, expect, "{variant} failed on {perm:?}");
        }
    }
}

#[test]
fn engine_is_safe_for_concurrent_variants() {
    use std::sync::Arc;
    let eng = Arc::new(PgfEngine::new());
    let handles: Vec<_> = [Family::SwapV1, Family::SwapV3, Family::CompDual, Family::SwapV4]
        .into_iter()
        .map(|fam| {
            let eng = Arc::clone(&eng);
            std::thread::spawn(move || eng.pgf(VariantId::new(fam), 15).eval_one())
        })
        .collect();
    for h in handles {
        assert!(h.join().unwrap().is_one());
    }
    // and the cached entries match fresh recomputation
    let fresh = PgfEngine::new();
    for fam in [Family::SwapV1, Family::SwapV3, Family::CompDual, Family::SwapV4] {
        let v = VariantId::new(fam);
        assert_eq!(eng.pgf(v, 15), fresh.pgf(v, 15));
    }
}
