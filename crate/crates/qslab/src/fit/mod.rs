//! Recovery of exact closed forms for moment sequences.
//!
//! The ansatz: a moment of order `r` is a rational linear combination of
//! monomials `n^a * prod_k H_k(n)^{b_k}` with `a <= r` (optionally down to
//! `n^-1` or `n^-2`) and harmonic weight `sum_k k*b_k <= r`. Coefficients are
//! found by exact interpolation on a window of lengths and then verified on
//! every remaining data point; a fit that fails the holdout is rejected, not
//! approximated.

pub mod baselines;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exact::{harmonic, rational_int_pow, Rational};
use crate::linalg::{solve, SolveOutcome};

/// One basis monomial `n^powN * prod_k H_k(n)^{powH[k]}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasisMonomial {
    pow_n: i32,
    /// Sorted `(k, exponent)` pairs with positive exponents.
    pow_h: Vec<(u32, u32)>,
}

impl BasisMonomial {
    pub fn new(pow_n: i32, pow_h: &[(u32, u32)]) -> Self {
        assert!(pow_n >= -2, "n-power below -2 is not supported");
        let mut ph: Vec<(u32, u32)> = pow_h.iter().copied().filter(|&(_, e)| e > 0).collect();
        ph.sort_unstable();
        for win in ph.windows(2) {
            assert!(win[0].0 != win[1].0, "duplicate harmonic index");
        }
        for &(k, _) in &ph {
            assert!(k >= 1, "harmonic index must be >= 1");
        }
        BasisMonomial {
            pow_n,
            pow_h: ph,
        }
    }

    pub fn constant() -> Self {
        BasisMonomial {
            pow_n: 0,
            pow_h: Vec::new(),
        }
    }

    pub fn pow_n(&self) -> i32 {
        self.pow_n
    }

    pub fn pow_h(&self) -> &[(u32, u32)] {
        &self.pow_h
    }

    /// Harmonic weight `sum_k k * b_k`.
    pub fn harmonic_weight(&self) -> u32 {
        self.pow_h.iter().map(|&(k, e)| k * e).sum()
    }

    /// Product monomial (exponents add).
    pub fn mul(&self, other: &BasisMonomial) -> BasisMonomial {
        let mut map: BTreeMap<u32, u32> = self.pow_h.iter().copied().collect();
        for &(k, e) in &other.pow_h {
            *map.entry(k).or_insert(0) += e;
        }
        BasisMonomial {
            pow_n: self.pow_n + other.pow_n,
            pow_h: map.into_iter().collect(),
        }
    }

    /// Exact value at list length `n >= 1`.
    pub fn eval(&self, n: usize) -> Rational {
        assert!(n >= 1, "basis monomials are evaluated at n >= 1");
        let mut acc = rational_int_pow(n as i64, self.pow_n);
        for &(k, e) in &self.pow_h {
            let h = harmonic(k, n);
            for _ in 0..e {
                acc *= &h;
            }
        }
        acc
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.pow_n {
            0 => {}
            1 => parts.push("n".to_string()),
            -1 => parts.push("1/n".to_string()),
            -2 => parts.push("1/n^2".to_string()),
            p => parts.push(format!("n^{p}")),
        }
        for &(k, e) in &self.pow_h {
            if e == 1 {
                parts.push(format!("H{k}(n)"));
            } else {
                parts.push(format!("H{k}(n)^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All monomials with `min_pow_n <= a <= r` and harmonic weight `<= r`,
/// deterministically ordered.
pub(crate) fn build_basis_min(r: u32, min_pow_n: i32) -> Vec<BasisMonomial> {
    assert!(r >= 1, "moment order must be >= 1");
    assert!((-2..=0).contains(&min_pow_n));
    // enumerate harmonic exponent vectors with sum k*b_k <= r
    let mut hvecs: Vec<Vec<(u32, u32)>> = Vec::new();
    fn rec(k: u32, budget: u32, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        let max_e = budget / k;
        for e in 0..=max_e {
            if e > 0 {
                cur.push((k, e));
            }
            rec(k - 1, budget - k * e, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    rec(r, r, &mut Vec::new(), &mut hvecs);
    hvecs.sort();
    let mut basis = Vec::new();
    for hv in &hvecs {
        for a in min_pow_n..=(r as i32) {
            basis.push(BasisMonomial::new(a, hv));
        }
    }
    basis.sort();
    basis
}

/// The fitting basis for moment order `r`; `allow_inverse_n` adds the `1/n`
/// monomials needed by some variance formulas.
pub fn build_basis(r: u32, allow_inverse_n: bool) -> Vec<BasisMonomial> {
    build_basis_min(r, if allow_inverse_n { -1 } else { 0 })
}

/// An exact linear combination of basis monomials, valid for every
/// `n >= validity_from`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedForm {
    terms: BTreeMap<BasisMonomial, Rational>,
    validity_from: usize,
}

impl ClosedForm {
    pub fn new(terms: BTreeMap<BasisMonomial, Rational>, validity_from: usize) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        ClosedForm {
            terms,
            validity_from,
        }
    }

    pub fn terms(&self) -> &BTreeMap<BasisMonomial, Rational> {
        &self.terms
    }

    pub fn validity_from(&self) -> usize {
        self.validity_from
    }

    /// Same monomial/coefficient map, ignoring where each claims validity.
    pub fn same_terms(&self, other: &ClosedForm) -> bool {
        self.terms == other.terms
    }

    /// Exact evaluation. Panics below the validity threshold.
    pub fn evaluate(&self, n: usize) -> Rational {
        assert!(
            n >= self.validity_from,
            "closed form is only valid from n = {}, got {}",
            self.validity_from,
            n
        );
        self.evaluate_unchecked(n)
    }

    pub(crate) fn evaluate_unchecked(&self, n: usize) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c * m.eval(n);
        }
        acc
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = *m == BasisMonomial::constant();
            if is_const {
                write!(f, "{mag}")?;
            } else if mag == Rational::from_integer(1.into()) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum FitError {
    #[error("data too short: need at least {needed} points (basis {basis} + skip {skip} + holdout 5), have {have}")]
    Underdetermined {
        needed: usize,
        basis: usize,
        skip: usize,
        have: usize,
    },
    #[error("no solution in basis: {reason}")]
    NoSolutionInBasis { reason: String },
}

/// Fits `data` (value at `n = i + 1` in `data[i]`) against `basis`, solving
/// on lengths `skip+1 ..= skip+|basis|` and verifying on every later point.
///
/// At least 5 holdout points are required beyond the interpolation window.
pub fn fit(
    data: &[Rational],
    basis: &[BasisMonomial],
    skip: usize,
) -> Result<ClosedForm, FitError> {
    let b = basis.len();
    let needed = skip + b + 5;
    if data.len() < needed {
        return Err(FitError::Underdetermined {
            needed,
            basis: b,
            skip,
            have: data.len(),
        });
    }
    let window: Vec<usize> = (skip + 1..=skip + b).collect();
    let a: Vec<Vec<Rational>> = window
        .iter()
        .map(|&n| basis.iter().map(|m| m.eval(n)).collect())
        .collect();
    let rhs: Vec<Rational> = window.iter().map(|&n| data[n - 1].clone()).collect();
    let x = match solve(&a, &rhs) {
        SolveOutcome::Unique(x) => x,
        // rank-deficient window: the free-variable-zero solution still has to
        // survive the holdout below, so it is safe to continue with it
        SolveOutcome::Underdetermined(x) => x,
        SolveOutcome::Inconsistent => {
            return Err(FitError::NoSolutionInBasis {
                reason: "interpolation window is inconsistent".into(),
            })
        }
    };
    let terms: BTreeMap<BasisMonomial, Rational> =
        basis.iter().cloned().zip(x.into_iter()).collect();
    let form = ClosedForm::new(terms, skip + 1);
    for n in skip + b + 1..=data.len() {
        let predicted = form.evaluate_unchecked(n);
        if predicted != data[n - 1] {
            return Err(FitError::NoSolutionInBasis {
                reason: format!(
                    "holdout mismatch at n = {n}: form gives {predicted}, data has {}",
                    data[n - 1]
                ),
            });
        }
    }
    Ok(form)
}

/// How a successful [`fit_auto`] got there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitReport {
    pub skip: usize,
    pub min_pow_n: i32,
    pub basis_size: usize,
}

/// Fits with escalation: skip starts at `r` and grows by 2 up to 12; if no
/// skip works and the basis admits inverse powers, the inverse power is
/// raised by one (down to `1/n^2`) and the skip ladder retried.
pub fn fit_auto(
    data: &[Rational],
    r: u32,
    rational_basis: bool,
) -> Result<(ClosedForm, FitReport), FitError> {
    let start_pow = if rational_basis { -1 } else { 0 };
    let end_pow = if rational_basis { -2 } else { 0 };
    let mut plan = Vec::new();
    for pow in (end_pow..=start_pow).rev() {
        let mut skip = r as usize;
        plan.push((pow, skip));
        while skip + 2 <= 12 {
            skip += 2;
            plan.push((pow, skip));
        }
    }
    let mut last_err = None;
    for (pow, skip) in plan {
        let basis = build_basis_min(r, pow);
        match fit(data, &basis, skip) {
            Ok(form) => {
                return Ok((
                    form,
                    FitReport {
                        skip,
                        min_pow_n: pow,
                        basis_size: basis.len(),
                    },
                ))
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.expect("escalation plan is never empty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn basis_for_first_moment() {
        // the classic mean ansatz: a + b n + c H(n) + d n H(n)
        let basis = build_basis(1, false);
        let expect = vec![
            BasisMonomial::constant(),
            BasisMonomial::new(1, &[]),
            BasisMonomial::new(0, &[(1, 1)]),
            BasisMonomial::new(1, &[(1, 1)]),
        ];
        assert_eq!(basis.len(), 4);
        for m in expect {
            assert!(basis.contains(&m), "missing {m}");
        }
    }

    #[test]
    fn basis_for_second_moment_includes_products() {
        let basis = build_basis(2, false);
        for m in [
            BasisMonomial::new(2, &[]),
            BasisMonomial::new(0, &[(2, 1)]),
            BasisMonomial::new(2, &[(2, 1)]),
            BasisMonomial::new(0, &[(1, 2)]),
        ] {
            assert!(basis.contains(&m), "missing {m}");
        }
        assert!(!basis.contains(&BasisMonomial::new(-1, &[])));
        let rational = build_basis(2, true);
        assert!(rational.contains(&BasisMonomial::new(-1, &[])));
        assert!(rational.contains(&BasisMonomial::new(-1, &[(1, 1)])));
    }

    #[test]
    fn fit_recovers_planted_form() {
        // data = 3 n H(n) - 2 H(n) + 5, n = 1..30
        let target = |n: usize| {
            int(3) * BasisMonomial::new(1, &[(1, 1)]).eval(n)
                - int(2) * BasisMonomial::new(0, &[(1, 1)]).eval(n)
                + int(5)
        };
        let data: Vec<Rational> = (1..=30).map(target).collect();
        let basis = build_basis(1, false);
        let form = fit(&data, &basis, 0).unwrap();
        assert_eq!(form.terms()[&BasisMonomial::new(1, &[(1, 1)])], int(3));
        assert_eq!(form.terms()[&BasisMonomial::new(0, &[(1, 1)])], int(-2));
        assert_eq!(form.terms()[&BasisMonomial::constant()], int(5));
        assert_eq!(form.terms().len(), 3);
        for n in 1..=30 {
            assert_eq!(form.evaluate(n), data[n - 1]);
        }
    }

    #[test]
    fn fit_rejects_data_outside_basis() {
        // 2^n is not in any harmonic-polynomial basis
        let data: Vec<Rational> = (1..=30).map(|n| int(1 << n.min(20))).collect();
        let basis = build_basis(1, false);
        match fit(&data, &basis, 0) {
            Err(FitError::NoSolutionInBasis { .. }) => {}
            other => panic!("expected clean failure, got {other:?}"),
        }
    }

    #[test]
    fn fit_underdetermined_on_short_data() {
        let data: Vec<Rational> = (1..=5).map(|n| int(n as i64)).collect();
        let basis = build_basis(1, false);
        assert!(matches!(
            fit(&data, &basis, 0),
            Err(FitError::Underdetermined { .. })
        ));
    }

    #[test]
    fn fit_auto_escalates_skip() {
        // planted form valid only from n = 4, garbage before
        let mut data: Vec<Rational> = (1..=40)
            .map(|n| int(2) * BasisMonomial::new(1, &[(1, 1)]).eval(n) + int(7))
            .collect();
        data[0] = ratio(999, 7);
        data[1] = int(-3);
        data[2] = int(0);
        let (form, report) = fit_auto(&data, 1, false).unwrap();
        assert!(report.skip >= 3);
        assert_eq!(form.terms()[&BasisMonomial::new(1, &[(1, 1)])], int(2));
    }

    #[test]
    fn display_formats() {
        let mut terms = BTreeMap::new();
        terms.insert(BasisMonomial::new(1, &[(1, 1)]), int(2));
        terms.insert(BasisMonomial::constant(), ratio(-1, 3));
        terms.insert(BasisMonomial::new(-1, &[]), int(1));
        let form = ClosedForm::new(terms, 1);
        let s = form.to_string();
        assert!(s.contains("n*H1(n)"), "{s}");
        assert!(s.contains("1/3"), "{s}");
    }
}
