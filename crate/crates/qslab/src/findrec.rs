//! Discovery of linear difference equations with polynomial coefficients.
//!
//! Given a sequence `a_1, a_2, ...`, the finder searches for an operator
//! `sum_{i=0..ord} c_i(n) N^i` (`N` the shift, `N a_n = a_{n+1}`) with
//! polynomial `c_i` that annihilates the whole sequence. The search runs
//! over `(ord, deg)` cells in lexicographic order subject to
//! `ord + deg <= max_c`; within a cell the candidate comes from an exact
//! nullspace on a minimal window of offsets and must then survive every
//! remaining offset, which guards against artifacts of an underdetermined
//! window.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{Rational, UniPoly};
use crate::linalg::nullspace;

/// `sum_i coeff_polys[i](n) * N^i`, stored with cleared denominators:
/// integer polynomial coefficients of overall content 1, the leading
/// polynomial's leading coefficient positive. The equivalent monic form
/// (leading coefficient 1, lower coefficients rational functions of `n`) is
/// available for display via [`RecurrenceOperator::monic_terms`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecurrenceOperator {
    coeff_polys: Vec<UniPoly>,
}

impl RecurrenceOperator {
    /// Builds from per-power polynomials (index = power of `N`) and
    /// canonicalizes. Panics if the leading polynomial is zero.
    pub fn new(coeff_polys: Vec<UniPoly>) -> Self {
        assert!(
            coeff_polys.last().map(|p| !p.is_zero()).unwrap_or(false),
            "leading coefficient polynomial must be nonzero"
        );
        let mut op = RecurrenceOperator { coeff_polys };
        op.canonicalize();
        op
    }

    pub fn order(&self) -> usize {
        self.coeff_polys.len() - 1
    }

    pub fn coeff_polys(&self) -> &[UniPoly] {
        &self.coeff_polys
    }

    fn canonicalize(&mut self) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        // clear denominators across all coefficient polynomials
        let mut den = BigInt::one();
        for p in &self.coeff_polys {
            for c in p.coeffs() {
                den = den.lcm(c.denom());
            }
        }
        let mut content = BigInt::zero();
        let scaled: Vec<Vec<BigInt>> = self
            .coeff_polys
            .iter()
            .map(|p| {
                p.coeffs()
                    .iter()
                    .map(|c| {
                        let v = c.numer() * (&den / c.denom());
                        content = content.gcd(&v);
                        v
                    })
                    .collect()
            })
            .collect();
        if content.is_zero() {
            content = BigInt::one();
        }
        let lead_sign_negative = scaled
            .last()
            .and_then(|p| p.last())
            .map(|c| c.is_negative())
            .unwrap_or(false);
        if lead_sign_negative {
            content = -content;
        }
        self.coeff_polys = scaled
            .into_iter()
            .map(|nums| {
                UniPoly::from_coeffs(
                    nums.into_iter()
                        .map(|v| Rational::from_integer(v / &content))
                        .collect(),
                )
            })
            .collect();
    }

    /// Residual `sum_i c_i(offset) * a_{offset + i}` where `data[j]` holds
    /// `a_{j+1}` and `offset` is 1-based.
    ///
    /// Panics when `offset + order` exceeds the data range or `offset == 0`.
    pub fn apply(&self, data: &[Rational], offset: usize) -> Rational {
        let ord = self.order();
        assert!(offset >= 1, "offsets are 1-based");
        assert!(
            offset + ord <= data.len(),
            "offset {offset} + order {ord} exceeds data length {}",
            data.len()
        );
        let n = rational_from_usize(offset);
        let mut acc = Rational::zero();
        for (i, poly) in self.coeff_polys.iter().enumerate() {
            acc += poly.eval(&n) * &data[offset - 1 + i];
        }
        acc
    }

    /// True when the residual vanishes at every valid offset.
    pub fn annihilates(&self, data: &[Rational]) -> bool {
        let ord = self.order();
        if data.len() <= ord {
            return false;
        }
        (1..=data.len() - ord).all(|off| self.apply(data, off).is_zero())
    }

    /// Runs the recurrence forward from `seeds` (`a_1..=a_ord`) to produce
    /// `upto` terms. Panics if the leading polynomial vanishes at a needed
    /// offset.
    pub fn generate(&self, seeds: &[Rational], upto: usize) -> Vec<Rational> {
        let ord = self.order();
        assert_eq!(seeds.len(), ord, "need exactly {ord} seed values");
        let mut out = seeds.to_vec();
        while out.len() < upto {
            let offset = out.len() - ord + 1; // 1-based n of the oldest term used
            let n = rational_from_usize(offset);
            let lead = self.coeff_polys[ord].eval(&n);
            assert!(!lead.is_zero(), "leading polynomial vanishes at n = {offset}");
            let mut acc = Rational::zero();
            for i in 0..ord {
                acc += self.coeff_polys[i].eval(&n) * &out[offset - 1 + i];
            }
            out.push(-acc / lead);
        }
        out
    }

    /// Monic presentation: the coefficient of `N^i` as a reduced rational
    /// function `(numerator, denominator)` of `n`, with the `N^ord`
    /// coefficient equal to 1.
    pub fn monic_terms(&self) -> Vec<(UniPoly, UniPoly)> {
        let lead = &self.coeff_polys[self.order()];
        self.coeff_polys
            .iter()
            .map(|p| {
                if p.is_zero() {
                    return (UniPoly::zero(), UniPoly::one());
                }
                let g = p.gcd(lead);
                let num = divide_exact(p, &g);
                let den = divide_exact(lead, &g);
                // normalize sign into the numerator
                if den
                    .coeffs()
                    .last()
                    .map(|c| c.is_negative())
                    .unwrap_or(false)
                {
                    (num.neg(), den.neg())
                } else {
                    (num, den)
                }
            })
            .collect()
    }
}

/// Exact polynomial quotient (panics on nonzero remainder).
fn divide_exact(num: &UniPoly, den: &UniPoly) -> UniPoly {
    assert!(!den.is_zero());
    let mut rem = num.clone();
    let dd = den.degree().expect("nonzero divisor");
    let lead = den.coeff(dd);
    let mut q = vec![Rational::zero(); num.coeffs().len()];
    while let Some(rd) = rem.degree() {
        if rd < dd {
            break;
        }
        let factor = rem.coeff(rd) / &lead;
        q[rd - dd] = factor.clone();
        rem = rem.sub(&den.shift_up(rd - dd).scale(&factor));
    }
    assert!(rem.is_zero(), "non-exact polynomial division");
    UniPoly::from_coeffs(q)
}

fn rational_from_usize(n: usize) -> Rational {
    Rational::from_integer((n as i64).into())
}

impl fmt::Display for RecurrenceOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monic = self.monic_terms();
        let mut first = true;
        for (i, (num, den)) in monic.iter().enumerate().rev() {
            if num.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if den == &UniPoly::one() {
                format!("({})", replace_var(num))
            } else {
                format!("({})/({})", replace_var(num), replace_var(den))
            };
            match i {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}*N")?,
                _ => write!(f, "{coeff}*N^{i}")?,
            }
        }
        Ok(())
    }
}

fn replace_var(p: &UniPoly) -> String {
    p.to_string().replace('t', "n")
}

#[derive(Debug, Error)]
pub enum FindrecError {
    #[error(
        "insufficient data: no (order, degree) cell within max_c = {max_c} \
         leaves a window plus 8 holdout offsets for {len} terms"
    )]
    InsufficientData { max_c: usize, len: usize },
    #[error("no annihilating operator found with order + degree <= {max_c}")]
    NoneFound { max_c: usize },
}

/// Searches for the lowest-order (then lowest-degree) operator annihilating
/// `data` with `order + degree <= max_c`.
pub fn find_recurrence(data: &[Rational], max_c: usize) -> Result<RecurrenceOperator, FindrecError> {
    assert!(max_c >= 1);
    let len = data.len();
    let mut any_cell_feasible = false;
    for ord in 1..=max_c {
        for deg in 0..=max_c - ord {
            let unknowns = (ord + 1) * (deg + 1);
            let offsets_available = len.saturating_sub(ord);
            let window = unknowns - 1;
            if window + 8 > offsets_available {
                continue;
            }
            any_cell_feasible = true;
            if let Some(op) = try_cell(data, ord, deg, window) {
                return Ok(op);
            }
        }
    }
    if any_cell_feasible {
        Err(FindrecError::NoneFound { max_c })
    } else {
        Err(FindrecError::InsufficientData { max_c, len })
    }
}

/// One `(ord, deg)` cell: exact nullspace on the first `window` offsets,
/// then full verification; among verified candidates the one whose leading
/// polynomial has the lowest degree wins.
fn try_cell(
    data: &[Rational],
    ord: usize,
    deg: usize,
    window: usize,
) -> Option<RecurrenceOperator> {
    let unknowns = (ord + 1) * (deg + 1);
    let mut matrix = Vec::with_capacity(window);
    for n in 1..=window {
        let mut row = Vec::with_capacity(unknowns);
        for i in 0..=ord {
            let a = &data[n - 1 + i];
            let mut npow = Rational::one();
            for _ in 0..=deg {
                row.push(a * &npow);
                npow *= rational_from_usize(n);
            }
        }
        matrix.push(row);
    }
    let basis = nullspace(&matrix);
    let mut best: Option<(usize, RecurrenceOperator)> = None;
    for vec in basis {
        let mut polys = Vec::with_capacity(ord + 1);
        for i in 0..=ord {
            let coeffs = vec[i * (deg + 1)..(i + 1) * (deg + 1)].to_vec();
            polys.push(UniPoly::from_coeffs(coeffs));
        }
        if polys.last().map(|p| p.is_zero()).unwrap_or(true) {
            // really a lower-order operator; it had its chance in an
            // earlier cell
            continue;
        }
        let op = RecurrenceOperator::new(polys);
        if !op.annihilates(data) {
            continue;
        }
        let lead_deg = op.coeff_polys[ord].degree().unwrap_or(0);
        if best.as_ref().map(|(d, _)| lead_deg < *d).unwrap_or(true) {
            best = Some((lead_deg, op));
        }
    }
    best.map(|(_, op)| op)
}
