//! Dense univariate polynomials over exact rationals.
//!
//! A [`UniPoly`] stores the coefficient of `t^i` at index `i` with no trailing
//! zeros (canonical form). Probability generating functions are represented
//! this way; the counts occurring in the Quicksort models fill contiguous
//! ranges, so dense storage is the right shape.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{bigint_pow, Rational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// `c * t^exp`.
    pub fn monomial(exp: usize, c: Rational) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        UniPoly { coeffs }
    }

    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() || k == 0 {
            let mut p = self.clone();
            p.trim();
            return p;
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Value at `t = 1`, i.e. the coefficient sum. For a generating function
    /// of a probability distribution this is exactly 1.
    pub fn eval_one(&self) -> Rational {
        let mut acc = Rational::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// `sum_i i^r * coeff_i` — the image of `(t d/dt)^r` evaluated at `t = 1`,
    /// which for a generating function is the `r`-th raw moment.
    pub fn theta_moment(&self, r: u32) -> Rational {
        let mut acc = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * Rational::from_integer(bigint_pow(&BigInt::from(i), r));
        }
        acc
    }

    /// Exact convolution product.
    ///
    /// Denominators are cleared first so the inner loop runs on big integers;
    /// each output coefficient is reduced once at the end. This is markedly
    /// faster than accumulating reduced rationals term by term.
    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let (na, da) = clear_denominators(&self.coeffs);
        let (nb, db) = clear_denominators(&other.coeffs);
        let mut acc = vec![BigInt::zero(); na.len() + nb.len() - 1];
        for (i, a) in na.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in nb.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[i + j] += a * b;
            }
        }
        let den = da * db;
        UniPoly::from_coeffs(
            acc.into_iter()
                .map(|n| Rational::new(n, den.clone()))
                .collect(),
        )
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Polynomial gcd (Euclidean algorithm), normalized to integer
    /// coefficients with content 1 and a positive leading coefficient.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.normalize_integer()
    }

    /// Remainder of polynomial division.
    fn rem(&self, divisor: &UniPoly) -> UniPoly {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let dd = divisor.degree().unwrap();
        let lead = divisor.coeffs[dd].clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = &rem.coeffs[rd] / &lead;
            let shifted = divisor.shift_up(rd - dd).scale(&factor);
            rem = rem.sub(&shifted);
        }
        rem
    }

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient. Zero stays zero.
    pub fn normalize_integer(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let (nums, _den) = clear_denominators(&self.coeffs);
        let mut content = BigInt::zero();
        for n in &nums {
            content = content.gcd(n);
        }
        let lead_negative = nums.last().map(|n| n.is_negative()).unwrap_or(false);
        if lead_negative {
            content = -content;
        }
        UniPoly::from_coeffs(
            nums.into_iter()
                .map(|n| Rational::from_integer(n / &content))
                .collect(),
        )
    }

    /// Exact-string coefficient list, low to high. Shared wire format.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(super::format_rational).collect()
    }

    pub fn from_coeff_strings<S: AsRef<str>>(
        strs: &[S],
    ) -> Result<UniPoly, num_rational::ParseRatioError> {
        let mut coeffs = Vec::with_capacity(strs.len());
        for s in strs {
            coeffs.push(super::parse_rational(s.as_ref())?);
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

/// Returns scaled integer numerators and the common (lcm) denominator.
fn clear_denominators(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for c in coeffs {
        den = den.lcm(c.denom());
    }
    let nums = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (nums, den)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::add(self, rhs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::sub(self, rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::mul(self, rhs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
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
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn t() -> UniPoly {
        UniPoly::monomial(1, int(1))
    }

    #[test]
    fn mul_identity_and_squares() {
        let any = UniPoly::from_coeffs(vec![ratio(1, 3), int(0), int(2)]);
        assert_eq!(UniPoly::one().mul(&any), any);
        assert_eq!(t().mul(&t()), UniPoly::monomial(2, int(1)));

        // (1/2 + t/2)^2 = 1/4 + t/2 + t^2/4
        let half = UniPoly::from_coeffs(vec![ratio(1, 2), ratio(1, 2)]);
        let sq = half.mul(&half);
        assert_eq!(
            sq,
            UniPoly::from_coeffs(vec![ratio(1, 4), ratio(1, 2), ratio(1, 4)])
        );
    }

    #[test]
    fn theta_moments() {
        // point mass at 5
        let p = UniPoly::monomial(5, int(1));
        assert_eq!(p.theta_moment(1), int(5));
        // normalization of any generating function
        let pgf = UniPoly::from_coeffs(vec![ratio(1, 2), int(0), ratio(1, 2)]);
        assert_eq!(pgf.theta_moment(0), int(1));
        // 0.5*0 + 0.5*4 = 2
        assert_eq!(pgf.theta_moment(2), int(2));
    }

    #[test]
    fn canonical_trailing_zeros() {
        let p = UniPoly::from_coeffs(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        let z = UniPoly::from_coeffs(vec![int(0), int(0)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn eval_and_shift() {
        let p = UniPoly::from_coeffs(vec![int(1), int(2), int(3)]);
        assert_eq!(p.eval(&int(2)), int(1 + 4 + 12));
        assert_eq!(p.eval_one(), int(6));
        assert_eq!(p.shift_up(2).coeff(4), int(3));
        assert_eq!(p.shift_up(2).coeff(1), int(0));
    }

    #[test]
    fn coeff_string_round_trip() {
        let p = UniPoly::from_coeffs(vec![ratio(1, 70), int(0), ratio(8, 35)]);
        let s = p.to_coeff_strings();
        assert_eq!(s, vec!["1/70", "0", "8/35"]);
        assert_eq!(UniPoly::from_coeff_strings(&s).unwrap(), p);
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (t+1)(t+2) and (t+1)(t+3) share (t+1)
        let a = UniPoly::from_coeffs(vec![int(2), int(3), int(1)]);
        let b = UniPoly::from_coeffs(vec![int(3), int(4), int(1)]);
        let g = a.gcd(&b);
        assert_eq!(g, UniPoly::from_coeffs(vec![int(1), int(1)]));
    }

    #[test]
    fn display_is_readable() {
        let p = UniPoly::from_coeffs(vec![ratio(1, 3), int(0), ratio(-2, 3)]);
        assert_eq!(p.to_string(), "-2/3*t^2 + 1/3");
    }
}
