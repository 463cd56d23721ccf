//! Truncated power series in `w = t - 1`.
//!
//! Substituting `t = 1 + w` into a probability generating function gives
//! `P(1+w) = sum_r f_r/r! * w^r` where `f_r` are the factorial moments.
//! Keeping only the first `order + 1` coefficients through every arithmetic
//! step is exact for those coefficients: a product coefficient at order `r`
//! only ever reads factors of order `<= r`. This is the fast path for moments
//! at large `n`, where the full polynomial would have degree `Theta(n^2)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{binomial, Rational, UniPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<Rational>, // exactly order + 1 entries
}

impl TruncSeries {
    /// The constant series 1 (all higher coefficients zero).
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = Rational::one();
        TruncSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncSeries { order, coeffs }
    }

    /// Expands a polynomial in `t` at `t = 1 + w`, truncated: the `w^r`
    /// coefficient is `sum_i c_i C(i, r)`, accumulated with a running
    /// Pascal row for `C(i, 0..=order)`.
    pub fn from_poly(p: &UniPoly, order: usize) -> Self {
        let mut acc = vec![Rational::zero(); order + 1];
        let mut row = vec![BigInt::zero(); order + 1];
        row[0] = BigInt::one();
        for (i, c) in p.coeffs().iter().enumerate() {
            if i > 0 {
                for r in (1..=order).rev() {
                    let (a, b) = row.split_at_mut(r);
                    b[0] += &a[r - 1];
                }
            }
            if !c.is_zero() {
                for (a, b) in acc.iter_mut().zip(&row) {
                    if !b.is_zero() {
                        *a += c * Rational::from_integer(b.clone());
                    }
                }
            }
        }
        TruncSeries {
            order,
            coeffs: acc,
        }
    }

    /// `(1+w)^e` truncated: coefficients are the binomials `C(e, r)`.
    pub fn one_plus_w_pow(e: usize, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|r| Rational::from_integer(binomial(e as u64, r as u64)))
            .collect();
        TruncSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, r: usize) -> Rational {
        self.coeffs.get(r).cloned().unwrap_or_else(Rational::zero)
    }

    /// Factorial moments `f_r = r! * coeff_r` for `r = 0..=order`.
    pub fn factorial_moments(&self) -> Vec<Rational> {
        let mut fact = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(r, c)| {
                if r > 0 {
                    fact *= BigInt::from(r);
                }
                c * Rational::from_integer(fact.clone())
            })
            .collect()
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        assert_eq!(self.order, other.order, "series order mismatch");
        TruncSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> TruncSeries {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated product, denominators cleared for the integer convolution.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        assert_eq!(self.order, other.order, "series order mismatch");
        let (na, da) = clear(&self.coeffs);
        let (nb, db) = clear(&other.coeffs);
        let mut acc = vec![BigInt::zero(); self.order + 1];
        for (i, a) in na.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in nb.iter().enumerate().take(self.order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                acc[i + j] += a * b;
            }
        }
        let den = da * db;
        TruncSeries {
            order: self.order,
            coeffs: acc
                .into_iter()
                .map(|n| Rational::new(n, den.clone()))
                .collect(),
        }
    }
}

fn clear(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
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

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| match r {
                0 => format!("{c}"),
                1 => format!("{c}*w"),
                _ => format!("{c}*w^{r}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0 + O(w^{})", self.order + 1)
        } else {
            write!(f, "{} + O(w^{})", terms.join(" + "), self.order + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn expansion_matches_direct_substitution() {
        // p = 1/2 + 1/2 t^3; p(1+w) = 1/2 + 1/2 (1 + 3w + 3w^2 + w^3)
        let p = UniPoly::from_coeffs(vec![ratio(1, 2), int(0), int(0), ratio(1, 2)]);
        let s = TruncSeries::from_poly(&p, 2);
        assert_eq!(s.coeff(0), int(1));
        assert_eq!(s.coeff(1), ratio(3, 2));
        assert_eq!(s.coeff(2), ratio(3, 2));
    }

    #[test]
    fn truncated_product_agrees_with_full_poly_product() {
        let a = UniPoly::from_coeffs(vec![ratio(1, 3), ratio(2, 3)]);
        let b = UniPoly::from_coeffs(vec![ratio(1, 2), int(0), ratio(1, 2)]);
        let full = TruncSeries::from_poly(&a.mul(&b), 3);
        let truncated = TruncSeries::from_poly(&a, 3).mul(&TruncSeries::from_poly(&b, 3));
        assert_eq!(full, truncated);
    }

    #[test]
    fn binomial_row() {
        let s = TruncSeries::one_plus_w_pow(5, 3);
        assert_eq!(s.coeffs(), &[int(1), int(5), int(10), int(10)]);
    }

    #[test]
    fn factorial_moments_scale() {
        let s = TruncSeries::from_coeffs(3, vec![int(1), int(2), int(3), int(4)]);
        assert_eq!(
            s.factorial_moments(),
            vec![int(1), int(2), int(6), int(24)]
        );
    }
}
