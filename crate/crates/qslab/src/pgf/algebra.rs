//! Coefficient domains for the recurrences.
//!
//! Every recurrence is a sum of products of earlier generating functions,
//! kernel polynomials in `t`, powers of `t`, and rational weights. Running
//! the same recurrence code over two domains gives both computation paths:
//! full polynomials, and series in `w = t - 1` truncated at a fixed order
//! (exact for factorial moments up to that order).

use crate::exact::{Rational, TruncSeries, UniPoly};

pub(crate) trait Algebra {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Rational) -> Self::Elem;
    /// Multiplication by `t^e`.
    fn shift(&self, a: &Self::Elem, e: usize) -> Self::Elem;
    /// Embeds a polynomial in `t` into the domain.
    fn embed(&self, p: &UniPoly) -> Self::Elem;

    fn one(&self) -> Self::Elem {
        self.embed(&UniPoly::one())
    }
}

pub(crate) struct PolyAlgebra;

impl Algebra for PolyAlgebra {
    type Elem = UniPoly;

    fn zero(&self) -> UniPoly {
        UniPoly::zero()
    }
    fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a.add(b)
    }
    fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a.mul(b)
    }
    fn scale(&self, a: &UniPoly, c: &Rational) -> UniPoly {
        a.scale(c)
    }
    fn shift(&self, a: &UniPoly, e: usize) -> UniPoly {
        a.shift_up(e)
    }
    fn embed(&self, p: &UniPoly) -> UniPoly {
        p.clone()
    }
}

pub(crate) struct SeriesAlgebra {
    pub order: usize,
}

impl Algebra for SeriesAlgebra {
    type Elem = TruncSeries;

    fn zero(&self) -> TruncSeries {
        TruncSeries::zero(self.order)
    }
    fn add(&self, a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
        a.add(b)
    }
    fn mul(&self, a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
        a.mul(b)
    }
    fn scale(&self, a: &TruncSeries, c: &Rational) -> TruncSeries {
        a.scale(c)
    }
    fn shift(&self, a: &TruncSeries, e: usize) -> TruncSeries {
        if e == 0 {
            return a.clone();
        }
        a.mul(&TruncSeries::one_plus_w_pow(e, self.order))
    }
    fn embed(&self, p: &UniPoly) -> TruncSeries {
        TruncSeries::from_poly(p, self.order)
    }
}
