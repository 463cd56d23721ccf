//! Frozen reference values for regression checks.
//!
//! Closed forms for the classical single-pivot comparison moments and the
//! swap-count moments of each partition scheme, the published 20-term mean
//! sequences, small generating-function values, the order-4 recurrence for
//! 3-pivot comparison means, and the large-`n` scaled-moment profile.
//! Everything here is an exact constant; the engine is expected to reproduce
//! each one from scratch.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exact::{int, parse_rational, ratio, Rational, UniPoly};
use crate::findrec::RecurrenceOperator;

use super::{BasisMonomial, ClosedForm};

/// Tiny expression builder over the fitting monomials, used to transcribe
/// factored formulas into expanded term maps.
#[derive(Clone, Debug)]
struct Expr(BTreeMap<BasisMonomial, Rational>);

impl Expr {
    fn constant(c: Rational) -> Expr {
        let mut m = BTreeMap::new();
        m.insert(BasisMonomial::constant(), c);
        Expr(m).trimmed()
    }

    fn num(v: i64) -> Expr {
        Expr::constant(int(v))
    }

    fn frac(n: i64, d: i64) -> Expr {
        Expr::constant(ratio(n, d))
    }

    fn n() -> Expr {
        Expr::monomial(BasisMonomial::new(1, &[]))
    }

    fn inv_n() -> Expr {
        Expr::monomial(BasisMonomial::new(-1, &[]))
    }

    fn h(k: u32) -> Expr {
        Expr::monomial(BasisMonomial::new(0, &[(k, 1)]))
    }

    fn monomial(m: BasisMonomial) -> Expr {
        let mut map = BTreeMap::new();
        map.insert(m, int(1));
        Expr(map)
    }

    fn trimmed(mut self) -> Expr {
        self.0.retain(|_, c| !num_traits::Zero::is_zero(c));
        self
    }

    fn pow(&self, e: u32) -> Expr {
        let mut acc = Expr::num(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn scale(&self, c: Rational) -> Expr {
        Expr(self.0.iter().map(|(m, v)| (m.clone(), v * &c)).collect()).trimmed()
    }

    fn into_form(self, validity_from: usize) -> ClosedForm {
        ClosedForm::new(self.0, validity_from)
    }
}

impl Add for &Expr {
    type Output = Expr;
    fn add(self, rhs: &Expr) -> Expr {
        let mut out = self.0.clone();
        for (m, c) in &rhs.0 {
            let entry = out.entry(m.clone()).or_insert_with(|| int(0));
            *entry += c;
        }
        Expr(out).trimmed()
    }
}

impl Sub for &Expr {
    type Output = Expr;
    fn sub(self, rhs: &Expr) -> Expr {
        self + &rhs.neg()
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale(int(-1))
    }
}

impl Mul for &Expr {
    type Output = Expr;
    fn mul(self, rhs: &Expr) -> Expr {
        let mut out: BTreeMap<BasisMonomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &rhs.0 {
                let m = ma.mul(mb);
                let entry = out.entry(m).or_insert_with(|| int(0));
                *entry += ca * cb;
            }
        }
        Expr(out).trimmed()
    }
}

fn n_plus(c: i64) -> Expr {
    &Expr::n() + &Expr::num(c)
}

/// `E[C_n] = 2(n+1)H(n) - 4n` — the classical 1-pivot comparison mean.
pub fn comp1_mean() -> ClosedForm {
    (&(&Expr::num(2) * &(&n_plus(1) * &Expr::h(1))) - &Expr::n().scale(int(4))).into_form(1)
}

/// `var[C_n] = n(7n+13) - 2(n+1)H1(n) - 4(n+1)^2 H2(n)`.
pub fn comp1_variance() -> ClosedForm {
    let a = &Expr::n() * &(&Expr::n().scale(int(7)) + &Expr::num(13));
    let b = (&n_plus(1) * &Expr::h(1)).scale(int(2));
    let c = (&n_plus(1).pow(2) * &Expr::h(2)).scale(int(4));
    (&(&a - &b) - &c).into_form(1)
}

/// Third central moment of 1-pivot comparisons.
pub fn comp1_m3() -> ClosedForm {
    let poly = &Expr::n()
        * &(&(&Expr::n().pow(2).scale(int(19)) + &Expr::n().scale(int(81))) + &Expr::num(104));
    let t1 = &Expr::h(1) * &(&Expr::n().scale(int(14)) + &Expr::num(14));
    let t2 = (&n_plus(1).pow(2) * &Expr::h(2)).scale(int(12));
    let t3 = (&n_plus(1).pow(3) * &Expr::h(3)).scale(int(16));
    (&(&(&poly.neg() + &t1) + &t2) + &t3).into_form(1)
}

/// Fourth central moment of 1-pivot comparisons.
pub fn comp1_m4() -> ClosedForm {
    let n = Expr::n();
    let quartic = &n
        * &(&(&(&n.pow(3).scale(int(2260)) + &n.pow(2).scale(int(9658)))
            + &n.scale(int(15497)))
            + &Expr::num(11357));
    let quartic = quartic.scale(ratio(1, 9));
    let h1_poly = &(&n.pow(2).scale(int(42)) + &n.scale(int(78))) + &Expr::num(77);
    let t_h1 = (&(&n_plus(1) * &h1_poly) * &Expr::h(1)).scale(int(-2));
    let t_h1sq = (&n_plus(1).pow(2) * &Expr::h(1).pow(2)).scale(int(12));
    let h2_poly = &(&n.pow(2).scale(int(42)) + &n.scale(int(78))) + &Expr::num(31);
    let t_h2 = &(&(&h2_poly * &n_plus(1).pow(2)).scale(int(-4))
        + &(&n_plus(1).pow(3) * &Expr::h(1)).scale(int(48)))
        * &Expr::h(2);
    let t_h2sq = (&n_plus(1).pow(4) * &Expr::h(2).pow(2)).scale(int(48));
    let t_h3 = (&n_plus(1).pow(3) * &Expr::h(3)).scale(int(-96));
    let t_h4 = (&n_plus(1).pow(4) * &Expr::h(4)).scale(int(-96));
    (&(&(&(&(&(&quartic + &t_h1) + &t_h1sq) + &t_h2) + &t_h2sq) + &t_h3) + &t_h4).into_form(1)
}

/// `E[X_n] = (n+1)H(n) - 2n` — swap mean of the first-element-pivot scheme
/// (and of the uniform-position scheme, which shares it).
pub fn swap_v1_mean() -> ClosedForm {
    (&(&n_plus(1) * &Expr::h(1)) - &Expr::n().scale(int(2))).into_form(1)
}

/// `var = 2n(n+2) - (n+1)H1(n) - (n+1)^2 H2(n)`.
pub fn swap_v1_variance() -> ClosedForm {
    let a = (&Expr::n() * &n_plus(2)).scale(int(2));
    let b = &n_plus(1) * &Expr::h(1);
    let c = &n_plus(1).pow(2) * &Expr::h(2);
    (&(&a - &b) - &c).into_form(1)
}

/// Third central moment of the first-element-pivot swap count.
pub fn swap_v1_m3() -> ClosedForm {
    let a = (&Expr::n() * &n_plus(3).pow(2)).scale(ratio(-9, 4));
    let b = &(&Expr::n().scale(int(4)) + &Expr::num(4)) * &Expr::h(1);
    let c = (&n_plus(1).pow(2) * &Expr::h(2)).scale(int(3));
    let d = (&n_plus(1).pow(3) * &Expr::h(3)).scale(int(2));
    (&(&(&a + &b) + &c) + &d).into_form(1)
}

/// Fourth central moment of the first-element-pivot swap count.
pub fn swap_v1_m4() -> ClosedForm {
    let n = Expr::n();
    let quartic = (&n
        * &(&(&(&n.pow(3).scale(int(335)) + &n.pow(2).scale(int(1568)))
            + &n.scale(int(3067)))
            + &Expr::num(2770)))
        .scale(ratio(1, 18));
    let h1_poly = &(&n.pow(2).scale(int(4)) + &n.scale(int(8))) + &Expr::num(9);
    let t_h1 = (&(&n_plus(1) * &h1_poly) * &Expr::h(1)).scale(int(-3));
    let t_h1sq = (&n_plus(1).pow(2) * &Expr::h(1).pow(2)).scale(int(3));
    let h2_poly = &(&n.pow(2).scale(int(12)) + &n.scale(int(24))) + &Expr::num(19);
    let t_h2 = &(&(&h2_poly * &n_plus(1).pow(2)).neg()
        + &(&n_plus(1).pow(3) * &Expr::h(1)).scale(int(6)))
        * &Expr::h(2);
    let t_h2sq = (&n_plus(1).pow(4) * &Expr::h(2).pow(2)).scale(int(3));
    let t_h3 = (&n_plus(1).pow(3) * &Expr::h(3)).scale(int(-12));
    let t_h4 = (&n_plus(1).pow(4) * &Expr::h(4)).scale(int(-6));
    (&(&(&(&(&(&quartic + &t_h1) + &t_h1sq) + &t_h2) + &t_h2sq) + &t_h3) + &t_h4).into_form(1)
}

/// The uniform-position scheme has the same swap mean as the
/// first-element-pivot scheme.
pub fn swap_v2_mean() -> ClosedForm {
    swap_v1_mean()
}

/// `var = n(11n+17)/6 - (n+1)H1(n)/3 - (n+1)^2 H2(n)`.
pub fn swap_v2_variance() -> ClosedForm {
    let a = (&Expr::n() * &(&Expr::n().scale(int(11)) + &Expr::num(17))).scale(ratio(1, 6));
    let b = (&n_plus(1) * &Expr::h(1)).scale(ratio(1, 3));
    let c = &n_plus(1).pow(2) * &Expr::h(2);
    (&(&a - &b) - &c).into_form(1)
}

/// Third central moment of the uniform-position swap count.
pub fn swap_v2_m3() -> ClosedForm {
    let n = Expr::n();
    let a = (&n * &(&(&n.pow(2).scale(int(14)) + &n.scale(int(57))) + &Expr::num(73)))
        .scale(ratio(-1, 6));
    let b = &(&n.scale(int(2)) + &Expr::num(2)) * &Expr::h(1);
    let c = &n_plus(1).pow(2) * &Expr::h(2);
    let d = (&n_plus(1).pow(3) * &Expr::h(3)).scale(int(2));
    (&(&(&a + &b) + &c) + &d).into_form(1)
}

/// Fourth central moment of the uniform-position swap count.
pub fn swap_v2_m4() -> ClosedForm {
    let n = Expr::n();
    let quartic = (&n
        * &(&(&(&n.pow(3).scale(int(1496)) + &n.pow(2).scale(int(5531)))
            + &n.scale(int(8527)))
            + &Expr::num(6922)))
        .scale(ratio(1, 90));
    let h1_poly = &(&n.pow(2).scale(int(55)) + &n.scale(int(85))) + &Expr::num(173);
    let t_h1 = (&(&n_plus(1) * &h1_poly) * &Expr::h(1)).scale(ratio(-1, 15));
    let t_h1sq = (&n_plus(1).pow(2) * &Expr::h(1).pow(2)).scale(ratio(1, 3));
    let h2_poly = &(&n.pow(2).scale(int(33)) + &n.scale(int(51))) + &Expr::num(25);
    let t_h2 = &(&(&h2_poly * &n_plus(1).pow(2)).scale(ratio(-1, 3))
        + &(&n_plus(1).pow(3) * &Expr::h(1)).scale(int(2)))
        * &Expr::h(2);
    let t_h2sq = (&n_plus(1).pow(4) * &Expr::h(2).pow(2)).scale(int(3));
    let t_h3 = (&n_plus(1).pow(3) * &Expr::h(3)).scale(int(-4));
    let t_h4 = (&n_plus(1).pow(4) * &Expr::h(4)).scale(int(-6));
    (&(&(&(&(&(&quartic + &t_h1) + &t_h1sq) + &t_h2) + &t_h2sq) + &t_h3) + &t_h4).into_form(1)
}

/// `E[X_n] = (n+1)H(n) - 4n/3 - 1/3` — single-pass in-place swap mean.
pub fn swap_v3_mean() -> ClosedForm {
    (&(&(&n_plus(1) * &Expr::h(1)) - &Expr::n().scale(ratio(4, 3))) - &Expr::frac(1, 3))
        .into_form(2)
}

/// `var = 2n^2 + 187n/45 + 7/45 - 2/(3n) - (n+1)^2 H2(n) - (n+1)H1(n)`.
///
/// The `1/n` term makes this the first formula needing the rational basis.
pub fn swap_v3_variance() -> ClosedForm {
    let a = &(&Expr::n().pow(2).scale(int(2)) + &Expr::n().scale(ratio(187, 45)))
        + &Expr::frac(7, 45);
    let b = Expr::inv_n().scale(ratio(2, 3));
    let c = &n_plus(1).pow(2) * &Expr::h(2);
    let d = &n_plus(1) * &Expr::h(1);
    (&(&(&a - &b) - &c) - &d).into_form(4)
}

/// `E[X_n] = (n+2)H(n) - 5n/2 - 1/2` — same-index-suppressing scheme.
pub fn swap_v4_mean() -> ClosedForm {
    (&(&(&n_plus(2) * &Expr::h(1)) - &Expr::n().scale(ratio(5, 2))) - &Expr::frac(1, 2))
        .into_form(1)
}

/// `var = 2n^2 - 215n/12 + 1/12 + (11n+14)H1(n) - (n^2+2n+2)H2(n) - (2n+2)H1(n)^2`.
pub fn swap_v4_variance() -> ClosedForm {
    let a = &(&Expr::n().pow(2).scale(int(2)) - &Expr::n().scale(ratio(215, 12)))
        + &Expr::frac(1, 12);
    let b = &(&Expr::n().scale(int(11)) + &Expr::num(14)) * &Expr::h(1);
    let h2_poly = &(&Expr::n().pow(2) + &Expr::n().scale(int(2))) + &Expr::num(2);
    let c = &h2_poly * &Expr::h(2);
    let d = &(&Expr::n().scale(int(2)) + &Expr::num(2)) * &Expr::h(1).pow(2);
    (&(&(&a + &b) - &c) - &d).into_form(2)
}

/// `E[X_n] = 4(n+1)H(n)/5 - 39n/25 - 1/100` — dual-pivot swap mean.
pub fn swap_dual_mean() -> ClosedForm {
    (&(&(&n_plus(1) * &Expr::h(1)).scale(ratio(4, 5)) - &Expr::n().scale(ratio(39, 25)))
        - &Expr::frac(1, 100))
        .into_form(4)
}

/// Dual-pivot comparison moments coincide with the 1-pivot ones.
pub fn comp_dual_mean() -> ClosedForm {
    comp1_mean()
}

pub fn comp_dual_variance() -> ClosedForm {
    comp1_variance()
}

pub fn comp_dual_m3() -> ClosedForm {
    comp1_m3()
}

pub fn comp_dual_m4() -> ClosedForm {
    comp1_m4()
}

fn parse_list(strs: &[&str]) -> Vec<Rational> {
    strs.iter()
        .map(|s| parse_rational(s).expect("baseline constant parses"))
        .collect()
}

/// Published swap means of the same-index-suppressing scheme, `n = 1..=20`.
pub fn swap_v4_means_20() -> Vec<Rational> {
    parse_list(&[
        "0",
        "1/2",
        "7/6",
        "2",
        "179/60",
        "41/10",
        "747/140",
        "187/28",
        "20459/2520",
        "1013/105",
        "312083/27720",
        "25631/1980",
        "353201/24024",
        "1488737/90090",
        "6634189/360360",
        "814939/40040",
        "273855917/12252240",
        "4983019/204204",
        "97930039/3695120",
        "20210819/705432",
    ])
}

/// Published swap means of the two-candidate-pivot scheme, `n = 1..=20`.
pub fn swap_v5_means_20() -> Vec<Rational> {
    parse_list(&[
        "0",
        "1/2",
        "4/3",
        "20/9",
        "155/48",
        "1957/450",
        "2341/420",
        "4055/588",
        "55829/6720",
        "794/81",
        "630547/55440",
        "170095/13068",
        "12735487/864864",
        "3864281/234234",
        "2521865/137592",
        "36424327/1801800",
        "4343228489/196035840",
        "107768347/4463316",
        "15673532207/598609440",
        "1136599735/40209624",
    ])
}

/// Published dual-pivot comparison means, `n = 1..=20`.
pub fn comp_dual_means_20() -> Vec<Rational> {
    parse_list(&[
        "0",
        "1",
        "8/3",
        "29/6",
        "37/5",
        "103/10",
        "472/35",
        "2369/140",
        "2593/126",
        "30791/1260",
        "32891/1155",
        "452993/13860",
        "476753/12870",
        "499061/12012",
        "2080328/45045",
        "18358463/360360",
        "18999103/340340",
        "124184839/2042040",
        "127860511/1939938",
        "26274175/369512",
    ])
}

/// Published 3-pivot comparison means, `n = 1..=20`.
pub fn comp_three_pivot_means_20() -> Vec<Rational> {
    parse_list(&[
        "0",
        "1",
        "8/3",
        "14/3",
        "106/15",
        "49/5",
        "64/5",
        "561/35",
        "1226/63",
        "5192/225",
        "465316/17325",
        "533509/17325",
        "714008/20475",
        "61615768/1576575",
        "342234824/7882875",
        "754600981/15765750",
        "1404956027/26801775",
        "15298397599/268017750",
        "31489234438/509233725",
        "1697926310039/25461686250",
    ])
}

/// Published dual-pivot comparison distributions for `n = 1..=5`.
pub fn comp_dual_pgfs_upto_5() -> Vec<UniPoly> {
    let mk = |pairs: &[(usize, Rational)]| {
        let deg = pairs.iter().map(|(e, _)| *e).max().unwrap_or(0);
        let mut coeffs = vec![int(0); deg + 1];
        for (e, c) in pairs {
            coeffs[*e] = c.clone();
        }
        UniPoly::from_coeffs(coeffs)
    };
    vec![
        UniPoly::one(),
        mk(&[(1, int(1))]),
        mk(&[(3, ratio(2, 3)), (2, ratio(1, 3))]),
        mk(&[(6, ratio(1, 3)), (5, ratio(1, 6)), (4, ratio(1, 2))]),
        mk(&[
            (10, ratio(2, 15)),
            (9, ratio(1, 15)),
            (8, ratio(1, 5)),
            (7, ratio(4, 15)),
            (6, ratio(1, 3)),
        ]),
    ]
}

/// Published first-partition swap distribution at `(n, k, i) = (9, 5, 5)`.
pub fn per_prob_9_5_5() -> UniPoly {
    UniPoly::from_coeffs(vec![
        ratio(1, 70),
        int(0),
        ratio(8, 35),
        int(0),
        ratio(18, 35),
        int(0),
        ratio(8, 35),
        int(0),
        ratio(1, 70),
    ])
}

/// The swap mean of the same-index-suppressing scheme at `n = 100`
/// (coefficient of `w` in the order-10 truncated series).
pub fn swap_v4_mean_n100() -> Rational {
    parse_rational(
        "7617634712836831344646726224164628686543/27341323619495089084130905464828354336",
    )
    .unwrap()
}

/// Coefficient of `w^2` in the same series.
pub fn swap_v4_w2_n100() -> Rational {
    parse_rational(
        "1169146867836246319480317311960440606057785761234433183813484643/\
         29517287662514914280390084303910684938635848245569645536000",
    )
    .unwrap()
}

/// Coefficient of `w^3` in the same series.
pub fn swap_v4_w3_n100() -> Rational {
    parse_rational(
        "58024172013839694810625346567417182291098218339356411215067112605982034521/\
         15125688216961909953814450921738787993181911018772132633289881600000",
    )
    .unwrap()
}

/// Scaled central moments 3..=10 of the same-index-suppressing scheme at
/// `n = 100`, to ten printed digits.
pub fn swap_v4_scaled_profile_n100() -> [f64; 8] {
    [
        0.7810052982,
        3.942047050,
        9.146681877,
        37.12169647,
        137.7143092,
        613.5286860,
        2872.409923,
        14709.75560,
    ]
}

/// Limiting skewness of the 1-pivot comparison count.
pub fn comp1_skewness_limit() -> f64 {
    0.8548818671325885
}

/// Limiting kurtosis of the 1-pivot comparison count.
pub fn comp1_kurtosis_limit() -> f64 {
    4.1781156382698542
}

/// The order-4 difference equation satisfied by the 3-pivot comparison
/// means, with denominators cleared:
///
/// `c0 = (3n+4)(n^2-5n+12)(n+2)`,
/// `c1 = -(12n^4+13n^3-12n^2+59n+24)`,
/// `c2 = 3n(n+1)(6n+5)(n+2)`,
/// `c3 = -(n+1)(12n+7)(n+3)(n+2)`,
/// `c4 = (n+4)(n+3)(n+2)(3n+1)`.
pub fn comp_three_pivot_recurrence() -> RecurrenceOperator {
    let lin = |a: i64, b: i64| UniPoly::from_coeffs(vec![int(b), int(a)]);
    let quad = |a: i64, b: i64, c: i64| UniPoly::from_coeffs(vec![int(c), int(b), int(a)]);
    let c0 = lin(3, 4).mul(&quad(1, -5, 12)).mul(&lin(1, 2));
    let c1 = UniPoly::from_coeffs(vec![int(24), int(59), int(-12), int(13), int(12)]).neg();
    let c2 = lin(1, 0)
        .mul(&lin(1, 1))
        .mul(&lin(6, 5))
        .mul(&lin(1, 2))
        .scale(&int(3));
    let c3 = lin(1, 1).mul(&lin(12, 7)).mul(&lin(1, 3)).mul(&lin(1, 2)).neg();
    let c4 = lin(1, 4).mul(&lin(1, 3)).mul(&lin(1, 2)).mul(&lin(3, 1));
    RecurrenceOperator::new(vec![c0, c1, c2, c3, c4])
}

/// Monte Carlo comparison means published for the binary-search k-pivot
/// sorter at `T = 100` trials: rows are `k = 3, 4, 5, 6`, columns are
/// `n = 10, 20, 30, 40, 50`.
pub fn binary_kpivot_t100_table() -> [[f64; 5]; 4] {
    [
        [22.95, 65.75, 118.71, 178.28, 239.45],
        [23.78, 67.77, 120.91, 180.35, 251.19],
        [23.54, 65.74, 119.59, 178.36, 241.03],
        [23.14, 66.22, 120.07, 176.43, 236.46],
    ]
}
