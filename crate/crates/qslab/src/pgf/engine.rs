//! Bottom-up evaluation of every variant's recurrence, with memoization.
//!
//! Each variant's generating functions are held in a ladder `P_0 .. P_top`
//! that only ever grows; auxiliary self-convolution ladders are maintained
//! alongside so one new level costs `O(n)` products instead of the naive
//! `O(n^2)` or `O(n^3)` of the multi-pivot sums. Recurrences are (recalling
//! that `P_{k-1} P_{n-k}` terms are symmetric under `k <-> n+1-k`, which
//! halves the expensive products):
//!
//! - `Comp1Pivot`: `P_n = t^{n-1}/n * sum_k P_{k-1} P_{n-k}`
//! - `SwapV1`:     `P_n = 1/n * sum_k P_{k-1} P_{n-k} t^{k-1}`
//! - `SwapV2`:     `P_n = 1/n^2 * sum_k P_{k-1} P_{n-k} sum_i Q(n,k,i,t)`
//! - `SwapV3`:     `P_n = 1/n * sum_k P_{k-1} P_{n-k} t^k`
//! - `SwapV4`:     `P_n = 1/n * sum_k P_{k-1} P_{n-k} Q(n,k,t)`
//! - `SwapV5`:     `P_n = sum_k P_{k-1} P_{n-k} Q(n,k,t) w(n,k)`
//! - `CompDual`:   `P_n = 1/C(n,2) * sum_{i<j} P_{i-1} P_{j-i-1} P_{n-j} t^{2n-i-2}`
//! - `SwapDual`:   `P_n = (1+t)/2 / C(n,2) * sum_{i<j} P_{i-1} P_{j-i-1} P_{n-j} t^{n-1+i-j}`
//! - `CompThreePivot`: `P_n = (2/3 t^{2n-3} + 1/3 t^{2n-4}) / C(n,3) *`
//!   the triple convolution of four sub-functions
//! - `CompKPivotLinear`: pivots sorted at 1-pivot cost, each element paying
//!   `min(m, k)` comparisons for landing in sublist `m`, sublists shorter
//!   than `k` sorted by 1-pivot Quicksort.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::exact::{binomial, ratio, Rational, TruncSeries, UniPoly};

use super::algebra::{Algebra, PolyAlgebra, SeriesAlgebra};
use super::kernels::{ip_prob, per_prob_position_sum, pivot_weight_v5};
use super::{Family, VariantId};

/// Memoizing evaluator for the variant recurrences.
///
/// Ladders for distinct variants sit behind separate locks, so different
/// variants can be extended concurrently; entries, once computed, are never
/// mutated.
pub struct PgfEngine {
    poly: Mutex<HashMap<VariantId, Arc<Mutex<Ladder<UniPoly>>>>>,
    series: Mutex<HashMap<(VariantId, usize), Arc<Mutex<Ladder<TruncSeries>>>>>,
}

impl Default for PgfEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl PgfEngine {
    pub fn new() -> Self {
        PgfEngine {
            poly: Mutex::new(HashMap::new()),
            series: Mutex::new(HashMap::new()),
        }
    }

    /// The exact distribution `P_n(t)` of `variant`'s cost on lists of
    /// length `n`.
    ///
    /// Panics for [`Family::CompKPivotBinary`], which has no recurrence.
    pub fn pgf(&self, variant: VariantId, n: usize) -> UniPoly {
        assert!(
            variant.family().has_pgf(),
            "{} has no generating-function recurrence; use the simulator",
            variant
        );
        let ctx = self.poly_ctx(variant, n);
        let ladder = {
            let mut map = self.poly.lock().expect("pgf cache poisoned");
            map.entry(variant)
                .or_insert_with(|| {
                    Arc::new(Mutex::new(Ladder::new(&PolyAlgebra, variant, &ctx)))
                })
                .clone()
        };
        let mut guard = ladder.lock().expect("pgf ladder poisoned");
        guard.extend_to(&PolyAlgebra, n, &ctx);
        guard.elems[n].clone()
    }

    /// `P_n(1 + w)` truncated at `w^order`; the coefficient of `w^r` is the
    /// `r`-th factorial moment divided by `r!`, exactly, for all `r <= order`.
    pub fn truncated(&self, variant: VariantId, n: usize, order: usize) -> TruncSeries {
        assert!(order >= 1, "truncation order must be >= 1");
        assert!(
            variant.family().has_pgf(),
            "{} has no generating-function recurrence; use the simulator",
            variant
        );
        let alg = SeriesAlgebra { order };
        let ctx = self.series_ctx(variant, n, order);
        let ladder = {
            let mut map = self.series.lock().expect("series cache poisoned");
            map.entry((variant, order))
                .or_insert_with(|| Arc::new(Mutex::new(Ladder::new(&alg, variant, &ctx))))
                .clone()
        };
        let mut guard = ladder.lock().expect("series ladder poisoned");
        guard.extend_to(&alg, n, &ctx);
        guard.elems[n].clone()
    }

    /// Cross-family inputs a variant's ladder needs, in the same domain:
    /// the k-pivot family seeds short lists with 1-pivot distributions and
    /// multiplies in the 1-pivot pivot-sorting cost; the two-candidate
    /// scheme recurses on the plain in-place scheme's distributions.
    fn poly_ctx(&self, variant: VariantId, n: usize) -> Ctx<UniPoly> {
        match variant.family() {
            Family::CompKPivotLinear => {
                let k = variant.pivots() as usize;
                let comp1 = VariantId::new(Family::Comp1Pivot);
                Ctx {
                    deps: (0..k).map(|j| self.pgf(comp1, j)).collect(),
                    pivot_sort: Some(self.pgf(comp1, k)),
                }
            }
            Family::SwapV5 => {
                let v4 = VariantId::new(Family::SwapV4);
                Ctx {
                    deps: (0..n.max(1)).map(|j| self.pgf(v4, j)).collect(),
                    pivot_sort: None,
                }
            }
            _ => Ctx::default(),
        }
    }

    fn series_ctx(&self, variant: VariantId, n: usize, order: usize) -> Ctx<TruncSeries> {
        match variant.family() {
            Family::CompKPivotLinear => {
                let k = variant.pivots() as usize;
                let comp1 = VariantId::new(Family::Comp1Pivot);
                Ctx {
                    deps: (0..k).map(|j| self.truncated(comp1, j, order)).collect(),
                    pivot_sort: Some(self.truncated(comp1, k, order)),
                }
            }
            Family::SwapV5 => {
                let v4 = VariantId::new(Family::SwapV4);
                Ctx {
                    deps: (0..n.max(1))
                        .map(|j| self.truncated(v4, j, order))
                        .collect(),
                    pivot_sort: None,
                }
            }
            _ => Ctx::default(),
        }
    }
}

/// Same-domain values a ladder depends on from other families.
struct Ctx<E> {
    deps: Vec<E>,
    pivot_sort: Option<E>,
}

impl<E> Default for Ctx<E> {
    fn default() -> Self {
        Ctx {
            deps: Vec::new(),
            pivot_sort: None,
        }
    }
}

/// One variant's generating functions plus family-specific helper ladders.
struct Ladder<E> {
    variant: VariantId,
    elems: Vec<E>,
    aux: Aux<E>,
}

enum Aux<E> {
    None,
    /// `conv2[m] = sum_{a+b=m} P_a P_b` (CompDual)
    Conv2 { conv2: Vec<E> },
    /// conv2 plus `conv3[m] = sum_{a+b+c=m} P_a P_b P_c` (CompThreePivot)
    Conv23 { conv2: Vec<E>, conv3: Vec<E> },
    /// `acc[m] = sum_{e} (P_e t^e) P_{m-e}` (SwapDual)
    ShiftConv { acc: Vec<E> },
    /// `g[j][m]`: convolution of the first `j+1` sublist cost sequences,
    /// where sublist `j` contributes `P_m t^{min(j+1,k) m}`; plus the
    /// embedded pivot-sorting factor (CompKPivotLinear)
    KPivot { g: Vec<Vec<E>>, pivot_sort: E },
}

impl<E: Clone> Ladder<E> {
    fn new<A: Algebra<Elem = E>>(alg: &A, variant: VariantId, ctx: &Ctx<E>) -> Self {
        let one = alg.one();
        let (elems, aux) = match variant.family() {
            Family::Comp1Pivot
            | Family::SwapV1
            | Family::SwapV2
            | Family::SwapV3
            | Family::SwapV4
            | Family::SwapV5 => (vec![one.clone(), one], Aux::None),
            Family::CompDual => (vec![one.clone(), one], Aux::Conv2 { conv2: Vec::new() }),
            Family::CompThreePivot => (
                vec![one.clone(), one, alg.shift(&alg.one(), 1)],
                Aux::Conv23 {
                    conv2: Vec::new(),
                    conv3: Vec::new(),
                },
            ),
            Family::SwapDual => (vec![one.clone(), one], Aux::ShiftConv { acc: Vec::new() }),
            Family::CompKPivotLinear => {
                let k = variant.pivots() as usize;
                (
                    ctx.deps.clone(),
                    Aux::KPivot {
                        g: vec![Vec::new(); k + 1],
                        pivot_sort: ctx.pivot_sort.clone().expect("pivot-sort factor provided"),
                    },
                )
            }
            Family::CompKPivotBinary => unreachable!("checked by callers"),
        };
        Ladder {
            variant,
            elems,
            aux,
        }
    }

    fn extend_to<A: Algebra<Elem = E>>(&mut self, alg: &A, n: usize, ctx: &Ctx<E>) {
        while self.elems.len() <= n {
            let next = self.level(alg, self.elems.len(), ctx);
            self.elems.push(next);
        }
    }

    /// `sum_{a+b=m} f(a) g(b)` over ladder entries, exploiting symmetry when
    /// both sides index the same sequence.
    fn level<A: Algebra<Elem = E>>(&mut self, alg: &A, n: usize, ctx: &Ctx<E>) -> E {
        let prev = &self.elems;
        match self.variant.family() {
            Family::Comp1Pivot => {
                let conv = symmetric_self_conv(alg, prev, n - 1);
                let shifted = alg.shift(&conv, n - 1);
                alg.scale(&shifted, &ratio(1, n as i64))
            }
            Family::SwapV1 | Family::SwapV3 => {
                // exponent k-1 for SwapV1, k for SwapV3
                let offset = if self.variant.family() == Family::SwapV1 {
                    0
                } else {
                    1
                };
                let mut sum = alg.zero();
                for k in 1..=n.div_ceil(2) {
                    let prod = alg.mul(&prev[k - 1], &prev[n - k]);
                    sum = alg.add(&sum, &alg.shift(&prod, k - 1 + offset));
                    let mirror = n + 1 - k;
                    if mirror != k {
                        sum = alg.add(&sum, &alg.shift(&prod, mirror - 1 + offset));
                    }
                }
                alg.scale(&sum, &ratio(1, n as i64))
            }
            Family::SwapV2 => {
                let mut sum = alg.zero();
                for k in 1..=n.div_ceil(2) {
                    let prod = alg.mul(&prev[k - 1], &prev[n - k]);
                    let kernel = alg.embed(&per_prob_position_sum(n, k));
                    sum = alg.add(&sum, &alg.mul(&prod, &kernel));
                    let mirror = n + 1 - k;
                    if mirror != k {
                        // position sum is symmetric in k <-> n+1-k
                        let kernel = alg.embed(&per_prob_position_sum(n, mirror));
                        sum = alg.add(&sum, &alg.mul(&prod, &kernel));
                    }
                }
                alg.scale(&sum, &ratio(1, (n * n) as i64))
            }
            Family::SwapV4 => {
                let mut sum = alg.zero();
                for k in 1..=n.div_ceil(2) {
                    let prod = alg.mul(&prev[k - 1], &prev[n - k]);
                    let mirror = n + 1 - k;
                    let pair = [k, mirror];
                    let ranks = if mirror == k { &pair[..1] } else { &pair[..] };
                    for &kk in ranks {
                        let term = alg.mul(&prod, &alg.embed(&ip_prob(n, kk)));
                        sum = alg.add(&sum, &term);
                    }
                }
                alg.scale(&sum, &ratio(1, n as i64))
            }
            Family::SwapV5 => {
                // improved pivot-rank distribution for the first partition;
                // the sublists are handed to the plain in-place scheme
                let v4 = &ctx.deps;
                let mut sum = alg.zero();
                for k in 1..=n.div_ceil(2) {
                    let prod = alg.mul(&v4[k - 1], &v4[n - k]);
                    let mirror = n + 1 - k;
                    let pair = [k, mirror];
                    let ranks = if mirror == k { &pair[..1] } else { &pair[..] };
                    for &kk in ranks {
                        let term = alg.mul(&prod, &alg.embed(&ip_prob(n, kk)));
                        sum = alg.add(&sum, &alg.scale(&term, &pivot_weight_v5(n, kk)));
                    }
                }
                sum
            }
            Family::CompDual => {
                let Aux::Conv2 { conv2 } = &mut self.aux else {
                    unreachable!()
                };
                extend_conv2(alg, prev, conv2, n - 2);
                // sum over smaller-pivot positions i: P_{i-1} conv2_{n-1-i} t^{n-1-i},
                // all shifted by t^{n-1}
                let mut sum = alg.zero();
                for ip in 0..=n - 2 {
                    let c = n - 2 - ip;
                    let term = alg.mul(&prev[ip], &conv2[c]);
                    sum = alg.add(&sum, &alg.shift(&term, c));
                }
                let shifted = alg.shift(&sum, n - 1);
                alg.scale(&shifted, &choose_inv(n, 2))
            }
            Family::SwapDual => {
                let Aux::ShiftConv { acc } = &mut self.aux else {
                    unreachable!()
                };
                extend_shift_conv(alg, prev, acc, n - 2);
                let mut sum = alg.zero();
                for u in 0..=n - 2 {
                    let term = alg.mul(&alg.shift(&prev[u], u), &acc[n - 2 - u]);
                    sum = alg.add(&sum, &term);
                }
                let coin = alg.embed(&UniPoly::from_coeffs(vec![ratio(1, 2), ratio(1, 2)]));
                alg.scale(&alg.mul(&sum, &coin), &choose_inv(n, 2))
            }
            Family::CompThreePivot => {
                let Aux::Conv23 { conv2, conv3 } = &mut self.aux else {
                    unreachable!()
                };
                extend_conv2(alg, prev, conv2, n - 3);
                extend_conv3(alg, prev, conv2, conv3, n - 3);
                let mut sum = alg.zero();
                for c in 0..=n - 3 {
                    sum = alg.add(&sum, &alg.mul(&conv3[c], &prev[n - 3 - c]));
                }
                // pivots sorted at 1-pivot cost for 3 elements, then two
                // comparisons for each of the n-3 remaining elements
                let kernel = alg.embed(&UniPoly::from_coeffs(vec![
                    Rational::zero(),
                    Rational::zero(),
                    ratio(1, 3),
                    ratio(2, 3),
                ]));
                let shifted = alg.shift(&alg.mul(&sum, &kernel), 2 * n - 6);
                alg.scale(&shifted, &choose_inv(n, 3))
            }
            Family::CompKPivotLinear => {
                let k = self.variant.pivots() as usize;
                let Aux::KPivot { g, pivot_sort } = &mut self.aux else {
                    unreachable!()
                };
                extend_kpivot(alg, prev, g, k, n - k);
                let term = alg.mul(&g[k][n - k], pivot_sort);
                alg.scale(&term, &choose_inv(n, k))
            }
            Family::CompKPivotBinary => unreachable!("checked by callers"),
        }
    }
}

/// `sum_{a+b=m} P_a P_b` using the `a <-> b` symmetry.
fn symmetric_self_conv<A: Algebra>(alg: &A, p: &[A::Elem], m: usize) -> A::Elem {
    let mut sum = alg.zero();
    for a in 0..=m / 2 {
        let prod = alg.mul(&p[a], &p[m - a]);
        sum = alg.add(&sum, &prod);
        if a != m - a {
            sum = alg.add(&sum, &prod);
        }
    }
    sum
}

fn extend_conv2<A: Algebra>(alg: &A, p: &[A::Elem], conv2: &mut Vec<A::Elem>, upto: usize) {
    while conv2.len() <= upto {
        let m = conv2.len();
        conv2.push(symmetric_self_conv(alg, p, m));
    }
}

fn extend_conv3<A: Algebra>(
    alg: &A,
    p: &[A::Elem],
    conv2: &[A::Elem],
    conv3: &mut Vec<A::Elem>,
    upto: usize,
) {
    while conv3.len() <= upto {
        let m = conv3.len();
        let mut sum = alg.zero();
        for a in 0..=m {
            sum = alg.add(&sum, &alg.mul(&p[a], &conv2[m - a]));
        }
        conv3.push(sum);
    }
}

fn extend_shift_conv<A: Algebra>(alg: &A, p: &[A::Elem], acc: &mut Vec<A::Elem>, upto: usize) {
    while acc.len() <= upto {
        let m = acc.len();
        let mut sum = alg.zero();
        for e in 0..=m {
            let term = alg.mul(&alg.shift(&p[e], e), &p[m - e]);
            sum = alg.add(&sum, &term);
        }
        acc.push(sum);
    }
}

/// Extends the k-pivot sublist-cost convolutions `g[0..=k]` to index `upto`.
fn extend_kpivot<A: Algebra>(
    alg: &A,
    p: &[A::Elem],
    g: &mut [Vec<A::Elem>],
    k: usize,
    upto: usize,
) {
    let fcost = |j: usize, m: usize| -> A::Elem {
        // sublist j (0-based) costs min(j+1, k) comparisons per element
        alg.shift(&p[m], (j + 1).min(k) * m)
    };
    while g[0].len() <= upto {
        let m = g[0].len();
        g[0].push(fcost(0, m));
    }
    for j in 1..=k {
        while g[j].len() <= upto {
            let m = g[j].len();
            let mut sum = alg.zero();
            for a in 0..=m {
                sum = alg.add(&sum, &alg.mul(&g[j - 1][m - a], &fcost(j, a)));
            }
            g[j].push(sum);
        }
    }
}

/// `1 / C(n, k)` as a rational.
fn choose_inv(n: usize, k: usize) -> Rational {
    let c = binomial(n as u64, k as u64);
    assert!(c >= 1.into(), "C({n},{k}) vanishes");
    Rational::new(1.into(), c)
}
