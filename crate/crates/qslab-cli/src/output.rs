//! JSON and CSV renderings. Exact values are always serialized as strings
//! (the integers overflow common JSON number readers); floats appear only
//! where a statistic is itself a float.

use serde_json::json;

use qslab::exact::{format_rational, to_f64, UniPoly};
use qslab::findrec::RecurrenceOperator;
use qslab::fit::ClosedForm;
use qslab::moments::MomentSequence;
use qslab::pgf::VariantId;
use qslab::simulate::TrialStats;

pub fn pgf_json(variant: VariantId, n: usize, poly: &UniPoly) -> String {
    serde_json::to_string_pretty(&json!({
        "format_version": qslab::cache::FORMAT_VERSION,
        "family": variant.family().name(),
        "pivots": variant.pivots(),
        "n": n,
        "coeffs": poly.to_coeff_strings(),
    }))
    .expect("serializable")
}

pub fn moments_json(seq: &MomentSequence) -> String {
    let values: Vec<String> = seq.values.iter().map(format_rational).collect();
    serde_json::to_string_pretty(&json!({
        "family": seq.variant.family().name(),
        "pivots": seq.variant.pivots(),
        "order": seq.order,
        "kind": seq.kind.name(),
        "values": values,
    }))
    .expect("serializable")
}

/// CSV with both the exact value and a 15-digit decimal; the decimal column
/// is marked lossy in its header, the exact column round-trips.
pub fn moments_csv(seq: &MomentSequence) -> String {
    let mut out = String::from("n,exact,decimal_lossy_15digits\n");
    for (i, v) in seq.values.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{:.15}\n",
            i + 1,
            format_rational(v),
            to_f64(v)
        ));
    }
    out
}

pub fn scaled_json(variant: VariantId, order: u32, values: &[f64]) -> String {
    serde_json::to_string_pretty(&json!({
        "family": variant.family().name(),
        "pivots": variant.pivots(),
        "order": order,
        "kind": "scaled",
        "values": values,
    }))
    .expect("serializable")
}

pub fn fit_json(
    variant: VariantId,
    order: u32,
    form: &ClosedForm,
    skip: usize,
    min_pow_n: i32,
) -> String {
    let terms: serde_json::Map<String, serde_json::Value> = form
        .terms()
        .iter()
        .map(|(m, c)| (m.to_string(), format_rational(c).into()))
        .collect();
    serde_json::to_string_pretty(&json!({
        "family": variant.family().name(),
        "pivots": variant.pivots(),
        "order": order,
        "skip": skip,
        "min_pow_n": min_pow_n,
        "validity_from": form.validity_from(),
        "terms": terms,
        "display": form.to_string(),
    }))
    .expect("serializable")
}

pub fn findrec_json(variant: VariantId, order: u32, op: &RecurrenceOperator) -> String {
    let coeffs: Vec<Vec<String>> = op
        .coeff_polys()
        .iter()
        .map(|p| p.to_coeff_strings())
        .collect();
    serde_json::to_string_pretty(&json!({
        "family": variant.family().name(),
        "pivots": variant.pivots(),
        "moment_order": order,
        "operator_order": op.order(),
        "coeff_polys": coeffs,
        "display": op.to_string(),
    }))
    .expect("serializable")
}

pub fn stats_json(stats: &TrialStats) -> String {
    serde_json::to_string_pretty(&json!({
        "family": stats.variant.family().name(),
        "pivots": stats.variant.pivots(),
        "n": stats.n,
        "trials": stats.trials,
        "seed": stats.seed,
        "mean": stats.mean,
        "sample_variance": stats.sample_variance,
    }))
    .expect("serializable")
}
