//! Small floating-point utilities shared across the crate: pairwise
//! summation for long accumulations and two-sided integral bounds for
//! power-law tails, which the saturation arguments rely on.

/// Pairwise (cascade) summation. Error grows like O(log n · ε) instead of
/// the O(n · ε) of a left fold, which matters for the 10^5–10^7 term sums
/// in the verification harness.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    pairwise_sum_by(values, |v| v)
}

/// Pairwise summation of `f(v)` over the slice, without allocating the
/// mapped values.
pub fn pairwise_sum_by(values: &[f64], f: impl Fn(f64) -> f64 + Copy) -> f64 {
    const BASE: usize = 32;
    if values.len() <= BASE {
        let mut acc = 0.0;
        for &v in values {
            acc += f(v);
        }
        return acc;
    }
    let mid = values.len() / 2;
    pairwise_sum_by(&values[..mid], f) + pairwise_sum_by(&values[mid..], f)
}

/// Two-sided bounds for the tail Σ_{k ≥ from} k^e of a power series with
/// e < −1 and `from ≥ 1`, by integral comparison of the decreasing
/// integrand t ↦ t^e:
///
///   ∫_{from}^∞ t^e dt  ≤  Σ_{k ≥ from} k^e  ≤  from^e + ∫_{from}^∞ t^e dt.
///
/// Returns `(lower, upper)`.
pub fn power_tail_bounds(e: f64, from: f64) -> (f64, f64) {
    assert!(e < -1.0, "tail diverges unless the exponent is below -1, got {e}");
    assert!(from >= 1.0, "tail start must be >= 1, got {from}");
    let integral = from.powf(e + 1.0) / (-(e + 1.0));
    (integral, from.powf(e) + integral)
}

/// Relative difference |a − b| / max(|a|, |b|), zero when both vanish.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
