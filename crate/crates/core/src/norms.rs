//! Sequence norms: weighted l^p, weighted weak l^p, the Morrey norm
//!
//!   sup_{m,N} |S_{m,N}|^{1/q − 1/p} (Σ_{k∈S_{m,N}} |x(k)|^p)^{1/p}
//!
//! and its two-weight variant with v(S_{m,N}) as the size gauge, plus the
//! layer-cake representation of ‖x‖_p^p.
//!
//! All suprema are exact for finitely supported input. For the Morrey
//! scan, any window whatsoever is dominated by one with N ≤ span and
//! m ∈ [minSupp − N, maxSupp + N]: shrink the window to the smallest
//! symmetric interval containing the same piece of the support — the
//! inner sum can only grow, the size gauge can only shrink, and the gauge
//! exponent 1/q − 1/p is ≤ 0.
//!
//! Exact p = q degeneration: when p = q the gauge prefactor is x^0 = 1 and
//! the scan's inner sums come from the same sequential prefix array that
//! [`lp_norm`] folds, so `weighted_morrey_norm(x,p,p,ω,v)` returns the
//! bit-identical double that `lp_norm(x,p,ω)` does (a nonnegative
//! sequential prefix is monotone under IEEE rounding, so no partial
//! window can numerically exceed the full one).

use crate::sequence::FiniteSequence;
use crate::weight::Weight;
use rayon::prelude::*;
use serde::Serialize;

/// Attaining window of a Morrey supremum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub m: i64,
    #[serde(rename = "N")]
    pub n: i64,
}

/// A norm value together with the window attaining it, when the norm is a
/// windowed supremum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormValue {
    pub value: f64,
    pub witness: Option<Witness>,
}

fn weight_at(w: Option<&Weight>, k: i64) -> f64 {
    w.map_or(1.0, |w| w.eval(k))
}

/// prefix[i] = Σ_{j<i} |x(lo+j)|^p·ω(lo+j), folded sequentially in index
/// order. Shared by [`lp_norm`] and the Morrey scans (see module docs).
fn power_terms_prefix(x: &FiniteSequence, p: f64, omega: Option<&Weight>) -> Vec<f64> {
    let mut prefix = Vec::with_capacity(x.len() + 1);
    prefix.push(0.0);
    let mut acc = 0.0;
    for (k, v) in x.iter() {
        if v != 0.0 {
            acc += v.abs().powf(p) * weight_at(omega, k);
        }
        prefix.push(acc);
    }
    prefix
}

/// ‖x‖_{l^p_ω} = (Σ_k |x(k)|^p ω(k))^{1/p}, exact over the support.
pub fn lp_norm(x: &FiniteSequence, p: f64, omega: Option<&Weight>) -> f64 {
    assert!(p >= 1.0, "lp norm needs p >= 1, got {p}");
    let prefix = power_terms_prefix(x, p, omega);
    prefix.last().unwrap().powf(1.0 / p)
}

/// Distinct values 0 < v_1 < … < v_r of |x| paired with the ω-masses
/// ω({|x| ≥ v_j}), via one descending sort.
fn superlevel_masses(x: &FiniteSequence, omega: Option<&Weight>) -> Vec<(f64, f64)> {
    let mut pts: Vec<(f64, f64)> = x
        .iter()
        .filter(|&(_, v)| v != 0.0)
        .map(|(k, v)| (v.abs(), weight_at(omega, k)))
        .collect();
    pts.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let mut out: Vec<(f64, f64)> = Vec::new();
    let mut mass = 0.0;
    for (v, w) in pts {
        mass += w;
        match out.last_mut() {
            Some(last) if last.0 == v => last.1 = mass,
            _ => out.push((v, mass)),
        }
    }
    out
}

/// ‖x‖_{l^{p,∞}_ω} = sup_{λ>0} λ·ω({|x| > λ})^{1/p}. For finitely many
/// values the supremum is max_j v_j·ω({|x| ≥ v_j})^{1/p}, approached as
/// λ ↑ v_j.
pub fn weak_lp_norm(x: &FiniteSequence, p: f64, omega: Option<&Weight>) -> f64 {
    assert!(p >= 1.0, "weak lp norm needs p >= 1, got {p}");
    superlevel_masses(x, omega)
        .iter()
        .map(|&(v, mass)| v * mass.powf(1.0 / p))
        .fold(0.0, f64::max)
}

/// The layer-cake integral p∫_0^∞ λ^{p−1} ω({|x| > λ}) dλ, assembled
/// exactly from the piecewise-constant distribution function: with the
/// distinct values v_0 = 0 < v_1 < … < v_r,
/// Σ_j (v_j^p − v_{j−1}^p)·ω({|x| ≥ v_j}). Equals ‖x‖_{l^p_ω}^p.
pub fn layer_cake(x: &FiniteSequence, p: f64, omega: Option<&Weight>) -> f64 {
    assert!(p > 0.0, "layer cake needs p > 0, got {p}");
    let levels = superlevel_masses(x, omega);
    // ascending in v so the telescoping matches the integral's pieces
    let mut acc = 0.0;
    let mut prev = 0.0f64;
    for &(v, mass) in levels.iter().rev() {
        acc += (v.powf(p) - prev.powf(p)) * mass;
        prev = v;
    }
    acc
}

fn morrey_scan(
    x: &FiniteSequence,
    p: f64,
    q: f64,
    omega: Option<&Weight>,
    gauge: Option<&Weight>,
) -> NormValue {
    assert!(p >= 1.0 && q >= p, "Morrey norms need 1 <= p <= q, got p = {p}, q = {q}");
    let (Some(lo), Some(hi)) = (x.support_min(), x.support_max()) else {
        return NormValue { value: 0.0, witness: None };
    };
    let span = hi - lo;
    let e = 1.0 / q - 1.0 / p;
    let p_inv = 1.0 / p;
    let terms = power_terms_prefix(x, p, omega);

    // size-gauge prefix over every index any scanned window can touch:
    // m ± N with N ≤ span and m ∈ [lo − N, hi + N] reaches [lo − 2·span,
    // hi + 2·span]
    let gauge_lo = lo - 2 * span;
    let gauge_prefix: Option<Vec<f64>> = gauge.map(|v| {
        let mut pre = Vec::with_capacity((5 * span + 2) as usize);
        pre.push(0.0);
        let mut acc = 0.0;
        for k in gauge_lo..=(hi + 2 * span) {
            acc += v.eval(k);
            pre.push(acc);
        }
        pre
    });

    // Candidates are compared as value^p = gauge-mass^{e·p} · Σ|x|^p ω, which
    // needs one powf per window (none at all when p = q or the gauge is plain
    // cardinality) instead of two, and lets the radii run in parallel.
    let ep = e * p;
    let total_p = *terms.last().unwrap();

    // No window of radius n can score above (least gauge mass at radius
    // n)^{e·p} · (total p-mass): the least mass is nondecreasing in n and
    // e·p ≤ 0, so this cap only shrinks as the radius grows. Radii are
    // processed in ascending blocks and the scan stops as soon as a block's
    // cap cannot beat the incumbent, which keeps the result exact.
    let radius_cap = |n: i64| -> f64 {
        if ep == 0.0 {
            return total_p;
        }
        match &gauge_prefix {
            Some(pre) => {
                let mut least = f64::INFINITY;
                for m in (lo - n)..=(hi + n) {
                    let mass = pre[(m + n - gauge_lo + 1) as usize] - pre[(m - n - gauge_lo) as usize];
                    if mass < least {
                        least = mass;
                    }
                }
                least.powf(ep) * total_p
            }
            None => ((2 * n + 1) as f64).powf(ep) * total_p,
        }
    };

    let scan_radius = |n: i64| -> Option<(f64, i64, i64)> {
        let flat = if ep == 0.0 { 1.0 } else { ((2 * n + 1) as f64).powf(ep) };
        let mut local: Option<(f64, i64, i64)> = None;
        for m in (lo - n)..=(hi + n) {
            let from = (m - n).max(lo);
            let to = (m + n).min(hi);
            let inner = terms[(to - lo + 1) as usize] - terms[(from - lo) as usize];
            if inner <= 0.0 {
                continue;
            }
            let prefactor = match &gauge_prefix {
                Some(pre) => {
                    let lo_i = (m - n - gauge_lo) as usize;
                    let hi_i = (m + n - gauge_lo + 1) as usize;
                    if ep == 0.0 { 1.0 } else { (pre[hi_i] - pre[lo_i]).powf(ep) }
                }
                None => flat,
            };
            let cand = prefactor * inner;
            if local.is_none_or(|(bv, _, _)| cand > bv) {
                local = Some((cand, m, n));
            }
        }
        local
    };

    // prefer the larger value; break exact ties toward the smaller radius,
    // then the smaller center, so the witness is independent of the thread
    // schedule
    let merge = |a: Option<(f64, i64, i64)>, b: Option<(f64, i64, i64)>| match (a, b) {
        (None, other) | (other, None) => other,
        (Some(av), Some(bv)) => {
            if bv.0 > av.0 || (bv.0 == av.0 && (bv.2, bv.1) < (av.2, av.1)) {
                Some(bv)
            } else {
                Some(av)
            }
        }
    };

    const BLOCK: i64 = 64;
    let mut best: Option<(f64, i64, i64)> = None;
    let mut n0 = 0;
    while n0 <= span {
        if let Some((incumbent, _, _)) = best {
            if radius_cap(n0) <= incumbent {
                break;
            }
        }
        let n1 = (n0 + BLOCK - 1).min(span);
        let block = (n0..n1 + 1).into_par_iter().map(scan_radius).reduce(|| None, merge);
        best = merge(best, block);
        n0 = n1 + 1;
    }

    match best {
        Some((vp, m, n)) => NormValue { value: vp.powf(p_inv), witness: Some(Witness { m, n }) },
        None => NormValue { value: 0.0, witness: None },
    }
}

/// The Morrey norm sup_{m,N} |S_{m,N}|^{1/q−1/p}(Σ_{S_{m,N}}|x|^p)^{1/p},
/// computed exactly (see module docs for the scan-bound argument).
pub fn morrey_norm(x: &FiniteSequence, p: f64, q: f64) -> NormValue {
    morrey_scan(x, p, q, None, None)
}

/// Two-weight Morrey norm: ω weights the inner sum, v gauges the window,
/// sup_{m,N} v(S_{m,N})^{1/q−1/p}(Σ_{S_{m,N}}|x|^p ω)^{1/p}.
pub fn weighted_morrey_norm(
    x: &FiniteSequence,
    p: f64,
    q: f64,
    omega: &Weight,
    v: &Weight,
) -> NormValue {
    morrey_scan(x, p, q, Some(omega), Some(v))
}
