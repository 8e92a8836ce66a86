//! The discrete fractional maximal operator
//!
//!   M_α x(m) = sup_{N ≥ 0} (2N+1)^{α−1} Σ_{|k−m| ≤ N} |x(k)|,
//!
//! evaluated exactly. For a finitely supported x the supremum is attained:
//! once the window S_{m,N} covers the whole support the sum is constant
//! while (2N+1)^{α−1} strictly decreases, so only N ≤ N*(m) =
//! max(|m − minSupp|, |m − maxSupp|) can attain it. Inside the support
//! hull we scan those N with prefix sums. Outside the hull the optimal
//! window's near edge must sit exactly on a support point, which reduces
//! M_α x(m) to the upper envelope of finitely many decreasing curves
//! A_s·(2(m−s)+1)^{α−1}; consecutive curves cross exactly once, so one
//! monotone sweep evaluates the whole far region in O(1) per point.

use crate::interval::EvalWindow;
use crate::sequence::FiniteSequence;

/// One far-field candidate: mass `a` of the support from point `s`
/// inward, active on the envelope from `from_m` on.
struct EnvelopeSeg {
    s: i64,
    a: f64,
    from_m: f64,
}

/// The m above which A1·(2(m−s1)+1)^{α−1} ≥ A2·(2(m−s2)+1)^{α−1}, given
/// s1 < s2 and A1 > A2. Solving with ρ = (A1/A2)^{1/(1−α)} > 1 gives
/// m* = [ρ(2s2 − 1) − 2s1 + 1] / (2(ρ − 1)).
fn crossover(alpha: f64, s1: i64, a1: f64, s2: i64, a2: f64) -> f64 {
    let rho = (a1 / a2).powf(1.0 / (1.0 - alpha));
    (rho * (2.0 * s2 as f64 - 1.0) - 2.0 * s1 as f64 + 1.0) / (2.0 * (rho - 1.0))
}

/// Builds the far-right envelope from candidates (s, suffix mass from s),
/// supplied right-to-left, i.e. s strictly decreasing and mass strictly
/// increasing.
fn build_envelope(alpha: f64, candidates: &[(i64, f64)]) -> Vec<EnvelopeSeg> {
    let mut stack: Vec<EnvelopeSeg> = Vec::with_capacity(candidates.len());
    for &(s, a) in candidates {
        let mut from_m = f64::NEG_INFINITY;
        while let Some(top) = stack.last() {
            // the new candidate is further left and heavier: it wins for
            // all m past the crossover with the current top
            from_m = crossover(alpha, s, a, top.s, top.a);
            if from_m <= top.from_m {
                stack.pop();
            } else {
                break;
            }
        }
        if stack.is_empty() {
            from_m = f64::NEG_INFINITY;
        }
        stack.push(EnvelopeSeg { s, a, from_m });
    }
    stack
}

/// Evaluates M_α x on every point of `window`. Requires 0 ≤ α < 1; the
/// supremum in the definition is computed exactly (see module docs).
pub fn fractional_maximal(x: &FiniteSequence, alpha: f64, window: EvalWindow) -> FiniteSequence {
    assert!((0.0..1.0).contains(&alpha), "fractional order must lie in [0,1), got {alpha}");
    let (Some(lo_s), Some(hi_s)) = (x.support_min(), x.support_max()) else {
        return FiniteSequence::zero();
    };
    let a: Vec<f64> = x.values().iter().map(|v| v.abs()).collect();
    let span = (hi_s - lo_s) as usize; // a[0] is x(lo_s), a[span] is x(hi_s)

    // prefix[i] = Σ_{j < i} a[j]
    let mut prefix = Vec::with_capacity(span + 2);
    prefix.push(0.0);
    for &v in &a {
        prefix.push(prefix.last().unwrap() + v);
    }
    let total = *prefix.last().unwrap();

    // kernel table (2N+1)^{α−1} for the in-hull scan
    let max_core_n = span;
    let mut pow_table = Vec::with_capacity(max_core_n + 1);
    for n in 0..=max_core_n {
        pow_table.push(((2 * n + 1) as f64).powf(alpha - 1.0));
    }

    // far-right candidates: (support point s with a(s) > 0, mass of [s, hi_s])
    let mut right_candidates: Vec<(i64, f64)> = Vec::new();
    for i in (0..=span).rev() {
        if a[i] > 0.0 {
            right_candidates.push((lo_s + i as i64, total - prefix[i]));
        }
    }
    let right_env = build_envelope(alpha, &right_candidates);
    // far-left candidates by reflection: prefix mass of [lo_s, s]
    let mut left_candidates: Vec<(i64, f64)> = Vec::new();
    for i in 0..=span {
        if a[i] > 0.0 {
            // reflected coordinate: m < lo_s maps to −m > −lo_s
            left_candidates.push((-(lo_s + i as i64), prefix[i + 1]));
        }
    }
    let left_env = build_envelope(alpha, &left_candidates);

    let far_eval = |env: &[EnvelopeSeg], ptr: &mut usize, m: i64| -> f64 {
        while *ptr + 1 < env.len() && env[*ptr + 1].from_m <= m as f64 {
            *ptr += 1;
        }
        while *ptr > 0 && env[*ptr].from_m > m as f64 {
            *ptr -= 1;
        }
        let seg = &env[*ptr];
        seg.a * ((2 * (m - seg.s) + 1) as f64).powf(alpha - 1.0)
    };

    let mut out = Vec::with_capacity(window.len());
    let (mut lp, mut rp) = (0usize, 0usize);
    for m in window.lo..=window.hi {
        let val = if m < lo_s {
            far_eval(&left_env, &mut lp, -m)
        } else if m > hi_s {
            far_eval(&right_env, &mut rp, m)
        } else {
            let off = (m - lo_s) as usize;
            let n_star = off.max(span - off);
            let mut best = 0.0f64;
            for n in 0..=n_star {
                let hi_i = (off + n).min(span);
                let lo_i = off.saturating_sub(n);
                let s = prefix[hi_i + 1] - prefix[lo_i];
                let v = pow_table[n] * s;
                if v > best {
                    best = v;
                }
            }
            best
        };
        out.push(val);
    }
    FiniteSequence::new(window.lo, out).expect("maximal-function values are finite")
}
