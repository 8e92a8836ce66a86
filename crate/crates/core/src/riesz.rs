//! The discrete Riesz potential
//!
//!   I_α x(k) = Σ_{i ≠ k} x(i) / |k − i|^{1−α},   0 < α < 1,
//!
//! with three evaluation paths that cross-check each other: a definitional
//! per-point sum (terms taken in ascending distance, pairwise-accumulated),
//! a fast zero-padded FFT convolution against the kernel K(j) = |j|^{α−1},
//! K(0) = 0 (the zero at lag 0 encodes the i ≠ k exclusion), and the
//! symmetric-pairs series Σ_{j≥1} (x(k−j) + x(k+j))/j^{1−α} together with
//! its forward-difference variant.

use crate::interval::EvalWindow;
use crate::numeric::pairwise_sum;
use crate::sequence::FiniteSequence;
use rayon::prelude::*;
use rustfft::{num_complex::Complex, FftPlanner};
use thiserror::Error;

/// Largest FFT length the fast path will allocate (complex f64 samples).
pub const FFT_BUDGET: usize = 1 << 23;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("fast convolution needs an FFT of {required} samples, over the budget of {budget}")]
pub struct CapacityError {
    pub required: usize,
    pub budget: usize,
}

fn check_alpha(alpha: f64) {
    assert!(
        alpha > 0.0 && alpha < 1.0,
        "Riesz order must lie in (0,1), got {alpha}"
    );
}

/// Kernel table t[j] = j^{α−1} for j = 1..=max_dist (t[0] unused, set to 0).
fn kernel_table(alpha: f64, max_dist: usize) -> Vec<f64> {
    let mut t = vec![0.0; max_dist + 1];
    for (j, slot) in t.iter_mut().enumerate().skip(1) {
        *slot = (j as f64).powf(alpha - 1.0);
    }
    t
}

fn naive_point(x: &FiniteSequence, kern: &[f64], m: i64, lo: i64, hi: i64) -> f64 {
    let max_j = (m - lo).abs().max((m - hi).abs());
    let mut terms = Vec::with_capacity(2 * max_j as usize);
    for j in 1..=max_j {
        let left = m - j;
        if left >= lo && left <= hi {
            let v = x.eval(left);
            if v != 0.0 {
                terms.push(v * kern[j as usize]);
            }
        }
        let right = m + j;
        if right >= lo && right <= hi {
            let v = x.eval(right);
            if v != 0.0 {
                terms.push(v * kern[j as usize]);
            }
        }
    }
    pairwise_sum(&terms)
}

/// Definitional evaluation of I_α x on a window: per point, the support is
/// traversed in ascending |k − i| (the two equidistant neighbours
/// consecutively) and accumulated pairwise.
pub fn riesz_naive(x: &FiniteSequence, alpha: f64, window: EvalWindow) -> FiniteSequence {
    check_alpha(alpha);
    let (Some(lo), Some(hi)) = (x.support_min(), x.support_max()) else {
        return FiniteSequence::zero();
    };
    let max_dist = (window.hi - lo).abs().max((hi - window.lo).abs()).max(1) as usize;
    let kern = kernel_table(alpha, max_dist);
    let points: Vec<i64> = (window.lo..=window.hi).collect();
    let vals: Vec<f64> = if points.len() >= 2048 {
        points.par_iter().map(|&m| naive_point(x, &kern, m, lo, hi)).collect()
    } else {
        points.iter().map(|&m| naive_point(x, &kern, m, lo, hi)).collect()
    };
    FiniteSequence::new(window.lo, vals).expect("potential values are finite")
}

/// FFT evaluation of I_α x on a window. Exactly zero output for x = 0;
/// otherwise a zero-padded cyclic convolution of the support values with
/// the kernel segment covering every lag the window needs. Agrees with
/// [`riesz_naive`] to ~1e−10 relative.
pub fn riesz_fast(
    x: &FiniteSequence,
    alpha: f64,
    window: EvalWindow,
) -> Result<FiniteSequence, CapacityError> {
    check_alpha(alpha);
    let (Some(lo), Some(hi)) = (x.support_min(), x.support_max()) else {
        return Ok(FiniteSequence::zero());
    };
    let xv = x.values();
    let span = (hi - lo) as usize + 1;
    let lag_min = window.lo - hi;
    let lag_max = window.hi - lo;
    let n_lags = (lag_max - lag_min) as usize + 1;
    let conv_len = span + n_lags - 1;
    let size = conv_len.next_power_of_two();
    if size > FFT_BUDGET {
        return Err(CapacityError { required: size, budget: FFT_BUDGET });
    }

    let mut a: Vec<Complex<f64>> = vec![Complex::default(); size];
    for (u, &v) in xv.iter().enumerate() {
        a[u].re = v;
    }
    let mut b: Vec<Complex<f64>> = vec![Complex::default(); size];
    for t in 0..n_lags {
        let lag = lag_min + t as i64;
        if lag != 0 {
            b[t].re = (lag.abs() as f64).powf(alpha - 1.0);
        }
    }

    let mut planner = FftPlanner::new();
    let fwd = planner.plan_fft_forward(size);
    fwd.process(&mut a);
    fwd.process(&mut b);
    let scale = 1.0 / size as f64;
    for (ai, bi) in a.iter_mut().zip(&b) {
        *ai *= bi * scale;
    }
    planner.plan_fft_inverse(size).process(&mut a);

    // conv[t] pairs x(lo + u) with lag_min + (t − u): value point lo + lag_min + t
    let vals: Vec<f64> = (0..window.len())
        .map(|i| a[i + span - 1].re)
        .collect();
    Ok(FiniteSequence::new(window.lo, vals).expect("potential values are finite"))
}

/// The symmetric-pairs series Σ_{j≥1} (x(k−j) + x(k+j))·j^{α−1} at one
/// point; finite for finitely supported x.
pub fn riesz_symmetric_at(x: &FiniteSequence, alpha: f64, k: i64) -> f64 {
    check_alpha(alpha);
    let (Some(lo), Some(hi)) = (x.support_min(), x.support_max()) else {
        return 0.0;
    };
    let max_j = (k - lo).abs().max((k - hi).abs());
    let mut terms = Vec::with_capacity(max_j as usize);
    for j in 1..=max_j {
        let pair = x.eval(k - j) + x.eval(k + j);
        if pair != 0.0 {
            terms.push(pair * (j as f64).powf(alpha - 1.0));
        }
    }
    pairwise_sum(&terms)
}

/// Forward difference of the potential, as the series
/// Σ_{j≥1} (Δx(k−j) + Δx(k+j))·j^{α−1} with Δx(i) = x(i+1) − x(i);
/// equals I_α x(k+1) − I_α x(k).
pub fn riesz_difference_at(x: &FiniteSequence, alpha: f64, k: i64) -> f64 {
    check_alpha(alpha);
    let (Some(lo), Some(hi)) = (x.support_min(), x.support_max()) else {
        return 0.0;
    };
    // Δx is supported in [lo − 1, hi]
    let max_j = (k - (lo - 1)).abs().max((k - hi).abs());
    let dx = |i: i64| x.eval(i + 1) - x.eval(i);
    let mut terms = Vec::with_capacity(max_j as usize);
    for j in 1..=max_j {
        let pair = dx(k - j) + dx(k + j);
        if pair != 0.0 {
            terms.push(pair * (j as f64).powf(alpha - 1.0));
        }
    }
    pairwise_sum(&terms)
}

/// Supremum of I_α(|x|) over ℤ together with the a-priori bound
/// 4‖x‖_{l^p} / (1 − 2^{α−1/p}), valid for 1 ≤ p < 1/α.
///
/// The supremum is exact: beyond [minSupp − 1, maxSupp + 1] every term's
/// distance grows as the point moves away from the support, so I_α|x| is
/// decreasing there and the maximum over that window is the global one.
pub fn uniform_bound(x: &FiniteSequence, alpha: f64, p: f64) -> (f64, f64) {
    check_alpha(alpha);
    assert!(
        (1.0..1.0 / alpha).contains(&p),
        "need 1 <= p < 1/alpha for the uniform bound, got p = {p}, alpha = {alpha}"
    );
    let (Some(lo), Some(hi)) = (x.support_min(), x.support_max()) else {
        return (0.0, 0.0);
    };
    let abs = x.abs();
    let vals = riesz_naive(&abs, alpha, EvalWindow { lo: lo - 1, hi: hi + 1 });
    let sup = vals.values().iter().copied().fold(0.0f64, f64::max);
    let lp = crate::numeric::pairwise_sum_by(x.values(), |v| v.abs().powf(p)).powf(1.0 / p);
    let bound = 4.0 * lp / (1.0 - 2.0f64.powf(alpha - 1.0 / p));
    (sup, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maximal::fractional_maximal;
    use proptest::prelude::*;
    use rand_core::{RngCore, SeedableRng};

    fn seeded(n: usize, seed: u64) -> FiniteSequence {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let vals: Vec<f64> = (0..n)
            .map(|_| {
                let u = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
                2.0 * u - 1.0
            })
            .collect();
        FiniteSequence::new(0, vals).unwrap()
    }

    #[test]
    fn delta_reads_back_the_kernel() {
        let x = FiniteSequence::delta(0);
        let alpha = 0.3;
        let y = riesz_naive(&x, alpha, EvalWindow { lo: -5, hi: 5 });
        assert_eq!(y.eval(0), 0.0);
        for k in 1..=5i64 {
            let want = (k as f64).powf(alpha - 1.0);
            assert!((y.eval(k) - want).abs() < 1e-15);
            assert!((y.eval(-k) - want).abs() < 1e-15);
        }
    }

    #[test]
    fn two_spikes_at_half() {
        let x = FiniteSequence::new(0, vec![1.0, 1.0]).unwrap();
        let y = riesz_naive(&x, 0.5, EvalWindow { lo: 0, hi: 2 });
        assert!((y.eval(2) - (1.0 / 2.0f64.sqrt() + 1.0)).abs() < 1e-15);
        assert!((y.eval(0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn fast_path_equals_naive_on_seeded_input() {
        let x = seeded(4096, 11);
        let w = EvalWindow { lo: -512, hi: 4607 };
        let naive = riesz_naive(&x, 0.3, w);
        let fast = riesz_fast(&x, 0.3, w).unwrap();
        let mut worst = 0.0f64;
        for k in w.lo..=w.hi {
            let (a, b) = (naive.eval(k), fast.eval(k));
            if a.abs() > 1e-300 {
                worst = worst.max((a - b).abs() / a.abs());
            }
        }
        assert!(worst <= 1e-10, "max relative deviation {worst}");
    }

    #[test]
    fn fast_path_of_zero_is_exactly_zero() {
        let y = riesz_fast(&FiniteSequence::zero(), 0.5, EvalWindow { lo: -10, hi: 10 }).unwrap();
        assert!(y.is_zero());
    }

    #[test]
    fn fast_path_reports_capacity() {
        let x = FiniteSequence::delta(0);
        let err = riesz_fast(&x, 0.5, EvalWindow { lo: 0, hi: (FFT_BUDGET as i64) * 2 })
            .unwrap_err();
        assert!(err.required > err.budget);
    }

    #[test]
    fn symmetric_series_examples() {
        let alpha = 0.5;
        let x = FiniteSequence::delta(0);
        assert!((riesz_symmetric_at(&x, 0.7, 3) - 3.0f64.powf(-0.3)).abs() < 1e-15);
        let pair = FiniteSequence::from_pairs(&[(-2, 1.0), (2, 1.0)]).unwrap();
        assert!((riesz_symmetric_at(&pair, alpha, 0) - 2.0f64.sqrt()).abs() < 1e-15);
        assert_eq!(riesz_symmetric_at(&FiniteSequence::zero(), alpha, 5), 0.0);
    }

    #[test]
    fn difference_series_examples() {
        let x = FiniteSequence::delta(0);
        let alpha = 0.33;
        let d = riesz_difference_at(&x, alpha, 5);
        let want = 6.0f64.powf(alpha - 1.0) - 5.0f64.powf(alpha - 1.0);
        assert!((d - want).abs() < 1e-15);
        assert!(d < 0.0);

        let pair = FiniteSequence::from_pairs(&[(-2, 1.0), (2, 1.0)]).unwrap();
        let d0 = riesz_difference_at(&pair, 0.5, 0);
        let want0 = (3.0f64.powf(-0.5) + 1.0) - 2.0f64.sqrt();
        assert!((d0 - want0).abs() < 1e-13);
        assert_eq!(riesz_difference_at(&FiniteSequence::zero(), 0.5, 0), 0.0);
    }

    #[test]
    fn uniform_bound_examples() {
        let x = FiniteSequence::delta(0);
        let (sup, bound) = uniform_bound(&x, 0.5, 1.0);
        assert_eq!(sup, 1.0);
        assert!((bound - 4.0 / (1.0 - 2.0f64.powf(-0.5))).abs() < 1e-12);
        assert!(sup <= bound);
        assert_eq!(uniform_bound(&FiniteSequence::zero(), 0.5, 1.0), (0.0, 0.0));
    }

    #[test]
    fn uniform_bound_holds_on_seeded_input() {
        let x = seeded(257, 5);
        let (sup, bound) = uniform_bound(&x, 0.3, 2.0);
        assert!(sup <= bound, "{sup} > {bound}");
    }

    proptest! {
        // Agreement is measured against the potential of |x|: for signed
        // inputs the pointwise value can be arbitrarily small through
        // cancellation, so "relative" only makes sense against the
        // magnitude of what was summed.
        #[test]
        fn paths_agree(seed in 0u64..500, alpha in 0.05f64..0.95) {
            let x = seeded(64, seed);
            let w = EvalWindow { lo: -20, hi: 84 };
            let naive = riesz_naive(&x, alpha, w);
            let fast = riesz_fast(&x, alpha, w).unwrap();
            let mag = riesz_naive(&x.abs(), alpha, w);
            for k in w.lo..=w.hi {
                let a = naive.eval(k);
                let scale = mag.eval(k).max(1e-9);
                prop_assert!((a - fast.eval(k)).abs() <= 1e-10 * scale);
                let s = riesz_symmetric_at(&x, alpha, k);
                prop_assert!((a - s).abs() <= 1e-12 * scale);
            }
        }

        #[test]
        fn difference_matches_potential_increments(seed in 0u64..200, alpha in 0.05f64..0.95) {
            let x = seeded(32, seed);
            let w = EvalWindow { lo: -10, hi: 42 };
            let naive = riesz_naive(&x, alpha, w);
            for k in w.lo..w.hi {
                let d = riesz_difference_at(&x, alpha, k);
                let want = naive.eval(k + 1) - naive.eval(k);
                let scale = naive.eval(k + 1).abs() + naive.eval(k).abs() + 1e-9;
                prop_assert!((d - want).abs() <= 1e-12 * scale);
            }
        }

        #[test]
        fn linear_and_monotone(seed in 0u64..200, alpha in 0.05f64..0.95) {
            let x = seeded(48, seed);
            let y = seeded(48, seed.wrapping_add(1000));
            let (a, b) = (1.75, -0.5);
            let combo_vals: Vec<f64> = x.values().iter().zip(y.values())
                .map(|(u, v)| a * u + b * v).collect();
            let combo = FiniteSequence::new(0, combo_vals).unwrap();
            let w = EvalWindow { lo: -8, hi: 56 };
            let (ix, iy, ic) = (
                riesz_naive(&x, alpha, w),
                riesz_naive(&y, alpha, w),
                riesz_naive(&combo, alpha, w),
            );
            for k in w.lo..=w.hi {
                let want = a * ix.eval(k) + b * iy.eval(k);
                let scale = ix.eval(k).abs().mul_add(a.abs(), iy.eval(k).abs() * b.abs()) + 1e-9;
                prop_assert!((ic.eval(k) - want).abs() <= 1e-12 * scale);
            }
            // positivity & monotonicity on absolute values: |x| ≤ |x| + |y|
            let xs = x.abs();
            let sum_vals: Vec<f64> = x.values().iter().zip(y.values())
                .map(|(u, v)| u.abs() + v.abs()).collect();
            let xsum = FiniteSequence::new(0, sum_vals).unwrap();
            let (i1, i2) = (riesz_naive(&xs, alpha, w), riesz_naive(&xsum, alpha, w));
            for k in w.lo..=w.hi {
                prop_assert!(i1.eval(k) <= i2.eval(k) + 1e-12);
                prop_assert!(i1.eval(k) >= 0.0);
            }
        }

        // The potential excludes the self-term x(k) while the maximal
        // function's windows include it, so M_α x ≤ I_α|x| can only hold
        // where the self-term carries no mass. Both testable forms:
        // at every point outside the support, and — after puncturing x at
        // the evaluation point — at every point whatsoever.
        #[test]
        fn maximal_dominated_by_potential_of_abs(seed in 0u64..200, alpha in 0.05f64..0.95) {
            let x = seeded(40, seed);
            let w = EvalWindow { lo: -15, hi: 55 };
            let m = fractional_maximal(&x, alpha, w);
            let i = riesz_naive(&x.abs(), alpha, w);
            for k in w.lo..=w.hi {
                if x.eval(k) != 0.0 {
                    continue;
                }
                prop_assert!(m.eval(k) <= i.eval(k) * (1.0 + 1e-12) + 1e-300,
                    "k={} M={} I={}", k, m.eval(k), i.eval(k));
            }
            for k in (w.lo..=w.hi).step_by(9) {
                let mut vals = x.values().to_vec();
                if k >= 0 && (k as usize) < vals.len() {
                    vals[k as usize] = 0.0;
                }
                let punctured = FiniteSequence::new(0, vals).unwrap();
                let mp = fractional_maximal(&punctured, alpha, EvalWindow { lo: k, hi: k });
                prop_assert!(mp.eval(k) <= i.eval(k) * (1.0 + 1e-12) + 1e-300,
                    "punctured k={} M={} I={}", k, mp.eval(k), i.eval(k));
            }
        }
    }
}
