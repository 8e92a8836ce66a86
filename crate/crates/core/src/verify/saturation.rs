//! Evaluation windows and tail certificates for the experiments.
//!
//! The operators are evaluated on a window padded well past the input's
//! support. Outside the window both M_α x and I_α x sit under the envelope
//! ‖x‖_{l¹}·d^{α−1}, with d the distance to the support hull: every
//! reaching window or kernel term spans at least d, and shorter maximal
//! windows see nothing. Summing the envelope against a weight's polynomial
//! tail gives a closed form for everything the evaluation window missed;
//! an experiment case is certified when that remainder is provably below
//! 1e−9 of the computed quantity.

use crate::interval::EvalWindow;
use crate::numeric::power_tail_bounds;
use crate::sequence::FiniteSequence;
use crate::weight::Weight;

/// A window `[hull_lo − pad, hull_hi + pad]` around a support hull.
#[derive(Debug, Clone, Copy)]
pub struct PaddedWindow {
    pub window: EvalWindow,
    pub pad: i64,
    pub hull_lo: i64,
    pub hull_hi: i64,
}

impl PaddedWindow {
    pub fn origin_inside(&self) -> bool {
        self.hull_lo <= 0 && self.hull_hi >= 0
    }

    /// Largest absolute coordinate of the hull (at least 1).
    pub fn height(&self) -> i64 {
        self.hull_lo.abs().max(self.hull_hi.abs()).max(1)
    }
}

/// Pads the support hull of `x` by `max(factor·span, floor)`.
///
/// # Panics
/// Panics if `x` is identically zero; callers filter those out first.
pub fn padded_window(x: &FiniteSequence, factor: i64, floor: i64) -> PaddedWindow {
    let lo = x.support_min().expect("padded window needs a nonzero input");
    let hi = x.support_max().unwrap();
    let span = hi - lo + 1;
    let pad = (factor * span).max(floor);
    PaddedWindow { window: EvalWindow::new(lo - pad, hi + pad), pad, hull_lo: lo, hull_hi: hi }
}

/// Geometry of the region beyond the window in the hull-distance variable:
/// returns `(start, reach)` such that every outside point, after the
/// change of variables d′ = d (origin inside the hull) or d′ = d − height
/// (origin outside), satisfies d′ ≥ start and |k| ∈ [d′, d′·reach], while
/// envelope powers transfer because d ≥ d′.
fn window_geometry(win: &PaddedWindow) -> (f64, f64) {
    let h = win.height() as f64;
    if win.origin_inside() {
        let start = (win.pad + 1) as f64;
        (start, 1.0 + h / start)
    } else {
        let start = (win.pad + 1 - win.height()) as f64;
        (start, 1.0 + 2.0 * h / start.max(1.0))
    }
}

/// Upper bound for Σ_{k ∉ window} |T x(k)|^q · v(k), where T is either the
/// fractional maximal operator or the Riesz potential of order α and `l1`
/// is ‖x‖_{l¹}. `None` when the envelope series diverges or the weight's
/// tail form does not cover the window edge — the case is then simply not
/// certifiable at this padding.
pub fn operator_tail_sum(l1: f64, alpha: f64, q: f64, v: &Weight, win: &PaddedWindow) -> Option<f64> {
    let (start, reach) = window_geometry(win);
    let t = v.power_tail();
    if start < 1.0 || start < t.from as f64 {
        return None;
    }
    let coeff = t.coeff * if t.expo > 0.0 { reach.powf(t.expo) } else { 1.0 };
    let e_total = (alpha - 1.0) * q + t.expo;
    if e_total >= -1.0 {
        return None;
    }
    Some(2.0 * l1.powf(q) * coeff * power_tail_bounds(e_total, start).1)
}

/// Upper bound for the Morrey-sup leakage: how much of
/// sup_S gauge(S)^{1/global − 1/local} (Σ_S |T x|^local · v)^{1/local}
/// lives on windows S that poke beyond the evaluation window. Any such S
/// contains a point at hull distance r > pad, so its gauge mass is at
/// least the gauge at that point while its beyond-window sum is at most
/// the envelope tail from r; the product is maximized at r = pad + 1
/// whenever the combined exponent is negative. `gauge = None` is counting
/// measure (a singleton contributes 1).
pub fn morrey_tail_bound(
    l1: f64,
    alpha: f64,
    local: f64,
    global: f64,
    v: &Weight,
    gauge: Option<&Weight>,
    win: &PaddedWindow,
) -> Option<f64> {
    let e = 1.0 / global - 1.0 / local;
    let (start, reach) = window_geometry(win);
    let tv = v.power_tail();
    if start < 1.0 || start < tv.from as f64 {
        return None;
    }
    let coeff_v = tv.coeff * if tv.expo > 0.0 { reach.powf(tv.expo) } else { 1.0 };
    let e_inner = (alpha - 1.0) * local + tv.expo;
    if e_inner >= -1.0 {
        return None;
    }
    // Σ_{d ≥ r} d^{e_inner} ≤ cc · r^{e_inner + 1} for r ≥ 1
    let cc = 1.0 + 1.0 / (-e_inner - 1.0);
    let a = 2.0 * l1.powf(local) * coeff_v;

    let (gauge_factor, eta) = match gauge {
        None => (1.0, 0.0),
        Some(g) => {
            let tg = g.power_tail();
            if start < tg.from as f64 {
                return None;
            }
            // gauge(S)^e ≤ g(k(r))^e = coeff^e |k|^{expo·e}, |k| ∈ [r, r·reach]
            let eta = tg.expo * e;
            let cfac = if eta > 0.0 { reach.powf(eta) } else { 1.0 };
            (tg.coeff.powf(e) * cfac, eta)
        }
    };
    let theta = eta + (e_inner + 1.0) / local;
    if theta >= 0.0 {
        return None;
    }
    Some(gauge_factor * (a * cc).powf(1.0 / local) * start.powf(theta))
}
