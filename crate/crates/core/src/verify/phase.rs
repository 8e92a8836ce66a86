//! Membership phase scan for power weights |k|^β (with the origin pegged
//! to 1): the two-exponent class has three equivalent formulations —
//! the defining (p, q) ratio, ω^q against the class at 1 + q/p′, and
//! ω^{−p′} against the class at 1 + p′/q. For power weights the three
//! per-interval ratios are exact powers of one another, so after
//! normalizing by the exponents 1, 1/q and 1/p′ their growth profiles
//! coincide to roundoff and a disagreement would expose an indexing bug,
//! not a mathematical one.

use crate::exponents::ExponentProfile;
use crate::muckenhoupt::{constant_growth_profile, ConstantKind, EnumerationRule};
use crate::trend::{classify_growth, Verdict};
use crate::weight::Weight;
use serde::Serialize;

/// Half-width of the inconclusive strip around the two membership
/// boundaries β = −1/q and β = 1/p′: growth this close to critical is too
/// slow to call at finite caps, so verdicts there are reported but not
/// binding.
pub const GUARD_BAND: f64 = 0.2;

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PhaseRow {
    pub beta: f64,
    /// Verdicts of the three normalized formulations, in the order above.
    pub verdicts: [Verdict; 3],
    pub agree: bool,
    /// True when β lies within [`GUARD_BAND`] of a membership boundary.
    pub guard_band: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PhaseScanReport {
    pub alpha: f64,
    pub p: f64,
    pub q: f64,
    pub p_prime: f64,
    pub caps: Vec<u64>,
    pub rows: Vec<PhaseRow>,
}

/// Runs the three-formulation growth comparison at each β over the ladder
/// of interval caps.
pub fn membership_phase_scan(
    profile: &ExponentProfile,
    betas: &[f64],
    caps: &[u64],
) -> PhaseScanReport {
    let (p, q, pp) = (profile.p, profile.q, profile.p_prime);
    let icaps: Vec<i64> = caps.iter().map(|&c| c as i64).collect();
    let rows = betas
        .iter()
        .map(|&beta| {
            let w = Weight::power(beta).expect("finite exponent");
            let direct =
                constant_growth_profile(&w, ConstantKind::Apq { p, q }, &icaps, EnumerationRule::AllRuns);
            let via_q = constant_growth_profile(
                &w.pow(q),
                ConstantKind::Ap { p: 1.0 + q / pp },
                &icaps,
                EnumerationRule::AllRuns,
            );
            let via_dual = constant_growth_profile(
                &w.pow(-pp),
                ConstantKind::Ap { p: 1.0 + pp / q },
                &icaps,
                EnumerationRule::AllRuns,
            );
            let norm_q: Vec<(u64, f64)> =
                via_q.iter().map(|&(c, v)| (c, v.powf(1.0 / q))).collect();
            let norm_dual: Vec<(u64, f64)> =
                via_dual.iter().map(|&(c, v)| (c, v.powf(1.0 / pp))).collect();
            let verdicts = [
                classify_growth(&direct),
                classify_growth(&norm_q),
                classify_growth(&norm_dual),
            ];
            let agree = verdicts[0] == verdicts[1] && verdicts[1] == verdicts[2];
            let guard_band =
                (beta + 1.0 / q).abs() < GUARD_BAND || (beta - 1.0 / pp).abs() < GUARD_BAND;
            PhaseRow { beta, verdicts, agree, guard_band }
        })
        .collect();
    PhaseScanReport { alpha: profile.alpha, p, q, p_prime: pp, caps: caps.to_vec(), rows }
}
