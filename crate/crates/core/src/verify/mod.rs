//! Empirical boundedness experiments.
//!
//! Each tagged experiment runs one inequality over a deterministic battery
//! of inputs at a ladder of sizes and reports, per case, the two sides and
//! their ratio, plus the running sup across the ladder and a growth
//! verdict: a genuinely bounded inequality shows a ratio sup that
//! flattens as the sizes double, while a violated hypothesis shows up as
//! steady growth. Reports produced from equal requests are byte-identical.

pub mod experiments;
pub mod families;
pub mod phase;
pub mod saturation;

use crate::exponents::{make_profile, ProfileError, ProfileKind};
use crate::trend::{classify_growth, Verdict};
use crate::weight::{Weight, WeightError};
use experiments::Op;
use serde::Serialize;
use thiserror::Error;

pub use experiments::CERT_REL;
pub use families::{generate, standard_cases, FamilyKind, TestCase};
pub use phase::{membership_phase_scan, PhaseRow, PhaseScanReport, GUARD_BAND};
pub use saturation::{morrey_tail_bound, operator_tail_sum, padded_window, PaddedWindow};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("constraint violated: {0}")]
    Constraint(&'static str),
    #[error("unknown experiment tag `{0}` (known: t3.7, t3.1, t3.8, c3.5, t1.1, l3.12, l3.16, t3.10, t3.11, m2.13)")]
    UnknownTag(String),
}

/// The experiment catalog. Codes are opaque identifiers kept stable for
/// scripting; the variants say what each one actually measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentTag {
    /// Morrey-to-Morrey bound for the fractional maximal operator
    /// (weak variant: the counting inequality at exponent 1/(1−α)).
    MorreyMaximal,
    /// Weighted strong bound for the maximal operator on the scale
    /// 1/q = 1/p − α.
    SobolevMaximal,
    /// Weighted weak-type bound for the maximal operator, same scale.
    WeakSobolevMaximal,
    /// Counting weak-type bound for the Riesz potential.
    WeakRiesz,
    /// Weighted strong bound for the Riesz potential, same scale.
    SobolevRiesz,
    /// Σ|I_α x|^q ω against Σ(M_α x)^q ω.
    OperatorComparison,
    /// Good-set density count for sets where I_α is large but M_α small.
    GoodSet,
    /// Weighted-Morrey bound for the Riesz potential on the restricted
    /// scale q < 2p.
    RestrictedRiesz,
    /// Same restricted scale for the maximal operator.
    RestrictedMaximal,
    /// Three-formulation membership phase scan for power weights.
    MembershipPhase,
}

impl ExperimentTag {
    pub const ALL: [ExperimentTag; 10] = [
        ExperimentTag::MorreyMaximal,
        ExperimentTag::SobolevMaximal,
        ExperimentTag::WeakSobolevMaximal,
        ExperimentTag::WeakRiesz,
        ExperimentTag::SobolevRiesz,
        ExperimentTag::OperatorComparison,
        ExperimentTag::GoodSet,
        ExperimentTag::RestrictedRiesz,
        ExperimentTag::RestrictedMaximal,
        ExperimentTag::MembershipPhase,
    ];

    pub fn code(self) -> &'static str {
        match self {
            ExperimentTag::MorreyMaximal => "t3.7",
            ExperimentTag::SobolevMaximal => "t3.1",
            ExperimentTag::WeakSobolevMaximal => "t3.8",
            ExperimentTag::WeakRiesz => "c3.5",
            ExperimentTag::SobolevRiesz => "t1.1",
            ExperimentTag::OperatorComparison => "l3.12",
            ExperimentTag::GoodSet => "l3.16",
            ExperimentTag::RestrictedRiesz => "t3.10",
            ExperimentTag::RestrictedMaximal => "t3.11",
            ExperimentTag::MembershipPhase => "m2.13",
        }
    }

    pub fn parse(s: &str) -> Result<Self, VerifyError> {
        Self::ALL
            .iter()
            .copied()
            .find(|t| t.code() == s)
            .ok_or_else(|| VerifyError::UnknownTag(s.to_string()))
    }
}

/// One evaluated input: both sides of the inequality and whether the
/// truncation remainder was certified below [`CERT_REL`] of the computed
/// quantity.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseOutcome {
    pub case_id: String,
    pub cap: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub certified: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EmpiricalConstantReport {
    pub tag: String,
    pub per_case: Vec<CaseOutcome>,
    pub sup_ratio: f64,
    /// Running sup of the ratio at each ladder size, in size order.
    pub growth_trend: Vec<(u64, f64)>,
    pub verdict: Verdict,
    /// True when every retained case carried a certified remainder.
    pub certified: bool,
}

/// Assembles the report: cases sorted by (size, id), running sup per
/// distinct size, boundedness verdict from the trend. Inputs that were
/// identically zero never reach this point — their ratio is 0/0.
pub fn build_report(tag: &str, mut outcomes: Vec<CaseOutcome>) -> EmpiricalConstantReport {
    outcomes.sort_by(|a, b| a.cap.cmp(&b.cap).then_with(|| a.case_id.cmp(&b.case_id)));
    let sup_ratio = outcomes.iter().map(|c| c.ratio).fold(0.0f64, f64::max);
    let mut growth_trend: Vec<(u64, f64)> = Vec::new();
    let mut running = 0.0f64;
    for c in &outcomes {
        running = running.max(c.ratio);
        match growth_trend.last_mut() {
            Some(last) if last.0 == c.cap => last.1 = running,
            _ => growth_trend.push((c.cap, running)),
        }
    }
    let verdict = classify_growth(&growth_trend);
    let certified = !outcomes.is_empty() && outcomes.iter().all(|c| c.certified);
    EmpiricalConstantReport {
        tag: tag.to_string(),
        per_case: outcomes,
        sup_ratio,
        growth_trend,
        verdict,
        certified,
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentRequest {
    pub tag: ExperimentTag,
    pub alpha: f64,
    pub p: f64,
    pub q: Option<f64>,
    /// Power-weight exponents: empty means unweighted; exactly one for the
    /// weighted tags; the membership scan takes the whole list.
    pub betas: Vec<f64>,
    /// Selects the weak variant of the Morrey-maximal tag.
    pub weak: bool,
    pub caps: Vec<u64>,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum ExperimentReport {
    Constant(EmpiricalConstantReport),
    Phase(PhaseScanReport),
}

impl ExperimentReport {
    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are plain trees")
    }
}

fn validate_caps(caps: &[u64]) -> Result<(), VerifyError> {
    let ok = !caps.is_empty()
        && caps.windows(2).all(|w| w[0] < w[1])
        && caps.iter().all(|&c| (2..=(1u64 << 20)).contains(&c));
    if ok {
        Ok(())
    } else {
        Err(VerifyError::Constraint("caps must be strictly increasing sizes in [2, 2^20]"))
    }
}

fn one_weight(req: &ExperimentRequest) -> Result<Weight, VerifyError> {
    match req.betas.len() {
        0 => Ok(Weight::constant(1.0).expect("unit weight")),
        1 => Ok(Weight::power(req.betas[0])?),
        _ => Err(VerifyError::Constraint("this tag takes a single weight exponent")),
    }
}

fn collect(
    tag: ExperimentTag,
    it: impl Iterator<Item = Option<CaseOutcome>>,
) -> EmpiricalConstantReport {
    build_report(tag.code(), it.flatten().collect())
}

/// Runs one tagged experiment. Out-of-hypothesis parameters fail up front
/// with the violated constraint's name.
pub fn run_experiment(req: &ExperimentRequest) -> Result<ExperimentReport, VerifyError> {
    validate_caps(&req.caps)?;
    if !(req.alpha > 0.0 && req.alpha < 1.0 && req.alpha.is_finite()) {
        return Err(VerifyError::Constraint("0 < alpha < 1"));
    }
    if req.weak && req.tag != ExperimentTag::MorreyMaximal {
        return Err(VerifyError::Constraint("--weak applies only to the Morrey maximal tag"));
    }
    use ExperimentTag::*;
    if req.tag == MembershipPhase {
        let pr = make_profile(ProfileKind::SobolevScale, req.alpha, req.p, req.q)?;
        let betas: Vec<f64> = if req.betas.is_empty() {
            vec![-0.4, -0.2, 0.0, 0.2, 0.4]
        } else {
            req.betas.clone()
        };
        return Ok(ExperimentReport::Phase(membership_phase_scan(&pr, &betas, &req.caps)));
    }
    let cases = standard_cases(req.seed, &req.caps);
    let report = match req.tag {
        MorreyMaximal if req.weak => {
            collect(req.tag, cases.iter().map(|c| experiments::weak_count_case(Op::Maximal, req.alpha, c)))
        }
        MorreyMaximal => {
            let pr = make_profile(ProfileKind::MorreyScale, req.alpha, req.p, req.q)?;
            collect(req.tag, cases.iter().map(|c| experiments::morrey_strong_case(&pr, c)))
        }
        SobolevMaximal | SobolevRiesz => {
            let pr = make_profile(ProfileKind::SobolevScale, req.alpha, req.p, req.q)?;
            let w = one_weight(req)?;
            let op = if req.tag == SobolevMaximal { Op::Maximal } else { Op::Riesz };
            collect(req.tag, cases.iter().map(|c| experiments::sobolev_strong_case(op, &pr, &w, c)))
        }
        WeakSobolevMaximal => {
            let pr = make_profile(ProfileKind::SobolevScale, req.alpha, req.p, req.q)?;
            let w = one_weight(req)?;
            collect(req.tag, cases.iter().map(|c| experiments::weak_weighted_case(&pr, &w, c)))
        }
        WeakRiesz => {
            collect(req.tag, cases.iter().map(|c| experiments::weak_count_case(Op::Riesz, req.alpha, c)))
        }
        OperatorComparison => {
            let q = req.q.unwrap_or(req.p);
            if !(q > 0.0 && q.is_finite()) {
                return Err(VerifyError::Constraint("q > 0"));
            }
            let w = one_weight(req)?;
            collect(req.tag, cases.iter().map(|c| experiments::good_lambda_case(req.alpha, q, &w, c)))
        }
        GoodSet => {
            let mut outcomes = Vec::new();
            for c in &cases {
                outcomes.extend(experiments::good_set_cases(req.alpha, 6.0, 1.0, c));
            }
            build_report(req.tag.code(), outcomes)
        }
        RestrictedRiesz | RestrictedMaximal => {
            let pr = make_profile(ProfileKind::WeightedMorreyScale, req.alpha, req.p, req.q)?;
            let w = one_weight(req)?;
            let op = if req.tag == RestrictedRiesz { Op::Riesz } else { Op::Maximal };
            collect(req.tag, cases.iter().map(|c| experiments::weighted_morrey_case(op, &pr, &w, c)))
        }
        MembershipPhase => unreachable!("handled above"),
    };
    Ok(ExperimentReport::Constant(report))
}
