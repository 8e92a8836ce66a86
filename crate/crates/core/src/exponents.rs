//! Exponent bookkeeping for the boundedness inequalities.
//!
//! A profile fixes the fractional order α together with the Lebesgue/Morrey
//! exponents of one inequality family, and derives the dependent exponents
//! (q, s, t, p′) from the defining relations. Construction fails with the
//! name of the first violated constraint, so callers can surface exactly
//! which hypothesis a parameter tuple misses.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProfileKind {
    /// Morrey-to-Morrey scale: 1 < p ≤ q < 1/α, s = p/(1 − αq), t = qs/p.
    MorreyScale,
    /// Sobolev scale: 1 < p < 1/α and 1/q = 1/p − α.
    SobolevScale,
    /// Sobolev scale restricted by q < 2p, with s = qp/(2p − q).
    WeightedMorreyScale,
}

#[derive(Debug, Error, PartialEq)]
pub enum ProfileError {
    /// A constraint of the requested kind fails; the string names it.
    #[error("constraint violated: {0}")]
    Constraint(&'static str),
    /// q was supplied where the kind derives it, and the two disagree.
    #[error("supplied q = {supplied} is inconsistent with derived q = {derived}")]
    InconsistentQ { supplied: f64, derived: f64 },
    #[error("kind requires q to be supplied")]
    MissingQ,
}

/// Validated exponent tuple. `s` and `t` are present only for the kinds
/// that define them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExponentProfile {
    pub kind: ProfileKind,
    pub alpha: f64,
    pub p: f64,
    pub q: f64,
    pub s: Option<f64>,
    pub t: Option<f64>,
    pub p_prime: f64,
}

fn require(cond: bool, name: &'static str) -> Result<(), ProfileError> {
    if cond {
        Ok(())
    } else {
        Err(ProfileError::Constraint(name))
    }
}

/// Builds a profile of the given kind. `q` is mandatory for
/// [`ProfileKind::MorreyScale`] and derived from 1/q = 1/p − α otherwise
/// (a supplied q is cross-checked against the derived one).
pub fn make_profile(
    kind: ProfileKind,
    alpha: f64,
    p: f64,
    q: Option<f64>,
) -> Result<ExponentProfile, ProfileError> {
    require(alpha.is_finite() && alpha > 0.0 && alpha < 1.0, "0 < alpha < 1")?;
    require(p.is_finite() && p > 1.0, "p > 1")?;
    let p_prime = p / (p - 1.0);
    match kind {
        ProfileKind::MorreyScale => {
            let q = q.ok_or(ProfileError::MissingQ)?;
            require(q.is_finite() && q >= p, "p <= q")?;
            require(alpha * q < 1.0, "q < 1/alpha")?;
            let s = p / (1.0 - alpha * q);
            let t = q * s / p;
            Ok(ExponentProfile { kind, alpha, p, q, s: Some(s), t: Some(t), p_prime })
        }
        ProfileKind::SobolevScale | ProfileKind::WeightedMorreyScale => {
            require(alpha * p < 1.0, "p < 1/alpha")?;
            let derived = p / (1.0 - alpha * p);
            if let Some(sq) = q {
                if ((sq - derived) / derived).abs() > 1e-9 {
                    return Err(ProfileError::InconsistentQ { supplied: sq, derived });
                }
            }
            let q = derived;
            if kind == ProfileKind::WeightedMorreyScale {
                require(q < 2.0 * p, "q<2p")?;
                let s = q * p / (2.0 * p - q);
                Ok(ExponentProfile { kind, alpha, p, q, s: Some(s), t: None, p_prime })
            } else {
                Ok(ExponentProfile { kind, alpha, p, q, s: None, t: None, p_prime })
            }
        }
    }
}

impl ExponentProfile {
    pub fn morrey(alpha: f64, p: f64, q: f64) -> Result<Self, ProfileError> {
        make_profile(ProfileKind::MorreyScale, alpha, p, Some(q))
    }

    pub fn sobolev(alpha: f64, p: f64) -> Result<Self, ProfileError> {
        make_profile(ProfileKind::SobolevScale, alpha, p, None)
    }

    pub fn weighted_morrey(alpha: f64, p: f64) -> Result<Self, ProfileError> {
        make_profile(ProfileKind::WeightedMorreyScale, alpha, p, None)
    }
}
