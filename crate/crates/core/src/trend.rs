//! Growth-trend classification shared by the weight diagnostics and the
//! verification harness.
//!
//! Suprema over "all intervals" or "all of ℤ" are only ever sampled up to a
//! truncation cap here, so instead of claiming membership or boundedness we
//! classify how the running supremum behaves as the cap doubles: flat tails
//! read as bounded, sustained growth reads as unbounded, and a guard band
//! in between stays inconclusive.

use serde::{Deserialize, Serialize};

/// Relative growth below which the final doubling counts as stabilized.
pub const STABLE_GROWTH: f64 = 0.05;
/// Relative growth at or above which the final doubling counts as growing.
pub const DIVERGENT_GROWTH: f64 = 0.20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Bounded,
    Growing,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Bounded => "bounded",
            Verdict::Growing => "growing",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Classifies a profile of (cap, value) points with strictly increasing
/// caps by the relative growth over the final doubling: from the largest
/// cap ≤ last/2 up to the last cap.
///
/// Fewer than two points, or caps too closely spaced to contain a
/// doubling, yield [`Verdict::Inconclusive`]. An identically-zero profile
/// is bounded; a jump from zero to positive is growth.
pub fn classify_growth(profile: &[(u64, f64)]) -> Verdict {
    let Some(&(last_cap, last_val)) = profile.last() else {
        return Verdict::Inconclusive;
    };
    let half = last_cap / 2;
    let base = profile
        .iter()
        .rev()
        .skip(1)
        .find(|&&(cap, _)| cap <= half)
        .map(|&(_, v)| v);
    let Some(base_val) = base else {
        return Verdict::Inconclusive;
    };
    if base_val == 0.0 {
        return if last_val == 0.0 { Verdict::Bounded } else { Verdict::Growing };
    }
    let growth = (last_val - base_val) / base_val;
    if growth < STABLE_GROWTH {
        Verdict::Bounded
    } else if growth >= DIVERGENT_GROWTH {
        Verdict::Growing
    } else {
        Verdict::Inconclusive
    }
}
