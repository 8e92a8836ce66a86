//! Whitney-type decomposition of subsets of ℤ: a proper subset E ⊊ ℤ made
//! of finitely many runs and up to two infinite rays is partitioned into
//! disjoint symmetric intervals S_{m,N} ⊆ E whose 4-dilations all reach
//! the complement of E.
//!
//! Runs decompose by parity: a singleton becomes S_{i0,0}; an odd run is
//! its own centered interval; an even run of 2r points splits into two odd
//! sub-runs — (r, r) when r is odd, else (r−1, r+1) with the smaller piece
//! on the left. An infinite right ray from i0 is tiled by the doubling
//! family m_j = i0 + 3·2^j + j − 5, N_j = 2^j (j ≥ 1), whose parts sit
//! back-to-back and whose 4-dilations overshoot the ray base by
//! 4N_j − d_j = 2^j − j + 5 > 0; a left ray is the mirror image. Rays are
//! truncated at a requested depth and the first uncovered point is
//! reported as a remainder marker.

use crate::interval::{dilate, IntervalRun, SymmetricInterval};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetError {
    #[error("runs must be sorted with at least one missing integer between them")]
    RunsNotSeparated,
    #[error("a ray must be separated from every run by a missing integer")]
    RayTouchesRun,
    #[error("the set covers all of Z, leaving no complement to decompose against")]
    NoComplement,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WhitneyError {
    #[error("cannot decompose the empty set")]
    EmptySet,
}

/// A subset of ℤ: finitely many maximal runs, an optional left ray
/// (…, j0−1, j0], and an optional right ray [i0, i0+1, …), all pairwise
/// separated by at least one point of the complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSet {
    runs: Vec<IntervalRun>,
    left_ray: Option<i64>,
    right_ray: Option<i64>,
}

impl IntegerSet {
    pub fn new(
        runs: Vec<IntervalRun>,
        left_ray: Option<i64>,
        right_ray: Option<i64>,
    ) -> Result<Self, SetError> {
        for pair in runs.windows(2) {
            if pair[1].start <= pair[0].end + 1 {
                return Err(SetError::RunsNotSeparated);
            }
        }
        if let (Some(j0), Some(first)) = (left_ray, runs.first()) {
            if first.start <= j0 + 1 {
                return Err(SetError::RayTouchesRun);
            }
        }
        if let (Some(i0), Some(last)) = (right_ray, runs.last()) {
            if last.end >= i0 - 1 {
                return Err(SetError::RayTouchesRun);
            }
        }
        if let (Some(j0), Some(i0)) = (left_ray, right_ray) {
            if runs.is_empty() && j0 >= i0 - 1 {
                return Err(SetError::NoComplement);
            }
        }
        Ok(IntegerSet { runs, left_ray, right_ray })
    }

    pub fn runs(&self) -> &[IntervalRun] {
        &self.runs
    }

    pub fn left_ray(&self) -> Option<i64> {
        self.left_ray
    }

    pub fn right_ray(&self) -> Option<i64> {
        self.right_ray
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty() && self.left_ray.is_none() && self.right_ray.is_none()
    }

    pub fn contains(&self, k: i64) -> bool {
        if self.left_ray.is_some_and(|j0| k <= j0) {
            return true;
        }
        if self.right_ray.is_some_and(|i0| k >= i0) {
            return true;
        }
        self.runs.iter().any(|r| r.contains(k))
    }

    /// Whether the whole interval [start, end] lies inside the set.
    /// Components are separated by complement points, so containment means
    /// containment in a single component.
    pub fn contains_interval(&self, start: i64, end: i64) -> bool {
        if self.left_ray.is_some_and(|j0| end <= j0) {
            return true;
        }
        if self.right_ray.is_some_and(|i0| start >= i0) {
            return true;
        }
        self.runs.iter().any(|r| r.start <= start && end <= r.end)
    }
}

/// Result of [`decompose`]: the emitted intervals in position order, plus
/// the first point of each truncated ray that the emitted parts do not
/// reach.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<SymmetricInterval>,
    pub left_remainder: Option<i64>,
    pub right_remainder: Option<i64>,
}

/// d_j = 3·2^j + j − 5 (offset of the j-th ray part's center from the ray
/// base) and the dilation slack 4N_j − d_j = 2^j − j + 5, positive for
/// every j ≥ 1 — the reason each ray part's 4-dilation clears the base of
/// the ray.
pub fn ray_gap_check(j: u32) -> (i64, i64) {
    assert!(j >= 1, "ray parts are indexed from 1");
    let d = 3 * (1i64 << j) + j as i64 - 5;
    let slack = (1i64 << j) - j as i64 + 5;
    (d, slack)
}

fn decompose_run(run: IntervalRun, out: &mut Vec<SymmetricInterval>) {
    let card = run.cardinality();
    if card % 2 == 1 {
        let n = (card - 1) / 2;
        out.push(SymmetricInterval::new(run.start + n, n));
        return;
    }
    let r = card / 2;
    let (k1, k2) = if r % 2 == 1 { (r, r) } else { (r - 1, r + 1) };
    let n1 = (k1 - 1) / 2;
    let n2 = (k2 - 1) / 2;
    out.push(SymmetricInterval::new(run.start + n1, n1));
    out.push(SymmetricInterval::new(run.start + k1 + n2, n2));
}

/// Decomposes a nonempty set into disjoint symmetric intervals covering it
/// (rays up to `ray_depth` parts each). See the module docs for the
/// construction and its guarantees.
pub fn decompose(set: &IntegerSet, ray_depth: u32) -> Result<Decomposition, WhitneyError> {
    if set.is_empty() {
        return Err(WhitneyError::EmptySet);
    }
    let mut parts = Vec::new();
    let mut left_remainder = None;
    if let Some(j0) = set.left_ray {
        for j in (1..=ray_depth).rev() {
            let (d, _) = ray_gap_check(j);
            parts.push(SymmetricInterval::new(j0 - d, 1 << j));
        }
        let reach = if ray_depth >= 1 {
            ray_gap_check(ray_depth).0 + (1i64 << ray_depth) + 1
        } else {
            0
        };
        left_remainder = Some(j0 - reach);
    }
    for &run in &set.runs {
        decompose_run(run, &mut parts);
    }
    let mut right_remainder = None;
    if let Some(i0) = set.right_ray {
        for j in 1..=ray_depth {
            let (d, _) = ray_gap_check(j);
            parts.push(SymmetricInterval::new(i0 + d, 1 << j));
        }
        let reach = if ray_depth >= 1 {
            ray_gap_check(ray_depth).0 + (1i64 << ray_depth) + 1
        } else {
            0
        };
        right_remainder = Some(i0 + reach);
    }
    Ok(Decomposition { parts, left_remainder, right_remainder })
}

/// The three conclusions a decomposition must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionReport {
    pub disjoint: bool,
    pub covers: bool,
    pub touches_complement: bool,
}

impl DecompositionReport {
    pub fn all_true(&self) -> bool {
        self.disjoint && self.covers && self.touches_complement
    }
}

/// Checks a candidate decomposition: pairwise disjointness, exact coverage
/// of E (restricted, when a ray is present, to the region the parts reach),
/// and 4-dilation contact with E^c for every part (singleton rule at
/// N = 0).
pub fn verify_decomposition(set: &IntegerSet, parts: &[SymmetricInterval]) -> DecompositionReport {
    let mut sorted: Vec<IntervalRun> = parts.iter().map(|s| s.as_run()).collect();
    sorted.sort_by_key(|r| r.start);
    let disjoint = sorted.windows(2).all(|p| p[1].start > p[0].end);

    // merge adjacent parts into maximal covered runs
    let mut covered: Vec<IntervalRun> = Vec::new();
    for r in &sorted {
        match covered.last_mut() {
            Some(last) if r.start == last.end + 1 => last.end = r.end,
            _ => covered.push(*r),
        }
    }

    // the region over which coverage is demanded: all of E, truncated at
    // the parts' reach on each side that is an infinite ray
    let lo_bound = set.left_ray.map(|_| sorted.first().map_or(i64::MAX, |r| r.start));
    let hi_bound = set.right_ray.map(|_| sorted.last().map_or(i64::MIN, |r| r.end));
    let mut expected: Vec<IntervalRun> = Vec::new();
    if let Some(j0) = set.left_ray {
        let lo = lo_bound.unwrap();
        if lo <= j0 {
            expected.push(IntervalRun::new(lo, j0));
        }
    }
    for &r in &set.runs {
        expected.push(r);
    }
    if let Some(i0) = set.right_ray {
        let hi = hi_bound.unwrap();
        if hi >= i0 {
            expected.push(IntervalRun::new(i0, hi));
        }
    }
    let covers = disjoint && covered == expected;

    let touches_complement = parts.iter().all(|s| {
        let d = dilate(*s, 4);
        !set.contains_interval(d.start, d.end)
    });

    DecompositionReport { disjoint, covers, touches_complement }
}
