//! Symmetric intervals S_{m,N} = {k : |k − m| ≤ N}, runs of consecutive
//! integers, and the two dilation operations used throughout the crate.

use serde::{Deserialize, Serialize};

/// A run of consecutive integers [start, end] (both inclusive, start ≤ end).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntervalRun {
    pub start: i64,
    pub end: i64,
}

impl IntervalRun {
    pub fn new(start: i64, end: i64) -> Self {
        assert!(start <= end, "empty run [{start}, {end}]");
        IntervalRun { start, end }
    }

    #[inline]
    pub fn cardinality(&self) -> i64 {
        self.end - self.start + 1
    }

    #[inline]
    pub fn contains(&self, k: i64) -> bool {
        self.start <= k && k <= self.end
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.start..=self.end
    }
}

/// The symmetric interval S_{m,N} with center m and radius N ≥ 0;
/// its cardinality is 2N + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetricInterval {
    pub m: i64,
    #[serde(rename = "N")]
    pub n: i64,
}

impl SymmetricInterval {
    pub fn new(m: i64, n: i64) -> Self {
        assert!(n >= 0, "negative radius {n}");
        SymmetricInterval { m, n }
    }

    #[inline]
    pub fn cardinality(&self) -> i64 {
        2 * self.n + 1
    }

    #[inline]
    pub fn contains(&self, k: i64) -> bool {
        (k - self.m).abs() <= self.n
    }

    pub fn as_run(&self) -> IntervalRun {
        IntervalRun::new(self.m - self.n, self.m + self.n)
    }
}

/// A closed evaluation window [lo, hi] on ℤ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalWindow {
    pub lo: i64,
    pub hi: i64,
}

impl EvalWindow {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty window [{lo}, {hi}]");
        EvalWindow { lo, hi }
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// λ-dilation of a symmetric interval, λ ≥ 1.
///
/// For N ≥ 1 this is S_{m,λN} = {k : |k − m| ≤ λN}. A singleton {i0}
/// dilates to the 2λ − 1 points {i0 − (λ − 1), …, i0 + (λ − 1)}, so that
/// dilation always enlarges the set even when the radius is zero.
pub fn dilate(s: SymmetricInterval, lambda: i64) -> IntervalRun {
    assert!(lambda >= 1, "dilation factor must be ≥ 1, got {lambda}");
    let r = if s.n == 0 { lambda - 1 } else { lambda * s.n };
    IntervalRun::new(s.m - r, s.m + r)
}

/// Left n-fold dilation of a run: keeps the right endpoint and multiplies
/// the cardinality by n, so nLI = {end − n·|I| + 1, …, end}.
pub fn left_dilate(i: IntervalRun, n: i64) -> IntervalRun {
    assert!(n >= 1, "left dilation factor must be ≥ 1, got {n}");
    IntervalRun::new(i.end - n * i.cardinality() + 1, i.end)
}
