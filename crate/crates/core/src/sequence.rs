//! Finitely supported real sequences on ℤ.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Widest support span accepted when densifying sparse input, as a guard
/// against accidental multi-gigabyte allocations from a stray index.
pub const MAX_SPAN: i64 = 1 << 27;

#[derive(Debug, Error, PartialEq)]
pub enum SequenceError {
    #[error("non-finite value {value} at index {index}")]
    NonFinite { index: i64, value: f64 },
    #[error("duplicate index {0} in sparse input")]
    DuplicateIndex(i64),
    #[error("support span {span} exceeds the supported maximum {max}")]
    SpanTooLarge { span: i64, max: i64 },
}

/// A real sequence x: ℤ → ℝ that vanishes outside a finite window.
///
/// Stored densely as `values[i] = x(offset + i)`. The representation is
/// canonical: leading and trailing zeros are trimmed, so the zero sequence
/// has an empty value vector and two equal sequences compare equal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteSequence {
    offset: i64,
    values: Vec<f64>,
}

impl FiniteSequence {
    /// Builds a sequence from dense values starting at `offset`.
    pub fn new(offset: i64, values: Vec<f64>) -> Result<Self, SequenceError> {
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(SequenceError::NonFinite {
                    index: offset + i as i64,
                    value: v,
                });
            }
        }
        let mut s = FiniteSequence { offset, values };
        s.trim();
        Ok(s)
    }

    /// The zero sequence.
    pub fn zero() -> Self {
        FiniteSequence { offset: 0, values: Vec::new() }
    }

    /// The unit spike δ_k.
    pub fn delta(k: i64) -> Self {
        FiniteSequence { offset: k, values: vec![1.0] }
    }

    /// Densifies sparse `(index, value)` pairs; indices need not be
    /// contiguous or sorted, gaps become zeros, duplicates are rejected.
    pub fn from_pairs(pairs: &[(i64, f64)]) -> Result<Self, SequenceError> {
        let nonzero: Vec<(i64, f64)> = pairs.iter().copied().collect();
        if nonzero.is_empty() {
            return Ok(Self::zero());
        }
        let mut sorted = nonzero;
        sorted.sort_by_key(|&(i, _)| i);
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(SequenceError::DuplicateIndex(w[0].0));
            }
        }
        let lo = sorted[0].0;
        let hi = sorted[sorted.len() - 1].0;
        let span = hi - lo + 1;
        if span > MAX_SPAN {
            return Err(SequenceError::SpanTooLarge { span, max: MAX_SPAN });
        }
        let mut values = vec![0.0; span as usize];
        for (i, v) in sorted {
            values[(i - lo) as usize] = v;
        }
        Self::new(lo, values)
    }

    fn trim(&mut self) {
        let first = self.values.iter().position(|&v| v != 0.0);
        match first {
            None => {
                self.offset = 0;
                self.values.clear();
            }
            Some(f) => {
                let l = self.values.iter().rposition(|&v| v != 0.0).unwrap();
                self.values.truncate(l + 1);
                self.values.drain(..f);
                self.offset += f as i64;
            }
        }
    }

    /// x(k); zero off the stored window.
    #[inline]
    pub fn eval(&self, k: i64) -> f64 {
        if k < self.offset {
            return 0.0;
        }
        let i = (k - self.offset) as usize;
        if i < self.values.len() {
            self.values[i]
        } else {
            0.0
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Smallest support point, if any.
    pub fn support_min(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset)
        }
    }

    /// Largest support point, if any.
    pub fn support_max(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset + self.values.len() as i64 - 1)
        }
    }

    /// Number of stored lattice points (support hull width).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Iterates over `(k, x(k))` for the stored window.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let off = self.offset;
        self.values.iter().enumerate().map(move |(i, &v)| (off + i as i64, v))
    }

    /// Pointwise absolute value |x|.
    pub fn abs(&self) -> Self {
        FiniteSequence {
            offset: self.offset,
            values: self.values.iter().map(|v| v.abs()).collect(),
        }
    }

    /// Scalar multiple c·x.
    pub fn scaled(&self, c: f64) -> Result<Self, SequenceError> {
        Self::new(self.offset, self.values.iter().map(|v| c * v).collect())
    }

    /// Σ_k |x(k)|.
    pub fn l1_mass(&self) -> f64 {
        crate::numeric::pairwise_sum_by(&self.values, |v| v.abs())
    }
}
