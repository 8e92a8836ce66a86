//! Weights on the integer lattice: strictly positive sequences w(k) used to
//! weight norms and to form Muckenhoupt-style interval averages.
//!
//! Three evaluator kinds cover everything this crate needs: an explicit
//! table with a constant continuation, the power archetype
//! w(k) = max(|k|, 1)^β, and constants. All three are eventually an exact
//! power `coeff·|k|^expo`, which [`Weight::power_tail`] exposes; the tail
//! certification in the verification harness depends on that exactness.

use crate::interval::IntervalRun;
use crate::numeric::pairwise_sum;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WeightError {
    #[error("weight value at index {index} is {value}, must be positive and finite")]
    BadValue { index: i64, value: f64 },
    #[error("table continuation value {0} must be positive and finite")]
    BadOutside(f64),
    #[error("power exponent {0} must be finite")]
    BadExponent(f64),
    #[error("table weight must hold at least one value")]
    EmptyTable,
}

/// A strictly positive weight on ℤ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Weight {
    /// w(k) = max(|k|, 1)^β — the lattice analogue of |x|^β, regularized
    /// at the origin to stay positive.
    Power { beta: f64 },
    Constant { c: f64 },
    /// Explicit values on `offset..offset+values.len()`, equal to
    /// `outside` everywhere else so the weight is total on ℤ.
    Table { offset: i64, values: Vec<f64>, outside: f64 },
}

impl Weight {
    pub fn power(beta: f64) -> Result<Self, WeightError> {
        if !beta.is_finite() {
            return Err(WeightError::BadExponent(beta));
        }
        Ok(Weight::Power { beta })
    }

    pub fn constant(c: f64) -> Result<Self, WeightError> {
        if !(c.is_finite() && c > 0.0) {
            return Err(WeightError::BadValue { index: 0, value: c });
        }
        Ok(Weight::Constant { c })
    }

    pub fn table(offset: i64, values: Vec<f64>, outside: f64) -> Result<Self, WeightError> {
        let w = Weight::Table { offset, values, outside };
        w.validate()?;
        Ok(w)
    }

    /// Checks positivity/finiteness; needed after deserializing, which
    /// bypasses the constructors.
    pub fn validate(&self) -> Result<(), WeightError> {
        match self {
            Weight::Power { beta } => {
                if !beta.is_finite() {
                    return Err(WeightError::BadExponent(*beta));
                }
            }
            Weight::Constant { c } => {
                if !(c.is_finite() && *c > 0.0) {
                    return Err(WeightError::BadValue { index: 0, value: *c });
                }
            }
            Weight::Table { offset, values, outside } => {
                if values.is_empty() {
                    return Err(WeightError::EmptyTable);
                }
                if !(outside.is_finite() && *outside > 0.0) {
                    return Err(WeightError::BadOutside(*outside));
                }
                for (i, &v) in values.iter().enumerate() {
                    if !(v.is_finite() && v > 0.0) {
                        return Err(WeightError::BadValue { index: offset + i as i64, value: v });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn eval(&self, k: i64) -> f64 {
        match self {
            Weight::Power { beta } => {
                let base = (k.unsigned_abs().max(1)) as f64;
                base.powf(*beta)
            }
            Weight::Constant { c } => *c,
            Weight::Table { offset, values, outside } => {
                let idx = k - offset;
                if idx >= 0 && (idx as usize) < values.len() {
                    values[idx as usize]
                } else {
                    *outside
                }
            }
        }
    }

    /// Mass w(J) = Σ_{k∈J} w(k).
    pub fn mass(&self, run: IntervalRun) -> f64 {
        match self {
            Weight::Constant { c } => c * run.cardinality() as f64,
            _ => {
                let vals: Vec<f64> = run.iter().map(|k| self.eval(k)).collect();
                pairwise_sum(&vals)
            }
        }
    }

    /// The pointwise power w^e, again a valid weight.
    pub fn pow(&self, e: f64) -> Weight {
        match self {
            Weight::Power { beta } => Weight::Power { beta: beta * e },
            Weight::Constant { c } => Weight::Constant { c: c.powf(e) },
            Weight::Table { offset, values, outside } => Weight::Table {
                offset: *offset,
                values: values.iter().map(|v| v.powf(e)).collect(),
                outside: outside.powf(e),
            },
        }
    }

    /// Exact power-law form of the far field: w(k) = coeff·|k|^expo for
    /// every |k| ≥ from (with from ≥ 1). This is an identity, not a bound;
    /// each evaluator kind is eventually exactly of this form.
    pub fn power_tail(&self) -> PowerTail {
        match self {
            Weight::Power { beta } => PowerTail { coeff: 1.0, expo: *beta, from: 1 },
            Weight::Constant { c } => PowerTail { coeff: *c, expo: 0.0, from: 1 },
            Weight::Table { offset, values, outside } => {
                let last = offset + values.len() as i64 - 1;
                let from = offset.abs().max(last.abs()) + 1;
                PowerTail { coeff: *outside, expo: 0.0, from: from.max(1) }
            }
        }
    }
}

/// See [`Weight::power_tail`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTail {
    pub coeff: f64,
    pub expo: f64,
    pub from: i64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_weight_is_regularized_at_origin() {
        let w = Weight::power(2.0).unwrap();
        assert_eq!(w.eval(0), 1.0);
        assert_eq!(w.eval(-3), 9.0);
        assert_eq!(w.eval(3), 9.0);
    }

    #[test]
    fn table_continues_with_outside_value() {
        let w = Weight::table(-1, vec![2.0, 3.0, 4.0], 0.5).unwrap();
        assert_eq!(w.eval(-1), 2.0);
        assert_eq!(w.eval(1), 4.0);
        assert_eq!(w.eval(2), 0.5);
        assert_eq!(w.eval(-100), 0.5);
    }

    #[test]
    fn constructors_reject_nonpositive_values() {
        assert!(Weight::constant(0.0).is_err());
        assert!(Weight::constant(f64::NAN).is_err());
        assert!(Weight::table(0, vec![1.0, -2.0], 1.0).is_err());
        assert!(Weight::table(0, vec![1.0], 0.0).is_err());
        assert!(Weight::table(0, vec![], 1.0).is_err());
        assert!(Weight::power(f64::INFINITY).is_err());
    }

    #[test]
    fn mass_of_constant_is_cardinality_times_value() {
        let w = Weight::constant(7.0).unwrap();
        assert_eq!(w.mass(IntervalRun::new(-3, 3)), 49.0);
    }

    #[test]
    fn pow_composes_with_eval() {
        let w = Weight::power(0.5).unwrap().pow(4.0);
        assert_eq!(w.eval(3), 9.0);
        let t = Weight::table(0, vec![4.0], 9.0).unwrap().pow(-0.5);
        assert_eq!(t.eval(0), 0.5);
        assert!((t.eval(5) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn power_tail_is_exact_beyond_from() {
        let w = Weight::table(-4, vec![5.0; 9], 2.5).unwrap();
        let tail = w.power_tail();
        assert_eq!(tail.from, 5);
        for k in [5i64, -5, 6, 100] {
            assert_eq!(w.eval(k), tail.coeff * (k.abs() as f64).powf(tail.expo));
        }
        let p = Weight::power(-0.3).unwrap().power_tail();
        assert_eq!((p.coeff, p.expo, p.from), (1.0, -0.3, 1));
    }

    #[test]
    fn json_round_trip_matches_wire_format() {
        let w = Weight::power(0.25).unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"kind":"power","beta":0.25}"#);
        let t: Weight =
            serde_json::from_str(r#"{"kind":"table","offset":-1,"values":[1.0,2.0],"outside":3.0}"#)
                .unwrap();
        assert_eq!(t, Weight::table(-1, vec![1.0, 2.0], 3.0).unwrap());
        let c: Weight = serde_json::from_str(r#"{"kind":"constant","c":2.0}"#).unwrap();
        assert_eq!(c.eval(17), 2.0);
    }
}
