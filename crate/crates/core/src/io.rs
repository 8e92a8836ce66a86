//! Wire formats: sequences as JSON `{"offset": i, "values": [...]}` or
//! two-column `index,value` CSV (absent indices are zeros), weights as
//! tagged JSON objects, and integer sets as
//! `{"runs": [[a,b],...], "rightRay": i0|null, "leftRay": j0|null}`.
//!
//! Everything here is string ↔ value; file handling and exit codes live
//! with the callers. serde_json prints shortest round-trip decimals, which
//! keeps repeated runs byte-identical.

use crate::interval::IntervalRun;
use crate::sequence::FiniteSequence;
use crate::weight::Weight;
use crate::whitney::IntegerSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv line {line}: {reason}")]
    Csv { line: usize, reason: String },
    #[error(transparent)]
    Sequence(#[from] crate::sequence::SequenceError),
    #[error(transparent)]
    Set(#[from] crate::whitney::SetError),
    #[error(transparent)]
    Weight(#[from] crate::weight::WeightError),
}

#[derive(Serialize, Deserialize)]
struct SeqWire {
    offset: i64,
    values: Vec<f64>,
}

pub fn sequence_from_json(s: &str) -> Result<FiniteSequence, IoError> {
    let wire: SeqWire = serde_json::from_str(s)?;
    Ok(FiniteSequence::new(wire.offset, wire.values)?)
}

pub fn sequence_to_json(x: &FiniteSequence) -> String {
    let wire = SeqWire { offset: x.offset(), values: x.values().to_vec() };
    serde_json::to_string(&wire).expect("sequence serialization cannot fail")
}

/// Parses `index,value` rows; an optional `index,value` header line is
/// skipped, indices may arrive in any order with gaps (gaps are zeros),
/// and duplicate indices are rejected.
pub fn sequence_from_csv(s: &str) -> Result<FiniteSequence, IoError> {
    let mut pairs: Vec<(i64, f64)> = Vec::new();
    for (lineno, raw) in s.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if lineno == 0 && line.eq_ignore_ascii_case("index,value") {
            continue;
        }
        let (a, b) = line.split_once(',').ok_or_else(|| IoError::Csv {
            line: lineno + 1,
            reason: "expected two comma-separated columns".into(),
        })?;
        let k: i64 = a.trim().parse().map_err(|e| IoError::Csv {
            line: lineno + 1,
            reason: format!("bad index: {e}"),
        })?;
        let v: f64 = b.trim().parse().map_err(|e| IoError::Csv {
            line: lineno + 1,
            reason: format!("bad value: {e}"),
        })?;
        if pairs.iter().any(|&(seen, _)| seen == k) {
            return Err(IoError::Csv {
                line: lineno + 1,
                reason: format!("duplicate index {k}"),
            });
        }
        pairs.push((k, v));
    }
    Ok(FiniteSequence::from_pairs(&pairs)?)
}

/// Emits one `index,value` row per stored entry, header included.
pub fn sequence_to_csv(x: &FiniteSequence) -> String {
    let mut out = String::from("index,value\n");
    for (k, v) in x.iter() {
        let mut buf = ryu_format(v);
        buf.insert(0, ',');
        out.push_str(&k.to_string());
        out.push_str(&buf);
        out.push('\n');
    }
    out
}

/// Shortest round-trip decimal, matching what serde_json prints.
fn ryu_format(v: f64) -> String {
    serde_json::to_string(&v).expect("finite float serialization cannot fail")
}

pub fn weight_from_json(s: &str) -> Result<Weight, IoError> {
    let w: Weight = serde_json::from_str(s)?;
    w.validate()?;
    Ok(w)
}

pub fn weight_to_json(w: &Weight) -> String {
    serde_json::to_string(w).expect("weight serialization cannot fail")
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct SetWire {
    runs: Vec<(i64, i64)>,
    #[serde(default)]
    right_ray: Option<i64>,
    #[serde(default)]
    left_ray: Option<i64>,
}

pub fn set_from_json(s: &str) -> Result<IntegerSet, IoError> {
    let wire: SetWire = serde_json::from_str(s)?;
    let mut runs: Vec<(i64, i64)> = wire.runs;
    runs.sort_unstable();
    let runs = runs.into_iter().map(|(a, b)| IntervalRun::new(a, b)).collect();
    Ok(IntegerSet::new(runs, wire.left_ray, wire.right_ray)?)
}

pub fn set_to_json(e: &IntegerSet) -> String {
    let wire = SetWire {
        runs: e.runs().iter().map(|r| (r.start, r.end)).collect(),
        right_ray: e.right_ray(),
        left_ray: e.left_ray(),
    };
    serde_json::to_string(&wire).expect("set serialization cannot fail")
}
