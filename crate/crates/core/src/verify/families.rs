//! Deterministic input families for the empirical-constant experiments.
//!
//! Every generator is a pure function of (kind, seed, size), so a report
//! built from the same request is reproducible byte for byte. The five
//! standard kinds probe different failure modes: sparse spikes, fat
//! plateaus, signed noise, slow polynomial decay, and a head-plus-lacunary
//! shape that pushes mass to many scales at once.

use crate::sequence::FiniteSequence;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum FamilyKind {
    /// Unit spikes at the perfect squares below the size.
    Deltas,
    /// Ones on the left half and on the last eighth.
    Blocks,
    /// Independent uniform values in [−1, 1], kept with the given density.
    RandomSigned { density: f64 },
    /// x(k) = (k+1)^{−gamma} on [0, size).
    PowerDecay { gamma: f64 },
    /// A block of ones on [0, 8) plus spikes 2^{−j/2} at the powers 2^j.
    Extremal,
}

impl FamilyKind {
    /// The default battery used by the tagged experiments.
    pub fn standard() -> [FamilyKind; 5] {
        [
            FamilyKind::Deltas,
            FamilyKind::Blocks,
            FamilyKind::RandomSigned { density: 0.25 },
            FamilyKind::PowerDecay { gamma: 2.0 },
            FamilyKind::Extremal,
        ]
    }

    pub fn slug(&self) -> String {
        match self {
            FamilyKind::Deltas => "deltas".into(),
            FamilyKind::Blocks => "blocks".into(),
            FamilyKind::RandomSigned { density } => format!("random{density:.2}"),
            FamilyKind::PowerDecay { gamma } => format!("decay{gamma:.1}"),
            FamilyKind::Extremal => "extremal".into(),
        }
    }
}

/// One labelled input: `cap` is the size the ladder indexes reports by.
#[derive(Debug, Clone)]
pub struct TestCase {
    pub id: String,
    pub cap: u64,
    pub x: FiniteSequence,
}

/// 53-bit uniform draw in [0, 1).
fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Builds the input of the given kind and size. Random kinds run the
/// stream keyed by the size, so inserting or removing ladder rungs does
/// not change the others.
pub fn generate(kind: FamilyKind, seed: u64, cap: u64) -> FiniteSequence {
    let n = cap as usize;
    match kind {
        FamilyKind::Deltas => {
            let mut pairs = Vec::new();
            let mut j = 0i64;
            while j * j < cap as i64 {
                pairs.push((j * j, 1.0));
                j += 1;
            }
            FiniteSequence::from_pairs(&pairs).expect("finite spike values")
        }
        FamilyKind::Blocks => {
            let mut vals = vec![0.0; n];
            let half = n.div_ceil(2);
            let eighth = n.div_ceil(8);
            for v in vals.iter_mut().take(half) {
                *v = 1.0;
            }
            for v in vals.iter_mut().skip(n - eighth) {
                *v = 1.0;
            }
            FiniteSequence::new(0, vals).expect("finite block values")
        }
        FamilyKind::RandomSigned { density } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(cap);
            let mut vals = vec![0.0; n];
            for v in vals.iter_mut() {
                let keep = unit(&mut rng) < density;
                let draw = 2.0 * unit(&mut rng) - 1.0;
                if keep {
                    *v = draw;
                }
            }
            FiniteSequence::new(0, vals).expect("finite random values")
        }
        FamilyKind::PowerDecay { gamma } => {
            let vals: Vec<f64> = (0..n).map(|k| ((k + 1) as f64).powf(-gamma)).collect();
            FiniteSequence::new(0, vals).expect("finite decay values")
        }
        FamilyKind::Extremal => {
            let mut vals = vec![0.0; n];
            for v in vals.iter_mut().take(8.min(n)) {
                *v = 1.0;
            }
            let mut j = 3u32;
            while (1u64 << j) < cap {
                vals[1usize << j] = (2.0f64).powf(-(j as f64) / 2.0);
                j += 1;
            }
            FiniteSequence::new(0, vals).expect("finite extremal values")
        }
    }
}

/// The full battery: every standard kind at every cap, in a fixed order.
pub fn standard_cases(seed: u64, caps: &[u64]) -> Vec<TestCase> {
    let mut out = Vec::with_capacity(5 * caps.len());
    for kind in FamilyKind::standard() {
        for &cap in caps {
            out.push(TestCase {
                id: format!("{}-n{}", kind.slug(), cap),
                cap,
                x: generate(kind, seed, cap),
            });
        }
    }
    out
}
