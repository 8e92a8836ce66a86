//! Shared seeded inputs for the criterion benchmarks, so every run times
//! the same data.

use zharm::verify::{generate, FamilyKind};
use zharm::{FiniteSequence, DEFAULT_SEED};

/// Dense signed noise of length `n` starting at 0.
pub fn signed_input(n: u64) -> FiniteSequence {
    generate(FamilyKind::RandomSigned { density: 1.0 }, DEFAULT_SEED, n)
}

/// Sparse spikes at the perfect squares below `n`.
pub fn spike_input(n: u64) -> FiniteSequence {
    generate(FamilyKind::Deltas, DEFAULT_SEED, n)
}
