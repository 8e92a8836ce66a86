//! Harmonic analysis on the integer lattice ℤ.
//!
//! The crate provides finitely supported real sequences, symmetric intervals
//! and their dilations, the discrete fractional maximal operator and Riesz
//! potential, Muckenhoupt-style weight diagnostics, (weighted) Morrey norms,
//! a Whitney-type decomposition of open subsets of ℤ, and an empirical
//! harness that estimates the operator-norm constants behind the classical
//! boundedness inequalities.
//!
//! Everything is exact in the following sense: suprema over infinitely many
//! windows are either reduced to finite scans by saturation arguments (the
//! reduction is part of each operation's contract) or reported as truncated
//! estimates together with the truncation cap that produced them.

pub const DEFAULT_SEED: u64 = 1729;

pub mod exponents;
pub mod interval;
pub mod io;
pub mod maximal;
pub mod muckenhoupt;
pub mod norms;
pub mod numeric;
pub mod riesz;
pub mod sequence;
pub mod trend;
pub mod verify;
pub mod weight;
pub mod whitney;

pub use exponents::{ExponentProfile, ProfileError, ProfileKind};
pub use muckenhoupt::{
    a1_ratio, a_infinity_eps_delta, ap_constant, ap_ratio, apq_constant, apq_ratio,
    constant_growth_profile, doubling_ratios, reverse_doubling_constant, AInfinityReport,
    ConstantKind, ConstantReport, EnumerationRule, IntervalFamily, SubsetSampler,
};
pub use interval::{dilate, left_dilate, EvalWindow, IntervalRun, SymmetricInterval};
pub use maximal::fractional_maximal;
pub use norms::{layer_cake, lp_norm, morrey_norm, weak_lp_norm, weighted_morrey_norm, NormValue};
pub use riesz::{
    riesz_difference_at, riesz_fast, riesz_naive, riesz_symmetric_at, uniform_bound, CapacityError,
};
pub use sequence::{FiniteSequence, SequenceError};
pub use trend::Verdict;
pub use verify::{
    build_report, membership_phase_scan, run_experiment, standard_cases, CaseOutcome,
    EmpiricalConstantReport, ExperimentReport, ExperimentRequest, ExperimentTag, FamilyKind,
    PhaseScanReport, TestCase, VerifyError,
};
pub use weight::Weight;
pub use whitney::{decompose, ray_gap_check, verify_decomposition, Decomposition, IntegerSet};
