//! Muckenhoupt-style weight diagnostics on ℤ: per-interval A_1, A_p and
//! A(p,q) ratios, their suprema over an explicit finite family of
//! intervals (with the attaining interval as a witness), doubling and
//! reverse-doubling mass ratios under dilation, an ε–δ probe of the A_∞
//! property on sampled subsets, and constant-vs-cap growth profiles for
//! classifying weights as stabilizing or growing.
//!
//! The classical constants are suprema over *all* bounded intervals; this
//! module never claims membership in a weight class. It evaluates the
//! ratios over a caller-supplied [`IntervalFamily`] and leaves the
//! limit question to growth trends across increasing caps.

use crate::interval::{dilate, IntervalRun, SymmetricInterval};
use crate::numeric::pairwise_sum;
use crate::weight::Weight;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

/// Which intervals a family enumerates inside its window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnumerationRule {
    /// Every run of consecutive integers.
    AllRuns,
    /// Only symmetric intervals S_{m,N}.
    SymmetricOnly,
}

/// A finite family of intervals: all runs (or all symmetric intervals)
/// inside the window [−L, L] with cardinality at most `max_cardinality`.
/// Never empty — every window contains its singletons.
#[derive(Debug, Clone, Copy)]
pub struct IntervalFamily {
    pub half_width: i64,
    pub max_cardinality: i64,
    pub rule: EnumerationRule,
}

impl IntervalFamily {
    pub fn new(half_width: i64, max_cardinality: i64, rule: EnumerationRule) -> Self {
        assert!(half_width >= 0, "window half-width must be >= 0, got {half_width}");
        assert!(max_cardinality >= 1, "cardinality cap must be >= 1, got {max_cardinality}");
        IntervalFamily { half_width, max_cardinality, rule }
    }

    pub fn window(&self) -> IntervalRun {
        IntervalRun::new(-self.half_width, self.half_width)
    }

    fn for_each_at(&self, anchor: i64, mut f: impl FnMut(IntervalRun)) {
        match self.rule {
            EnumerationRule::AllRuns => {
                let end_max = self.half_width.min(anchor + self.max_cardinality - 1);
                for end in anchor..=end_max {
                    f(IntervalRun::new(anchor, end));
                }
            }
            EnumerationRule::SymmetricOnly => {
                let n_max = (self.half_width - anchor.abs()).min((self.max_cardinality - 1) / 2);
                for n in 0..=n_max {
                    f(SymmetricInterval::new(anchor, n).as_run());
                }
            }
        }
    }

    pub fn intervals(&self) -> Vec<IntervalRun> {
        let mut out = Vec::new();
        for anchor in -self.half_width..=self.half_width {
            self.for_each_at(anchor, |j| out.push(j));
        }
        out
    }
}

fn interval_values(w: &Weight, j: IntervalRun) -> Vec<f64> {
    j.iter().map(|k| w.eval(k)).collect()
}

/// (1/|J|) · (Σ_J w) / (min_J w).
pub fn a1_ratio(w: &Weight, j: IntervalRun) -> f64 {
    let vals = interval_values(w, j);
    let min = vals.iter().copied().fold(f64::INFINITY, f64::min);
    pairwise_sum(&vals) / (vals.len() as f64 * min)
}

/// (avg_J w) · (avg_J w^{−1/(p−1)})^{p−1}, the A_p ratio of a single
/// interval.
pub fn ap_ratio(w: &Weight, j: IntervalRun, p: f64) -> f64 {
    assert!(p > 1.0, "the A_p ratio requires p > 1, got {p}");
    let card = j.cardinality() as f64;
    let vals = interval_values(w, j);
    let duals: Vec<f64> = vals.iter().map(|v| v.powf(-1.0 / (p - 1.0))).collect();
    (pairwise_sum(&vals) / card) * (pairwise_sum(&duals) / card).powf(p - 1.0)
}

/// (avg_J w^q)^{1/q} · (avg_J w^{−p'})^{1/p'} with p' = p/(p−1), the
/// A(p,q) ratio of a single interval.
pub fn apq_ratio(w: &Weight, j: IntervalRun, p: f64, q: f64) -> f64 {
    assert!(p > 1.0 && q > 1.0, "the A(p,q) ratio requires p, q > 1, got p={p} q={q}");
    let pp = p / (p - 1.0);
    let card = j.cardinality() as f64;
    let highs: Vec<f64> = j.iter().map(|k| w.eval(k).powf(q)).collect();
    let lows: Vec<f64> = j.iter().map(|k| w.eval(k).powf(-pp)).collect();
    (pairwise_sum(&highs) / card).powf(1.0 / q) * (pairwise_sum(&lows) / card).powf(1.0 / pp)
}

/// A truncated constant together with the interval attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstantReport {
    pub value: f64,
    pub witness: IntervalRun,
}

/// Prefix sums over a window so any sub-run's mass is two lookups.
struct Prefix {
    lo: i64,
    sums: Vec<f64>,
}

impl Prefix {
    fn build(window: IntervalRun, f: impl Fn(i64) -> f64) -> Self {
        let mut sums = Vec::with_capacity(window.cardinality() as usize + 1);
        sums.push(0.0);
        let mut acc = 0.0;
        for k in window.iter() {
            acc += f(k);
            sums.push(acc);
        }
        Prefix { lo: window.start, sums }
    }

    fn sum(&self, j: IntervalRun) -> f64 {
        self.sums[(j.end + 1 - self.lo) as usize] - self.sums[(j.start - self.lo) as usize]
    }
}

/// Sparse table for O(1) range minima.
struct MinTable {
    lo: i64,
    levels: Vec<Vec<f64>>,
}

impl MinTable {
    fn build(window: IntervalRun, f: impl Fn(i64) -> f64) -> Self {
        let base: Vec<f64> = window.iter().map(f).collect();
        let n = base.len();
        let mut levels = vec![base];
        let mut width = 1usize;
        while width * 2 <= n {
            let prev = levels.last().unwrap();
            let mut next = Vec::with_capacity(n - width * 2 + 1);
            for i in 0..=(n - width * 2) {
                next.push(prev[i].min(prev[i + width]));
            }
            levels.push(next);
            width *= 2;
        }
        MinTable { lo: window.start, levels }
    }

    fn min(&self, j: IntervalRun) -> f64 {
        let a = (j.start - self.lo) as usize;
        let len = j.cardinality() as usize;
        let k = (usize::BITS - 1 - len.leading_zeros()) as usize;
        let w = 1usize << k;
        self.levels[k][a].min(self.levels[k][a + len - w])
    }
}

fn merge_best(
    a: Option<(f64, IntervalRun)>,
    b: Option<(f64, IntervalRun)>,
) -> Option<(f64, IntervalRun)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some((va, ja)), Some((vb, jb))) => {
            if vb > va || (vb == va && (jb.start, jb.end) < (ja.start, ja.end)) {
                Some((vb, jb))
            } else {
                Some((va, ja))
            }
        }
    }
}

/// Supremum of a per-interval ratio over the family. Ties are broken
/// toward the lexicographically smallest (start, end), so the witness is
/// deterministic regardless of thread scheduling.
fn sup_over_family(
    fam: &IntervalFamily,
    ratio: impl Fn(IntervalRun) -> f64 + Sync,
) -> ConstantReport {
    let best = (-fam.half_width..=fam.half_width)
        .into_par_iter()
        .map(|anchor| {
            let mut local: Option<(f64, IntervalRun)> = None;
            fam.for_each_at(anchor, |j| {
                let v = ratio(j);
                let replace = match &local {
                    None => true,
                    Some((bv, bj)) => {
                        v > *bv || (v == *bv && (j.start, j.end) < (bj.start, bj.end))
                    }
                };
                if replace {
                    local = Some((v, j));
                }
            });
            local
        })
        .reduce(|| None, merge_best);
    let (value, witness) = best.expect("an interval family is never empty");
    ConstantReport { value, witness }
}

/// Supremum of the A_p ratio (the A_1 ratio when p = 1) over the family.
pub fn ap_constant(w: &Weight, fam: &IntervalFamily, p: f64) -> ConstantReport {
    assert!(p >= 1.0, "the A_p constant requires p >= 1, got {p}");
    let window = fam.window();
    let wsum = Prefix::build(window, |k| w.eval(k));
    if p == 1.0 {
        let mins = MinTable::build(window, |k| w.eval(k));
        sup_over_family(fam, |j| wsum.sum(j) / (j.cardinality() as f64 * mins.min(j)))
    } else {
        let dual = Prefix::build(window, |k| w.eval(k).powf(-1.0 / (p - 1.0)));
        sup_over_family(fam, |j| {
            let card = j.cardinality() as f64;
            (wsum.sum(j) / card) * (dual.sum(j) / card).powf(p - 1.0)
        })
    }
}

/// Supremum of the A(p,q) ratio over the family.
pub fn apq_constant(w: &Weight, fam: &IntervalFamily, p: f64, q: f64) -> ConstantReport {
    assert!(p > 1.0 && q > 1.0, "the A(p,q) constant requires p, q > 1, got p={p} q={q}");
    let pp = p / (p - 1.0);
    let window = fam.window();
    let highs = Prefix::build(window, |k| w.eval(k).powf(q));
    let lows = Prefix::build(window, |k| w.eval(k).powf(-pp));
    sup_over_family(fam, |j| {
        let card = j.cardinality() as f64;
        (highs.sum(j) / card).powf(1.0 / q) * (lows.sum(j) / card).powf(1.0 / pp)
    })
}

/// Mass ratios w(λS)/w(S) per interval, λ-dilation with the singleton
/// rule.
pub fn doubling_ratios(
    w: &Weight,
    fam: &[SymmetricInterval],
    lambda: i64,
) -> Vec<(SymmetricInterval, f64)> {
    fam.iter()
        .map(|&s| {
            let small = w.mass(s.as_run());
            let big = w.mass(dilate(s, lambda));
            (s, big / small)
        })
        .collect()
}

/// min over the family of w(2S)/w(S).
pub fn reverse_doubling_constant(w: &Weight, fam: &[SymmetricInterval]) -> f64 {
    assert!(!fam.is_empty(), "reverse doubling needs a nonempty family");
    doubling_ratios(w, fam, 2)
        .into_iter()
        .map(|(_, r)| r)
        .fold(f64::INFINITY, f64::min)
}

/// How subsets are drawn for the A_∞ ε–δ probe: every proper subset when
/// |J| ≤ `exhaustive_limit`, otherwise all proper sub-runs plus
/// `draws_per_density` seeded random subsets at each requested density.
#[derive(Debug, Clone)]
pub struct SubsetSampler {
    pub seed: u64,
    pub densities: Vec<f64>,
    pub draws_per_density: usize,
    pub exhaustive_limit: i64,
}

impl Default for SubsetSampler {
    fn default() -> Self {
        SubsetSampler {
            seed: crate::DEFAULT_SEED,
            densities: vec![0.125, 0.25, 0.5],
            draws_per_density: 8,
            exhaustive_limit: 16,
        }
    }
}

/// The largest-mass-ratio subset seen by the A_∞ probe.
#[derive(Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SubsetWitness {
    pub interval: IntervalRun,
    pub subset_cardinality: i64,
    pub density: f64,
    pub mass_ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AInfinityReport {
    pub eps: f64,
    /// Largest sampled density δ̂ such that every sampled subset with
    /// |S| ≤ δ̂|J| had ω(S) ≤ ε·ω(J); 0 when no density qualifies.
    pub delta_hat: f64,
    pub samples: u64,
    pub violations: u64,
    /// Sampling requests that could not produce a nonempty subset
    /// (density · |J| rounded down to zero).
    pub exhausted: u64,
    pub min_violating_density: Option<f64>,
    pub worst: Option<SubsetWitness>,
}

/// Probes the A_∞ ε–δ characterization: for each interval J in the family
/// and each sampled proper subset S ⊂ J, records the cardinality density
/// |S|/|J| and the mass ratio ω(S)/ω(J), then reports the largest density
/// below which every sampled subset kept mass ≤ ε·ω(J).
pub fn a_infinity_eps_delta(
    w: &Weight,
    fam: &IntervalFamily,
    eps: f64,
    sampler: &SubsetSampler,
) -> AInfinityReport {
    assert!(0.0 < eps && eps < 1.0, "eps must lie in (0,1), got {eps}");
    let mut observed: Vec<(f64, bool)> = Vec::new();
    let mut samples = 0u64;
    let mut violations = 0u64;
    let mut exhausted = 0u64;
    let mut worst: Option<SubsetWitness> = None;

    for (jidx, j) in fam.intervals().into_iter().enumerate() {
        let n = j.cardinality() as usize;
        if n == 1 {
            continue; // a singleton has no proper nonempty subset
        }
        let pts = interval_values(w, j);
        let total: f64 = pts.iter().sum();
        let mut record = |card: usize, mass: f64| {
            let density = card as f64 / n as f64;
            let ratio = mass / total;
            let ok = ratio <= eps;
            samples += 1;
            if !ok {
                violations += 1;
            }
            if worst.is_none_or(|b| ratio > b.mass_ratio) {
                worst = Some(SubsetWitness {
                    interval: j,
                    subset_cardinality: card as i64,
                    density,
                    mass_ratio: ratio,
                });
            }
            observed.push((density, ok));
        };

        if n as i64 <= sampler.exhaustive_limit {
            let full: u32 = (1u32 << n) - 1;
            for mask in 1..full {
                let card = mask.count_ones() as usize;
                let mut mass = 0.0;
                let mut bits = mask;
                while bits != 0 {
                    mass += pts[bits.trailing_zeros() as usize];
                    bits &= bits - 1;
                }
                record(card, mass);
            }
        } else {
            let mut prefix = Vec::with_capacity(n + 1);
            prefix.push(0.0);
            let mut acc = 0.0;
            for &v in &pts {
                acc += v;
                prefix.push(acc);
            }
            for a in 0..n {
                for b in a..n {
                    if a == 0 && b == n - 1 {
                        continue;
                    }
                    record(b - a + 1, prefix[b + 1] - prefix[a]);
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(sampler.seed);
            rng.set_stream(jidx as u64);
            let mut idx: Vec<usize> = (0..n).collect();
            for &density in &sampler.densities {
                let m = (density * n as f64).floor() as usize;
                if m == 0 {
                    exhausted += 1;
                    continue;
                }
                for _ in 0..sampler.draws_per_density {
                    for i in 0..m {
                        let pick = i + (rng.next_u64() as usize) % (n - i);
                        idx.swap(i, pick);
                    }
                    let mass: f64 = idx[..m].iter().map(|&i| pts[i]).sum();
                    record(m, mass);
                }
            }
        }
    }

    let min_bad = observed
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(d, _)| *d)
        .fold(f64::INFINITY, f64::min);
    let delta_hat = observed
        .iter()
        .map(|(d, _)| *d)
        .filter(|d| *d < min_bad)
        .fold(0.0, f64::max);

    AInfinityReport {
        eps,
        delta_hat,
        samples,
        violations,
        exhausted,
        min_violating_density: violations.gt(&0).then_some(min_bad),
        worst,
    }
}

/// Which truncated constant a growth profile tracks.
#[derive(Debug, Clone, Copy)]
pub enum ConstantKind {
    Ap { p: f64 },
    Apq { p: f64, q: f64 },
}

/// Evaluates the truncated constant over the family with window [−L, L]
/// and cardinality cap L for each cap in `caps`, producing the
/// (cap, constant) profile that growth classification consumes.
pub fn constant_growth_profile(
    w: &Weight,
    kind: ConstantKind,
    caps: &[i64],
    rule: EnumerationRule,
) -> Vec<(u64, f64)> {
    assert!(
        caps.windows(2).all(|c| c[0] < c[1]) && caps.first().is_none_or(|&c| c >= 1),
        "caps must be strictly increasing and >= 1"
    );
    caps.iter()
        .map(|&l| {
            let fam = IntervalFamily::new(l, l, rule);
            let value = match kind {
                ConstantKind::Ap { p } => ap_constant(w, &fam, p).value,
                ConstantKind::Apq { p, q } => apq_constant(w, &fam, p, q).value,
            };
            (l as u64, value)
        })
        .collect()
}
