//! Sweeps of checkers over generated families of semigroups and subsets.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{cyclic, make_standard, small_groups};
use crate::semigroup::FiniteSemigroup;
use crate::subset::CarrierSubset;
use crate::verify::{
    bound, evaluate_inequality, run_descent, unmet_hypothesis, CheckReport, DescentOutcome, TheoremId,
};

use super::config::{FamilySource, SubsetPolicy, SweepConfig};
use super::enumerate::{enumerate_semigroups, Filter};

pub const EVIDENCE_NOTE: &str =
    "Finite search results are supporting evidence only, not a proof; finite cancellative semigroups are groups, so non-group cancellative cases are out of reach.";

const CHUNK: u64 = 1 << 14;
const MAX_ANOMALIES: usize = 100;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TheoremCounts {
    pub theorem_id: Option<TheoremId>,
    pub arity: usize,
    pub checked: u64,
    pub holds: u64,
    pub tight: u64,
    pub violated: u64,
    pub skipped: u64,
}

impl TheoremCounts {
    fn merge(&mut self, o: &TheoremCounts) {
        self.checked += o.checked;
        self.holds += o.holds;
        self.tight += o.tight;
        self.violated += o.violated;
        self.skipped += o.skipped;
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DescentCounts {
    pub runs: u64,
    pub inequality_holds: u64,
    pub claim_contradiction: u64,
    pub step_budget_exceeded: u64,
    pub not_normalizable: u64,
    pub transformations: u64,
    pub runs_with_anomalies: u64,
}

impl DescentCounts {
    fn merge(&mut self, o: &DescentCounts) {
        self.runs += o.runs;
        self.inequality_holds += o.inequality_holds;
        self.claim_contradiction += o.claim_contradiction;
        self.step_budget_exceeded += o.step_budget_exceeded;
        self.not_normalizable += o.not_normalizable;
        self.transformations += o.transformations;
        self.runs_with_anomalies += o.runs_with_anomalies;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub semigroups: usize,
    pub semigroups_outside_policy: usize,
    pub instances: u64,
    pub per_theorem: Vec<TheoremCounts>,
    pub violation_count: u64,
    pub violations: Vec<CheckReport>,
    pub descent: Option<DescentCounts>,
    pub anomalies: Vec<String>,
    pub seed: Option<u64>,
    pub note: &'static str,
}

impl SweepSummary {
    /// Totals for `t` over all arities.
    pub fn counts(&self, t: TheoremId) -> TheoremCounts {
        let mut acc = TheoremCounts {
            theorem_id: Some(t),
            ..Default::default()
        };
        for c in self.per_theorem.iter().filter(|c| c.theorem_id == Some(t)) {
            acc.merge(c);
        }
        acc
    }

    pub fn counts_at(&self, t: TheoremId, arity: usize) -> Option<&TheoremCounts> {
        self.per_theorem
            .iter()
            .find(|c| c.theorem_id == Some(t) && c.arity == arity)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

/// The semigroups a family source stands for, in a fixed order.
pub fn generate_family(source: &FamilySource) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    match source {
        FamilySource::EnumerateAll { max_order } => {
            for n in 1..=*max_order {
                out.extend(enumerate_semigroups(n, Filter::Any)?);
            }
        }
        FamilySource::EnumerateCancellative { max_order } => {
            for n in 1..=*max_order {
                out.extend(enumerate_semigroups(n, Filter::Cancellative)?);
            }
        }
        FamilySource::CyclicRange { lo, hi } => {
            for m in *lo..=*hi {
                out.push(cyclic(m)?.with_name(format!("cyclic({m})")));
            }
        }
        FamilySource::ProductList(specs) => {
            for spec in specs {
                out.push(make_standard(spec)?);
            }
        }
        FamilySource::GroupsCatalogue { max_order } => out = small_groups(*max_order)?,
    }
    Ok(out)
}

fn theorems_at(config: &SweepConfig, arity: usize) -> Vec<usize> {
    config
        .theorem_ids
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.is_binary() || arity == 2)
        .map(|(k, _)| k)
        .collect()
}

fn exhaustive_count(order: usize, arity: usize) -> u128 {
    let per = (1u128 << order.min(127)) - 1;
    per.checked_pow(arity as u32).unwrap_or(u128::MAX)
}

#[derive(Debug, Clone)]
struct Item {
    semigroup: usize,
    arity: usize,
    arity_index: usize,
    start: u64,
    len: u64,
    stream: u64,
}

#[derive(Default)]
struct ItemResult {
    instances: u64,
    counts: Vec<TheoremCounts>,
    violation_count: u64,
    violations: Vec<CheckReport>,
    descent: DescentCounts,
    anomalies: Vec<String>,
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> CarrierSubset {
    let k = rng.gen_range(1..=n);
    CarrierSubset::from_indices(n, sample(rng, n, k)).expect("indices in range")
}

fn run_item(config: &SweepConfig, family: &[FiniteSemigroup], item: &Item) -> Result<ItemResult> {
    let s = &family[item.semigroup];
    let n = s.order();
    let theorems = theorems_at(config, item.arity);
    let mut res = ItemResult {
        counts: vec![TheoremCounts::default(); config.theorem_ids.len()],
        ..Default::default()
    };
    let mut rng = match config.subset_policy {
        SubsetPolicy::Random { seed, .. } => {
            let mut r = ChaCha8Rng::seed_from_u64(seed);
            r.set_stream(item.stream);
            Some(r)
        }
        SubsetPolicy::Exhaustive { .. } => None,
    };
    let radix = (1u64 << n) - 1;
    let mut sets = Vec::with_capacity(item.arity);
    for idx in item.start..item.start + item.len {
        sets.clear();
        match rng.as_mut() {
            Some(r) => {
                for _ in 0..item.arity {
                    sets.push(random_subset(r, n));
                }
            }
            None => {
                let mut code = idx;
                for _ in 0..item.arity {
                    sets.push(CarrierSubset::from_mask(n, code % radix + 1));
                    code /= radix;
                }
            }
        }
        res.instances += 1;
        for &k in &theorems {
            let t = config.theorem_ids[k];
            let c = &mut res.counts[k];
            if unmet_hypothesis(s, t, &sets)?.is_some() {
                c.skipped += 1;
                continue;
            }
            let b = bound(s, t, &sets)?;
            c.checked += 1;
            if b.holds() {
                c.holds += 1;
                if b.lhs as i64 == b.rhs() {
                    c.tight += 1;
                }
            } else {
                c.violated += 1;
                res.violation_count += 1;
                if res.violations.len() < config.max_reported {
                    res.violations.push(evaluate_inequality(s, t, &sets)?);
                }
            }
        }
        if config.run_descent && item.arity == 2 && s.is_monoid() {
            let trace = run_descent(s, &sets[0], &sets[1], 4 * n + 4)?;
            let d = &mut res.descent;
            d.runs += 1;
            match trace.outcome {
                DescentOutcome::InequalityHolds => d.inequality_holds += 1,
                DescentOutcome::ClaimContradiction => d.claim_contradiction += 1,
                DescentOutcome::StepBudgetExceeded => d.step_budget_exceeded += 1,
                DescentOutcome::NotNormalizable => d.not_normalizable += 1,
            }
            d.transformations += trace.transformations() as u64;
            if !trace.anomalies.is_empty() {
                d.runs_with_anomalies += 1;
                if res.anomalies.len() < MAX_ANOMALIES {
                    res.anomalies.push(format!(
                        "{} {:?} {:?}: {}",
                        s.label(),
                        sets[0],
                        sets[1],
                        trace.anomalies.join("; ")
                    ));
                }
            }
        }
    }
    Ok(res)
}

/// Runs every configured checker over every generated instance.
///
/// The summary depends only on the configuration: work is split into fixed
/// chunks, each with its own random stream, and merged in generation order.
pub fn sweep(config: &SweepConfig) -> Result<SweepSummary> {
    config.validate()?;
    let family = generate_family(&config.family)?;
    sweep_family(config, &family)
}

/// [`sweep`] over an explicit list of semigroups instead of `config.family`.
pub fn sweep_family(config: &SweepConfig, family: &[FiniteSemigroup]) -> Result<SweepSummary> {
    config.validate()?;
    let mut items = Vec::new();
    let mut needed: u128 = 0;
    let mut outside = 0;
    for (si, s) in family.iter().enumerate() {
        let n = s.order();
        let in_policy = match config.subset_policy {
            SubsetPolicy::Exhaustive { max_order } => n <= max_order,
            SubsetPolicy::Random { .. } => n <= 64,
        };
        if !in_policy {
            outside += 1;
            continue;
        }
        for (ai, &arity) in config.arities.iter().enumerate() {
            let per_instance = theorems_at(config, arity).len() as u128 + u128::from(config.run_descent && arity == 2);
            if per_instance == 0 {
                continue;
            }
            let total = match config.subset_policy {
                SubsetPolicy::Exhaustive { .. } => exhaustive_count(n, arity),
                SubsetPolicy::Random { samples, .. } => samples as u128,
            };
            needed = needed.saturating_add(total.saturating_mul(per_instance));
            if needed > config.budget as u128 {
                return Err(Error::BudgetExceeded {
                    needed,
                    budget: config.budget,
                });
            }
            let total = total as u64;
            let mut start = 0;
            let mut chunk = 0u64;
            while start < total {
                let len = CHUNK.min(total - start);
                items.push(Item {
                    semigroup: si,
                    arity,
                    arity_index: ai,
                    start,
                    len,
                    stream: ((si as u64) << 40) | ((ai as u64) << 32) | chunk,
                });
                start += len;
                chunk += 1;
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let results: Vec<Result<ItemResult>> =
        pool.install(|| items.par_iter().map(|it| run_item(config, family, it)).collect());

    // one row per (arity, theorem) pair the theorem applies to
    let mut per_theorem: Vec<TheoremCounts> = Vec::new();
    let mut row_of = vec![vec![None; config.theorem_ids.len()]; config.arities.len()];
    for (ai, &arity) in config.arities.iter().enumerate() {
        for k in theorems_at(config, arity) {
            row_of[ai][k] = Some(per_theorem.len());
            per_theorem.push(TheoremCounts {
                theorem_id: Some(config.theorem_ids[k]),
                arity,
                ..Default::default()
            });
        }
    }
    let mut instances = 0;
    let mut violation_count = 0;
    let mut violations = Vec::new();
    let mut descent = DescentCounts::default();
    let mut anomalies = Vec::new();
    for (it, r) in items.iter().zip(results) {
        let r = r?;
        instances += r.instances;
        for (k, c) in r.counts.iter().enumerate() {
            if let Some(row) = row_of[it.arity_index][k] {
                per_theorem[row].merge(c);
            }
        }
        violation_count += r.violation_count;
        for v in r.violations {
            if violations.len() < config.max_reported {
                violations.push(v);
            }
        }
        descent.merge(&r.descent);
        for a in r.anomalies {
            if anomalies.len() < MAX_ANOMALIES {
                anomalies.push(a);
            }
        }
    }
    Ok(SweepSummary {
        config: config.clone(),
        semigroups: family.len(),
        semigroups_outside_policy: outside,
        instances,
        per_theorem,
        violation_count,
        violations,
        descent: config.run_descent.then_some(descent),
        anomalies,
        seed: match config.subset_policy {
            SubsetPolicy::Random { seed, .. } => Some(seed),
            SubsetPolicy::Exhaustive { .. } => None,
        },
        note: EVIDENCE_NOTE,
    })
}
