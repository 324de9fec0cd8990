use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::verify::TheoremId;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Where the semigroups of a sweep come from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySource {
    /// Every semigroup of order `1..=max_order`, one per class.
    EnumerateAll { max_order: usize },
    /// Every group of order `1..=max_order`, found by Latin-square search.
    EnumerateCancellative { max_order: usize },
    /// `Z/mZ` for `lo <= m <= hi`.
    CyclicRange { lo: usize, hi: usize },
    /// Explicit family expressions such as `product(cyclic(2),dihedral(3))`.
    ProductList(Vec<FamilySpec>),
    /// The built-in list of groups up to the given order.
    GroupsCatalogue { max_order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetPolicy {
    /// All tuples of non-empty subsets, for semigroups of order at most
    /// `max_order`; larger semigroups are left out and counted.
    Exhaustive { max_order: usize },
    /// `samples` random tuples of non-empty subsets per semigroup and arity.
    /// Each subset draws its size uniformly, then a uniform subset of that size.
    Random { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub family: FamilySource,
    pub subset_policy: SubsetPolicy,
    pub theorem_ids: Vec<TheoremId>,
    /// Numbers of summands; binary theorems only run at arity 2.
    #[serde(default = "default_arities")]
    pub arities: Vec<usize>,
    /// Worker threads; 0 lets the pool decide.
    #[serde(default)]
    pub parallelism: usize,
    #[serde(default = "default_budget")]
    pub budget: u64,
    /// Also run the descent procedure on every two-set instance of a monoid.
    #[serde(default)]
    pub run_descent: bool,
    /// Violations kept in full in the summary; the count is always exact.
    #[serde(default = "default_keep")]
    pub max_reported: usize,
}

fn default_arities() -> Vec<usize> {
    vec![2]
}

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

fn default_keep() -> usize {
    100
}

impl SweepConfig {
    pub fn new(family: FamilySource, subset_policy: SubsetPolicy, theorem_ids: Vec<TheoremId>) -> Self {
        SweepConfig {
            family,
            subset_policy,
            theorem_ids,
            arities: default_arities(),
            parallelism: 0,
            budget: DEFAULT_BUDGET,
            run_descent: false,
            max_reported: default_keep(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: SweepConfig = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("reading {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if self.theorem_ids.is_empty() {
            return Err(Error::Config("theorem_ids is empty".into()));
        }
        if self.arities.is_empty() || self.arities.contains(&0) {
            return Err(Error::Config(
                "arities must be a non-empty list of positive integers".into(),
            ));
        }
        if let FamilySource::CyclicRange { lo, hi } = self.family {
            if lo == 0 || lo > hi {
                return Err(Error::Config(format!("bad cyclic range {lo}..={hi}")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_documents() {
        let c = SweepConfig::from_json(
            r#"{"family": {"cyclic_range": {"lo": 2, "hi": 12}},
                "subset_policy": {"exhaustive": {"max_order": 8}},
                "theorem_ids": ["T4_main"]}"#,
        )
        .unwrap();
        assert_eq!(c.family, FamilySource::CyclicRange { lo: 2, hi: 12 });
        assert_eq!(c.arities, vec![2]);
        assert_eq!(c.budget, DEFAULT_BUDGET);

        let c = SweepConfig::from_json(
            r#"{"family": {"product_list": ["cyclic(3)", "product(cyclic(2),cyclic(2))"]},
                "subset_policy": {"random": {"samples": 10, "seed": 1}},
                "theorem_ids": ["Conjecture1"], "arities": [2, 3], "parallelism": 2}"#,
        )
        .unwrap();
        assert!(matches!(c.family, FamilySource::ProductList(ref v) if v.len() == 2));
        let back = SweepConfig::from_json(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn rejects_bad_documents() {
        // the seed is mandatory for random sampling
        assert!(SweepConfig::from_json(
            r#"{"family": {"cyclic_range": {"lo": 2, "hi": 3}},
                "subset_policy": {"random": {"samples": 10}}, "theorem_ids": ["T4_main"]}"#
        )
        .is_err());
        assert!(SweepConfig::from_json(
            r#"{"family": {"cyclic_range": {"lo": 5, "hi": 3}},
                "subset_policy": {"exhaustive": {"max_order": 3}}, "theorem_ids": ["T4_main"]}"#
        )
        .is_err());
        assert!(SweepConfig::from_json(
            r#"{"family": {"cyclic_range": {"lo": 2, "hi": 3}},
                "subset_policy": {"exhaustive": {"max_order": 3}}, "theorem_ids": ["T9"]}"#
        )
        .is_err());
    }
}
