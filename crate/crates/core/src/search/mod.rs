//! Enumeration of small semigroups and sweeps of the checkers over families.

mod config;
mod enumerate;
mod iso;
mod sweep;

pub use config::{FamilySource, SubsetPolicy, SweepConfig, DEFAULT_BUDGET};
pub use enumerate::{
    enumerate_semigroups, enumerate_semigroups_with, raw_tables, Enumeration, Filter, TableSearch,
    MAX_CANCELLATIVE_ORDER, MAX_ENUM_ORDER,
};
pub use iso::{equivalent, is_anti_isomorphic, is_isomorphic, ClassIndex, Equivalence};
pub use sweep::{generate_family, sweep, sweep_family, DescentCounts, SweepSummary, TheoremCounts, EVIDENCE_NOTE};
