use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::extnat::ExtendedNat;
use crate::semigroup::FiniteSemigroup;
use crate::subset::CarrierSubset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "CD_classic")]
    CdClassic,
    #[serde(rename = "Chowla_Pillai")]
    ChowlaPillai,
    #[serde(rename = "T3_commutative")]
    T3Commutative,
    #[serde(rename = "T4_main")]
    T4Main,
    #[serde(rename = "HK_corollary1")]
    HkCorollary1,
    #[serde(rename = "Kemperman_corollary2")]
    KempermanCorollary2,
    #[serde(rename = "Conjecture1")]
    Conjecture1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::CdClassic,
        TheoremId::ChowlaPillai,
        TheoremId::T3Commutative,
        TheoremId::T4Main,
        TheoremId::HkCorollary1,
        TheoremId::KempermanCorollary2,
        TheoremId::Conjecture1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::CdClassic => "CD_classic",
            TheoremId::ChowlaPillai => "Chowla_Pillai",
            TheoremId::T3Commutative => "T3_commutative",
            TheoremId::T4Main => "T4_main",
            TheoremId::HkCorollary1 => "HK_corollary1",
            TheoremId::KempermanCorollary2 => "Kemperman_corollary2",
            TheoremId::Conjecture1 => "Conjecture1",
        }
    }

    /// Whether the statement is about exactly two summands.
    pub fn is_binary(self) -> bool {
        matches!(
            self,
            TheoremId::CdClassic | TheoremId::ChowlaPillai | TheoremId::T3Commutative | TheoremId::T4Main
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_owned()))
    }
}

/// A semigroup label plus the subset literals of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub semigroup: String,
    pub sets: Vec<Vec<usize>>,
}

impl Instance {
    pub fn new(s: &FiniteSemigroup, sets: &[CarrierSubset]) -> Self {
        Instance {
            semigroup: s.label(),
            sets: sets.iter().map(CarrierSubset::to_vec).collect(),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.semigroup)?;
        for (k, set) in self.sets.iter().enumerate() {
            let sep = if k == 0 { " " } else { "; " };
            write!(f, "{sep}{}", serde_json::to_string(set).expect("index list"))?;
        }
        Ok(())
    }
}

/// Detail attached to a violated bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub sumset: Vec<usize>,
    pub sizes: Vec<usize>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub theorem_id: TheoremId,
    pub instance: Instance,
    pub lhs: usize,
    pub rhs_gamma_or_p: ExtendedNat,
    pub rhs_size: i64,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl CheckReport {
    /// `min(rhs_gamma_or_p, rhs_size)`.
    pub fn rhs(&self) -> i64 {
        self.rhs_gamma_or_p.min_with(self.rhs_size)
    }

    pub fn is_tight(&self) -> bool {
        self.lhs as i64 == self.rhs()
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One human-readable line showing both terms of the right-hand side.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {}  lhs={}  rhs=min({}, {})={}  {}{}",
            self.theorem_id,
            self.instance,
            self.lhs,
            self.rhs_gamma_or_p,
            self.rhs_size,
            self.rhs(),
            if self.holds { "holds" } else { "VIOLATED" },
            if self.holds && self.is_tight() { " (tight)" } else { "" },
        )
    }
}

/// Result of a gated check: either a verdict or the hypothesis that failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CheckOutcome {
    Checked(CheckReport),
    Skipped {
        theorem_id: TheoremId,
        instance: Instance,
        skipped: String,
    },
}

impl CheckOutcome {
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            CheckOutcome::Checked(r) => Some(r),
            CheckOutcome::Skipped { .. } => None,
        }
    }

    pub fn into_report(self) -> Option<CheckReport> {
        match self {
            CheckOutcome::Checked(r) => Some(r),
            CheckOutcome::Skipped { .. } => None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, CheckOutcome::Skipped { .. })
    }

    pub fn holds(&self) -> Option<bool> {
        self.report().map(|r| r.holds)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("outcome serializes")
    }

    pub fn summary_line(&self) -> String {
        match self {
            CheckOutcome::Checked(r) => r.summary_line(),
            CheckOutcome::Skipped {
                theorem_id,
                instance,
                skipped,
            } => format!("{theorem_id} {instance}  skipped: {skipped}"),
        }
    }
}
