//! Natural numbers extended by a point at infinity.
//!
//! Empty suprema are 0 and empty infima are infinite, so [`ExtendedNat::sup`]
//! and [`ExtendedNat::inf`] are total over any iterator.

use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedNat {
    Finite(u64),
    Infinite,
}

impl ExtendedNat {
    pub const ZERO: ExtendedNat = ExtendedNat::Finite(0);

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtendedNat::Infinite)
    }

    /// Supremum with `sup ∅ = 0`.
    pub fn sup<I: IntoIterator<Item = ExtendedNat>>(values: I) -> ExtendedNat {
        values.into_iter().max().unwrap_or(ExtendedNat::ZERO)
    }

    /// Infimum with `inf ∅ = ∞`.
    pub fn inf<I: IntoIterator<Item = ExtendedNat>>(values: I) -> ExtendedNat {
        values.into_iter().min().unwrap_or(ExtendedNat::Infinite)
    }

    /// `min(self, bound)` against a signed size term; infinity never wins.
    pub fn min_with(self, bound: i64) -> i64 {
        match self {
            ExtendedNat::Finite(v) => (v.min(i64::MAX as u64) as i64).min(bound),
            ExtendedNat::Infinite => bound,
        }
    }
}

impl From<u64> for ExtendedNat {
    fn from(v: u64) -> Self {
        ExtendedNat::Finite(v)
    }
}

impl From<usize> for ExtendedNat {
    fn from(v: usize) -> Self {
        ExtendedNat::Finite(v as u64)
    }
}

impl PartialEq<u64> for ExtendedNat {
    fn eq(&self, other: &u64) -> bool {
        *self == ExtendedNat::Finite(*other)
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(v) => serializer.serialize_u64(*v),
            ExtendedNat::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedNat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(v) => Ok(ExtendedNat::Finite(v)),
            Raw::Str(s) if s == "inf" => Ok(ExtendedNat::Infinite),
            Raw::Str(s) => Err(de::Error::custom(format!("expected integer or \"inf\", got {s:?}"))),
        }
    }
}
