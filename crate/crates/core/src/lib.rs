//! Toolkit for Cauchy-Davenport style sumset bounds in finite semigroups.

pub mod constants;
pub mod error;
pub mod extnat;
pub mod families;
pub mod search;
pub mod semigroup;
pub mod setops;
pub mod subset;
pub mod table_file;
pub mod verify;

pub use constants::{delta_mod, gamma, gamma_multi, p_min, PVariant, ResidueSet};
pub use error::{Error, Result};
pub use extnat::ExtendedNat;
pub use families::{make_standard, FamilySpec};
pub use semigroup::FiniteSemigroup;
pub use setops::{difference, nsum, sum_all, sumset, translate, Side};
pub use subset::CarrierSubset;
