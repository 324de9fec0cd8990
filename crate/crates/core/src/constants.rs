//! Structural constants: the Cauchy-Davenport constant γ, the minimal
//! non-trivial order 𝔭, and the modular spread δ of a residue set.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extnat::ExtendedNat;
use crate::semigroup::FiniteSemigroup;
use crate::subset::CarrierSubset;

/// `inf_{x0 ≠ x ∈ X} ord(x + x̃0)` for a unit `x0`; infinite when `X = {x0}`.
pub fn centre_value(s: &FiniteSemigroup, x: &CarrierSubset, x0: usize) -> ExtendedNat {
    let inv = s.inverse(x0).expect("centre_value called with a non-unit centre");
    let mut best = ExtendedNat::Infinite;
    for w in x {
        if w != x0 {
            let o = ExtendedNat::Finite(s.order_of(s.op(w, inv)));
            if o < best {
                best = o;
            }
        }
    }
    best
}

/// Cauchy-Davenport constant of `X`: the supremum over units `x0 ∈ X` of
/// [`centre_value`]. Zero when `X` holds no unit.
pub fn gamma(s: &FiniteSemigroup, x: &CarrierSubset) -> ExtendedNat {
    debug_assert_eq!(x.ambient_order(), s.order());
    let centres = x.intersection(s.units());
    ExtendedNat::sup(centres.iter().map(|x0| centre_value(s, x, x0)))
}

/// Units of `X` attaining the supremum in [`gamma`], ascending.
pub fn gamma_realizers(s: &FiniteSemigroup, x: &CarrierSubset) -> Vec<usize> {
    let centres = x.intersection(s.units());
    let values: Vec<(usize, ExtendedNat)> = centres.iter().map(|c| (c, centre_value(s, x, c))).collect();
    let top = ExtendedNat::sup(values.iter().map(|&(_, v)| v));
    values.into_iter().filter(|&(_, v)| v == top).map(|(c, _)| c).collect()
}

/// `max_i γ(X_i)`.
pub fn gamma_multi(s: &FiniteSemigroup, sets: &[CarrierSubset]) -> Result<ExtendedNat> {
    if sets.is_empty() {
        return Err(Error::EmptyList);
    }
    for x in sets {
        s.check_ambient(x)?;
    }
    Ok(sets.iter().map(|x| gamma(s, x)).max().expect("non-empty"))
}

/// Which reading of the minimal non-trivial order to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PVariant {
    /// Least `ord(z)` over `z ∈ Z` with `ord(z) >= 2`.
    #[default]
    Element,
    /// Least size of a subsemigroup with at least two elements inside `⟨Z⟩`.
    Subsemigroup,
}

pub fn p_min(s: &FiniteSemigroup, z: &CarrierSubset, variant: PVariant) -> Result<ExtendedNat> {
    s.check_ambient(z)?;
    if z.is_empty() {
        return Ok(ExtendedNat::Infinite);
    }
    match variant {
        PVariant::Element => Ok(ExtendedNat::inf(
            z.iter()
                .map(|w| s.order_of(w))
                .filter(|&o| o >= 2)
                .map(ExtendedNat::Finite),
        )),
        PVariant::Subsemigroup => {
            // Any subsemigroup T with |T| >= 2 contains <a, b> for two of its
            // members, so the minimum is attained by a two-generated one.
            let hull = s.generated_subsemigroup(z)?;
            let members = hull.to_vec();
            let mut best = ExtendedNat::Infinite;
            for (k, &a) in members.iter().enumerate() {
                for &b in &members[k + 1..] {
                    let pair = CarrierSubset::from_indices(s.order(), [a, b])?;
                    let t = s.generated_subsemigroup(&pair)?;
                    best = best.min(ExtendedNat::from(t.len()));
                }
            }
            Ok(best)
        }
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A set of residues modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSet {
    modulus: usize,
    members: CarrierSubset,
}

impl ResidueSet {
    pub fn new<I: IntoIterator<Item = usize>>(modulus: usize, members: I) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(ResidueSet {
            modulus,
            members: CarrierSubset::from_indices(modulus, members)?,
        })
    }

    pub fn from_subset(members: CarrierSubset) -> Result<Self> {
        if members.ambient_order() == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(ResidueSet {
            modulus: members.ambient_order(),
            members,
        })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn members(&self) -> &CarrierSubset {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Residue-wise sumset.
    pub fn sumset(&self, other: &ResidueSet) -> Result<ResidueSet> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        let mut out = CarrierSubset::empty(self.modulus);
        for a in &self.members {
            out.union_with(&other.members.rotated(a));
        }
        Ok(ResidueSet {
            modulus: self.modulus,
            members: out,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct ResidueSetDoc {
    m: usize,
    members: Vec<usize>,
}

impl Serialize for ResidueSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ResidueSetDoc {
            m: self.modulus,
            members: self.members.to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ResidueSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = ResidueSetDoc::deserialize(deserializer)?;
        ResidueSet::new(doc.m, doc.members).map_err(serde::de::Error::custom)
    }
}

/// `min_{z0 ∈ Z} max_{z0 ≠ z ∈ Z} gcd(m, z - z0)`, and 1 for singletons.
pub fn delta_mod(z: &ResidueSet) -> Result<usize> {
    if z.is_empty() {
        return Err(Error::EmptyResidueSet);
    }
    if z.len() == 1 {
        return Ok(1);
    }
    let m = z.modulus;
    let members = z.members.to_vec();
    let delta = members
        .iter()
        .map(|&z0| {
            members
                .iter()
                .filter(|&&w| w != z0)
                .map(|&w| gcd(m, (w + m - z0) % m))
                .max()
                .expect("at least two members")
        })
        .min()
        .expect("non-empty");
    Ok(delta)
}
