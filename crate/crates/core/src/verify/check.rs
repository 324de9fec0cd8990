use crate::constants::{delta_mod, gamma, gamma_multi, p_min, PVariant, ResidueSet};
use crate::error::{Error, Result};
use crate::extnat::ExtendedNat;
use crate::families::cyclic;
use crate::semigroup::FiniteSemigroup;
use crate::setops::{sum_all, sumset_unchecked};
use crate::subset::CarrierSubset;

use super::report::{CheckOutcome, CheckReport, Instance, TheoremId, Witness};

/// The two sides of one inequality: `lhs >= min(term, size)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub lhs: usize,
    pub term: ExtendedNat,
    pub size: i64,
}

impl Bound {
    pub fn rhs(&self) -> i64 {
        self.term.min_with(self.size)
    }

    pub fn holds(&self) -> bool {
        self.lhs as i64 >= self.rhs()
    }
}

fn check_arity(theorem: TheoremId, got: usize) -> Result<()> {
    let ok = if theorem.is_binary() { got == 2 } else { got >= 1 };
    if ok {
        Ok(())
    } else {
        Err(Error::Arity {
            theorem: theorem.as_str(),
            expected: if theorem.is_binary() { "exactly 2" } else { "at least 1" },
            got,
        })
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn size_term(sets: &[CarrierSubset]) -> i64 {
    sets.iter().map(|x| x.len() as i64).sum::<i64>() + 1 - sets.len() as i64
}

/// First unmet hypothesis of `theorem` on this instance, if any.
pub fn unmet_hypothesis(s: &FiniteSemigroup, theorem: TheoremId, sets: &[CarrierSubset]) -> Result<Option<String>> {
    check_arity(theorem, sets.len())?;
    for x in sets {
        s.check_ambient(x)?;
    }
    let nonempty = || sets.iter().all(|x| !x.is_empty());
    let units_in_every_set = || sets.iter().all(|x| !x.is_disjoint(s.units()));
    let reason = match theorem {
        TheoremId::CdClassic if !(s.is_group() && is_prime(s.order())) => {
            Some(format!("not a group of prime order (order {})", s.order()))
        }
        TheoremId::ChowlaPillai if s.cyclic_modulus().is_none() => Some("semigroup is not Z/mZ".to_owned()),
        TheoremId::CdClassic | TheoremId::ChowlaPillai | TheoremId::T3Commutative | TheoremId::Conjecture1
            if !nonempty() =>
        {
            Some("an empty summand".to_owned())
        }
        TheoremId::T3Commutative
        | TheoremId::T4Main
        | TheoremId::HkCorollary1
        | TheoremId::KempermanCorollary2
        | TheoremId::Conjecture1
            if !s.is_cancellative() =>
        {
            Some("semigroup is not cancellative".to_owned())
        }
        TheoremId::T3Commutative if !s.commutes_on(&s.generated_subsemigroup(&sets[1])?) => {
            Some("<Y> is not commutative".to_owned())
        }
        TheoremId::HkCorollary1 | TheoremId::KempermanCorollary2 | TheoremId::Conjecture1 if !units_in_every_set() => {
            Some("the sum of the unit parts is empty".to_owned())
        }
        TheoremId::KempermanCorollary2 => {
            let kappa = size_term(sets);
            let e = s.identity();
            (0..s.order())
                .filter(|&x| Some(x) != e)
                .find(|&x| (s.order_of(x) as i64) < kappa)
                .map(|x| format!("ord({x}) = {} is below kappa = {kappa}", s.order_of(x)))
        }
        _ => None,
    };
    Ok(reason)
}

/// Both sides of the inequality, whatever the hypotheses.
pub fn bound(s: &FiniteSemigroup, theorem: TheoremId, sets: &[CarrierSubset]) -> Result<Bound> {
    check_arity(theorem, sets.len())?;
    let total = sum_all(s, sets)?;
    let lhs = total.len();
    let size = size_term(sets);
    let term = match theorem {
        TheoremId::CdClassic => ExtendedNat::from(s.order()),
        TheoremId::ChowlaPillai => {
            if s.cyclic_modulus().is_none() {
                return Err(Error::NotCyclic("Chowla_Pillai"));
            }
            let dx = delta_mod(&ResidueSet::from_subset(sets[0].clone())?)?;
            let dy = delta_mod(&ResidueSet::from_subset(sets[1].clone())?)?;
            ExtendedNat::from(s.order() / dx.min(dy))
        }
        TheoremId::T3Commutative => gamma(s, &sets[1]),
        TheoremId::T4Main => gamma(s, &total),
        TheoremId::HkCorollary1 => p_min(s, &s.full(), PVariant::Element)?,
        TheoremId::KempermanCorollary2 => ExtendedNat::Infinite,
        TheoremId::Conjecture1 => gamma_multi(s, sets)?,
    };
    Ok(Bound { lhs, term, size })
}

fn report(s: &FiniteSemigroup, theorem: TheoremId, sets: &[CarrierSubset], b: Bound) -> CheckReport {
    let holds = b.holds();
    let witness = (!holds).then(|| Witness {
        sumset: sum_all(s, sets).expect("validated").to_vec(),
        sizes: sets.iter().map(CarrierSubset::len).collect(),
        table: s.rows(),
    });
    CheckReport {
        theorem_id: theorem,
        instance: Instance::new(s, sets),
        lhs: b.lhs,
        rhs_gamma_or_p: b.term,
        rhs_size: b.size,
        holds,
        witness,
    }
}

/// Checks `theorem` on one instance. Unmet hypotheses give `Skipped`, never a violation.
pub fn check_inequality(s: &FiniteSemigroup, theorem: TheoremId, sets: &[CarrierSubset]) -> Result<CheckOutcome> {
    if let Some(reason) = unmet_hypothesis(s, theorem, sets)? {
        return Ok(CheckOutcome::Skipped {
            theorem_id: theorem,
            instance: Instance::new(s, sets),
            skipped: reason,
        });
    }
    let b = bound(s, theorem, sets)?;
    Ok(CheckOutcome::Checked(report(s, theorem, sets, b)))
}

/// Evaluates the inequality of `theorem` without checking its hypotheses.
pub fn evaluate_inequality(s: &FiniteSemigroup, theorem: TheoremId, sets: &[CarrierSubset]) -> Result<CheckReport> {
    let b = bound(s, theorem, sets)?;
    Ok(report(s, theorem, sets, b))
}

/// `|X + Y| >= min(m / δ, |X| + |Y| - 1)` for residue sets modulo `m`.
pub fn check_chowla_pillai(x: &ResidueSet, y: &ResidueSet) -> Result<CheckReport> {
    if x.modulus() != y.modulus() {
        return Err(Error::ModulusMismatch(x.modulus(), y.modulus()));
    }
    let delta = delta_mod(x)?.min(delta_mod(y)?);
    let m = x.modulus();
    let s = cyclic(m)?.with_name(format!("cyclic({m})"));
    let sets = [x.members().clone(), y.members().clone()];
    let b = Bound {
        lhs: sumset_unchecked(&s, &sets[0], &sets[1]).len(),
        term: ExtendedNat::from(m / delta),
        size: size_term(&sets),
    };
    Ok(report(&s, TheoremId::ChowlaPillai, &sets, b))
}
