use serde::Serialize;

use crate::constants::{gamma, gamma_realizers};
use crate::error::{Error, Result};
use crate::extnat::ExtendedNat;
use crate::semigroup::FiniteSemigroup;
use crate::setops::{sum_all, translate_unchecked, Side};
use crate::subset::CarrierSubset;

/// Units `z_0, ..., z_n` defining the maps `T_i(X) = z_{i-1} + X - z_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftTuple {
    pub shifts: Vec<usize>,
}

/// How `normalize_by_units` picks the unit `x_i ∈ X_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnitChoice {
    /// Smallest-index unit of each set.
    #[default]
    SmallestIndex,
    /// Units whose sum attains the outer supremum of γ on the sumset.
    RealizeGamma,
}

fn require_monoid(s: &FiniteSemigroup) -> Result<usize> {
    s.identity().ok_or(Error::NotAMonoid)
}

/// `T_i(X_i)` for every `i`.
pub fn apply_shifts(s: &FiniteSemigroup, shifts: &ShiftTuple, sets: &[CarrierSubset]) -> Result<Vec<CarrierSubset>> {
    require_monoid(s)?;
    if shifts.shifts.len() != sets.len() + 1 {
        return Err(Error::ShiftCount {
            expected: sets.len() + 1,
            sets: sets.len(),
            got: shifts.shifts.len(),
        });
    }
    for (k, &z) in shifts.shifts.iter().enumerate() {
        if z >= s.order() || !s.is_unit(z) {
            return Err(Error::NotAUnit(k));
        }
    }
    let mut out = Vec::with_capacity(sets.len());
    for (i, x) in sets.iter().enumerate() {
        s.check_ambient(x)?;
        let before = shifts.shifts[i];
        let after = s.inverse(shifts.shifts[i + 1]).expect("checked unit");
        let left = translate_unchecked(s, x, before, Side::Left);
        out.push(translate_unchecked(s, &left, after, Side::Right));
    }
    Ok(out)
}

/// Writes `z̄` as `x_1 + ... + x_n` with `x_i` a unit of `X_i`, preferring the
/// lexicographically smallest tuple.
fn decompose(s: &FiniteSemigroup, unit_parts: &[Vec<usize>], target: usize) -> Option<Vec<usize>> {
    fn go(s: &FiniteSemigroup, parts: &[Vec<usize>], acc: usize, target: usize, picked: &mut Vec<usize>) -> bool {
        let (last, rest) = (parts.len() - 1, picked.len());
        if rest == last {
            // cancellation pins the last summand
            let need = s.op(s.inverse(acc).expect("unit"), target);
            if parts[last].contains(&need) && s.op(acc, need) == target {
                picked.push(need);
                return true;
            }
            return false;
        }
        for &u in &parts[rest] {
            picked.push(u);
            if go(s, parts, s.op(acc, u), target, picked) {
                return true;
            }
            picked.pop();
        }
        false
    }
    let e = s.identity()?;
    let mut picked = Vec::with_capacity(unit_parts.len());
    go(s, unit_parts, e, target, &mut picked).then_some(picked)
}

/// Shifts every set by units so that each contains the identity.
///
/// With `z_0 = 0` and `z_i = x_1 + ... + x_i`, the shifted sets are
/// `T_i(X_i) = z_{i-1} + X_i - z_i` and their sum is `(X_1 + ... + X_n) - z_n`.
pub fn normalize_by_units(
    s: &FiniteSemigroup,
    sets: &[CarrierSubset],
    choice: UnitChoice,
) -> Result<(ShiftTuple, Vec<CarrierSubset>)> {
    let e = require_monoid(s)?;
    if sets.is_empty() {
        return Err(Error::EmptyList);
    }
    let mut parts = Vec::with_capacity(sets.len());
    for (i, x) in sets.iter().enumerate() {
        s.check_ambient(x)?;
        let units = x.intersection(s.units()).to_vec();
        if units.is_empty() {
            return Err(Error::NoUnitsAvailable(i));
        }
        parts.push(units);
    }
    let mut chosen: Vec<usize> = parts.iter().map(|p| p[0]).collect();
    if choice == UnitChoice::RealizeGamma {
        let total = sum_all(s, sets)?;
        if let Some(d) = gamma_realizers(s, &total)
            .into_iter()
            .find_map(|z| decompose(s, &parts, z))
        {
            chosen = d;
        }
    }
    let mut shifts = vec![e];
    for &x in &chosen {
        let prev = *shifts.last().expect("non-empty");
        shifts.push(s.op(prev, x));
    }
    let tuple = ShiftTuple { shifts };
    let shifted = apply_shifts(s, &tuple, sets)?;
    Ok((tuple, shifted))
}

/// Sizes and γ values of the summands and of their sum agree before and after the shifts.
pub fn verify_shift_invariance(s: &FiniteSemigroup, shifts: &ShiftTuple, sets: &[CarrierSubset]) -> Result<bool> {
    let shifted = apply_shifts(s, shifts, sets)?;
    if sets.is_empty() {
        return Ok(true);
    }
    let before = sum_all(s, sets)?;
    let after = sum_all(s, &shifted)?;
    let summands = sets
        .iter()
        .zip(&shifted)
        .all(|(x, t)| x.len() == t.len() && gamma(s, x) == gamma(s, t));
    Ok(summands && before.len() == after.len() && gamma(s, &before) == gamma(s, &after))
}

/// `min_{0 ≠ w ∈ W} ord(w)`, the right-hand side of the normal form for γ.
pub fn min_nonidentity_order(s: &FiniteSemigroup, w: &CarrierSubset) -> ExtendedNat {
    let e = s.identity();
    ExtendedNat::inf(
        w.iter()
            .filter(|&z| Some(z) != e)
            .map(|z| ExtendedNat::Finite(s.order_of(z))),
    )
}

/// Whether the normalized sum has γ equal to its least non-identity order.
pub fn has_gamma_normal_form(s: &FiniteSemigroup, shifted_sum: &CarrierSubset) -> bool {
    gamma(s, shifted_sum) == min_nonidentity_order(s, shifted_sum)
}
