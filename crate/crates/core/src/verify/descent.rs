//! The transformation argument behind the main two-set bound, run as a
//! procedure on concrete sets.

use serde::Serialize;

use crate::constants::gamma;
use crate::error::{Error, Result};
use crate::extnat::ExtendedNat;
use crate::semigroup::FiniteSemigroup;
use crate::setops::{sumset_unchecked, translate_unchecked, Side};
use crate::subset::CarrierSubset;

use super::shifts::{normalize_by_units, ShiftTuple, UnitChoice};

fn prepared(s: &FiniteSemigroup, x: &CarrierSubset, y: &CarrierSubset) -> Result<usize> {
    let e = s.identity().ok_or(Error::NotAMonoid)?;
    s.check_ambient(x)?;
    s.check_ambient(y)?;
    if !(x.contains(e) && y.contains(e)) {
        return Err(Error::IdentityNotInBoth);
    }
    Ok(e)
}

/// `X + z + Y`.
fn through(s: &FiniteSemigroup, x: &CarrierSubset, z: usize, y: &CarrierSubset) -> CarrierSubset {
    sumset_unchecked(s, &translate_unchecked(s, x, z, Side::Right), y)
}

/// Least `n >= 1` with `X + nZ + Y ⊄ X + Y` for `Z = X ∩ Y`, with the smallest
/// escaping `z̄ ∈ nZ`. `None` once the chain `nZ` repeats without escaping.
pub fn find_min_n(s: &FiniteSemigroup, x: &CarrierSubset, y: &CarrierSubset) -> Result<Option<(usize, usize)>> {
    prepared(s, x, y)?;
    let z = x.intersection(y);
    let xy = sumset_unchecked(s, x, y);
    let mut seen: Vec<CarrierSubset> = Vec::new();
    let mut nz = z.clone();
    for n in 1.. {
        if let Some(bar) = nz.iter().find(|&w| !through(s, x, w, y).is_subset(&xy)) {
            return Ok(Some((n, bar)));
        }
        if seen.contains(&nz) {
            return Ok(None);
        }
        let next = sumset_unchecked(s, &nz, &z);
        seen.push(std::mem::replace(&mut nz, next));
    }
    unreachable!()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepCase {
    /// `n_X >= n_Y`: grow `X` by `X_0 + z̄`, shrink `Y` by `Y_0`.
    One,
    /// `n_X < n_Y`: shrink `X` by `X_0`, grow `Y` by `z̄ + Y_0`.
    Two,
    /// No transformation: the guard failed or no escaping shift exists.
    Terminal,
}

/// Postconditions of one transformation step; all hold on cancellative inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StepChecks {
    pub shifted_parts_disjoint: bool,
    pub identity_outside_parts: bool,
    pub identity_kept: bool,
    pub sumset_contained: bool,
    pub total_size_not_smaller: bool,
    pub strict_in_case_two: bool,
}

impl StepChecks {
    pub fn all(&self) -> bool {
        self.shifted_parts_disjoint
            && self.identity_outside_parts
            && self.identity_kept
            && self.sumset_contained
            && self.total_size_not_smaller
            && self.strict_in_case_two
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentStep {
    pub x: CarrierSubset,
    pub y: CarrierSubset,
    pub z: CarrierSubset,
    pub sumset_size: usize,
    pub gamma_of_sumset: ExtendedNat,
    pub n_min: Option<usize>,
    pub z_bar: Option<usize>,
    pub x0: Option<CarrierSubset>,
    pub y0: Option<CarrierSubset>,
    pub case: StepCase,
    pub x_bar: Option<CarrierSubset>,
    pub y_bar: Option<CarrierSubset>,
    pub checks: Option<StepChecks>,
}

impl DescentStep {
    fn terminal(s: &FiniteSemigroup, x: &CarrierSubset, y: &CarrierSubset, n_min: Option<(usize, usize)>) -> Self {
        let xy = sumset_unchecked(s, x, y);
        DescentStep {
            x: x.clone(),
            y: y.clone(),
            z: x.intersection(y),
            sumset_size: xy.len(),
            gamma_of_sumset: gamma(s, &xy),
            n_min: n_min.map(|p| p.0),
            z_bar: n_min.map(|p| p.1),
            x0: None,
            y0: None,
            case: StepCase::Terminal,
            x_bar: None,
            y_bar: None,
            checks: None,
        }
    }
}

/// One step of the transformation for an escaping shift `z̄`.
pub fn descent_step(s: &FiniteSemigroup, x: &CarrierSubset, y: &CarrierSubset, z_bar: usize) -> Result<DescentStep> {
    let e = prepared(s, x, y)?;
    if z_bar >= s.order() {
        return Err(Error::IndexOutOfRange {
            index: z_bar,
            order: s.order(),
        });
    }
    let xy = sumset_unchecked(s, x, y);
    if through(s, x, z_bar, y).is_subset(&xy) {
        return Err(Error::PreconditionShiftInsideSumset(z_bar));
    }
    let n = s.order();
    let mut x0 = CarrierSubset::empty(n);
    for a in x {
        let row = translate_unchecked(s, y, s.op(a, z_bar), Side::Left);
        if !row.is_subset(&xy) {
            x0.insert(a);
        }
    }
    let mut y0 = CarrierSubset::empty(n);
    for b in y {
        let col = translate_unchecked(s, x, s.op(z_bar, b), Side::Right);
        if !col.is_subset(&xy) {
            y0.insert(b);
        }
    }
    let x0_shift = translate_unchecked(s, &x0, z_bar, Side::Right);
    let y0_shift = translate_unchecked(s, &y0, z_bar, Side::Left);
    let (case, x_bar, y_bar) = if x0.len() >= y0.len() {
        (StepCase::One, x.union(&x0_shift), y.difference(&y0))
    } else {
        (StepCase::Two, x.difference(&x0), y.union(&y0_shift))
    };
    let bar_sum = sumset_unchecked(s, &x_bar, &y_bar);
    let before = x.len() + y.len();
    let after = x_bar.len() + y_bar.len();
    let checks = StepChecks {
        shifted_parts_disjoint: x0_shift.is_disjoint(x) && y0_shift.is_disjoint(y),
        identity_outside_parts: !x0.contains(e) && !y0.contains(e),
        identity_kept: x_bar.contains(e) && y_bar.contains(e),
        sumset_contained: bar_sum.is_subset(&xy),
        total_size_not_smaller: after >= before,
        strict_in_case_two: case != StepCase::Two || after > before,
    };
    Ok(DescentStep {
        x: x.clone(),
        y: y.clone(),
        z: x.intersection(y),
        sumset_size: xy.len(),
        gamma_of_sumset: gamma(s, &xy),
        n_min: None,
        z_bar: Some(z_bar),
        x0: Some(x0),
        y0: Some(y0),
        case,
        x_bar: Some(x_bar),
        y_bar: Some(y_bar),
        checks: Some(checks),
    })
}

/// `find_min_n` followed by `descent_step`, without consulting the guard.
pub fn forced_step(s: &FiniteSemigroup, x: &CarrierSubset, y: &CarrierSubset) -> Result<DescentStep> {
    match find_min_n(s, x, y)? {
        Some((n, bar)) => {
            let mut step = descent_step(s, x, y, bar)?;
            step.n_min = Some(n);
            Ok(step)
        }
        None => Ok(DescentStep::terminal(s, x, y, None)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DescentOutcome {
    /// `|X + Y| >= min(γ(X + Y), |X| + |Y| - 1)` at the last recorded step.
    InequalityHolds,
    /// The guard held but no escaping shift exists.
    ClaimContradiction,
    /// The guard still held after the step budget.
    StepBudgetExceeded,
    /// The guard held but a set has no unit to normalize by.
    NotNormalizable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentTrace {
    pub shifts: Option<ShiftTuple>,
    pub steps: Vec<DescentStep>,
    pub outcome: DescentOutcome,
    pub anomalies: Vec<String>,
}

impl DescentTrace {
    pub fn transformations(&self) -> usize {
        self.steps.iter().filter(|s| s.case != StepCase::Terminal).count()
    }
}

fn guard(s: &FiniteSemigroup, x: &CarrierSubset, y: &CarrierSubset) -> bool {
    let xy = sumset_unchecked(s, x, y);
    let size = x.len() as i64 + y.len() as i64 - 1;
    (xy.len() as i64) < gamma(s, &xy).min_with(size)
}

/// Applies transformation steps while the pair violates the two-set bound.
pub fn run_descent(
    s: &FiniteSemigroup,
    x: &CarrierSubset,
    y: &CarrierSubset,
    max_steps: usize,
) -> Result<DescentTrace> {
    s.identity().ok_or(Error::NotAMonoid)?;
    s.check_ambient(x)?;
    s.check_ambient(y)?;
    let mut trace = DescentTrace {
        shifts: None,
        steps: Vec::new(),
        outcome: DescentOutcome::InequalityHolds,
        anomalies: Vec::new(),
    };
    if !guard(s, x, y) {
        trace.steps.push(DescentStep::terminal(s, x, y, None));
        return Ok(trace);
    }
    let (mut cx, mut cy) = match normalize_by_units(s, &[x.clone(), y.clone()], UnitChoice::RealizeGamma) {
        Ok((t, shifted)) => {
            trace.shifts = Some(t);
            let mut it = shifted.into_iter();
            (it.next().expect("two sets"), it.next().expect("two sets"))
        }
        Err(Error::NoUnitsAvailable(i)) => {
            trace.outcome = DescentOutcome::NotNormalizable;
            trace.anomalies.push(format!("set #{i} has no unit"));
            trace.steps.push(DescentStep::terminal(s, x, y, None));
            return Ok(trace);
        }
        Err(e) => return Err(e),
    };
    let bound = 2 * sumset_unchecked(s, &cx, &cy).len();
    for k in 0..=max_steps {
        if !guard(s, &cx, &cy) {
            trace.outcome = DescentOutcome::InequalityHolds;
            trace.steps.push(DescentStep::terminal(s, &cx, &cy, None));
            return Ok(trace);
        }
        if k == max_steps {
            break;
        }
        let Some((n, bar)) = find_min_n(s, &cx, &cy)? else {
            trace.outcome = DescentOutcome::ClaimContradiction;
            trace
                .anomalies
                .push(format!("step {k}: no n with X + nZ + Y outside X + Y"));
            trace.steps.push(DescentStep::terminal(s, &cx, &cy, None));
            return Ok(trace);
        };
        let mut step = descent_step(s, &cx, &cy, bar)?;
        step.n_min = Some(n);
        let checks = step.checks.expect("non-terminal");
        if !checks.all() {
            trace.anomalies.push(format!("step {k}: postconditions {checks:?}"));
        }
        let (nx, ny) = (step.x_bar.clone().expect("set"), step.y_bar.clone().expect("set"));
        if nx.len() + ny.len() > bound {
            trace
                .anomalies
                .push(format!("step {k}: |X|+|Y| exceeds 2|X+Y| = {bound}"));
        }
        trace.steps.push(step);
        (cx, cy) = (nx, ny);
        // keep the normal form for the next guard evaluation
        if let Ok((_, shifted)) = normalize_by_units(s, &[cx.clone(), cy.clone()], UnitChoice::RealizeGamma) {
            let mut it = shifted.into_iter();
            (cx, cy) = (it.next().expect("two sets"), it.next().expect("two sets"));
        }
    }
    trace.outcome = DescentOutcome::StepBudgetExceeded;
    trace
        .anomalies
        .push(format!("guard still holds after {max_steps} steps"));
    Ok(trace)
}
