//! Inequality checkers, unit-shift transforms and the descent procedure.

mod check;
mod descent;
mod progression;
mod report;
mod shifts;

pub use check::{bound, check_chowla_pillai, check_inequality, evaluate_inequality, unmet_hypothesis, Bound};
pub use descent::{
    descent_step, find_min_n, forced_step, run_descent, DescentOutcome, DescentStep, DescentTrace, StepCase, StepChecks,
};
pub use progression::{progression_pair, progression_sets, ProgressionReport, Quantity};
pub use report::{CheckOutcome, CheckReport, Instance, TheoremId, Witness};
pub use shifts::{
    apply_shifts, has_gamma_normal_form, min_nonidentity_order, normalize_by_units, verify_shift_invariance,
    ShiftTuple, UnitChoice,
};
