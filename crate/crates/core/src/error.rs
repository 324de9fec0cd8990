use thiserror::Error;

/// Errors raised by construction, set arithmetic, checkers and sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semigroup order must be at least 1")]
    EmptyCarrier,
    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("table must be {order}x{order}, row {row} has {len} entries")]
    BadShape { order: usize, row: usize, len: usize },
    #[error("table has {rows} rows, expected {order}")]
    BadRowCount { order: usize, rows: usize },
    #[error("table entry ({row},{col}) = {value} is not a carrier index below {order}")]
    BadEntry {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("operation is not associative: ({0}+{1})+{2} != {0}+({1}+{2})")]
    NotAssociative(usize, usize, usize),
    #[error("index {index} is outside carrier of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("subset ambient order {found} does not match semigroup order {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("generator set must be non-empty")]
    EmptyGenerator,
    #[error("0-fold sum requires an identity element")]
    ZeroFoldWithoutIdentity,
    #[error("list of sets must be non-empty")]
    EmptyList,
    #[error("residue set must be non-empty")]
    EmptyResidueSet,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("{theorem} takes {expected} sets, got {got}")]
    Arity {
        theorem: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("{0} needs the semigroup Z/mZ")]
    NotCyclic(&'static str),
    #[error("operation requires a monoid")]
    NotAMonoid,
    #[error("every set needs at least one unit (set #{0} has none)")]
    NoUnitsAvailable(usize),
    #[error("shift #{0} is not a unit")]
    NotAUnit(usize),
    #[error("expected {expected} shifts for {sets} sets, got {got}")]
    ShiftCount { expected: usize, sets: usize, got: usize },
    #[error("the identity must belong to both sets")]
    IdentityNotInBoth,
    #[error("shift {0} does not escape X + Y")]
    PreconditionShiftInsideSumset(usize),
    #[error("instance budget exceeded: {needed} checks requested, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
