use thiserror::Error;

/// Errors raised by braid construction and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: i64, n: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("invalid strand count {0}")]
    InvalidStrandCount(usize),
    #[error("strand label {label} out of range for {n} strands")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("invalid strand pair ({i}, {j})")]
    InvalidPair { i: usize, j: usize },
    #[error("cannot remove every strand")]
    RemoveAll,
    #[error("invalid interval [{k}, {l}] in B_{n}")]
    InvalidInterval { k: usize, l: usize, n: usize },
    #[error("invalid tau parameters p={p}, q={q} for {n} strands")]
    InvalidTau { p: usize, q: usize, n: usize },
    #[error("shift by {shift} overflows {n} strands")]
    ShiftOverflow { shift: usize, n: usize },
    #[error("tuple length mismatch: {left} vs {right}")]
    TupleMismatch { left: usize, right: usize },
    #[error("empty tuple")]
    EmptyTuple,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("enumeration budget of {0} elements exceeded")]
    BudgetExceeded(usize),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;
