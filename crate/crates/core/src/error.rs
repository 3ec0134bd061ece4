use thiserror::Error;

/// Errors raised by constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("entry {entry} is repeated")]
    RepeatedEntry { entry: usize },

    #[error("entry {entry} is outside 1..={bound}")]
    EntryOutOfRange { entry: usize, bound: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("cell ({row}, {col}) lies outside the diagram")]
    CellOutsideDiagram { row: usize, col: usize },

    #[error("column index {col} out of range 0..={max}")]
    ColumnOutOfRange { col: usize, max: usize },

    #[error("not a subtableau: {0}")]
    NotSubtableau(String),

    #[error("shapes do not differ by a single corner cell")]
    NotSingleCorner,

    #[error("subtableau coincides with the tableau")]
    NoCellOutside,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("entry {entry} occurs {found} times, expected {expected}")]
    FiberSize { entry: usize, found: usize, expected: usize },

    #[error("vertex {vertex} has degree {degree} > {bound}")]
    DegreeBound { vertex: usize, degree: usize, bound: usize },

    #[error("filling does not split at k={k}: cell ({row}, {col}) holds {entry}")]
    SplitCondition { k: usize, row: usize, col: usize, entry: usize },

    #[error("degree {degree} is not divisible by {d}")]
    NotDivisible { degree: usize, d: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
