use thiserror::Error;

/// Which bound a pair of elements is missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MissingBound {
    Meet,
    Join,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation contains a cycle through element {0}")]
    CycleDetected(usize),

    #[error("not a lattice: elements {a} and {b} have no unique {which:?}")]
    NotALattice {
        a: usize,
        b: usize,
        which: MissingBound,
    },

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),

    #[error("element index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("empty lattice")]
    Empty,

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("size {size} exceeds the element cap {cap}")]
    SizeOverflow { size: usize, cap: usize },

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("elements {0} and {1} are not comparable")]
    NotComparable(usize, usize),

    #[error("lattice is not distributive")]
    NotDistributive,

    #[error("map is not a lattice embedding: {0}")]
    NotAnEmbedding(String),

    #[error("invalid separator {element}: {reason}")]
    InvalidSeparator { element: usize, reason: String },

    #[error("malformed construction input: {0}")]
    InvalidInput(String),

    #[error("formula inputs {0} and {1} are comparable")]
    ComparableInput(usize, usize),

    #[error("internal verification failed: {0}")]
    InternalVerificationFailed(String),

    #[error("pruned order is not a lattice: elements {a} and {b} lack a unique {which:?}")]
    NotALatticeUnderPruning {
        a: usize,
        b: usize,
        which: MissingBound,
    },

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("no simple extension found within budget {0}")]
    BudgetExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
