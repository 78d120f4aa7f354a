use thiserror::Error;

/// Failure while reading one of the text forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: expected {expected}, found {found}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid segment [{start},{end}]: need 1 <= start <= end")]
    InvalidSegment { start: usize, end: usize },

    #[error("segment [{start},{end}] does not fit in {t} vertices")]
    SegmentOutOfRange { start: usize, end: usize, t: usize },

    #[error("dimension vector must have at least one entry")]
    EmptyDimensionVector,

    #[error("partition parts must be positive and weakly decreasing")]
    InvalidPartition,

    #[error("dimension vector {0} is not sincere (every entry must be positive)")]
    NotSincere(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },

    #[error("rank entry ({i},{j}) = {value} exceeds the window minimum {max}")]
    RankOutOfBounds {
        i: usize,
        j: usize,
        value: u32,
        max: u32,
    },

    #[error("rank triangle has wrong shape: {0}")]
    RankShape(String),

    #[error("rank triangle is not realizable: second difference at ({i},{j}) is {delta}")]
    NotRealizable { i: usize, j: usize, delta: i64 },

    #[error("pair ({i},{j}) is not in J(d); the rank-defect locus is reducible")]
    NotInJ { i: usize, j: usize },

    #[error("capped rank triangle for ({i},{j}) is not realizable (second difference {delta} at ({at_i},{at_j}))")]
    RepresentativeNotRealizable {
        i: usize,
        j: usize,
        at_i: usize,
        at_j: usize,
        delta: i64,
    },

    #[error("dimension vector {0} is not generic; use the index-set route instead")]
    NotGeneric(String),

    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("tree size t = {t} exceeds the configured bound {max}")]
    TreeBoundExceeded { t: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
