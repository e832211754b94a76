use thiserror::Error;

/// Errors produced by the arrangement analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient triple is identically zero")]
    ZeroTriple,
    #[error("affine line has a = b = 0")]
    DegenerateAffineLine,
    #[error("lines `{0}` and `{1}` coincide; they have no unique intersection point")]
    EqualLines(String, String),
    #[error("line `{0}` is the line at infinity and has no affine image")]
    LineAtInfinity(String),
    #[error("arrangement must contain at least one line")]
    EmptyArrangement,
    #[error("lines `{first}` and `{second}` define the same line")]
    DuplicateLine { first: String, second: String },
    #[error("label `{0}` is used more than once")]
    DuplicateLabel(String),
    #[error("line index {index} out of range for an arrangement of {len} lines")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("line `{0}` occurs in both arrangements")]
    SharedLine(String),
    #[error("invalid ordering for line {line}: {reason}")]
    BadOrdering { line: usize, reason: String },
    #[error("arrangement has {n} lines, at least {min} are required")]
    TooSmall { n: usize, min: usize },
    #[error("arrangement has {n} lines, the exhaustive search is bounded at {max}")]
    TooLarge { n: usize, max: usize },
    #[error("need at least two local components, found {0}")]
    TooFewComponents(usize),
    #[error("ambient dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
