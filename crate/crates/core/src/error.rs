use thiserror::Error;

/// Errors produced by the braid, invariant and solenoid layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("braid must have at least one strand")]
    NoStrands,

    #[error("braid is not cyclic: its closure has more than one component")]
    NotCyclic,

    #[error("closure is not a knot (strand permutation has {components} cycles)")]
    NotAKnot { components: usize },

    #[error("{what} exceeds limit {limit} (got {actual})")]
    Limit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("unsupported strand count {strands}: {reason}")]
    UnsupportedStrands {
        strands: usize,
        reason: &'static str,
    },

    #[error("stage {stage} is not in W_2: {reason}")]
    NotInW2 { stage: usize, reason: String },

    #[error("ambient companion must be the unknot")]
    AmbientNotUnknot,

    #[error("winding number {entry} in the repeating part is even; no strictly achiral embedding exists")]
    ParityViolation { entry: u64 },

    #[error("Smale solenoids of this type form a countably infinite family (W_n has infinitely many conjugacy classes for n > 3; entry {entry})")]
    CountablyInfinite { entry: u64 },

    #[error("type must be purely periodic (empty prefix)")]
    NonemptyPrefix,

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::Limit { .. })
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
