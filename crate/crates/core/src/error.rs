use thiserror::Error;

use crate::combinatorics::Chord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty tree word")]
    Empty,
    #[error("invalid character {found:?} at position {position}")]
    BadCharacter { position: usize, found: char },
    #[error("tree word has {ones} ones and {zeros} zeros; expected zeros = ones + 1")]
    WrongCounts { ones: usize, zeros: usize },
    #[error("prefix ending at position {position} closes the tree early")]
    PrefixViolation { position: usize },
    #[error("tree size {0} exceeds the supported maximum of {max}", max = crate::MAX_SIZE)]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("size must be at least 1")]
    ZeroSize,
    #[error("size {0} exceeds the supported maximum of {max}", max = crate::MAX_SIZE)]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a polygon with {vertices} vertices")]
    VertexOutOfRange { vertex: usize, vertices: usize },
    #[error("{0} joins adjacent polygon vertices and is not a chord")]
    BoundarySide(Chord),
    #[error("degenerate chord {0}-{0}")]
    Loop(usize),
    #[error("chord {0} listed twice")]
    Duplicate(Chord),
    #[error("expected {expected} chords, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("chords {0} and {1} cross")]
    Crossing(Chord, Chord),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("chord {0} is not present in the triangulation")]
    ChordNotPresent(Chord),
    #[error("source and target coincide")]
    IdenticalPair,
    #[error("geodesic enumeration stopped after {limit} paths")]
    LimitExceeded { limit: usize },
    #[error("greedy search exceeded its step budget of {0}")]
    StepBudgetExceeded(usize),
    #[error("size {size} exceeds the configured maximum {max}")]
    SizeGuard { size: usize, max: usize },
    #[error("parameter k must be at least 1")]
    BadParameter,
    #[error("census: {0}")]
    Census(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
