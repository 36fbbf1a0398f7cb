use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("invalid cycle notation: {0}")]
    InvalidCycles(String),

    #[error("block sizes mismatch: expected {expected} sizes, got {got}")]
    BlockSizes { expected: usize, got: usize },

    #[error("letter {letter} outside alphabet of size {alphabet}")]
    LetterOutOfRange { letter: usize, alphabet: usize },

    #[error("alphabet mismatch: expected rank {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("permutation for letter {letter} has degree {got}, expected {expected}")]
    LetterDegree {
        letter: usize,
        expected: usize,
        got: usize,
    },

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("invalid normal form: {0}")]
    InvalidNormalForm(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("arity mismatch at {path}: {msg}")]
    Arity { path: String, msg: String },

    #[error("dimension {dim} exceeds bound {bound}")]
    DimensionBound { dim: u128, bound: u128 },

    #[error("rewrite budget of {steps} steps exhausted; stuck at {state}")]
    StepBudget { steps: usize, state: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("json: {0}")]
    Json(String),
}
