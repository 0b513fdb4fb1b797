use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error in group spec {spec:?}: {reason}")]
    Syntax { spec: String, reason: String },

    #[error("not a finite Coxeter type: {0}")]
    NotFinite(String),

    #[error("rank out of range: {0}")]
    RankOutOfRange(String),

    #[error("vertex {0} is not in the graph")]
    MissingVertex(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("ragged input: row {row} has length {len}, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch between subspaces")]
    FieldMismatch,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("brute force is not supported for {group}: {reason}; use the recursion method instead")]
    UnsupportedBruteForce { group: String, reason: String },

    #[error("group closure exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("unexpected augmented case in the recursion: {0}")]
    UnexpectedAugmentedCase(String),

    #[error("odd value {value} where an even shuffle count was required ({context})")]
    OddHalving { value: String, context: String },

    #[error("wrong type: {0}")]
    WrongType(String),

    #[error("vertex {0} is not fixed by the automorphism")]
    NotFixed(usize),

    #[error("disagreement for {group}: {detail}")]
    Disagreement { group: String, detail: String },

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
