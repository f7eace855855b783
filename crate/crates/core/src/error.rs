use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be even and non-negative, got {0}")]
    OddVertexCount(i64),
    #[error("undotted arc count {k} out of range for n = {n}")]
    DegreeOutOfRange { n: usize, k: usize },
    #[error("invalid arc ({0}, {1})")]
    InvalidArc(usize, usize),
    #[error("arcs do not form a perfect matching of 1..{0}")]
    NotPerfect(usize),
    #[error("arcs ({0}, {1}) and ({2}, {3}) cross")]
    Crossing(usize, usize, usize, usize),
    #[error("dotted arc ({0}, {1}) is not an arc of the matching")]
    UnknownDottedArc(usize, usize),
    #[error("dotted matching is not standard: dotted arc ({0}, {1}) is nested")]
    NotStandard(usize, usize),
    #[error("tableau is not a standard two-row tableau: {0}")]
    NotStandardTableau(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator s_{i} out of range for n = {n}")]
    GeneratorOutOfRange { n: usize, i: usize },
    #[error("rewrite site does not match: {0}")]
    SiteMismatch(String),
    #[error("undot set {0:?} is not valid for this matching")]
    InvalidUndotSet(Vec<usize>),
    #[error("undot sets have different sizes ({0} vs {1})")]
    CardinalityMismatch(usize, usize),
    #[error("inhomogeneous sum: {0}")]
    Inhomogeneous(String),
    #[error("invalid arc insertion: {0}")]
    InvalidInsertion(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}
