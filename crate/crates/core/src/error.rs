use thiserror::Error;

use crate::complex::Face;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("complex has no facets")]
    EmptyInput,
    #[error("vertex label {label} outside 1..={m}")]
    LabelOutOfRange { label: usize, m: usize },
    #[error("vertex {0} occurs in no facet")]
    MissingVertex(usize),
    #[error("vertex count {0} exceeds the supported maximum of 63")]
    TooManyLabels(usize),
    #[error("empty vertex subset")]
    EmptySubset,
    #[error("facets have different dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(Face),
    #[error("glued complexes share more than the designated facet (extra face {0})")]
    OverlapTooLarge(Face),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("subsets {0} and {1} are not disjoint")]
    NotDisjoint(Face, Face),
    #[error("{m} vertices exceeds the enumeration cap of {cap}")]
    TooManyVertices { m: usize, cap: usize },
    #[error("complex is not connected")]
    NotConnected,
    #[error("complex is not a closed pseudomanifold: {0}")]
    NotPseudomanifold(String),
    #[error("not a chain map: boundary mismatch on simplex {0}")]
    NotAChainMap(Face),
    #[error("dimension {0} is below the required minimum of 3")]
    DimensionTooLow(usize),
    #[error("prerequisite failed: {0}")]
    PrerequisiteFailed(String),
    #[error("link of vertex {0} is not a stacked sphere")]
    LinkNotStacked(usize),
    #[error("the two characterizations of S(M) disagree on {0}")]
    CharacterizationMismatch(Face),
    #[error("{0} is not prime or not below 2^31")]
    NotPrime(u64),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cell budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
}
