use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("subgroup closure exceeded the bound of {bound} elements")]
    ClosureBound { bound: usize },

    #[error("exhaustive search refused for a group of order {order} (limit {limit})")]
    SearchInfeasible { order: usize, limit: usize },

    #[error("no isomorphism type in the catalog matches a group of order {order}")]
    UnknownIsoType { order: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("conjugating element {eta} by group element {g} leaves the subgroup")]
    NotNormalized { g: usize, eta: usize },

    #[error("descended algebra has dimension {found}, expected {expected}")]
    DescentDimension { expected: usize, found: usize },

    #[error("descended space is not closed: {0}")]
    NotClosed(String),

    #[error("invalid Galois algebra: {0}")]
    InvalidGaloisAlgebra(String),

    #[error("structure map check failed: {0}")]
    MapCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
