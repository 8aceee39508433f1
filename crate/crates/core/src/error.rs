use thiserror::Error;

use crate::algcore::Violation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),

    #[error("modules live over different algebras or sides")]
    AlgebraMismatch,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(Violation),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),

    #[error("matrix does not intertwine the action of basis element {index}")]
    NotIntertwining { index: usize },

    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
