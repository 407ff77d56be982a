//! Crate-wide error type shared by the algebra layer, the two concrete
//! contexts and the generic checks.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a chain complex: {0}")]
    NotAComplex(String),
    #[error("not a chain map: {0}")]
    NotAChainMap(String),
    #[error("pushout is not free: {0}")]
    NotFree(String),
    #[error("degree bound exceeded: {0}")]
    DegreeBound(String),
    #[error("cocone does not commute: {0}")]
    NonCommutingCocone(String),
    #[error("word is not composable: {0}")]
    NonComposable(String),
    #[error("rewriting depth bound exceeded: {0}")]
    DepthExceeded(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("relation is not parallel: {0}")]
    NotParallel(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("interval carries no meet/join")]
    MissingLattice,
    #[error("interval is not representable: {0}")]
    NotRepresentable(String),
    #[error("operation not supported by this context: {0}")]
    Unsupported(String),
    #[error("no factorization exists: {0}")]
    NoFactorization(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("configuration error: {0}")]
    Config(String),
    #[error("unknown scenario: {0}")]
    UnknownScenario(String),
}

pub type Result<T> = std::result::Result<T, Error>;
