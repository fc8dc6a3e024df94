use thiserror::Error;

/// Errors raised by the algebra toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate structure constant for product ({0}, {1}) -> {2}")]
    DuplicateEntry(usize, usize, usize),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("map is not multiplicative on basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("operator is not in the multiplication algebra of the domain")]
    NotInMultiplicationAlgebra,
    #[error("1 + u is singular (determinant {determinant}); u is not quasiinvertible")]
    NotQuasiInvertible { determinant: String },
    #[error("operator is not nilpotent")]
    NotNilpotent,
    #[error("bracket fails the Jacobi identity on basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("algebra dimension {dim} exceeds the limit {limit}")]
    DimensionLimit { dim: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown scenario {name:?}; registered: {}", registered.join(", "))]
    UnknownScenario { name: String, registered: Vec<String> },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
