//! Shared error type for the whole library.

/// Errors reported by constructors and operations across the library.
///
/// `Parse` carries the byte offset of the first offending character so that
/// callers can point at the exact spot in the input text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("projection target {j} exceeds rank {rank}")]
    ProjectionOutOfRange { j: usize, rank: usize },

    #[error("cannot scale infinity by a negative integer")]
    NegativeScaleOfInfinity,

    #[error("expected a finite value, found infinity")]
    UnexpectedInfinity,

    #[error("infinite bound cannot be flattened; resolve extended strata before flattening")]
    InfiniteBound,

    #[error("negative exponent in an orthant-patch polynomial")]
    NegativeExponent,

    #[error("polynomial has no terms")]
    EmptyPolynomial,

    #[error("point lies outside every cell of the complex")]
    PointNotInComplex,

    #[error("no cell path connects the two endpoints")]
    Disconnected,

    #[error("metric graph is disconnected")]
    DisconnectedGraph,

    #[error("edge parameter out of range")]
    ParameterOutOfRange,

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse { offset, message: message.into() }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::Invalid(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
