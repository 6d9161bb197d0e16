use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The polynomial cannot be written in the triangular variable `n(n+1)/2`.
    #[error("not a polynomial in n(n+1)/2: {0}")]
    NotTriangular(String),

    /// A step that must be exact left a remainder. Always a bug or a
    /// falsified identity, never something to round away.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
