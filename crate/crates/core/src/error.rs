use thiserror::Error;

/// Errors raised across the geometry, enumeration and spectral layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at (or numerically at) a pole of a reflection.
    #[error("singularity: {0}")]
    Singularity(String),

    /// The generator data does not describe a usable Schottky configuration.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// A size cap would be exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Matrix structure violates a precondition (reducible support, uncertified bracket).
    #[error("structural error: {0}")]
    Structural(String),

    /// An iteration hit its cap before meeting the tolerance.
    #[error("no convergence: {0}")]
    Convergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
