use thiserror::Error;

/// Errors reported by this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical routine (quadrature, root bracketing) failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// A Monte Carlo estimate has no data because every run abstained.
    #[error("no accepted samples: every run abstained")]
    NoAcceptedSamples,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn numerical(msg: impl Into<String>) -> Error {
    Error::Numerical(msg.into())
}
