use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (bad type tag, index out of range, ...).
    #[error("invalid input: {0}")]
    Input(String),
    /// A word that must be reduced is not.
    #[error("validation failed: {0}")]
    Validation(String),
    /// A leading principal minor vanishes, so no Gaussian decomposition exists.
    #[error("matrix is not in G_0: leading principal minor {index} vanishes")]
    NotInG0 { index: usize },
    #[error("twist undefined at x: {0}")]
    TwistUndefined(String),
    #[error("sampling failed: {0}")]
    Sampling(String),
    /// An internal identity failed; this indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
