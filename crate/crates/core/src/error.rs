use thiserror::Error;

/// Errors produced by the toolkit.
///
/// `Structural` covers malformed input (bad lengths, indices out of
/// range); it is distinct from axiom failures, which are reported through
/// [`crate::ValidationReport`] rather than as errors. `InvariantViolation`
/// marks conditions that are mathematically impossible for valid input,
/// so hitting one means the input was corrupt in a way validation cannot
/// see, or there is a bug.
#[derive(Debug, Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("not modular data: {0}")]
    NotModular(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}
