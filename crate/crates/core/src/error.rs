use thiserror::Error;

/// Error taxonomy mirrored by the CLI exit codes: parse failures (2),
/// internal consistency failures (3), genericity violations (4) and
/// precondition failures (5).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("consistency failure: {0}")]
    Consistency(String),

    /// The input represents a non-generic immersion (the discriminant):
    /// a near-tangency, a triple point, an intersection at a vertex, or a
    /// face too small to certify. Invariants are undefined there.
    #[error("genericity violation: {0}")]
    Genericity(String),

    #[error("precondition failure: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
