//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Family D requires an even number of negative images.
    #[error("sign parity violation: {0}")]
    ParityViolation(String),
    #[error("family or rank mismatch: {0}")]
    Mismatch(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("not an involution: {0}")]
    NotInvolution(String),
    #[error("not a basic involution: {0}")]
    NotBasic(String),
    /// An outcome that valid arithmetic can never produce.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
