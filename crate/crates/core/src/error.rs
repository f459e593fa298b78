//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different ambient spaces (variable counts, Lie algebras).
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Input data is structurally invalid (bad bracket table, non-homomorphism, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// An operation was called outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A configured budget (degree cap, slice size, pair count) was exhausted.
    #[error("resource limit exceeded: {what} (size {size})")]
    Resource { what: String, size: usize },

    /// Unsupported configuration, e.g. a term order the Weyl engine refuses.
    #[error("configuration error: {0}")]
    Config(String),

    /// Two independent computations that must agree did not.
    #[error("internal defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
