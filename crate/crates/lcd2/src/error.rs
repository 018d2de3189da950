//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by code construction, linear algebra, oracles, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes do not agree (vector lengths, matrix dimensions).
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A parameter lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested computation exceeds a feasibility guard.
    #[error("infeasible size: {0}")]
    Infeasible(String),

    /// A generator matrix is rank-deficient, so it does not describe a
    /// true [n,k] code.
    #[error("degenerate code: {0}")]
    DegenerateCode(String),

    /// A row transform is singular and would change the code.
    #[error("invalid transform: {0}")]
    InvalidTransform(String),

    /// Matrix text could not be parsed. Lines are numbered from 1.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
