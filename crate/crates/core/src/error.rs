use thiserror::Error;

use crate::SolidKind;

/// Errors produced by the construction, counting and matrix routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied argument violates an operation's precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The `(r, s)` pair does not make every generator coordinate integral.
    #[error("(r, s) = ({r}, {s}) is not suitable for the triple: {reason}")]
    UnsuitablePair {
        r: String,
        s: String,
        reason: String,
    },

    /// `(m, n) = (0, 0)` collapses the triangle to a point.
    #[error("degenerate input: (m, n) = (0, 0)")]
    Degenerate,

    #[error("({m}, {n}) is not in Omega({k}): m^2 - mn + n^2 = {norm}, expected {k}^2")]
    NotInOmega {
        m: String,
        n: String,
        k: String,
        norm: String,
    },

    /// The supplied points do not form the requested regular solid.
    #[error("not a regular {0}")]
    NotRegular(String),

    #[error("oracle refuses {kind} at n = {n}: exhaustive search is capped at n <= {cap}")]
    OracleCapExceeded { kind: SolidKind, n: u32, cap: u32 },

    #[error("unknown counting strategy `{0}`")]
    UnknownStrategy(String),

    /// A mathematical guarantee failed to hold. Always an implementation bug.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
