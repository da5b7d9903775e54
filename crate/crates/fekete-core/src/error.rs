//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Modulus failed the primality / oddness check.
    #[error("invalid modulus {0}: {1}")]
    InvalidModulus(u64, &'static str),

    /// Bad argument combination for a sum or scan.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An element was not invertible in the quotient ring; the modulus is
    /// reducible and the offending factor is reported in string form.
    #[error("modulus is reducible; nontrivial factor of positive Y-degree: {factor}")]
    ReducibleModulus { factor: String },

    /// Division by zero in exact arithmetic.
    #[error("division by zero")]
    DivisionByZero,

    /// The requested series branch is singular at the expansion point.
    #[error("singular branch: h_Y(0, A_0) = 0; supply a different branch")]
    SingularBranch,

    /// The supplied initial value is not a root of h(0, Y).
    #[error("branch mismatch: supplied A_0 is not a root of h(0, Y)")]
    BranchMismatch,

    /// Forward extension of a recurrence hit a vanishing leading coefficient.
    #[error("singular index: leading recurrence coefficient vanishes at n = {0}")]
    SingularIndex(i64),

    /// Not enough sequence data for a guessing run.
    #[error("insufficient data: need at least {needed} terms, got {got}")]
    InsufficientData { needed: usize, got: usize },

    /// Root certification could not be completed within the refinement budget.
    #[error("root certification failed: {0}")]
    CertificationFailure(String),

    /// A mathematical precondition of an operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A stated bound failed on a concrete instance; carries the counterexample.
    #[error("bound violation: {0}")]
    BoundViolation(String),

    /// Serialized data could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed (a bug, not a user error).
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
