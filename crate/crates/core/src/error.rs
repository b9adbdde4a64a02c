//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input that must be finite was NaN or infinite.
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    /// An argument fell outside the valid range of an operation.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A potential was evaluated at (or numerically too close to) a pole.
    #[error("potential singularity near x = {0}")]
    Singularity(f64),

    /// No closed-form eigenfunctions are available for the requested family.
    #[error("closed-form eigenfunctions are not available for the {0} family")]
    UnsupportedFamily(&'static str),

    /// A level index beyond the bound-state count was requested.
    #[error("level {n} exceeds the bound-state count {count}")]
    LevelOutOfRange { n: usize, count: usize },

    /// Adaptive quadrature hit its maximum refinement depth.
    #[error("quadrature did not converge within depth {max_depth}")]
    QuadratureDepth { max_depth: usize },

    /// A bracketing root finder was called without a sign change.
    #[error("no sign change on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },

    /// An eigenvalue iteration exceeded its sweep budget.
    #[error("eigenvalue iteration did not converge within {iters} sweeps")]
    EigenConvergence { iters: usize },

    /// Polynomial recurrence parameters make a recurrence denominator vanish.
    #[error("degenerate polynomial parameters: {0}")]
    DegenerateParameters(String),

    /// A normalization was requested for (numerically) zero input.
    #[error("zero-norm input")]
    ZeroNorm,

    /// A grid violates its invariants.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// A solver was asked for more eigenvalues than its budget allows.
    #[error("requested {requested} eigenvalues, budget allows {allowed}")]
    BudgetExceeded { requested: usize, allowed: usize },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
