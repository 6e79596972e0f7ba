use thiserror::Error;

/// Errors raised while evaluating kernels, partition sums and form factors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A denominator vanished (exactly, or below the absolute floor for floats).
    #[error("singular configuration: {0}")]
    SingularConfiguration(String),

    /// Part sizes or set sizes do not add up.
    #[error("cardinality mismatch: {0}")]
    CardinalityMismatch(String),

    /// An r-function value was requested at a point the table does not cover.
    #[error("missing {which} value at {point}")]
    MissingRValue { which: &'static str, point: String },

    /// Two sources give different r-function values at the same point.
    #[error("conflicting {which} values at {point}")]
    ConflictingRValue { which: &'static str, point: String },

    /// A form factor was requested between states that are not on-shell.
    #[error("off-shell data: {0}")]
    OffShell(String),

    /// No action formula exists for this entry; use the mappings instead.
    #[error("unsupported monodromy entry ({0},{1}) for this operation")]
    UnsupportedEntry(u8, u8),

    /// Newton iteration did not reach the requested tolerance.
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    /// The Newton Jacobian could not be inverted.
    #[error("degenerate Jacobian in Newton step")]
    DegenerateJacobian,

    /// Malformed scalar or input document.
    #[error("parse error: {0}")]
    Parse(String),

    /// Two scalar backends met in one computation.
    #[error("backend mismatch: {0}")]
    BackendMismatch(String),

    /// Random draws kept producing degenerate configurations.
    #[error("could not draw a generic configuration after {0} attempts")]
    DrawExhausted(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn singular(what: impl Into<String>) -> Error {
    Error::SingularConfiguration(what.into())
}
