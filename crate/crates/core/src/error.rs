use thiserror::Error;

/// Errors shared by all modules.
///
/// Mathematical property *failures* (an inequality that does not hold where
/// the theory says it must) are never errors; they are reported as data by
/// the verification harnesses. Errors are reserved for inputs that fall
/// outside an operation's contract.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the operation's domain (malformed set, bad parameter).
    #[error("domain error: {0}")]
    Domain(String),

    /// A value fell outside an admissible numeric range.
    #[error("value {value} outside range [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },

    /// A size guard tripped (tree depth, component count, grid resolution).
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    /// The exact cover optimization was asked to run on a non-concave gauge;
    /// only the brute-force / limit modes bound such contents.
    #[error("exact content requires a concave gauge; use brute-force bounds instead")]
    NonConcaveGauge,

    /// A theorem's hypothesis does not hold for the supplied inputs, so the
    /// bound is inapplicable (reported as such, never as a failure).
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// No nonzero measure on the set can satisfy the interval bound, because
    /// the set has zero content under the gauge.
    #[error("degenerate set: zero content admits no nonzero Frostman measure")]
    DegenerateSet,

    /// An integrand could not be evaluated to a finite value.
    #[error("evaluation error: {0}")]
    Evaluation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
