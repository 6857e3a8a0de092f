use thiserror::Error;

/// Every failure the library can report.
///
/// Errors split into two families that callers treat differently: input
/// problems (bad files, out-of-domain arguments) and numeric problems
/// (thresholds, divergences, quadrature that would not converge). See
/// [`Error::is_numeric`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("i/o error reading {path}: {message}")]
    Io { path: String, message: String },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("row {row} ({name}): {reason}")]
    Row {
        row: usize,
        name: String,
        reason: String,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown particle set '{0}'")]
    UnknownSet(String),

    #[error("unknown particle '{0}'")]
    UnknownParticle(String),

    #[error("threshold error: z = {z} <= -4 is timelike above pair threshold; real-valued result undefined")]
    Threshold { z: f64 },

    #[error("divergence: {0}")]
    Divergence(String),

    #[error("zero permittivity: {0}")]
    ZeroPermittivity(String),

    #[error("quadrature did not converge: estimate {estimate:e}, error estimate {error:e} after {intervals} intervals")]
    Quadrature {
        estimate: f64,
        error: f64,
        intervals: usize,
    },

    #[error("root finding failed: {0}")]
    Root(String),
}

impl Error {
    /// True for numeric failures (threshold, divergence, non-convergence),
    /// false for input validation failures.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::Threshold { .. }
                | Error::Divergence(_)
                | Error::ZeroPermittivity(_)
                | Error::Quadrature { .. }
                | Error::Root(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
