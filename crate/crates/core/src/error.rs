//! Error type shared by all modules.

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series evaluation did not converge within the term cap. The partial
    /// sum and last term are carried for diagnostics; the value is never
    /// silently truncated.
    #[error(
        "series did not converge after {terms} terms at t = {t:.6e} \
         (last term {last_term:.3e}, partial sum {partial_sum:.6e})"
    )]
    SeriesNoConvergence {
        terms: usize,
        t: f64,
        last_term: f64,
        partial_sum: f64,
    },

    /// Evaluation requested at (or numerically on top of) a pole of
    /// `𝒦_ν(·, t)`, i.e. a zero of `𝒢₋`. Carries the nearest pole estimate.
    #[error("evaluation at a pole of K: nearest ladder value ~ {nearest_pole:.12e} (k = {k})")]
    AtPole { k: usize, nearest_pole: f64 },

    /// A root bracket could not be established.
    #[error("bracket expansion failed after {attempts} attempts near {guess:.6e}")]
    BracketFailure { guess: f64, attempts: usize },

    /// An iterative solver exhausted its iteration budget.
    #[error("solver did not converge: {0}")]
    SolverNoConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Exit status used by the command-line front end: domain errors map to
    /// 2, everything else (solver/series failures) to 3.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) => 2,
            _ => 3,
        }
    }
}
