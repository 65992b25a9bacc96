use thiserror::Error;

/// Errors raised by evaluators, kernels and checkers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter combination violates the hypotheses of a kernel or theorem.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The series hit `max_terms` before its tail bound met the tolerance.
    #[error("series did not converge within {terms} terms (tail bound {tail_bound:e})")]
    NonConvergence { terms: usize, tail_bound: f64 },

    /// `q` is above the largest value the q-series evaluators accept.
    #[error("q = {q} exceeds the q-series limit {limit}; pass q = 1 for the classical function")]
    QOutOfRange { q: f64, limit: f64 },

    /// The result does not fit in binary64.
    #[error("overflow: {0}")]
    Overflow(String),

    /// A sampling grid does not fit the function's valid interval.
    #[error("grid error: {0}")]
    Grid(String),

    /// Evaluation failed at a specific abscissa during a scan.
    #[error("evaluation failed at x = {x}: {source}")]
    Evaluation {
        x: f64,
        #[source]
        source: Box<Error>,
    },

    /// Invalid evaluator configuration.
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn at(self, x: f64) -> Self {
        match self {
            e @ Error::Evaluation { .. } => e,
            e => Error::Evaluation {
                x,
                source: Box::new(e),
            },
        }
    }
}
