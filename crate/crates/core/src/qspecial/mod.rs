//! Classical and q-deformed gamma/psi functions.
//!
//! The q-functions follow the product definition
//!
//! ```text
//! Γ_q(x) = (1-q)^{1-x} ∏_{n≥0} (1-q^{n+1}) / (1-q^{n+x}),   0 < q < 1,
//! ```
//!
//! and reduce to the classical functions at `q = 1`. Series are truncated
//! once both the current term and an explicit tail bound fall below
//! `rel_tol · max(1, |partial value|)`; the tail bound (not the last term) is
//! what [`SeriesResult::abs_error_bound`] reports.

mod dilog;
mod gamma;
mod measure;
mod psi;
mod qgamma;
mod qpsi;

pub use dilog::dilog_f;
pub use gamma::{gamma, log_gamma, log_gamma_complex};
pub use measure::{measure_moment, measure_moment_over_t};
pub use psi::{psi, psi_n};
pub use qgamma::{gamma_q, log_gamma_q};
pub use qpsi::{psi_q, psi_q_n};

use crate::{Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Deformation parameter `q ∈ (0, 1]`; `q = 1` selects the classical functions.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct QValue(f64);

impl QValue {
    pub const CLASSICAL: QValue = QValue(1.0);

    pub fn new(q: f64) -> Result<Self> {
        if q > 0.0 && q <= 1.0 {
            Ok(QValue(q))
        } else {
            Err(Error::domain(format!("q must lie in (0, 1], got {q}")))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_classical(self) -> bool {
        self.0 == 1.0
    }

    #[inline]
    pub fn ln(self) -> f64 {
        self.0.ln()
    }

    /// `q^{1/α}`, used by the rescaled psi differences.
    pub fn root(self, alpha: f64) -> Result<Self> {
        QValue::new((self.ln() / alpha).exp())
    }
}

impl TryFrom<f64> for QValue {
    type Error = Error;

    fn try_from(q: f64) -> Result<Self> {
        QValue::new(q)
    }
}

/// Truncation controls shared by all series evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Relative truncation tolerance, measured against `max(1, |value|)`.
    pub rel_tol: f64,
    /// Cap on the number of series or product terms.
    pub max_terms: usize,
    /// Largest `q < 1` admitted by the q-series evaluators.
    pub q_series_max: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            rel_tol: 1e-12,
            max_terms: 100_000,
            q_series_max: 1.0 - 1e-6,
        }
    }
}

impl EvalConfig {
    pub fn new(rel_tol: f64, max_terms: usize, q_series_max: f64) -> Result<Self> {
        let cfg = EvalConfig {
            rel_tol,
            max_terms,
            q_series_max,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::Config(format!(
                "rel_tol must lie in (0, 1), got {}",
                self.rel_tol
            )));
        }
        if self.max_terms == 0 {
            return Err(Error::Config("max_terms must be at least 1".into()));
        }
        if !(self.q_series_max > 0.0 && self.q_series_max < 1.0) {
            return Err(Error::Config(format!(
                "q_series_max must lie in (0, 1), got {}",
                self.q_series_max
            )));
        }
        Ok(())
    }

    /// Same configuration with a different relative tolerance.
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    /// Rejects `q` values the series evaluators would need too many terms for.
    pub(crate) fn check_q(&self, q: QValue) -> Result<()> {
        if q.get() > self.q_series_max {
            Err(Error::QOutOfRange {
                q: q.get(),
                limit: self.q_series_max,
            })
        } else {
            Ok(())
        }
    }
}

/// A value with a bound on its truncation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult<T = f64> {
    pub value: T,
    /// Bound on the discarded tail (or the omitted asymptotic remainder).
    pub abs_error_bound: f64,
    pub terms_used: usize,
    pub converged: bool,
}

impl<T> SeriesResult<T> {
    pub(crate) fn exact(value: T) -> Self {
        SeriesResult {
            value,
            abs_error_bound: 0.0,
            terms_used: 0,
            converged: true,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SeriesResult<U> {
        SeriesResult {
            value: f(self.value),
            abs_error_bound: self.abs_error_bound,
            terms_used: self.terms_used,
            converged: self.converged,
        }
    }
}

/// Sums `offset + Σ_{n≥0} term(n)` until both the last term and
/// `tail_after(n)` (a bound on `|Σ_{k≥n} term(k)|`) drop below the target.
pub(crate) fn sum_series(
    cfg: &EvalConfig,
    offset: f64,
    mut term: impl FnMut(usize) -> f64,
    mut tail_after: impl FnMut(usize) -> f64,
) -> Result<SeriesResult> {
    let mut sum = 0.0;
    let mut tail = f64::INFINITY;
    for n in 0..cfg.max_terms {
        let t = term(n);
        sum += t;
        tail = tail_after(n + 1);
        let target = cfg.rel_tol * (offset + sum).abs().max(1.0);
        if t.abs() < target && tail < target {
            let value = offset + sum;
            if !value.is_finite() {
                return Err(Error::Overflow("series value is not finite".into()));
            }
            return Ok(SeriesResult {
                value,
                abs_error_bound: tail,
                terms_used: n + 1,
                converged: true,
            });
        }
    }
    Err(Error::NonConvergence {
        terms: cfg.max_terms,
        tail_bound: tail,
    })
}

pub(crate) fn require_positive(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{name} must be positive and finite, got {x}"
        )))
    }
}
