use std::f64::consts::FRAC_PI_2;

use crate::qspecial::QValue;
use crate::{Error, Result};

/// `∫_0^∞ f(t) dt` by the exp-sinh rule `t = exp(π/2 · sinh u)`.
///
/// The step is halved until two successive levels agree to `rel_tol`.
/// Non-finite samples at the far ends (where the integrand has already
/// decayed) are treated as zero.
pub fn exp_sinh(f: impl Fn(f64) -> f64, rel_tol: f64) -> Result<f64> {
    const U_MAX: f64 = 4.5;
    let sample = |u: f64| {
        let t = (FRAC_PI_2 * u.sinh()).exp();
        let w = t * FRAC_PI_2 * u.cosh();
        let v = f(t) * w;
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };

    let mut h = 0.5;
    let steps = (U_MAX / h) as i64;
    let mut sum: f64 = (-steps..=steps).map(|j| sample(j as f64 * h)).sum();
    let mut estimate = sum * h;
    for _ in 0..9 {
        h *= 0.5;
        let steps = (U_MAX / h) as i64;
        // Only the new odd-indexed nodes need evaluating.
        let fresh: f64 = (-steps..=steps)
            .filter(|j| j % 2 != 0)
            .map(|j| sample(j as f64 * h))
            .sum();
        sum += fresh;
        let next = sum * h;
        if (next - estimate).abs() <= rel_tol * next.abs().max(1e-300) {
            return Ok(next);
        }
        estimate = next;
    }
    Err(Error::NonConvergence {
        terms: ((U_MAX / h) as usize) * 2 + 1,
        tail_bound: f64::NAN,
    })
}

/// `∫ f(t) dγ_q(t)`: point masses `-ln q` at `t_k = -k ln q` for `q < 1`,
/// Lebesgue measure on `(0, ∞)` for `q = 1`.
///
/// The discrete sum stops once `|f(t_k)|` has stayed below `rel_tol · |sum|`
/// for a run of consecutive terms; integrands here decay geometrically.
pub fn measure_integral(q: QValue, f: impl Fn(f64) -> f64, rel_tol: f64) -> Result<f64> {
    if q.is_classical() {
        return exp_sinh(f, rel_tol);
    }
    const MAX_TERMS: usize = 5_000_000;
    const QUIET_RUN: usize = 8;
    let mass = -q.ln();
    let mut sum = 0.0;
    let mut quiet = 0;
    for k in 1..=MAX_TERMS {
        let v = mass * f(k as f64 * mass);
        if !v.is_finite() {
            return Err(Error::Overflow(format!(
                "integrand not finite at t = {}",
                k as f64 * mass
            )));
        }
        sum += v;
        if v.abs() <= rel_tol * sum.abs() {
            quiet += 1;
            if quiet >= QUIET_RUN {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence {
        terms: MAX_TERMS,
        tail_bound: f64::NAN,
    })
}
