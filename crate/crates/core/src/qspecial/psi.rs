//! Digamma and polygamma functions on the positive half-line.

use super::{require_positive, EvalConfig, SeriesResult, EULER_GAMMA};
use crate::{Error, Result};

/// `B_{2k}/(2k)` for the digamma asymptotic series, `k = 1..=8`.
const DIGAMMA_ASYMP: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

/// `B_{2j}/(2j)!` for the Euler–Maclaurin corrections, `j = 1..=10`.
const EM_COEFFS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
    43867.0 / 5_109_094_217_170_944_000.0,
    -174_611.0 / 802_857_662_698_291_200_000.0,
];

const SHIFT_TARGET: f64 = 15.0;

/// Digamma `ψ(x) = Γ'(x)/Γ(x)` for `x > 0`.
///
/// Upward recurrence `ψ(x) = ψ(x+m) - Σ_{j<m} 1/(x+j)` to `x+m ≥ 15`, then
/// the asymptotic series `ln w - 1/(2w) - Σ B_{2k}/(2k w^{2k})`, whose
/// remainder is bounded by the first omitted term. Integers below the shift
/// target use `ψ(n) = -γ + Σ_{k<n} 1/k`, which avoids cancelling `ln w`
/// against the recurrence sum.
pub fn psi(x: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    cfg.validate()?;
    require_positive("x", x)?;

    if x.fract() == 0.0 && x < SHIFT_TARGET {
        let n = x as usize;
        let harmonic: f64 = (1..n).rev().map(|k| 1.0 / k as f64).sum();
        return Ok(SeriesResult {
            value: harmonic - EULER_GAMMA,
            abs_error_bound: 0.0,
            terms_used: n - 1,
            converged: true,
        });
    }

    let mut shift = 0usize;
    while x + (shift as f64) < SHIFT_TARGET {
        shift += 1;
    }
    let w = x + shift as f64;
    // Largest-index terms first: they are the smallest.
    let recur: f64 = (0..shift).rev().map(|j| 1.0 / (x + j as f64)).sum();

    let inv2 = 1.0 / (w * w);
    let mut pow = inv2;
    let mut series = 0.0;
    let mut bound = 0.0;
    let mut used = 0;
    for (k, c) in DIGAMMA_ASYMP.iter().enumerate() {
        let term = c * pow;
        series += term;
        pow *= inv2;
        used = k + 1;
        bound = DIGAMMA_ASYMP
            .get(k + 1)
            .map_or(0.0, |next| (next * pow).abs());
        if bound < f64::EPSILON * 1e-3 {
            break;
        }
    }
    let value = w.ln() - 0.5 / w - series - recur;
    Ok(SeriesResult {
        value,
        abs_error_bound: bound,
        terms_used: used + shift,
        converged: true,
    })
}

/// Polygamma `ψ^{(n)}(x) = (-1)^{n+1} n! Σ_{k≥0} (k+x)^{-n-1}` for `n ≥ 1`.
///
/// The first terms are summed explicitly until `x + K ≥ 15 + n`; the tail
/// `Σ_{k≥0} (y+k)^{-m}` at `y = x + K` is evaluated by Euler–Maclaurin (the
/// integral `y^{1-m}/(m-1)` plus boundary corrections). Because every odd
/// derivative of `t^{-m}` has the same sign, the remainder is bounded by the
/// first omitted correction, which is what `abs_error_bound` reports.
pub fn psi_n(n: usize, x: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    cfg.validate()?;
    if n == 0 {
        return Err(Error::domain(
            "psi_n requires order n ≥ 1; use psi for n = 0",
        ));
    }
    require_positive("x", x)?;
    let m = (n + 1) as f64;
    let threshold = SHIFT_TARGET + n as f64;

    let mut k = 0usize;
    let mut head = Vec::new();
    while x + (k as f64) < threshold {
        head.push((x + k as f64).powf(-m));
        k += 1;
    }
    if k > cfg.max_terms {
        return Err(Error::NonConvergence {
            terms: cfg.max_terms,
            tail_bound: f64::INFINITY,
        });
    }
    let head_sum: f64 = head.iter().rev().sum();

    let y = x + k as f64;
    let y_pow = y.powf(-m);
    let mut tail = y_pow * y / (m - 1.0) + 0.5 * y_pow;
    // rising = m (m+1) ... (m+2j-2), ypow_j = y^{-m-2j+1}
    let mut rising = m;
    let mut ypow = y_pow / y;
    let mut bound = 0.0;
    let mut used = k;
    for (j, c) in EM_COEFFS.iter().enumerate() {
        let term = c * rising * ypow;
        let scale = (head_sum + tail).abs();
        if j + 1 == EM_COEFFS.len() || term.abs() < 1e-3 * f64::EPSILON * scale {
            bound = term.abs();
            break;
        }
        tail += term;
        used += 1;
        let a = m + 2.0 * (j as f64) + 1.0;
        rising *= a * (a + 1.0);
        ypow /= y * y;
    }

    let zeta = head_sum + tail;
    let factorial: f64 = (1..=n).map(|i| i as f64).product();
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let value = sign * factorial * zeta;
    if !value.is_finite() {
        return Err(Error::Overflow(format!("ψ^({n})({x}) is not finite")));
    }
    let abs_error_bound = factorial * bound;
    Ok(SeriesResult {
        value,
        abs_error_bound,
        terms_used: used,
        converged: abs_error_bound <= cfg.rel_tol * value.abs().max(1.0),
    })
}
