//! Classical log-gamma by upward recurrence and the Stirling series.
//!
//! For `Re z < 15` the argument is shifted up with `ln Γ(z) = ln Γ(z+m) - Σ ln(z+j)`;
//! the shifted value is expanded as
//!
//! ```text
//! ln Γ(w) = (w - 1/2) ln w - w + ln √(2π) + Σ_{k≥1} B_{2k} / (2k(2k-1) w^{2k-1})
//! ```
//!
//! Coefficients are the exact Bernoulli ratios `B_{2k}/(2k(2k-1))` for
//! `k = 1..=10` (B₂ = 1/6, B₄ = -1/30, B₆ = 1/42, B₈ = -1/30, B₁₀ = 5/66,
//! B₁₂ = -691/2730, B₁₄ = 7/6, B₁₆ = -3617/510, B₁₈ = 43867/798,
//! B₂₀ = -174611/330). With `|w| ≥ 15` the eighth term is below 1e-19.
//!
//! For real `w > 0` the remainder is bounded by the first omitted term. For
//! complex `w` with `|arg w| = θ < π/2` the bound picks up a factor
//! `sec^{2k}(θ/2) ≤ 2^k`.

use num_complex::Complex64;

use super::{require_positive, SeriesResult};
use crate::{Error, Result};

const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

const SHIFT_TARGET: f64 = 15.0;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// `ln Γ(x)` for real `x > 0`.
pub fn log_gamma(x: f64) -> Result<SeriesResult> {
    require_positive("x", x)?;
    if x == 1.0 || x == 2.0 {
        return Ok(SeriesResult::exact(0.0));
    }

    let mut w = x;
    let mut prod = 1.0;
    while w < SHIFT_TARGET {
        prod *= w;
        w += 1.0;
    }

    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut pow = inv;
    let mut used = 0;
    let mut bound = 0.0;
    for (k, c) in STIRLING.iter().enumerate() {
        let term = c * pow;
        if term.abs() < f64::EPSILON * 1e-3 {
            bound = term.abs();
            used = k;
            break;
        }
        series += term;
        pow *= inv2;
        used = k + 1;
        bound = STIRLING.get(k + 1).map_or(0.0, |next| (next * pow).abs());
    }

    let value = (w - 0.5) * w.ln() - w + LN_SQRT_2PI + series - prod.ln();
    if !value.is_finite() {
        return Err(Error::Overflow(format!("ln Γ({x}) is not finite")));
    }
    Ok(SeriesResult {
        value,
        abs_error_bound: bound,
        terms_used: used,
        converged: true,
    })
}

/// `Γ(x)` for real `x > 0`, as `exp(ln Γ(x))`.
pub fn gamma(x: f64) -> Result<SeriesResult> {
    let lg = log_gamma(x)?;
    exp_result(lg, "Γ")
}

pub(crate) fn exp_result(lg: SeriesResult, what: &str) -> Result<SeriesResult> {
    if lg.value > f64::MAX.ln() {
        return Err(Error::Overflow(format!(
            "{what} overflows binary64 (log value {})",
            lg.value
        )));
    }
    let value = lg.value.exp();
    Ok(SeriesResult {
        value,
        abs_error_bound: value * lg.abs_error_bound.exp_m1(),
        terms_used: lg.terms_used,
        converged: lg.converged,
    })
}

/// `ln Γ(z)` for `Re z > 0`.
///
/// The imaginary part is the continuous branch that agrees with the real
/// logarithm on the positive axis (it is not reduced modulo 2π), so
/// `ln Γ(z+1) = ln Γ(z) + ln z` holds exactly in the principal log.
pub fn log_gamma_complex(z: Complex64) -> Result<SeriesResult<Complex64>> {
    if !(z.re > 0.0) || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain(format!(
            "log_gamma requires Re z > 0, got {z}"
        )));
    }
    if z.im == 0.0 {
        return log_gamma(z.re).map(|r| r.map(|v| Complex64::new(v, 0.0)));
    }

    let mut w = z;
    let mut prod = Complex64::new(1.0, 0.0);
    let mut arg_sum = 0.0;
    while w.re < SHIFT_TARGET && w.im.abs() < SHIFT_TARGET {
        prod *= w;
        arg_sum += w.arg();
        w += 1.0;
    }
    let shift_log = Complex64::new(prod.norm().ln(), arg_sum);

    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    let mut used = 0;
    let half_arg = 0.5 * w.arg();
    let sec2 = 1.0 / (half_arg.cos() * half_arg.cos());
    let mut bound = 0.0;
    let mut sec_pow = sec2;
    for (k, c) in STIRLING.iter().enumerate() {
        let term = pow * *c;
        if term.norm() * sec_pow < f64::EPSILON * 1e-3 {
            bound = term.norm() * sec_pow;
            used = k;
            break;
        }
        series += term;
        pow *= inv2;
        sec_pow *= sec2;
        used = k + 1;
        bound = STIRLING
            .get(k + 1)
            .map_or(0.0, |next| (pow * *next).norm() * sec_pow);
    }

    let value = (w - 0.5) * w.ln() - w + LN_SQRT_2PI + series - shift_log;
    Ok(SeriesResult {
        value,
        abs_error_bound: bound,
        terms_used: used,
        converged: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn special_values() {
        assert_eq!(log_gamma(1.0).unwrap().value, 0.0);
        assert_eq!(log_gamma(2.0).unwrap().value, 0.0);
        let half = log_gamma(0.5).unwrap().value;
        assert!(close(half, 0.5 * PI.ln(), 1e-14), "{half}");
        assert!((half - 0.572_364_942_9).abs() < 1e-10);
        let three_half = log_gamma(1.5).unwrap().value;
        assert!(close(three_half, (PI.sqrt() / 2.0).ln(), 1e-14));
        assert!((three_half + 0.120_782_237_6).abs() < 1e-10);
    }

    #[test]
    fn factorials() {
        let mut fact = 1.0f64;
        for n in 1..=30u32 {
            let lg = log_gamma(n as f64 + 1.0).unwrap().value;
            fact *= n as f64;
            assert!(close(lg, fact.ln(), 1e-14), "n={n}");
        }
    }

    #[test]
    fn matches_statrs_on_real_axis() {
        let mut x = 1e-3;
        while x <= 170.0 {
            let ours = log_gamma(x).unwrap().value;
            let reference = statrs::function::gamma::ln_gamma(x);
            assert!(
                close(ours, reference, 1e-12),
                "x={x}: {ours} vs {reference}"
            );
            x *= 1.07;
        }
    }

    #[test]
    fn domain_errors() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
        assert!(log_gamma(f64::NAN).is_err());
        assert!(log_gamma_complex(Complex64::new(0.0, 1.0)).is_err());
        assert!(log_gamma_complex(Complex64::new(-0.5, 2.0)).is_err());
    }

    #[test]
    fn complex_modulus_identities() {
        // |Γ(1/2 + iy)|² = π / cosh(πy), |Γ(1 + iy)|² = πy / sinh(πy).
        for &y in &[0.1, 0.7, 1.0, 3.0, 10.0, 25.0, 60.0, 100.0] {
            let a = log_gamma_complex(Complex64::new(0.5, y)).unwrap().value.re;
            let expect_a = 0.5 * (PI.ln() - (PI * y).cosh().ln());
            assert!(close(a, expect_a, 1e-12), "y={y}: {a} vs {expect_a}");
            let b = log_gamma_complex(Complex64::new(1.0, y)).unwrap().value.re;
            let ln_sinh = PI * y + (-(-2.0 * PI * y).exp_m1()).ln() - 2f64.ln();
            let expect_b = 0.5 * ((PI * y).ln() - ln_sinh);
            assert!(close(b, expect_b, 1e-12), "y={y}: {b} vs {expect_b}");
        }
    }

    #[test]
    fn complex_recurrence_and_conjugation() {
        for &(re, im) in &[
            (0.3, 2.0),
            (1.7, -5.0),
            (4.0, 40.0),
            (0.05, 99.0),
            (14.5, 0.5),
        ] {
            let z = Complex64::new(re, im);
            let lz = log_gamma_complex(z).unwrap().value;
            let lz1 = log_gamma_complex(z + 1.0).unwrap().value;
            let diff = lz1 - lz - z.ln();
            assert!(diff.norm() < 1e-12 * lz1.norm().max(1.0), "z={z}: {diff}");
            let conj = log_gamma_complex(z.conj()).unwrap().value;
            assert!((conj - lz.conj()).norm() < 1e-13 * lz.norm().max(1.0));
        }
    }

    #[test]
    fn gamma_values() {
        assert!(close(gamma(5.0).unwrap().value, 24.0, 1e-14));
        assert!(close(gamma(0.5).unwrap().value, PI.sqrt(), 1e-14));
        assert!(matches!(gamma(200.0), Err(Error::Overflow(_))));
    }
}
