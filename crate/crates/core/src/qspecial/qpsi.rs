use super::psi::{psi, psi_n};
use super::{require_positive, sum_series, EvalConfig, QValue, SeriesResult};
use crate::{Error, Result};

/// `ψ_q(x) = -ln(1-q) + ln q Σ_{k≥1} q^{kx}/(1-q^k)`.
///
/// After `K` terms the remainder is at most
/// `|ln q| q^{(K+1)x} / ((1-q)(1-q^x))`.
pub fn psi_q(x: f64, q: QValue, cfg: &EvalConfig) -> Result<SeriesResult> {
    cfg.validate()?;
    require_positive("x", x)?;
    if q.is_classical() {
        return psi(x, cfg);
    }
    cfg.check_q(q)?;

    let lnq = q.ln();
    let one_minus_q = -lnq.exp_m1();
    let one_minus_qx = -(x * lnq).exp_m1();
    sum_series(
        cfg,
        -one_minus_q.ln(),
        |n| {
            let k = (n + 1) as f64;
            lnq * (k * x * lnq).exp() / -(k * lnq).exp_m1()
        },
        |n| {
            let k = (n + 1) as f64;
            lnq.abs() * (k * x * lnq).exp() / (one_minus_q * one_minus_qx)
        },
    )
}

/// `ψ_q^{(n)}(x) = (ln q)^{n+1} Σ_{k≥1} k^n q^{kx}/(1-q^k)` for `n ≥ 1`.
///
/// With `r = q^x` and `ρ = ((K+2)/(K+1))^n r`, the terms past index `K` are
/// dominated by a geometric series of ratio `ρ`, so once `ρ < 1` the tail is
/// at most `|ln q|^{n+1} (K+1)^n r^{K+1} / ((1-ρ)(1-q^{K+1}))`.
/// `n = 0` gives [`psi_q`]; `q = 1` gives the classical polygamma.
pub fn psi_q_n(n: usize, x: f64, q: QValue, cfg: &EvalConfig) -> Result<SeriesResult> {
    if n == 0 {
        return psi_q(x, q, cfg);
    }
    cfg.validate()?;
    require_positive("x", x)?;
    if q.is_classical() {
        return psi_n(n, x, cfg);
    }
    cfg.check_q(q)?;

    let lnq = q.ln();
    let nn = n as i32;
    let factor = lnq.powi(nn + 1);
    if factor == 0.0 || !factor.is_finite() {
        return Err(Error::Overflow(format!(
            "(ln q)^{} is not representable",
            n + 1
        )));
    }
    let xlnq = x * lnq;
    sum_series(
        cfg,
        0.0,
        |i| {
            let k = (i + 1) as f64;
            factor * (nn as f64 * k.ln() + k * xlnq).exp() / -(k * lnq).exp_m1()
        },
        |i| {
            // Bound on Σ_{k ≥ i+1}.
            let k = (i + 1) as f64;
            let rho = ((k + 1.0) / k).powi(nn) * xlnq.exp();
            if rho >= 1.0 {
                return f64::INFINITY;
            }
            factor.abs() * (nn as f64 * k.ln() + k * xlnq).exp()
                / ((1.0 - rho) * -(k * lnq).exp_m1())
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qspecial::log_gamma_q;

    fn q(v: f64) -> QValue {
        QValue::new(v).unwrap()
    }

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn matches_long_partial_sum() {
        let (x, qq) = (1.0f64, 0.5f64);
        let lnq = qq.ln();
        let partial: f64 = (1..=200)
            .map(|k| qq.powf(k as f64 * x) / (1.0 - qq.powi(k)))
            .sum::<f64>();
        let direct = -(1.0 - qq).ln() + lnq * partial;
        let r = psi_q(x, q(qq), &cfg()).unwrap();
        assert!(
            (r.value - direct).abs() <= r.abs_error_bound + 1e-14,
            "{} vs {direct}",
            r.value
        );
    }

    #[test]
    fn derivative_of_log_gamma_q() {
        let h = 1e-5;
        for &qq in &[0.2, 0.5, 0.9] {
            for &x in &[0.4, 1.0, 2.5, 6.0] {
                let lp = log_gamma_q(x + h, q(qq), &cfg()).unwrap().value;
                let lm = log_gamma_q(x - h, q(qq), &cfg()).unwrap().value;
                let fd = (lp - lm) / (2.0 * h);
                let v = psi_q(x, q(qq), &cfg()).unwrap().value;
                assert!((fd - v).abs() < 1e-6, "q={qq} x={x}: {fd} vs {v}");
            }
        }
    }

    #[test]
    fn classical_limit_is_monotone() {
        let exact = psi(2.0, &cfg()).unwrap().value;
        let errs: Vec<f64> = [0.9, 0.99, 0.999]
            .iter()
            .map(|&qq| (psi_q(2.0, q(qq), &cfg()).unwrap().value - exact).abs())
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
    }

    #[test]
    fn trigamma_q_partial_sums() {
        let qq = 0.5f64;
        let partial: f64 = (1..=200)
            .map(|k| k as f64 * qq.powi(k) / (1.0 - qq.powi(k)))
            .sum();
        let direct = qq.ln().powi(2) * partial;
        let r = psi_q_n(1, 1.0, q(qq), &cfg()).unwrap();
        assert!((r.value - direct).abs() <= r.abs_error_bound + 1e-14);
    }

    #[test]
    fn polygamma_q_matches_finite_differences() {
        let h = 1e-5;
        for &qq in &[0.3, 0.7, 0.95] {
            for &x in &[0.3, 1.0, 3.0] {
                let fd = (psi_q(x + h, q(qq), &cfg()).unwrap().value
                    - psi_q(x - h, q(qq), &cfg()).unwrap().value)
                    / (2.0 * h);
                let v = psi_q_n(1, x, q(qq), &cfg()).unwrap().value;
                assert!((fd - v).abs() < 1e-6 * v.abs().max(1.0), "q={qq} x={x}");
                for n in 1..5 {
                    let fd = (psi_q_n(n, x + h, q(qq), &cfg()).unwrap().value
                        - psi_q_n(n, x - h, q(qq), &cfg()).unwrap().value)
                        / (2.0 * h);
                    let v = psi_q_n(n + 1, x, q(qq), &cfg()).unwrap().value;
                    assert!(
                        (fd - v).abs() < 1e-6 * v.abs().max(1.0),
                        "n={n} q={qq} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn alternating_signs() {
        for n in 1..=8usize {
            for &qq in &[0.1, 0.5, 0.99] {
                for &x in &[0.05, 0.5, 4.0, 20.0] {
                    let v = psi_q_n(n, x, q(qq), &cfg()).unwrap().value;
                    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                    assert!(v * sign > 0.0, "n={n} q={qq} x={x}: {v}");
                }
            }
        }
    }

    #[test]
    fn routes() {
        let a = psi_q_n(0, 1.3, q(0.4), &cfg()).unwrap();
        assert_eq!(a, psi_q(1.3, q(0.4), &cfg()).unwrap());
        let b = psi_q_n(2, 1.3, QValue::CLASSICAL, &cfg()).unwrap();
        assert_eq!(b, psi_n(2, 1.3, &cfg()).unwrap());
        assert!(psi_q(0.0, q(0.4), &cfg()).is_err());
    }
}
