use super::gamma::{exp_result, log_gamma};
use super::{require_positive, sum_series, EvalConfig, QValue, SeriesResult};
use crate::Result;

/// `ln Γ_q(x)` from the log of the infinite product.
///
/// Summed as `(1-x) ln(1-q) + Σ_{n≥0} ln((1-q^{n+1})/(1-q^{n+x}))`, where each
/// factor is written `ln(1 + q^n (q^x - q)/(1 - q^{n+x}))` so that factors
/// close to 1 keep full relative precision. The discarded tail obeys
///
/// ```text
/// |Σ_{n≥N} term_n| ≤ |q^x - q| q^N / ((1-q)(1 - q^{N+min(1,x)}))
/// ```
///
/// by the mean value theorem applied to `ln(1-s)`. `q = 1` routes to the
/// classical `ln Γ`.
pub fn log_gamma_q(x: f64, q: QValue, cfg: &EvalConfig) -> Result<SeriesResult> {
    cfg.validate()?;
    require_positive("x", x)?;
    if q.is_classical() {
        return log_gamma(x);
    }
    cfg.check_q(q)?;

    let lnq = q.ln();
    let one_minus_q = -lnq.exp_m1();
    let prefactor = (1.0 - x) * one_minus_q.ln();
    // q^x - q = q (q^{x-1} - 1)
    let diff = q.get() * ((x - 1.0) * lnq).exp_m1();
    let min_exp = x.min(1.0);

    sum_series(
        cfg,
        prefactor,
        |n| {
            let nf = n as f64;
            let denom = -((nf + x) * lnq).exp_m1();
            ((nf * lnq).exp() * diff / denom).ln_1p()
        },
        |n| {
            let nf = n as f64;
            diff.abs() * (nf * lnq).exp() / (one_minus_q * -((nf + min_exp) * lnq).exp_m1())
        },
    )
}

/// `Γ_q(x) = exp(ln Γ_q(x))`, with the bound propagated through `exp`.
///
/// If the propagated bound misses the relative tolerance (large `|ln Γ_q|`),
/// the log is re-evaluated with the tolerance tightened by `|ln Γ_q|`.
pub fn gamma_q(x: f64, q: QValue, cfg: &EvalConfig) -> Result<SeriesResult> {
    let lg = log_gamma_q(x, q, cfg)?;
    let first = exp_result(lg, "Γ_q")?;
    if first.abs_error_bound <= cfg.rel_tol * first.value.abs().max(1.0) {
        return Ok(first);
    }
    let tight = cfg.with_rel_tol(cfg.rel_tol / lg.value.abs().max(2.0));
    let lg = log_gamma_q(x, q, &tight)?;
    exp_result(lg, "Γ_q")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: f64) -> QValue {
        QValue::new(v).unwrap()
    }

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn identity_at_one() {
        let r = log_gamma_q(1.0, q(0.5), &cfg()).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.abs_error_bound, 0.0);
    }

    #[test]
    fn telescoping_values() {
        // Γ_q(x+1) = [x]_q Γ_q(x), Γ_q(1) = 1.
        for &qq in &[0.1, 0.5, 0.9] {
            let g2 = gamma_q(2.0, q(qq), &cfg()).unwrap().value;
            assert!((g2 - 1.0).abs() < 1e-12);
            let g3 = gamma_q(3.0, q(qq), &cfg()).unwrap().value;
            assert!((g3 - (1.0 + qq)).abs() < 1e-12 * (1.0 + qq));
            let g4 = gamma_q(4.0, q(qq), &cfg()).unwrap().value;
            let expect = (1.0 + qq) * (1.0 + qq + qq * qq);
            assert!((g4 - expect).abs() < 1e-12 * expect);
        }
        let lg3 = log_gamma_q(3.0, q(0.5), &cfg()).unwrap();
        assert!((lg3.value - 1.5f64.ln()).abs() <= lg3.abs_error_bound + 1e-15);
        assert!((gamma_q(4.0, q(0.5), &cfg()).unwrap().value - 2.625).abs() < 1e-12 * 2.625);
    }

    #[test]
    fn matches_long_partial_product() {
        let (x, qq) = (0.5f64, 0.9f64);
        let mut log_prod = (1.0 - x) * (1.0 - qq).ln();
        for n in 0..2000 {
            let nf = n as f64;
            log_prod += (1.0 - qq.powf(nf + 1.0)).ln() - (1.0 - qq.powf(nf + x)).ln();
        }
        let r = log_gamma_q(x, q(qq), &cfg()).unwrap();
        // The 2000-term product itself misses a tail of order q^2000 ≈ 1e-92.
        assert!(
            (r.value - log_prod).abs() <= r.abs_error_bound + 1e-13,
            "{} vs {log_prod}",
            r.value
        );
    }

    #[test]
    fn classical_route() {
        let a = log_gamma_q(2.5, QValue::CLASSICAL, &cfg()).unwrap().value;
        assert_eq!(a, log_gamma(2.5).unwrap().value);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(log_gamma_q(0.0, q(0.5), &cfg()).is_err());
        assert!(log_gamma_q(-1.0, q(0.5), &cfg()).is_err());
        let err = log_gamma_q(1.5, q(1.0 - 1e-9), &cfg()).unwrap_err();
        assert!(matches!(err, crate::Error::QOutOfRange { .. }));
    }

    #[test]
    fn non_convergence_near_the_limit() {
        let tight = cfg().with_rel_tol(1e-15);
        let err = log_gamma_q(0.5, q(1.0 - 2e-6), &tight).unwrap_err();
        assert!(
            matches!(err, crate::Error::NonConvergence { .. }),
            "{err:?}"
        );
    }

    #[test]
    fn recurrence_on_grid() {
        for &qq in &[0.1, 0.5, 0.9] {
            let mut x = 0.1;
            while x <= 20.0 {
                let g = gamma_q(x, q(qq), &cfg()).unwrap().value;
                let g1 = gamma_q(x + 1.0, q(qq), &cfg()).unwrap().value;
                let qnum = (1.0 - qq.powf(x)) / (1.0 - qq);
                assert!((g1 - qnum * g).abs() <= 1e-10 * g1, "q={qq} x={x}");
                x += 0.4;
            }
        }
    }
}
