use super::{require_positive, QValue};
use crate::{Error, Result};

fn require_deformed(q: QValue) -> Result<f64> {
    if q.is_classical() {
        Err(Error::domain("the discrete measure needs 0 < q < 1"))
    } else {
        Ok(q.ln())
    }
}

/// `∫ e^{-xt} dγ_q(t) = -q^x ln q / (1 - q^x)`.
pub fn measure_moment(x: f64, q: QValue) -> Result<f64> {
    require_positive("x", x)?;
    let lnq = require_deformed(q)?;
    let qx = (x * lnq).exp();
    Ok(-qx * lnq / -(x * lnq).exp_m1())
}

/// `∫ e^{-xt}/t dγ_q(t) = -ln(1 - q^x)`.
pub fn measure_moment_over_t(x: f64, q: QValue) -> Result<f64> {
    require_positive("x", x)?;
    let lnq = require_deformed(q)?;
    Ok(-(-(x * lnq).exp()).ln_1p())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: f64) -> QValue {
        QValue::new(v).unwrap()
    }

    #[test]
    fn direct_substitution() {
        let ln2 = 2f64.ln();
        assert!((measure_moment(1.0, q(0.5)).unwrap() - ln2).abs() < 1e-15);
        assert!((measure_moment_over_t(1.0, q(0.5)).unwrap() - ln2).abs() < 1e-15);
        assert!((measure_moment_over_t(2.0, q(0.5)).unwrap() + 0.75f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn discrete_mass_sums() {
        // Masses -ln q at t_k = -k ln q; the part beyond k = 60 is summed in
        // closed form (first moment) or bracketed (moment over t).
        for &x in &[0.5, 1.0, 2.0] {
            for &qq in &[0.3f64, 0.5, 0.8] {
                let lnq = qq.ln();
                let r = qq.powf(x);
                let head: f64 = (1..=60).map(|k| -lnq * r.powi(k)).sum();
                let tail = -lnq * r.powi(61) / (1.0 - r);
                let m = measure_moment(x, q(qq)).unwrap();
                assert!((m - head - tail).abs() < 1e-10, "x={x} q={qq}");

                let head: f64 = (1..=60).map(|k| r.powi(k) / k as f64).sum();
                let gap = measure_moment_over_t(x, q(qq)).unwrap() - head;
                let upper = r.powi(61) / (61.0 * (1.0 - r));
                assert!(gap > -1e-10 && gap < upper + 1e-10, "x={x} q={qq}");
                if x == 2.0 || qq == 0.3 {
                    assert!(gap.abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn decays_monotonically() {
        let mut prev = f64::INFINITY;
        let mut x = 0.01;
        while x < 1e3 {
            let v = measure_moment(x, q(0.7)).unwrap();
            assert!(v < prev && v >= 0.0);
            prev = v;
            x *= 1.5;
        }
    }

    #[test]
    fn domain() {
        assert!(measure_moment(1.0, QValue::CLASSICAL).is_err());
        assert!(measure_moment_over_t(0.0, q(0.5)).is_err());
    }
}
