use std::f64::consts::PI;

use super::{sum_series, EvalConfig, SeriesResult};
use crate::{Error, Result};

/// `F(x) = Σ_{n≥1} x^n/n²` on `[0, 1]`.
///
/// For `x ≤ 1/2` the series is summed directly with tail bound
/// `x^{N+1}/((N+1)²(1-x))`. Above `1/2` the reflection
/// `F(x) = π²/6 - ln x ln(1-x) - F(1-x)` moves the work back to `[0, 1/2)`,
/// and `F(1) = π²/6` exactly.
pub fn dilog_f(x: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    cfg.validate()?;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!(
            "dilog_F requires 0 ≤ x ≤ 1, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(SeriesResult::exact(0.0));
    }
    if x == 1.0 {
        return Ok(SeriesResult::exact(PI * PI / 6.0));
    }
    if x <= 0.5 {
        return direct(x, cfg);
    }
    let y = 1.0 - x;
    let reflected = direct(y, cfg)?;
    Ok(SeriesResult {
        value: PI * PI / 6.0 - x.ln() * y.ln() - reflected.value,
        ..reflected
    })
}

fn direct(x: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    let lnx = x.ln();
    sum_series(
        cfg,
        0.0,
        |i| {
            let n = (i + 1) as f64;
            (n * lnx).exp() / (n * n)
        },
        |i| {
            let n = (i + 1) as f64;
            (n * lnx).exp() / (n * n * (1.0 - x))
        },
    )
}
