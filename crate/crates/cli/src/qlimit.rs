use qgamma::qspecial::{gamma, gamma_q};
use qgamma::QValue;

use crate::args::QLimitArgs;
use crate::format::{real, Table};
use crate::{CliError, Report};

/// Errors this close to zero count as converged, so a row of zeros (as at
/// `x = 1`, where `Γ_q(1) = Γ(1) = 1`) passes.
const FLOOR: f64 = 1e-15;

/// `err_next` continues the decrease from `err_prev`.
pub fn decreasing(err_prev: f64, err_next: f64, gamma_x: f64) -> bool {
    err_next < err_prev || err_next <= FLOOR * gamma_x.abs().max(1.0)
}

pub fn run(a: &QLimitArgs) -> Result<Report, CliError> {
    let cfg = a.eval_cfg.config()?;
    if let Some(&q) = a.q.iter().find(|&&q| !(q > 0.0 && q < 1.0)) {
        return Err(CliError::Usage(format!(
            "every q must lie in (0, 1), got {q}"
        )));
    }
    let mut xs = a.x.clone();
    let mut qs = a.q.clone();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    qs.sort_by(f64::total_cmp);
    qs.dedup();

    let mut t = Table::new(&["x", "q", "gamma_q", "gamma", "abs_error", "verdict"]);
    let mut passed = true;
    for &x in &xs {
        let g = gamma(x)?.value;
        let mut prev: Option<f64> = None;
        for &q in &qs {
            let gq = gamma_q(x, QValue::new(q)?, &cfg)?.value;
            let err = (gq - g).abs();
            let verdict = match prev {
                None => "first",
                Some(p) if decreasing(p, err, g) => "decreasing",
                Some(_) => {
                    passed = false;
                    "NOT-DECREASING"
                }
            };
            t.push(vec![
                real(x),
                real(q),
                real(gq),
                real(g),
                real(err),
                verdict.into(),
            ]);
            prev = Some(err);
        }
    }
    Ok(Report {
        csv: t.to_bytes(),
        passed,
    })
}
