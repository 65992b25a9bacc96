use num_complex::Complex64;
use qgamma::bounds::*;
use qgamma::sampling::{scale, stream, Kronecker};
use qgamma::{EvalConfig, QValue};

use crate::args::{BoundName, BoundsArgs};
use crate::format::{real, Table};
use crate::{CliError, Report};

pub const HEADER: [&str; 8] = [
    "bound",
    "params",
    "lower",
    "value",
    "upper",
    "lower_margin",
    "upper_margin",
    "verdict",
];

/// One evaluated bound, real or complex.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundRow {
    pub params: String,
    pub lower: Option<f64>,
    pub value: f64,
    pub upper: f64,
    pub lower_margin: Option<f64>,
    pub upper_margin: f64,
}

impl BoundRow {
    fn from_triple(params: String, t: BoundTriple) -> BoundRow {
        BoundRow {
            params,
            lower: Some(t.lower),
            value: t.value,
            upper: t.upper,
            lower_margin: Some(t.lower_margin),
            upper_margin: t.upper_margin,
        }
    }

    fn from_complex(c: ComplexSample, extra: &str) -> BoundRow {
        BoundRow {
            params: format!("{extra};re={};im={}", real(c.s.re), real(c.s.im)),
            lower: None,
            value: c.modulus,
            upper: c.bound,
            lower_margin: None,
            upper_margin: c.margin(),
        }
    }

    pub fn min_margin(&self) -> f64 {
        self.lower_margin
            .unwrap_or(f64::INFINITY)
            .min(self.upper_margin)
    }

    pub fn holds(&self) -> bool {
        self.min_margin() >= -EQUALITY_TOL
    }

    pub fn verdict(&self) -> &'static str {
        let m = self.min_margin();
        if m < -EQUALITY_TOL {
            "VIOLATED"
        } else if m == 0.0 {
            "equality"
        } else {
            "strict"
        }
    }
}

fn list<T: Clone>(v: &Option<Vec<T>>, flag: &str) -> Result<Vec<T>, CliError> {
    v.clone()
        .ok_or_else(|| CliError::Usage(format!("missing --{flag} (or use --samples)")))
}

fn scalar(v: Option<f64>, flag: &str) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{flag} (or use --samples)")))
}

fn complex_points(a: &BoundsArgs) -> Result<Vec<Complex64>, CliError> {
    let re = match (&a.re, &a.sigma_grid) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "give --re or --sigma-grid, not both".into(),
            ))
        }
        (Some(v), None) => v.clone(),
        (None, Some(r)) => r.values(),
        (None, None) => {
            return Err(CliError::Usage(
                "missing --re or --sigma-grid (or use --samples)".into(),
            ))
        }
    };
    let im = match (&a.im, &a.tau_grid) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage("give --im or --tau-grid, not both".into()))
        }
        (Some(v), None) => v.clone(),
        (None, Some(r)) => r.values(),
        (None, None) => {
            return Err(CliError::Usage(
                "missing --im or --tau-grid (or use --samples)".into(),
            ))
        }
    };
    Ok(re
        .iter()
        .flat_map(|&r| im.iter().map(move |&i| Complex64::new(r, i)))
        .collect())
}

fn s_arg(s: f64) -> String {
    format!("s={}", real(s))
}

fn explicit(a: &BoundsArgs, cfg: &EvalConfig) -> Result<Vec<BoundRow>, CliError> {
    let mut rows = Vec::new();
    match a.name {
        BoundName::Gautschi => {
            for n in list(&a.n, "n")? {
                for s in list(&a.s, "s")? {
                    rows.push(BoundRow::from_triple(
                        format!("n={n};{}", s_arg(s)),
                        gautschi_bounds(n, s)?,
                    ));
                }
            }
        }
        BoundName::KershawPsi | BoundName::KershawPower => {
            let f = if a.name == BoundName::KershawPsi {
                kershaw_psi_bounds
            } else {
                kershaw_power_bounds
            };
            for x in list(&a.x, "x")? {
                for s in list(&a.s, "s")? {
                    rows.push(BoundRow::from_triple(
                        format!("{};x={}", s_arg(s), real(x)),
                        f(x, s)?,
                    ));
                }
            }
        }
        BoundName::QSandwich => {
            for q in list(&a.q, "q")? {
                let qv = QValue::new(q)?;
                for x in list(&a.x, "x")? {
                    for s in list(&a.s, "s")? {
                        rows.push(BoundRow::from_triple(
                            format!("q={};{};x={}", real(q), s_arg(s), real(x)),
                            q_sandwich(x, s, qv, cfg)?,
                        ));
                    }
                }
            }
        }
        BoundName::Rademacher => {
            let points = complex_points(a)?;
            for c in list(&a.c, "c")? {
                for &s in &points {
                    let r = rademacher_ratio_bound(s, c)?;
                    rows.push(BoundRow::from_complex(r, &format!("c={}", real(c))));
                }
            }
        }
        BoundName::BetaComplex => {
            let (av, bv) = (scalar(a.a, "a")?, scalar(a.b, "b")?);
            for s in complex_points(a)? {
                let r = beta_ratio_modulus(s, av, bv)?;
                rows.push(BoundRow::from_complex(
                    r,
                    &format!("a={};b={}", real(av), real(bv)),
                ));
            }
        }
    }
    Ok(rows)
}

/// Quasi-random admissible arguments for `name`, drawn on the bounds stream.
///
/// Ranges: `n ∈ 1..=100`, `s ∈ (0, 1)`, `x ∈ (0, 50)` (`(-s/2, 30 - s/2)` for
/// the q-sandwich), `q ∈ (0.05, 1)`, `c ∈ (0, 1)`, `a ∈ (0, 1)`, `b ∈ (0, 3)`,
/// `Re s` up to 5 above its floor and `Im s ∈ (-20, 20)`.
pub fn sampled(
    name: BoundName,
    samples: usize,
    seed: u64,
    cfg: &EvalConfig,
) -> Result<Vec<BoundRow>, CliError> {
    if samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let mut rows = Vec::with_capacity(samples);
    for u in Kronecker::new(4, seed, stream::BOUNDS).take(samples) {
        let row = match name {
            BoundName::Gautschi => {
                let n = 1 + (u[0] * 100.0) as u64;
                BoundRow::from_triple(format!("n={n};{}", s_arg(u[1])), gautschi_bounds(n, u[1])?)
            }
            BoundName::KershawPsi | BoundName::KershawPower => {
                let (x, s) = (scale(u[0], 0.0, 50.0), u[1]);
                let t = if name == BoundName::KershawPsi {
                    kershaw_psi_bounds(x, s)?
                } else {
                    kershaw_power_bounds(x, s)?
                };
                BoundRow::from_triple(format!("{};x={}", s_arg(s), real(x)), t)
            }
            BoundName::QSandwich => {
                let s = u[1];
                let x = scale(u[0], -0.5 * s, 30.0 - 0.5 * s);
                let q = scale(u[2], 0.05, 1.0).min(cfg.q_series_max);
                BoundRow::from_triple(
                    format!("q={};{};x={}", real(q), s_arg(s), real(x)),
                    q_sandwich(x, s, QValue::new(q)?, cfg)?,
                )
            }
            BoundName::Rademacher => {
                let c = u[2];
                let re = 0.5 * (1.0 - c) + 0.01 + 5.0 * u[0];
                let s = Complex64::new(re, scale(u[1], -20.0, 20.0));
                BoundRow::from_complex(rademacher_ratio_bound(s, c)?, &format!("c={}", real(c)))
            }
            BoundName::BetaComplex => {
                let (av, bv) = (u[2], 3.0 * u[3]);
                let s = Complex64::new(
                    beta_sigma_floor(av, bv) + 5.0 * u[0],
                    scale(u[1], -20.0, 20.0),
                );
                BoundRow::from_complex(
                    beta_ratio_modulus(s, av, bv)?,
                    &format!("a={};b={}", real(av), real(bv)),
                )
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

fn bound_name(b: BoundName) -> String {
    clap::ValueEnum::to_possible_value(&b)
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn given_flags(a: &BoundsArgs) -> Vec<&'static str> {
    [
        ("n", a.n.is_some()),
        ("x", a.x.is_some()),
        ("s", a.s.is_some()),
        ("q", a.q.is_some()),
        ("c", a.c.is_some()),
        ("a", a.a.is_some()),
        ("b", a.b.is_some()),
        ("re", a.re.is_some()),
        ("im", a.im.is_some()),
        ("sigma-grid", a.sigma_grid.is_some()),
        ("tau-grid", a.tau_grid.is_some()),
    ]
    .into_iter()
    .filter_map(|(f, on)| on.then_some(f))
    .collect()
}

fn accepted_flags(b: BoundName) -> &'static [&'static str] {
    match b {
        BoundName::Gautschi => &["n", "s"],
        BoundName::KershawPsi | BoundName::KershawPower => &["x", "s"],
        BoundName::QSandwich => &["q", "x", "s"],
        BoundName::Rademacher => &["c", "re", "im", "sigma-grid", "tau-grid"],
        BoundName::BetaComplex => &["a", "b", "re", "im", "sigma-grid", "tau-grid"],
    }
}

pub fn run(a: &BoundsArgs) -> Result<Report, CliError> {
    let cfg = EvalConfig::default();
    let rows = match a.samples {
        Some(n) => {
            if let Some(flag) = given_flags(a).first() {
                return Err(CliError::Usage(format!(
                    "--samples draws its own arguments; drop --{flag}"
                )));
            }
            sampled(a.name, n, a.seed, &cfg)?
        }
        None => {
            let takes = accepted_flags(a.name);
            if let Some(flag) = given_flags(a).into_iter().find(|f| !takes.contains(f)) {
                return Err(CliError::Usage(format!(
                    "bound {} does not take --{flag}",
                    bound_name(a.name)
                )));
            }
            explicit(a, &cfg)?
        }
    };
    let name = bound_name(a.name);
    let opt = |v: Option<f64>| v.map(real).unwrap_or_default();
    let mut t = Table::new(&HEADER);
    for r in &rows {
        t.push(vec![
            name.clone(),
            r.params.clone(),
            opt(r.lower),
            real(r.value),
            real(r.upper),
            opt(r.lower_margin),
            real(r.upper_margin),
            r.verdict().to_string(),
        ]);
    }
    Ok(Report {
        csv: t.to_bytes(),
        passed: rows.iter().all(BoundRow::holds),
    })
}
