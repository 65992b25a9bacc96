use qgamma::cmcheck::{
    check_instance, gautschi_sum_check, sinh_sandwich_sweep, telescoping_sweep, BranchReport,
    GridSpec, SinhRegime, Tolerances,
};
use qgamma::kernels::{registry, Params, TheoremCase, TheoremInstance};

use crate::args::VerifyArgs;
use crate::format::{real, Table};
use crate::{CliError, Report};

pub const HEADER: [&str; 5] = ["case", "params", "metric", "value", "verdict"];

/// Sample sizes of the seeded checks that `verify all` appends.
pub const GAUTSCHI_SAMPLES: usize = 100_000;
pub const SINH_SANDWICH_SAMPLES: usize = 10_000;
pub const SINH_REVERSED_SAMPLES: usize = 1_000;
pub const IDENTITY_SAMPLES: usize = 10_000;
pub const IDENTITY_MAX_LEN: usize = 6;

/// Ids of the seeded checks, selectable on their own or through `all`.
pub const SAMPLED_CHECKS: [&str; 3] = ["gautschi-sum", "sinh-sandwich", "telescoping-identity"];

/// Offsets from the interval's left end where the integral representation is
/// compared with the analytic derivative.
const REPRESENTATION_OFFSETS: [f64; 3] = [0.5, 1.5, 4.0];
const REPRESENTATION_TOL: f64 = 1e-6;

const GAUTSCHI_SLACK: f64 = 1e-12;
const IDENTITY_TOL: f64 = 1e-14;

struct Rows<'a> {
    case: &'a str,
    params: String,
    out: Vec<Vec<String>>,
}

impl Rows<'_> {
    fn push(&mut self, metric: impl Into<String>, value: String, verdict: impl Into<String>) {
        self.out.push(vec![
            self.case.to_string(),
            self.params.clone(),
            metric.into(),
            value,
            verdict.into(),
        ]);
    }
}

fn branch_rows(rows: &mut Rows<'_>, b: &BranchReport) {
    let verdict = b.report.verdict.as_str();
    let w = &b.report.witness;
    let label = b.branch.label;
    rows.push(format!("{label}:worst_value"), real(w.value), verdict);
    rows.push(format!("{label}:witness_x"), real(w.x), verdict);
    rows.push(
        format!("{label}:witness_h"),
        w.h.map(real).unwrap_or_default(),
        verdict,
    );
    rows.push(
        format!("{label}:witness_order"),
        w.order.to_string(),
        verdict,
    );
    rows.push(format!("{label}:margin"), real(w.margin), verdict);
    let expected = if b.branch.expect_cm {
        "expected-CM"
    } else {
        "expected-violation"
    };
    let status = if b.matches { "match" } else { "MISMATCH" };
    rows.push(
        format!("{label}:matches"),
        u8::from(b.matches).to_string(),
        format!("{expected} {status}"),
    );
}

/// Largest relative gap between the integral representation and the analytic
/// derivative it stands for.
pub fn representation_error(inst: &TheoremInstance) -> Result<f64, CliError> {
    let base = inst.lower.max(0.0);
    let mut worst: f64 = 0.0;
    for off in REPRESENTATION_OFFSETS {
        let x = base + off;
        let analytic = inst.family.derivative(inst.representation.order, x)?;
        let integral = inst.representation.evaluate(x, inst.q)?;
        worst = worst.max((analytic - integral).abs() / analytic.abs().max(1e-300));
    }
    Ok(worst)
}

/// Checks one instance; returns its rows and whether everything matched.
pub fn verify_instance(
    case: &TheoremCase,
    params: &Params,
    grid: &GridSpec,
    tol: &Tolerances,
) -> Result<(Vec<Vec<String>>, bool), CliError> {
    let inst = case.instantiate(params)?;
    let reports = check_instance(&inst, grid, tol)?;
    let mut rows = Rows {
        case: case.id,
        params: params.to_string(),
        out: Vec::new(),
    };
    for b in &reports {
        branch_rows(&mut rows, b);
    }
    let confirmed = reports.iter().all(|b| b.matches);
    let claim = inst.verdict.as_str();
    rows.push(
        "claim",
        u8::from(confirmed).to_string(),
        if confirmed {
            format!("{claim} confirmed")
        } else {
            format!("{claim} MISMATCH")
        },
    );
    let rep = representation_error(&inst)?;
    let rep_ok = rep <= REPRESENTATION_TOL;
    rows.push(
        "representation:max_rel_error",
        real(rep),
        if rep_ok { "ok" } else { "MISMATCH" },
    );
    Ok((rows.out, confirmed && rep_ok))
}

fn holds(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "VIOLATED"
    }
}

/// Runs one seeded check by id.
pub fn sampled_check(id: &str, seed: u64) -> Result<(Vec<Vec<String>>, bool), CliError> {
    let mut rows = Rows {
        case: id,
        params: String::new(),
        out: Vec::new(),
    };
    let mut ok = true;
    match id {
        "gautschi-sum" => {
            for n in 1..=8 {
                let r = gautschi_sum_check(n, GAUTSCHI_SAMPLES, seed)?;
                let pass = r.worst_margin >= -GAUTSCHI_SLACK;
                ok &= pass;
                rows.params = format!("n={n};samples={GAUTSCHI_SAMPLES};seed={seed}");
                rows.push("min_margin", real(r.worst_margin), holds(pass));
            }
        }
        "sinh-sandwich" => {
            for (regime, samples) in [
                (SinhRegime::Reversed, SINH_REVERSED_SAMPLES),
                (SinhRegime::Sandwich, SINH_SANDWICH_SAMPLES),
            ] {
                let r = sinh_sandwich_sweep(regime, samples, seed)?;
                ok &= r.holds();
                rows.params = format!("regime={};samples={samples};seed={seed}", regime.as_str());
                let metric = match regime {
                    SinhRegime::Sandwich => "min_margin",
                    SinhRegime::Reversed => "max_margin",
                };
                rows.push(metric, real(r.extreme_margin), holds(r.holds()));
                rows.push("witness_alpha", real(r.alpha), holds(r.holds()));
                rows.push("witness_t", real(r.t), holds(r.holds()));
            }
        }
        "telescoping-identity" => {
            let r = telescoping_sweep(IDENTITY_SAMPLES, IDENTITY_MAX_LEN, seed)?;
            let pass = r.max_residual_per_term <= IDENTITY_TOL;
            ok &= pass;
            rows.params =
                format!("max_len={IDENTITY_MAX_LEN};samples={IDENTITY_SAMPLES};seed={seed}");
            rows.push(
                "max_residual_per_term",
                real(r.max_residual_per_term),
                holds(pass),
            );
        }
        other => return Err(CliError::Usage(format!("unknown case '{other}'"))),
    }
    Ok((rows.out, ok))
}

pub fn run(a: &VerifyArgs) -> Result<Report, CliError> {
    let grid = a.grid.grid();
    let tol = a.grid.tolerances();
    let overrides = a.params.to_params();
    let cases = registry();

    let mut jobs: Vec<(&TheoremCase, Vec<Params>)> = Vec::new();
    let mut sampled: Vec<&str> = Vec::new();
    if a.case == "all" {
        if !overrides.is_empty() {
            return Err(CliError::Usage(
                "parameter flags cannot be combined with 'all'".into(),
            ));
        }
        jobs = cases.iter().map(|c| (c, c.samples())).collect();
        sampled.extend(SAMPLED_CHECKS);
    } else if let Some(case) = cases.iter().find(|c| c.id == a.case) {
        let params = if overrides.is_empty() {
            case.samples()
        } else {
            vec![case.defaults().overridden_by(&overrides)]
        };
        jobs.push((case, params));
    } else if let Some(id) = SAMPLED_CHECKS.iter().find(|id| **id == a.case) {
        if !overrides.is_empty() {
            return Err(CliError::Usage(format!("'{id}' takes no parameter flags")));
        }
        sampled.push(id);
    } else {
        let known: Vec<&str> = cases.iter().map(|c| c.id).chain(SAMPLED_CHECKS).collect();
        return Err(CliError::Usage(format!(
            "unknown case '{}'; expected 'all' or one of {}",
            a.case,
            known.join(", ")
        )));
    }

    let mut table = Table::new(&HEADER);
    let mut passed = true;
    for (case, params) in jobs {
        for p in params {
            let (rows, ok) = verify_instance(case, &p, &grid, &tol)?;
            passed &= ok;
            table.rows_mut().extend(rows);
        }
    }
    for id in sampled {
        let (rows, ok) = sampled_check(id, a.seed)?;
        passed &= ok;
        table.rows_mut().extend(rows);
    }
    table
        .rows_mut()
        .sort_by(|x, y| (&x[0], &x[1]).cmp(&(&y[0], &y[1])));
    Ok(Report {
        csv: table.to_bytes(),
        passed,
    })
}
