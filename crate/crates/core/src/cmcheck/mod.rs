//! Numerical tests of complete monotonicity.
//!
//! A function `f` is completely monotonic (CM) on an interval when
//! `(-1)^n f^{(n)} ≥ 0` there for every order `n`. The checker samples the
//! finite analogue `(-1)^n Δ_h^n f(x) ≥ 0` on a grid of `(x, h, n)` and, when
//! analytic derivatives are available, `(-1)^n f^{(n)}(x) ≥ 0` for `n ≤ 3`.
//! Passing is evidence, never proof; a violation comes with its witness.

mod gautschi;
mod sampled;

pub use gautschi::{gautschi_sum_check, GautschiReport};
pub use sampled::{sinh_sandwich_sweep, telescoping_sweep, IdentitySweep, SinhRegime, SinhSweep};

use rayon::prelude::*;

use crate::kernels::{Branch, TheoremInstance};
use crate::{Error, Result};

/// Highest order checked against analytic derivatives.
pub const ANALYTIC_MAX_ORDER: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    /// Geometric in the distance `x - origin`.
    Geometric,
}

/// Sample points and difference steps for a CM check.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
    pub spacing: Spacing,
    /// Reference point for geometric spacing; nodes crowd towards it.
    pub origin: f64,
    pub h_set: Vec<f64>,
    pub max_order: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            x_min: 0.05,
            x_max: 20.0,
            points: 40,
            spacing: Spacing::Geometric,
            origin: 0.0,
            h_set: vec![0.125, 0.5, 1.0],
            max_order: 8,
        }
    }
}

impl GridSpec {
    /// The same grid translated by `by`, e.g. onto an interval `(-c, ∞)`.
    pub fn shifted(&self, by: f64) -> GridSpec {
        GridSpec {
            x_min: self.x_min + by,
            x_max: self.x_max + by,
            origin: self.origin + by,
            ..self.clone()
        }
    }

    /// Checks the grid against a domain `(lower, ∞)`.
    pub fn validate(&self, lower: f64) -> Result<()> {
        let bad = |msg: String| Err(Error::Grid(msg));
        if !(self.x_min.is_finite() && self.x_max.is_finite() && self.x_min < self.x_max) {
            return bad(format!(
                "need x_min < x_max, got [{}, {}]",
                self.x_min, self.x_max
            ));
        }
        if self.points < 2 {
            return bad(format!("need at least 2 points, got {}", self.points));
        }
        if self.h_set.is_empty() || self.h_set.iter().any(|&h| !(h > 0.0 && h.is_finite())) {
            return bad(format!(
                "difference steps must be positive, got {:?}",
                self.h_set
            ));
        }
        if self.max_order == 0 {
            return bad("max_order must be at least 1".into());
        }
        if self.spacing == Spacing::Geometric && self.x_min <= self.origin {
            return bad(format!(
                "geometric spacing needs x_min > origin, got x_min = {}, origin = {}",
                self.x_min, self.origin
            ));
        }
        if self.x_min <= lower {
            return bad(format!(
                "grid starts at {} but the function is only defined on ({lower}, ∞)",
                self.x_min
            ));
        }
        let reach = self.x_max + self.max_order as f64 * self.h_max();
        if !reach.is_finite() {
            return bad("difference stencil leaves the finite reals".into());
        }
        Ok(())
    }

    pub fn h_max(&self) -> f64 {
        self.h_set.iter().copied().fold(0.0, f64::max)
    }

    pub fn nodes(&self) -> Vec<f64> {
        let last = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == last {
                    return self.x_max;
                }
                let s = i as f64 / last as f64;
                match self.spacing {
                    Spacing::Linear => self.x_min + s * (self.x_max - self.x_min),
                    Spacing::Geometric => {
                        let lo = self.x_min - self.origin;
                        let hi = self.x_max - self.origin;
                        self.origin + lo * (s * (hi / lo).ln()).exp()
                    }
                }
            })
            .collect()
    }
}

/// Violation threshold `-abs - rel·scale`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            abs: 1e-9,
            rel: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        if self.abs >= 0.0 && self.rel >= 0.0 && self.abs.is_finite() && self.rel.is_finite() {
            Ok(())
        } else {
            Err(Error::Config(format!(
                "tolerances must be finite and ≥ 0, got {self:?}"
            )))
        }
    }

    /// `value + abs + rel·scale`; negative means a violation.
    pub fn margin(&self, value: f64, scale: f64) -> f64 {
        value + self.abs + self.rel * scale
    }
}

type ValueFn<'a> = dyn Fn(f64) -> Result<f64> + Sync + 'a;
type DerivativeFn<'a> = dyn Fn(usize, f64) -> Result<f64> + Sync + 'a;

/// A function under test, with its domain and optional exact derivatives.
pub struct Subject<'a> {
    pub name: String,
    value: Box<ValueFn<'a>>,
    derivative: Option<Box<DerivativeFn<'a>>>,
    /// Open left endpoint of the domain.
    pub lower: f64,
    /// Whether `f ≥ 0` (order 0) is part of the claim.
    pub include_order_zero: bool,
}

impl<'a> Subject<'a> {
    pub fn new(name: impl Into<String>, f: impl Fn(f64) -> Result<f64> + Sync + 'a) -> Subject<'a> {
        Subject {
            name: name.into(),
            value: Box::new(f),
            derivative: None,
            lower: f64::NEG_INFINITY,
            include_order_zero: false,
        }
    }

    /// `d(k, x)` must return `f^{(k)}(x)`.
    pub fn with_derivatives(mut self, d: impl Fn(usize, f64) -> Result<f64> + Sync + 'a) -> Self {
        self.derivative = Some(Box::new(d));
        self
    }

    pub fn with_lower(mut self, lower: f64) -> Self {
        self.lower = lower;
        self
    }

    pub fn with_order_zero(mut self, include: bool) -> Self {
        self.include_order_zero = include;
        self
    }

    /// `sign · f^{(order)}` for one branch of a theorem instance.
    pub fn from_branch(inst: &'a TheoremInstance, branch: Branch) -> Subject<'a> {
        let name = format!("{}:{}", inst.case_id, branch.label);
        Subject::new(name, move |x| inst.branch_derivative(&branch, 0, x))
            .with_derivatives(move |k, x| inst.branch_derivative(&branch, k, x))
            .with_lower(inst.lower)
            .with_order_zero(branch.order == 0 && inst.include_order_zero)
    }

    /// `x ↦ f(x) - f(x + a)`.
    pub fn difference(self, a: f64) -> Subject<'a> {
        let Subject {
            name,
            value,
            derivative,
            lower,
            include_order_zero,
        } = self;
        let derivative = derivative
            .map(|d| Box::new(move |k, x| Ok(d(k, x)? - d(k, x + a)?)) as Box<DerivativeFn<'a>>);
        Subject {
            name: format!("{name}-shift({a})"),
            value: Box::new(move |x| Ok(value(x)? - value(x + a)?)),
            derivative,
            lower,
            include_order_zero,
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        (self.value)(x)
    }

    pub fn has_derivatives(&self) -> bool {
        self.derivative.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmVerdict {
    ConsistentWithCm,
    ViolatesCm,
}

impl CmVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            CmVerdict::ConsistentWithCm => "consistent-with-CM",
            CmVerdict::ViolatesCm => "violates-CM",
        }
    }
}

/// One sampled value of `(-1)^n Δ_h^n f(x)` or, with `h = None`, of
/// `(-1)^n f^{(n)}(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub x: f64,
    pub h: Option<f64>,
    pub order: usize,
    pub value: f64,
    /// `max |f|` over the stencil.
    pub scale: f64,
    pub margin: f64,
}

/// Worst sample of one order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderSummary {
    pub order: usize,
    pub worst: Witness,
}

/// Outcome of a CM check.
#[derive(Debug, Clone, PartialEq)]
pub struct CMReport {
    pub case: String,
    pub grid: GridSpec,
    pub tolerances: Tolerances,
    pub per_order: Vec<OrderSummary>,
    /// Sample with the smallest margin over all orders.
    pub witness: Witness,
    pub verdict: CmVerdict,
    pub samples: usize,
}

impl CMReport {
    /// Signed value at the witness.
    pub fn worst_violation(&self) -> f64 {
        self.witness.value
    }

    pub fn is_consistent(&self) -> bool {
        self.verdict == CmVerdict::ConsistentWithCm
    }
}

fn binomial_row(n: usize) -> Vec<f64> {
    let mut row = vec![1.0; n + 1];
    for k in 1..n {
        row[k] = row[k - 1] * (n - k + 1) as f64 / k as f64;
    }
    row
}

/// `Δ_h^n f(x) = Σ_{j=0}^n (-1)^j C(n,j) f(x + (n-j)h)`.
pub fn forward_difference(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64, n: usize) -> Result<f64> {
    let values = (0..=n)
        .map(|j| f(x + j as f64 * h))
        .collect::<Result<Vec<_>>>()?;
    Ok(difference_from_values(&values, n))
}

/// `Δ^n` from `values[j] = f(x + j h)`, `j = 0..=n`.
fn difference_from_values(values: &[f64], n: usize) -> f64 {
    binomial_row(n)
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let sign = if (n - j).is_multiple_of(2) { 1.0 } else { -1.0 };
            sign * c * values[j]
        })
        .sum()
}

fn alternate(n: usize, v: f64) -> f64 {
    if n.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

fn witnesses_at(
    subject: &Subject<'_>,
    x: f64,
    grid: &GridSpec,
    tol: &Tolerances,
) -> Result<Vec<Witness>> {
    let first = if subject.include_order_zero { 0 } else { 1 };
    let mut out = Vec::new();
    let push = |out: &mut Vec<Witness>, h, order, value: f64, scale: f64| {
        out.push(Witness {
            x,
            h,
            order,
            value,
            scale,
            margin: tol.margin(value, scale),
        })
    };
    for &h in &grid.h_set {
        let values = (0..=grid.max_order)
            .map(|j| {
                let p = x + j as f64 * h;
                subject.eval(p).map_err(|e| e.at(p))
            })
            .collect::<Result<Vec<_>>>()?;
        for n in first..=grid.max_order {
            let stencil = &values[..=n];
            let scale = stencil.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let v = alternate(n, difference_from_values(stencil, n));
            push(&mut out, Some(h), n, v, scale);
        }
    }
    if let Some(d) = &subject.derivative {
        for n in first..=grid.max_order.min(ANALYTIC_MAX_ORDER) {
            let v = alternate(n, d(n, x).map_err(|e| e.at(x))?);
            push(&mut out, None, n, v, v.abs());
        }
    }
    Ok(out)
}

/// Samples `(-1)^n Δ_h^n f(x)` over the grid (and analytic derivatives up to
/// order 3 when available) and reports the smallest margin.
pub fn check_cm(subject: &Subject<'_>, grid: &GridSpec, tol: &Tolerances) -> Result<CMReport> {
    grid.validate(subject.lower)?;
    tol.validate()?;
    let per_node: Vec<Result<Vec<Witness>>> = grid
        .nodes()
        .into_par_iter()
        .map(|x| witnesses_at(subject, x, grid, tol))
        .collect();

    // Reduce in grid order so ties resolve identically on every run.
    let mut per_order: Vec<Option<Witness>> = vec![None; grid.max_order + 1];
    let mut samples = 0;
    for node in per_node {
        for w in node? {
            samples += 1;
            let slot = &mut per_order[w.order];
            if slot.is_none_or(|best| w.margin < best.margin) {
                *slot = Some(w);
            }
        }
    }
    let per_order: Vec<OrderSummary> = per_order
        .into_iter()
        .flatten()
        .map(|worst| OrderSummary {
            order: worst.order,
            worst,
        })
        .collect();
    let witness = per_order
        .iter()
        .map(|s| s.worst)
        .reduce(|a, b| if b.margin < a.margin { b } else { a })
        .ok_or_else(|| Error::Grid("grid produced no samples".into()))?;
    let verdict = if witness.margin < 0.0 {
        CmVerdict::ViolatesCm
    } else {
        CmVerdict::ConsistentWithCm
    };
    Ok(CMReport {
        case: subject.name.clone(),
        grid: grid.clone(),
        tolerances: *tol,
        per_order,
        witness,
        verdict,
        samples,
    })
}

/// [`check_cm`] applied to `x ↦ f(x) - f(x + a)`.
pub fn check_difference_cm(
    subject: Subject<'_>,
    a: f64,
    grid: &GridSpec,
    tol: &Tolerances,
) -> Result<CMReport> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Grid(format!("shift a must be positive, got {a}")));
    }
    check_cm(&subject.difference(a), grid, tol)
}

/// CM check of one branch of a theorem instance.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchReport {
    pub branch: Branch,
    pub report: CMReport,
    /// The check agrees with the branch's expectation.
    pub matches: bool,
}

/// Checks every branch the instance's verdict fixes, on `grid` translated to
/// the instance's interval.
pub fn check_instance(
    inst: &TheoremInstance,
    grid: &GridSpec,
    tol: &Tolerances,
) -> Result<Vec<BranchReport>> {
    let grid = grid.shifted(inst.lower);
    inst.verdict
        .branches()
        .into_iter()
        .map(|branch| {
            let report = check_cm(&Subject::from_branch(inst, branch), &grid, tol)?;
            let matches = report.is_consistent() == branch.expect_cm;
            Ok(BranchReport {
                branch,
                report,
                matches,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{registry, Params};
    use crate::qspecial::{psi_n, EvalConfig};

    fn ok(f: impl Fn(f64) -> f64 + Sync) -> impl Fn(f64) -> Result<f64> + Sync {
        move |x| Ok(f(x))
    }

    #[test]
    fn exponential_differences_have_closed_form() {
        for &(x, h, n) in &[(0.3, 0.5, 1usize), (2.0, 0.125, 5), (1.0, 1.0, 8)] {
            let d = forward_difference(|t: f64| Ok((-t).exp()), x, h, n).unwrap();
            let exact = (-x).exp() * (1.0 - (-h).exp()).powi(n as i32);
            assert!((alternate(n, d) - exact).abs() < 1e-15, "{x} {h} {n}");
        }
        assert_eq!(forward_difference(|_| Ok(3.0), 1.0, 0.5, 4).unwrap(), 0.0);
    }

    #[test]
    fn known_cm_functions_pass() {
        let g = GridSpec::default();
        let tol = Tolerances::default();
        for lam in [0.5, 1.0, 3.0] {
            let s = Subject::new("exp", ok(move |x| (-lam * x).exp())).with_order_zero(true);
            assert!(check_cm(&s, &g, &tol).unwrap().is_consistent());
        }
        for p in [0.5, 1.0, 2.5] {
            let s = Subject::new("power", ok(move |x: f64| x.powf(-p))).with_lower(0.0);
            assert!(check_cm(&s, &g, &tol).unwrap().is_consistent());
        }
        let cfg = EvalConfig::default();
        let s = Subject::new("psi'", move |x| Ok(psi_n(1, x, &cfg)?.value))
            .with_derivatives(move |k, x| Ok(psi_n(1 + k, x, &cfg)?.value))
            .with_lower(0.0);
        let g = GridSpec {
            x_min: 0.1,
            ..GridSpec::default()
        };
        let r = check_cm(&s, &g, &tol).unwrap();
        assert!(r.is_consistent(), "{:?}", r.witness);
        assert_eq!(r.per_order.len(), 8);
    }

    #[test]
    fn known_non_cm_functions_fail() {
        let g = GridSpec {
            x_min: 0.05,
            x_max: 10.0,
            ..GridSpec::default()
        };
        let tol = Tolerances::default();
        let sin = Subject::new("sin", ok(f64::sin));
        let r = check_cm(&sin, &g, &tol).unwrap();
        assert_eq!(r.verdict, CmVerdict::ViolatesCm);
        // -log has CM-signed derivatives; only f ≥ 0 fails, for x > 1.
        let neg_log = Subject::new("-log", ok(|x: f64| -x.ln())).with_lower(0.0);
        assert!(check_cm(&neg_log, &g, &tol).unwrap().is_consistent());
        let r = check_cm(&neg_log.with_order_zero(true), &g, &tol).unwrap();
        assert_eq!((r.verdict, r.witness.order), (CmVerdict::ViolatesCm, 0));
        assert!(r.witness.x > 1.0);
        let id = Subject::new("x", ok(|x| x));
        assert_eq!(check_cm(&id, &g, &tol).unwrap().witness.order, 1);
        assert!(!check_cm(&id, &g, &tol).unwrap().is_consistent());
        let neg = Subject::new("-x", ok(|x| -x)).with_order_zero(true);
        let r = check_cm(&neg, &g, &tol).unwrap();
        assert_eq!((r.verdict, r.witness.order), (CmVerdict::ViolatesCm, 0));
    }

    #[test]
    fn sin_violates_at_second_order() {
        let g = GridSpec {
            x_min: 0.05,
            x_max: 10.0,
            max_order: 2,
            spacing: Spacing::Linear,
            ..GridSpec::default()
        };
        let r = check_cm(
            &Subject::new("sin", ok(f64::sin)),
            &g,
            &Tolerances::default(),
        )
        .unwrap();
        let second = r.per_order.iter().find(|s| s.order == 2).unwrap();
        assert!(second.worst.margin < 0.0);
    }

    #[test]
    fn difference_check_is_one_directional() {
        let g = GridSpec::default();
        let tol = Tolerances::default();
        let inv = Subject::new("1/x", ok(|x| 1.0 / x)).with_lower(0.0);
        assert!(check_difference_cm(inv, 1.0, &g, &tol)
            .unwrap()
            .is_consistent());
        let id = Subject::new("x", ok(|x| x));
        assert!(check_difference_cm(id, 1.0, &g, &tol)
            .unwrap()
            .is_consistent());
        let q = crate::QValue::new(0.5).unwrap();
        let cfg = EvalConfig::default();
        let s = Subject::new("psi_q'", move |x| {
            Ok(crate::qspecial::psi_q_n(1, x, q, &cfg)?.value)
        })
        .with_lower(0.0);
        assert!(check_difference_cm(s, 0.5, &g, &tol)
            .unwrap()
            .is_consistent());
    }

    #[test]
    fn grid_validation() {
        let tol = Tolerances::default();
        let s = Subject::new("power", ok(|x: f64| x.powf(-1.0))).with_lower(0.0);
        let bad = [
            GridSpec {
                x_min: 0.0,
                ..GridSpec::default()
            },
            GridSpec {
                x_min: 5.0,
                x_max: 1.0,
                ..GridSpec::default()
            },
            GridSpec {
                points: 1,
                ..GridSpec::default()
            },
            GridSpec {
                h_set: vec![0.5, -1.0],
                ..GridSpec::default()
            },
            GridSpec {
                max_order: 0,
                ..GridSpec::default()
            },
        ];
        for g in bad {
            assert!(
                matches!(check_cm(&s, &g, &tol), Err(Error::Grid(_))),
                "{g:?}"
            );
        }
        let shifted = GridSpec::default().shifted(-0.5);
        let nodes = shifted.nodes();
        assert!((nodes[0] + 0.45).abs() < 1e-15 && (nodes[39] - 19.5).abs() < 1e-12);
    }

    #[test]
    fn evaluation_errors_carry_the_point() {
        let s = Subject::new("bad", |x| {
            if x > 3.0 {
                Err(Error::Domain(format!("x = {x}")))
            } else {
                Ok(1.0)
            }
        });
        let err = check_cm(&s, &GridSpec::default(), &Tolerances::default()).unwrap_err();
        assert!(matches!(err, Error::Evaluation { .. }), "{err:?}");
    }

    #[test]
    fn reports_are_deterministic() {
        let case = registry().into_iter().find(|c| c.id == "thm3.2").unwrap();
        let inst = case
            .instantiate(
                &Params::new()
                    .with("a", 0.5)
                    .with("b", 1.0)
                    .with("c", 0.6)
                    .with("q", 0.5),
            )
            .unwrap();
        let a = check_instance(&inst, &GridSpec::default(), &Tolerances::default()).unwrap();
        let b = check_instance(&inst, &GridSpec::default(), &Tolerances::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn registry_verdicts_reproduce() {
        let grid = GridSpec::default();
        let tol = Tolerances::default();
        for case in registry() {
            for params in case.samples() {
                let inst = case.instantiate(&params).unwrap();
                for br in check_instance(&inst, &grid, &tol).unwrap() {
                    assert!(
                        br.matches,
                        "{} {params} {}: {:?}",
                        case.id, br.branch.label, br.report.witness
                    );
                }
            }
        }
    }
}
