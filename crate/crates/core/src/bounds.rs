//! Two-sided bounds for `Γ(x+1)/Γ(x+s)` and its q-analogue, and modulus
//! bounds for gamma ratios in the complex half-plane.
//!
//! Ratios are always formed as `exp` of log-gamma differences.

use num_complex::Complex64;

use crate::qspecial::{log_gamma, log_gamma_complex, psi, psi_q, sum_series, EvalConfig, QValue};
use crate::{Error, Result};

/// Margins within this relative distance of zero are reported as exactly zero.
pub const EQUALITY_TOL: f64 = 1e-12;

fn snap(margin: f64, value: f64) -> f64 {
    if margin.abs() <= EQUALITY_TOL * value.abs().max(1.0) {
        0.0
    } else {
        margin
    }
}

/// `lower ≤ value ≤ upper` with both gaps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundTriple {
    pub lower: f64,
    pub value: f64,
    pub upper: f64,
    pub lower_margin: f64,
    pub upper_margin: f64,
}

impl BoundTriple {
    pub fn new(lower: f64, value: f64, upper: f64) -> BoundTriple {
        BoundTriple {
            lower,
            value,
            upper,
            lower_margin: snap(value - lower, value),
            upper_margin: snap(upper - value, value),
        }
    }

    pub fn holds(&self) -> bool {
        self.lower_margin >= 0.0 && self.upper_margin >= 0.0
    }

    pub fn min_margin(&self) -> f64 {
        self.lower_margin.min(self.upper_margin)
    }
}

fn check_s(s: f64) -> Result<()> {
    if s > 0.0 && s < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("s must lie in (0, 1), got {s}")))
    }
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("x must be positive, got {x}")))
    }
}

/// `Γ(x+1)/Γ(x+s)` for `x + s > 0`.
fn classical_ratio(x: f64, s: f64) -> Result<f64> {
    Ok((log_gamma(x + 1.0)?.value - log_gamma(x + s)?.value).exp())
}

/// `n^{1-s} ≤ Γ(n+1)/Γ(n+s) ≤ exp[(1-s) ψ(n+1)]`.
pub fn gautschi_bounds(n: u64, s: f64) -> Result<BoundTriple> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    check_s(s)?;
    let nf = n as f64;
    let cfg = EvalConfig::default();
    Ok(BoundTriple::new(
        nf.powf(1.0 - s),
        classical_ratio(nf, s)?,
        ((1.0 - s) * psi(nf + 1.0, &cfg)?.value).exp(),
    ))
}

/// `exp[(1-s) ψ(x + √s)] ≤ Γ(x+1)/Γ(x+s) ≤ exp[(1-s) ψ(x + (s+1)/2)]`.
pub fn kershaw_psi_bounds(x: f64, s: f64) -> Result<BoundTriple> {
    check_x(x)?;
    check_s(s)?;
    let cfg = EvalConfig::default();
    Ok(BoundTriple::new(
        ((1.0 - s) * psi(x + s.sqrt(), &cfg)?.value).exp(),
        classical_ratio(x, s)?,
        ((1.0 - s) * psi(x + 0.5 * (s + 1.0), &cfg)?.value).exp(),
    ))
}

/// `(x + s/2)^{1-s} ≤ Γ(x+1)/Γ(x+s) ≤ (x - 1/2 + √(s + 1/4))^{1-s}`.
pub fn kershaw_power_bounds(x: f64, s: f64) -> Result<BoundTriple> {
    check_x(x)?;
    check_s(s)?;
    Ok(BoundTriple::new(
        (x + 0.5 * s).powf(1.0 - s),
        classical_ratio(x, s)?,
        (x - 0.5 + (s + 0.25).sqrt()).powf(1.0 - s),
    ))
}

/// Tolerance for the q-sandwich members, whose margins shrink like `q^x`.
const Q_SANDWICH_TOL: f64 = 1e-15;

/// `ln(Γ_q(x+1)/Γ_q(x+s))` as one series,
/// `(s-1) ln(1-q) + Σ_{n≥0} ln(1 + q^{n+x}(q - q^s)/(1 - q^{n+x+1}))`.
///
/// Every term is small, so the result keeps full precision where the
/// difference of two `ln Γ_q` values would cancel. With
/// `u_n = q^{n+x}|q - q^s|/(1 - q^{n+x+1})`, decreasing in `n`, the tail from
/// `N` is at most `u_N / ((1-q)(1-u_N))`.
fn log_q_gamma_ratio(x: f64, s: f64, q: QValue, cfg: &EvalConfig) -> Result<crate::SeriesResult> {
    let lnq = q.ln();
    let one_minus_q = -lnq.exp_m1();
    let gap = q.get() - (s * lnq).exp();
    let u =
        |n: usize| (((n as f64 + x) * lnq).exp() * gap) / -(((n as f64 + x + 1.0) * lnq).exp_m1());
    sum_series(
        cfg,
        (s - 1.0) * one_minus_q.ln(),
        |n| u(n).ln_1p(),
        |n| {
            let un = u(n).abs();
            un / (one_minus_q * (1.0 - un))
        },
    )
}

/// `[x + s/2]_q^{1-s} ≤ Γ_q(x+1)/Γ_q(x+s) ≤ exp[(1-s) ψ_q(x + (s+1)/2)]`
/// for `x > -s/2`, where `[y]_q = (1-q^y)/(1-q)`. The members are evaluated
/// to relative accuracy `1e-15` or `cfg.rel_tol`, whichever is smaller.
pub fn q_sandwich(x: f64, s: f64, q: QValue, cfg: &EvalConfig) -> Result<BoundTriple> {
    check_s(s)?;
    if !(x > -0.5 * s && x.is_finite()) {
        return Err(Error::domain(format!(
            "x must exceed -s/2 = {}, got {x}",
            -0.5 * s
        )));
    }
    let lower = q_number(x + 0.5 * s, q).powf(1.0 - s);
    if q.is_classical() {
        let upper = ((1.0 - s) * psi(x + 0.5 * (s + 1.0), cfg)?.value).exp();
        return Ok(BoundTriple::new(lower, classical_ratio(x, s)?, upper));
    }
    cfg.validate()?;
    let fine = cfg.with_rel_tol(cfg.rel_tol.min(Q_SANDWICH_TOL));
    let value = log_q_gamma_ratio(x, s, q, &fine)?.value.exp();
    let upper = ((1.0 - s) * psi_q(x + 0.5 * (s + 1.0), q, &fine)?.value).exp();
    Ok(BoundTriple::new(lower, value, upper))
}

/// `[y]_q = (1-q^y)/(1-q)`, equal to `y` at `q = 1`.
fn q_number(y: f64, q: QValue) -> f64 {
    if q.is_classical() {
        y
    } else {
        (y * q.ln()).exp_m1() / q.ln().exp_m1()
    }
}

/// `[x + s/2]_q^{s-1} Γ_q(x+1)/Γ_q(x+s)`: at least 1, nonincreasing in
/// `x > -s/2`, tending to 1.
pub fn q_sandwich_ratio(x: f64, s: f64, q: QValue, cfg: &EvalConfig) -> Result<f64> {
    let t = q_sandwich(x, s, q, cfg)?;
    Ok(t.value / t.lower)
}

/// A complex modulus and the bound it is claimed not to exceed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexSample {
    pub s: Complex64,
    pub a: f64,
    pub b: f64,
    pub modulus: f64,
    pub bound: f64,
}

impl ComplexSample {
    /// `bound - modulus`, snapped to zero at equality.
    pub fn margin(&self) -> f64 {
        snap(self.bound - self.modulus, self.bound)
    }
}

fn lg(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma_complex(z)?.value)
}

/// `|Γ(s+c)/Γ(s)|` against `|s|^c` for `0 ≤ c ≤ 1`, `Re s ≥ (1-c)/2`.
///
/// The complex log-gamma needs `Re s > 0`, so `c = 1` excludes the
/// imaginary axis.
pub fn rademacher_ratio_bound(s: Complex64, c: f64) -> Result<ComplexSample> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::parameter(format!("c must lie in [0, 1], got {c}")));
    }
    if s.re < 0.5 * (1.0 - c) || s.re <= 0.0 {
        return Err(Error::parameter(format!(
            "need Re s ≥ (1-c)/2 = {} and Re s > 0, got s = {s}",
            0.5 * (1.0 - c)
        )));
    }
    let modulus = (lg(s + c)? - lg(s)?).re.exp();
    Ok(ComplexSample {
        s,
        a: c,
        b: 0.0,
        modulus,
        bound: s.norm().powf(c),
    })
}

/// `|Γ(s+a)Γ(s+b)/(Γ(s)Γ(s+a+b))| ≤ 1` for `0 ≤ a ≤ 1`, `b ≥ 0`,
/// `Re s > (1-a-b)/2`.
pub fn beta_ratio_modulus(s: Complex64, a: f64, b: f64) -> Result<ComplexSample> {
    if !(0.0..=1.0).contains(&a) || !(b >= 0.0 && b.is_finite()) {
        return Err(Error::parameter(format!(
            "need 0 ≤ a ≤ 1 and b ≥ 0, got a = {a}, b = {b}"
        )));
    }
    let edge = 0.5 * (1.0 - a - b);
    if !(s.re > edge) {
        return Err(Error::parameter(format!(
            "need Re s > (1-a-b)/2 = {edge}, got s = {s}"
        )));
    }
    if !(s.re > 0.0) {
        return Err(Error::domain(format!(
            "log-gamma needs Re s > 0, got s = {s}"
        )));
    }
    let modulus = if a == 0.0 || b == 0.0 {
        1.0
    } else {
        (lg(s + a)? + lg(s + b)? - lg(s)? - lg(s + a + b)?).re.exp()
    };
    Ok(ComplexSample {
        s,
        a,
        b,
        modulus,
        bound: 1.0,
    })
}

/// Closed range `lo:hi` split into `count` equally spaced values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearRange {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl LinearRange {
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.lo];
        }
        (0..self.count)
            .map(|i| self.lo + (self.hi - self.lo) * i as f64 / (self.count - 1) as f64)
            .collect()
    }
}

impl std::str::FromStr for LinearRange {
    type Err = Error;

    /// Parses `lo:hi:count`.
    fn from_str(text: &str) -> Result<LinearRange> {
        let bad = || Error::Config(format!("expected lo:hi:count, got '{text}'"));
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
        if count == 0 || !lo.is_finite() || !hi.is_finite() || (count > 1 && !(lo < hi)) {
            return Err(bad());
        }
        Ok(LinearRange { lo, hi, count })
    }
}

/// Lowest admissible `Re s` on a grid for the beta-type ratio: `0.01` inside
/// both `Re s > (1-a-b)/2` and `Re s > 0`.
pub fn beta_sigma_floor(a: f64, b: f64) -> f64 {
    (0.5 * (1.0 - a - b)).max(0.0) + 0.01
}

/// [`beta_ratio_modulus`] over the grid `σ × τ`, row-major in `σ`.
pub fn beta_complex_grid(
    a: f64,
    b: f64,
    sigma: &LinearRange,
    tau: &LinearRange,
) -> Result<Vec<ComplexSample>> {
    let mut out = Vec::with_capacity(sigma.count * tau.count);
    for s_re in sigma.values() {
        for s_im in tau.values() {
            out.push(beta_ratio_modulus(Complex64::new(s_re, s_im), a, b)?);
        }
    }
    Ok(out)
}
