use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::family::{Family, Primitive, Term};
use super::quadrature::measure_integral;
use super::{
    at_most, g, kernel_corrected_binet, kernel_g_shift, kernel_psi_rescale, kernel_sinh_ratio,
    Kernel,
};
use crate::qspecial::QValue;
use crate::{Error, Result};

/// Named real parameters of a case, plus an optional list (`a_list`).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Params {
    scalars: BTreeMap<String, f64>,
    list: Option<Vec<f64>>,
}

impl Params {
    pub fn new() -> Params {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: f64) -> Params {
        self.set(name, value);
        self
    }

    pub fn with_list(mut self, list: Vec<f64>) -> Params {
        self.set_list(list);
        self
    }

    pub fn set(&mut self, name: &str, value: f64) {
        self.scalars.insert(name.to_string(), value);
    }

    pub fn set_list(&mut self, list: Vec<f64>) {
        self.list = Some(list);
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.scalars.get(name).copied()
    }

    pub fn list(&self) -> Option<&[f64]> {
        self.list.as_deref()
    }

    pub fn is_empty(&self) -> bool {
        self.scalars.is_empty() && self.list.is_none()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.scalars.keys().map(String::as_str)
    }

    pub fn require(&self, name: &str) -> Result<f64> {
        let v = self
            .get(name)
            .ok_or_else(|| Error::parameter(format!("missing parameter '{name}'")))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::parameter(format!(
                "parameter '{name}' must be finite, got {v}"
            )))
        }
    }

    pub fn require_list(&self) -> Result<&[f64]> {
        self.list()
            .ok_or_else(|| Error::parameter("missing parameter 'a_list'"))
    }

    /// `self` with every entry of `overrides` replacing or adding to it.
    pub fn overridden_by(&self, overrides: &Params) -> Params {
        let mut out = self.clone();
        for (k, v) in &overrides.scalars {
            out.scalars.insert(k.clone(), *v);
        }
        if let Some(list) = &overrides.list {
            out.list = Some(list.clone());
        }
        out
    }
}

impl fmt::Display for Params {
    /// `key=value` pairs joined by `;` in key order, list as `a_list=v1/v2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if first {
                first = false;
                Ok(())
            } else {
                f.write_str(";")
            }
        };
        if let Some(list) = &self.list {
            sep(f)?;
            let joined: Vec<String> = list.iter().map(|v| v.to_string()).collect();
            write!(f, "a_list={}", joined.join("/"))?;
        }
        for (k, v) in &self.scalars {
            sep(f)?;
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// The complete-monotonicity claim made for one parameter branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// `f'` is completely monotonic.
    DerivativeCm,
    /// `-f'` is completely monotonic.
    NegDerivativeCm,
    /// Neither `f'` nor `-f'` is completely monotonic.
    Neither,
    /// `f` itself is completely monotonic.
    FunctionCm,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::DerivativeCm => "f' CM",
            Verdict::NegDerivativeCm => "-f' CM",
            Verdict::Neither => "neither",
            Verdict::FunctionCm => "f CM",
        }
    }

    /// The functions whose CM status the claim fixes: `(label, sign, order of
    /// f, expected consistent-with-CM)`.
    pub fn branches(self) -> Vec<Branch> {
        match self {
            Verdict::DerivativeCm => vec![Branch::new("d", 1.0, 1, true)],
            Verdict::NegDerivativeCm => vec![Branch::new("neg_d", -1.0, 1, true)],
            Verdict::Neither => vec![
                Branch::new("d", 1.0, 1, false),
                Branch::new("neg_d", -1.0, 1, false),
            ],
            Verdict::FunctionCm => vec![Branch::new("f", 1.0, 0, true)],
        }
    }
}

/// One function tested for complete monotonicity: `sign · f^{(order)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Branch {
    pub label: &'static str,
    pub sign: f64,
    pub order: usize,
    pub expect_cm: bool,
}

impl Branch {
    fn new(label: &'static str, sign: f64, order: usize, expect_cm: bool) -> Branch {
        Branch {
            label,
            sign,
            order,
            expect_cm,
        }
    }
}

type Weight = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// `f^{(order)}(x) = constant + sign · factor · ∫ e^{-xt} weight(t) dγ_q(t)`,
/// where `weight = pre · w` combines the kernel with its prefactor.
#[derive(Clone)]
pub struct Representation {
    pub order: usize,
    pub sign: f64,
    pub factor: f64,
    pub constant: f64,
    weight: Weight,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("order", &self.order)
            .field("sign", &self.sign)
            .field("factor", &self.factor)
            .field("constant", &self.constant)
            .finish_non_exhaustive()
    }
}

impl Representation {
    fn derivative(sign: f64, weight: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Representation {
            order: 1,
            sign,
            factor: 1.0,
            constant: 0.0,
            weight: Arc::new(weight),
        }
    }

    pub fn weight(&self, t: f64) -> f64 {
        (self.weight)(t)
    }

    /// Evaluates the integral side at `x > 0`.
    pub fn evaluate(&self, x: f64, q: QValue) -> Result<f64> {
        let integral = measure_integral(
            q,
            |t| {
                let e = (-x * t).exp();
                if e == 0.0 {
                    0.0
                } else {
                    e * self.weight(t)
                }
            },
            1e-13,
        )?;
        Ok(self.constant + self.sign * self.factor * integral)
    }
}

/// A theorem case bound to concrete parameters.
#[derive(Debug, Clone)]
pub struct TheoremInstance {
    pub case_id: &'static str,
    pub params: Params,
    pub q: QValue,
    pub family: Family,
    pub verdict: Verdict,
    /// Which hypothesis branch of the statement the parameters fall in.
    pub branch: &'static str,
    /// Left endpoint of the claimed interval `(lower, ∞)`.
    pub lower: f64,
    /// Whether the claim includes `n = 0` (`f ≥ 0`).
    pub include_order_zero: bool,
    pub representation: Representation,
    pub kernel: Option<Kernel>,
    pub note: Option<&'static str>,
}

impl TheoremInstance {
    /// `sign · f^{(order + k)}(x)` for one branch.
    pub fn branch_derivative(&self, branch: &Branch, k: usize, x: f64) -> Result<f64> {
        Ok(branch.sign * self.family.derivative(branch.order + k, x)?)
    }
}

/// Constraint on `q` stated by a theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QRule {
    /// Classical functions only.
    Classical,
    /// `0 < q < 1`.
    Deformed,
    /// `0 < q ≤ 1`.
    Any,
}

/// A registered theorem: parameter domain, sample parameters and a builder.
pub struct TheoremCase {
    pub id: &'static str,
    pub statement: &'static str,
    pub domain: &'static str,
    pub q_rule: QRule,
    pub params: &'static [&'static str],
    samples: fn() -> Vec<Params>,
    build: fn(&Params, QValue) -> Result<Claim>,
}

impl fmt::Debug for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TheoremCase")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

/// What a builder returns before the shared fields are filled in.
struct Claim {
    terms: Vec<Term>,
    verdict: Verdict,
    branch: &'static str,
    lower: f64,
    representation: Representation,
    kernel: Option<Kernel>,
    note: Option<&'static str>,
}

impl TheoremCase {
    /// Sample parameter sets exercising every branch of the statement.
    pub fn samples(&self) -> Vec<Params> {
        (self.samples)()
    }

    /// The first sample, used to fill parameters not given explicitly.
    pub fn defaults(&self) -> Params {
        self.samples().into_iter().next().unwrap_or_default()
    }

    pub fn instantiate(&self, params: &Params) -> Result<TheoremInstance> {
        for name in params.names() {
            if name != "q" && !self.params.contains(&name) {
                return Err(Error::parameter(format!(
                    "case {} does not take parameter '{name}'",
                    self.id
                )));
            }
        }
        if params.list().is_some() && !self.params.contains(&"a_list") {
            return Err(Error::parameter(format!(
                "case {} does not take a_list",
                self.id
            )));
        }
        let q = match (self.q_rule, params.get("q")) {
            (QRule::Classical, None) => QValue::CLASSICAL,
            (QRule::Classical, Some(1.0)) => QValue::CLASSICAL,
            (QRule::Classical, Some(v)) => {
                return Err(Error::parameter(format!(
                    "case {} is classical (q = 1), got q = {v}",
                    self.id
                )))
            }
            (_, None) => return Err(Error::parameter(format!("case {} needs q", self.id))),
            (rule, Some(v)) => {
                let q = QValue::new(v)?;
                if rule == QRule::Deformed && q.is_classical() {
                    return Err(Error::parameter(format!(
                        "case {} needs 0 < q < 1",
                        self.id
                    )));
                }
                q
            }
        };
        let claim = (self.build)(params, q)?;
        let mut family = Family::new(claim.terms);
        family.cfg = family.cfg.with_rel_tol(1e-13);
        Ok(TheoremInstance {
            case_id: self.id,
            params: params.clone(),
            q,
            family,
            verdict: claim.verdict,
            branch: claim.branch,
            lower: claim.lower,
            include_order_zero: claim.verdict == Verdict::FunctionCm && self.id == "thm3.1",
            representation: claim.representation,
            kernel: claim.kernel,
            note: claim.note,
        })
    }
}

fn term(coef: f64, p: Primitive, shift: f64, q: QValue) -> Term {
    Term::new(coef, p, shift, q)
}

fn no_claim(id: &str, detail: String) -> Error {
    Error::parameter(format!(
        "{id}: parameters outside every branch of the statement ({detail})"
    ))
}

/// `log[x^α Γ_q(x) (e/x)^x]` and its q-analogue, shifted by `shift`.
fn h_alpha_terms(alpha: f64, shift: f64, coef: f64, q: QValue) -> Vec<Term> {
    vec![
        term(coef, Primitive::Stirling, shift, q),
        term(coef * alpha, Primitive::LogQNumber, shift, q),
        term(coef, Primitive::LogGamma, shift, q),
    ]
}

fn h_alpha_verdict(id: &str, alpha: f64, allow_neither: bool) -> Result<(Verdict, &'static str)> {
    if alpha <= 0.5 {
        Ok((Verdict::NegDerivativeCm, "alpha<=1/2"))
    } else if alpha >= 1.0 {
        Ok((Verdict::DerivativeCm, "alpha>=1"))
    } else if allow_neither {
        Ok((Verdict::Neither, "1/2<alpha<1"))
    } else {
        Err(no_claim(
            id,
            format!("alpha = {alpha}; no claim for 1/2 < alpha < 1 when q < 1"),
        ))
    }
}

fn build_h_alpha(id: &'static str, p: &Params, q: QValue, allow_neither: bool) -> Result<Claim> {
    let alpha = p.require("alpha")?;
    let (verdict, branch) = h_alpha_verdict(id, alpha, allow_neither)?;
    Ok(Claim {
        terms: h_alpha_terms(alpha, 0.0, 1.0, q),
        verdict,
        branch,
        lower: 0.0,
        representation: Representation::derivative(-1.0, move |t| kernel_g_shift(alpha, t)),
        kernel: Some(Kernel::GShift { alpha }),
        note: None,
    })
}

fn build_h_alpha_difference(
    id: &'static str,
    p: &Params,
    q: QValue,
    allow_neither: bool,
) -> Result<Claim> {
    let alpha = p.require("alpha")?;
    let a = p.require("a")?;
    if a <= 0.0 {
        return Err(Error::parameter(format!(
            "{id}: a must be positive, got {a}"
        )));
    }
    let (verdict, branch) = h_alpha_verdict(id, alpha, allow_neither)?;
    let mut terms = h_alpha_terms(alpha, 0.0, 1.0, q);
    terms.extend(h_alpha_terms(alpha, a, -1.0, q));
    Ok(Claim {
        terms,
        verdict,
        branch,
        lower: 0.0,
        representation: Representation::derivative(-1.0, move |t| {
            -(-a * t).exp_m1() * kernel_g_shift(alpha, t)
        }),
        kernel: Some(Kernel::GShift { alpha }),
        note: None,
    })
}

fn build_power_ratio(p: &Params, q: QValue) -> Result<Claim> {
    let (a, b, c) = (p.require("a")?, p.require("b")?, p.require("c")?);
    if !(a < b && b <= a + 1.0) {
        return Err(Error::parameter(format!(
            "thm2.5 requires a < b ≤ a+1, got a = {a}, b = {b}"
        )));
    }
    let (verdict, branch, lower) = if 0.0 <= c && at_most(c, 0.5 * (a + b - 1.0)) {
        (Verdict::NegDerivativeCm, "0<=c<=(a+b-1)/2", -c)
    } else if c >= a && a >= 0.0 {
        (Verdict::DerivativeCm, "c>=a>=0", -a)
    } else {
        return Err(no_claim("thm2.5", format!("a = {a}, b = {b}, c = {c}")));
    };
    let kernel = Kernel::PowerRatio { a, b, c };
    let k = kernel.clone();
    Ok(Claim {
        terms: vec![
            term(a - b, Primitive::LogQNumber, c, q),
            term(1.0, Primitive::LogGamma, b, q),
            term(-1.0, Primitive::LogGamma, a, q),
        ],
        verdict,
        branch,
        lower,
        representation: Representation::derivative(-1.0, move |t| k.eval(t)),
        kernel: Some(kernel),
        note: None,
    })
}

fn build_sinh_power(p: &Params, q: QValue) -> Result<Claim> {
    let a = p.require("a")?;
    if a < 1.0 {
        return Err(no_claim(
            "thm2.6",
            format!("a = {a}; the claim needs a ≥ 1"),
        ));
    }
    Ok(Claim {
        terms: vec![
            term(a, Primitive::LogQNumber, 0.0, q),
            term(1.0, Primitive::LogGamma, 0.0, q),
            term(-1.0, Primitive::LogGamma, a, q),
        ],
        verdict: Verdict::DerivativeCm,
        branch: "a>=1",
        lower: 0.0,
        representation: Representation::derivative(1.0, move |t| {
            // e^{t(1-a)/2} [a e^{(a-1)t/2} - sinh(at/2)/sinh(t/2)]
            a - (0.5 * (1.0 - a) * t).exp() * kernel_sinh_ratio(a, 0.5 * t)
        }),
        kernel: Some(Kernel::SinhPower { a }),
        note: None,
    })
}

fn build_psi_rescale(p: &Params, q: QValue) -> Result<Claim> {
    let alpha = p.require("alpha")?;
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(no_claim(
            "thm3.1",
            format!("alpha = {alpha}; the claim needs 0 < alpha < 1"),
        ));
    }
    let q_root = q.root(alpha)?;
    let constant = if q.is_classical() {
        -alpha.ln()
    } else {
        (-q_root.ln().exp_m1()).ln() - (-q.ln().exp_m1()).ln()
    };
    Ok(Claim {
        terms: vec![
            term(1.0, Primitive::Psi(0), 0.0, q),
            term(-1.0, Primitive::Psi(0), 0.0, q_root).scaled(alpha),
        ],
        verdict: Verdict::FunctionCm,
        branch: "0<alpha<1",
        lower: 0.0,
        representation: Representation {
            order: 0,
            sign: 1.0,
            factor: 1.0 / alpha,
            constant,
            weight: Arc::new(move |t| kernel_psi_rescale(alpha, t)),
        },
        kernel: Some(Kernel::PsiRescale { alpha }),
        note: Some("representation includes the additive constant ln((1-q^{1/alpha})/(1-q))"),
    })
}

fn build_psi_ratio(p: &Params, q: QValue) -> Result<Claim> {
    let (a, b, c) = (p.require("a")?, p.require("b")?, p.require("c")?);
    if !(0.0 < a && a < b) {
        return Err(Error::parameter(format!(
            "thm3.2 requires 0 < a < b, got a = {a}, b = {b}"
        )));
    }
    let mid = 0.5 * (a + b);
    let (verdict, branch, lower) = if at_most(mid, c) {
        (Verdict::NegDerivativeCm, "c>=(a+b)/2", -a)
    } else if at_most(c, a) {
        (Verdict::DerivativeCm, "c<=a", -c)
    } else {
        (Verdict::Neither, "a<c<(a+b)/2", -a)
    };
    let kernel = Kernel::PsiRatio { a, b, c };
    let k = kernel.clone();
    Ok(Claim {
        terms: vec![
            term(1.0, Primitive::LogGamma, a, q),
            term(-1.0, Primitive::LogGamma, b, q),
            term(b - a, Primitive::Psi(0), c, q),
        ],
        verdict,
        branch,
        lower,
        representation: Representation::derivative(-1.0, move |t| {
            (-mid * t).exp() / -(-t).exp_m1() * k.eval(t)
        }),
        kernel: Some(kernel),
        note: None,
    })
}

/// `log g_α(x + shift)` with `g_α = (1-q)^x (1-q^x)^{1/2} Γ_q(x)
/// exp[F(q^x)/ln q - ψ_q'(x+α)/12]`.
fn g_alpha_terms(alpha: f64, shift: f64, coef: f64, q: QValue) -> Vec<Term> {
    vec![
        term(coef, Primitive::Stirling, shift, q),
        term(0.5 * coef, Primitive::LogQNumber, shift, q),
        term(coef, Primitive::LogGamma, shift, q),
        term(-coef / 12.0, Primitive::Psi(1), shift + alpha, q),
    ]
}

const G_ALPHA_NOTE: &str =
    "uses (1-q^x)^{1/2} in g_alpha so that (log g_alpha)' = -∫ e^{-xt} p_alpha(t) dγ_q; \
verdict directions follow the sign of p_alpha";

fn g_alpha_verdict(id: &str, alpha: f64, allow_neither: bool) -> Result<(Verdict, &'static str)> {
    if alpha >= 0.5 {
        Ok((Verdict::NegDerivativeCm, "alpha>=1/2"))
    } else if alpha <= 0.0 {
        Ok((Verdict::DerivativeCm, "alpha<=0"))
    } else if allow_neither {
        Ok((Verdict::Neither, "0<alpha<1/2"))
    } else {
        Err(no_claim(
            id,
            format!("alpha = {alpha}; no claim for 0 < alpha < 1/2"),
        ))
    }
}

fn build_corrected_binet(p: &Params, q: QValue) -> Result<Claim> {
    let alpha = p.require("alpha")?;
    let (verdict, branch) = g_alpha_verdict("thm3.4", alpha, false)?;
    Ok(Claim {
        terms: g_alpha_terms(alpha, 0.0, 1.0, q),
        verdict,
        branch,
        // ψ_q'(x+α) needs x > -α.
        lower: (-alpha).max(0.0),
        representation: Representation::derivative(-1.0, move |t| kernel_corrected_binet(alpha, t)),
        kernel: Some(Kernel::CorrectedBinet { alpha }),
        note: Some(G_ALPHA_NOTE),
    })
}

fn build_alzer_ratio(id: &'static str, p: &Params, q: QValue) -> Result<Claim> {
    let alpha = p.require("alpha")?;
    let s = p.require("s")?;
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::parameter(format!(
            "{id} requires 0 < s < 1, got {s}"
        )));
    }
    let (verdict, branch) = g_alpha_verdict(id, alpha, true)?;
    let mut terms = g_alpha_terms(alpha, s, 1.0, q);
    terms.extend(g_alpha_terms(alpha, 1.0, -1.0, q));
    Ok(Claim {
        terms,
        verdict,
        branch,
        lower: (-alpha - s).max(0.0),
        representation: Representation::derivative(-1.0, move |t| {
            ((-s * t).exp() - (-t).exp()) * kernel_corrected_binet(alpha, t)
        }),
        kernel: Some(Kernel::CorrectedBinet { alpha }),
        note: Some(G_ALPHA_NOTE),
    })
}

fn check_list(id: &str, p: &Params) -> Result<Vec<f64>> {
    let list = p.require_list()?.to_vec();
    if list.is_empty() || list.iter().any(|&a| !(a > 0.0 && a.is_finite())) {
        return Err(Error::parameter(format!("{id} needs positive a_i")));
    }
    Ok(list)
}

fn build_mean_ratio(p: &Params, q: QValue) -> Result<Claim> {
    let list = check_list("thm4.1-mean", p)?;
    let n = list.len() as f64;
    let mean = list.iter().sum::<f64>() / n;
    let mut terms: Vec<Term> = list
        .iter()
        .map(|&a| term(1.0, Primitive::LogGamma, a, q))
        .collect();
    terms.push(term(-n, Primitive::LogGamma, mean, q));
    let kernel = Kernel::MeanRatio { a_list: list };
    let k = kernel.clone();
    Ok(Claim {
        terms,
        verdict: Verdict::NegDerivativeCm,
        branch: "a_i>0",
        lower: 0.0,
        representation: Representation::derivative(1.0, move |t| k.eval(t) / -(-t).exp_m1()),
        kernel: Some(kernel),
        note: Some("the bracket n e^{-āt} - Σ e^{-a_i t} is ≤ 0, so f' = +∫ and -f' is CM"),
    })
}

fn build_split_ratio(p: &Params, q: QValue) -> Result<Claim> {
    let list = check_list("thm4.1-split", p)?;
    let n = list.len() as f64;
    let total: f64 = list.iter().sum();
    let mut terms: Vec<Term> = list
        .iter()
        .map(|&a| term(1.0, Primitive::LogGamma, a, q))
        .collect();
    terms.push(term(-(n - 1.0), Primitive::LogGamma, 0.0, q));
    terms.push(term(-1.0, Primitive::LogGamma, total, q));
    let kernel = Kernel::SplitRatio { a_list: list };
    let k = kernel.clone();
    Ok(Claim {
        terms,
        verdict: Verdict::DerivativeCm,
        branch: "a_i>0",
        lower: 0.0,
        representation: Representation::derivative(1.0, move |t| k.eval(t) / -(-t).exp_m1()),
        kernel: Some(kernel),
        note: None,
    })
}

fn build_psi_prime(_: &Params, q: QValue) -> Result<Claim> {
    Ok(Claim {
        terms: vec![term(1.0, Primitive::Psi(1), 0.0, q)],
        verdict: Verdict::FunctionCm,
        branch: "x>0",
        lower: 0.0,
        representation: Representation {
            order: 0,
            sign: 1.0,
            factor: 1.0,
            constant: 0.0,
            // t/(1-e^{-t}) = 1 + t G(t)
            weight: Arc::new(|t| 1.0 + t * g(t)),
        },
        kernel: None,
        note: None,
    })
}

fn p() -> Params {
    Params::new()
}

/// The full corpus of theorem cases, in a fixed order.
pub fn registry() -> Vec<TheoremCase> {
    vec![
        TheoremCase {
            id: "thm2.1",
            statement: "h_alpha(x) = log[x^alpha Gamma(x) (e/x)^x]: -h' CM for alpha <= 1/2, h' CM for alpha >= 1, neither for 1/2 < alpha < 1",
            domain: "alpha real; q = 1",
            q_rule: QRule::Classical,
            params: &["alpha"],
            samples: || vec![p().with("alpha", 0.5), p().with("alpha", 0.25), p().with("alpha", 1.0), p().with("alpha", 1.5), p().with("alpha", 0.75)],
            build: |p, q| build_h_alpha("thm2.1", p, q, true),
        },
        TheoremCase {
            id: "thm2.2",
            statement: "h_alpha(x) = log[(1-q)^x (1-q^x)^alpha Gamma_q(x) exp(F(q^x)/log q)]: -h' CM for alpha <= 1/2, h' CM for alpha >= 1",
            domain: "alpha <= 1/2 or alpha >= 1; 0 < q < 1",
            q_rule: QRule::Deformed,
            params: &["alpha"],
            samples: || {
                vec![
                    p().with("alpha", 0.5).with("q", 0.5),
                    p().with("alpha", 0.25).with("q", 0.5),
                    p().with("alpha", 1.0).with("q", 0.5),
                    p().with("alpha", 1.5).with("q", 0.5),
                    p().with("alpha", 0.5).with("q", 0.9),
                    p().with("alpha", 1.0).with("q", 0.9),
                ]
            },
            build: |p, q| build_h_alpha("thm2.2", p, q, false),
        },
        TheoremCase {
            id: "thm2.3",
            statement: "H_alpha(x) = h_alpha(x) - h_alpha(x+a) (q-analogue): -H' CM for alpha <= 1/2, H' CM for alpha >= 1",
            domain: "a > 0; alpha <= 1/2 or alpha >= 1; 0 < q < 1",
            q_rule: QRule::Deformed,
            params: &["alpha", "a"],
            samples: || {
                vec![
                    p().with("alpha", 0.5).with("a", 1.0).with("q", 0.5),
                    p().with("alpha", 1.0).with("a", 1.0).with("q", 0.5),
                    p().with("alpha", 0.0).with("a", 0.5).with("q", 0.8),
                    p().with("alpha", 2.0).with("a", 0.5).with("q", 0.8),
                ]
            },
            build: |p, q| build_h_alpha_difference("thm2.3", p, q, false),
        },
        TheoremCase {
            id: "cor2.4",
            statement: "H_alpha(x) = log(x^{alpha-x} Gamma(x) / ((x+a)^{alpha-x-a} Gamma(x+a))): -H' CM for alpha <= 1/2, H' CM for alpha >= 1, neither for 1/2 < alpha < 1",
            domain: "a > 0; alpha real; q = 1",
            q_rule: QRule::Classical,
            params: &["alpha", "a"],
            samples: || {
                vec![
                    p().with("alpha", 0.5).with("a", 1.0),
                    p().with("alpha", 1.0).with("a", 1.0),
                    p().with("alpha", 0.75).with("a", 1.0),
                    p().with("alpha", 0.25).with("a", 2.0),
                ]
            },
            build: |p, q| build_h_alpha_difference("cor2.4", p, q, true),
        },
        TheoremCase {
            id: "thm2.5",
            statement: "g(x) = [(1-q^{x+c})/(1-q)]^{a-b} Gamma_q(x+b)/Gamma_q(x+a): -(log g)' CM on (-c, inf) if 0 <= c <= (a+b-1)/2; (log g)' CM on (-a, inf) if c >= a >= 0",
            domain: "a < b <= a+1; 0 <= c <= (a+b-1)/2 or c >= a >= 0; 0 < q <= 1",
            q_rule: QRule::Any,
            params: &["a", "b", "c"],
            samples: || {
                vec![
                    p().with("a", 0.2).with("b", 1.0).with("c", 0.1).with("q", 0.5),
                    p().with("a", 0.2).with("b", 1.0).with("c", 0.5).with("q", 0.5),
                    p().with("a", 0.2).with("b", 1.0).with("c", 0.1).with("q", 1.0),
                    p().with("a", 0.2).with("b", 1.0).with("c", 0.5).with("q", 1.0),
                    p().with("a", 0.5).with("b", 1.2).with("c", 0.35).with("q", 0.8),
                ]
            },
            build: build_power_ratio,
        },
        TheoremCase {
            id: "thm2.6",
            statement: "h(x) = log[((1-q^x)/(1-q))^a Gamma_q(x)/Gamma_q(x+a)]: h' CM for a >= 1",
            domain: "a >= 1; 0 < q < 1",
            q_rule: QRule::Deformed,
            params: &["a"],
            samples: || {
                vec![
                    p().with("a", 1.5).with("q", 0.5),
                    p().with("a", 2.0).with("q", 0.5),
                    p().with("a", 3.0).with("q", 0.9),
                ]
            },
            build: build_sinh_power,
        },
        TheoremCase {
            id: "thm3.1",
            statement: "psi_q(x) - psi_{q^{1/alpha}}(alpha x) is CM (orders n = 0, 1, ...)",
            domain: "0 < alpha < 1; 0 < q < 1",
            q_rule: QRule::Deformed,
            params: &["alpha"],
            samples: || {
                vec![
                    p().with("alpha", 0.5).with("q", 0.5),
                    p().with("alpha", 0.9).with("q", 0.8),
                    p().with("alpha", 0.2).with("q", 0.3),
                ]
            },
            build: build_psi_rescale,
        },
        TheoremCase {
            id: "thm3.2",
            statement: "h(x) = log[Gamma_q(x+a)/Gamma_q(x+b) exp((b-a) psi_q(x+c))]: -h' CM on (-a, inf) if c >= (a+b)/2; h' CM on (-c, inf) if c <= a; neither for a < c < (a+b)/2",
            domain: "0 < a < b; c real; 0 < q <= 1",
            q_rule: QRule::Any,
            params: &["a", "b", "c"],
            samples: || {
                let mut out = Vec::new();
                for q in [1.0, 0.5] {
                    for c in [0.75, 0.5, 0.6] {
                        out.push(p().with("a", 0.5).with("b", 1.0).with("c", c).with("q", q));
                    }
                }
                out.push(p().with("a", 1.0).with("b", 2.0).with("c", 1.2).with("q", 0.8));
                out
            },
            build: build_psi_ratio,
        },
        TheoremCase {
            id: "thm3.4",
            statement: "g_alpha(x) = (1-q)^x (1-q^x)^{1/2} Gamma_q(x) exp[F(q^x)/log q - psi_q'(x+alpha)/12]: -(log g)' CM for alpha >= 1/2, (log g)' CM for alpha <= 0",
            domain: "alpha >= 1/2 or alpha <= 0; 0 < q < 1",
            q_rule: QRule::Deformed,
            params: &["alpha"],
            samples: || {
                vec![
                    p().with("alpha", 0.5).with("q", 0.5),
                    p().with("alpha", 1.0).with("q", 0.5),
                    p().with("alpha", 0.0).with("q", 0.5),
                    p().with("alpha", 0.5).with("q", 0.8),
                    p().with("alpha", -0.5).with("q", 0.8),
                ]
            },
            build: build_corrected_binet,
        },
        TheoremCase {
            id: "cor3.5",
            statement: "f(x) = g_alpha(x+s)/g_alpha(x+1): -(log f)' CM for alpha >= 1/2, (log f)' CM for alpha <= 0, neither for 0 < alpha < 1/2",
            domain: "0 < s < 1; alpha real; 0 < q < 1",
            q_rule: QRule::Deformed,
            params: &["alpha", "s"],
            samples: || {
                vec![
                    p().with("alpha", 0.5).with("s", 0.5).with("q", 0.5),
                    p().with("alpha", 0.0).with("s", 0.5).with("q", 0.5),
                    p().with("alpha", 0.25).with("s", 0.1).with("q", 0.5),
                    p().with("alpha", 1.0).with("s", 0.1).with("q", 0.8),
                ]
            },
            build: |p, q| build_alzer_ratio("cor3.5", p, q),
        },
        TheoremCase {
            id: "cor3.6",
            statement: "classical limit of cor3.5 with Gamma and psi: -(log f)' CM for alpha >= 1/2, (log f)' CM for alpha <= 0, neither for 0 < alpha < 1/2",
            domain: "0 < s < 1; alpha real; q = 1",
            q_rule: QRule::Classical,
            params: &["alpha", "s"],
            samples: || {
                vec![
                    p().with("alpha", 0.5).with("s", 0.5),
                    p().with("alpha", 0.0).with("s", 0.5),
                    p().with("alpha", 0.25).with("s", 0.1),
                    p().with("alpha", 1.0).with("s", 0.1),
                ]
            },
            build: |p, q| build_alzer_ratio("cor3.6", p, q),
        },
        TheoremCase {
            id: "thm4.1-mean",
            statement: "-d/dx log[prod Gamma_q(x+a_i) / Gamma_q(x+mean(a))^n] is CM",
            domain: "a_i > 0; 0 < q <= 1",
            q_rule: QRule::Any,
            params: &["a_list"],
            samples: || {
                vec![
                    p().with_list(vec![0.5, 1.5]).with("q", 1.0),
                    p().with_list(vec![0.5, 1.5]).with("q", 0.5),
                    p().with_list(vec![0.2, 1.0, 3.0]).with("q", 0.8),
                ]
            },
            build: build_mean_ratio,
        },
        TheoremCase {
            id: "thm4.1-split",
            statement: "d/dx log[prod Gamma_q(x+a_i) / (Gamma_q(x)^{n-1} Gamma_q(x+sum(a)))] is CM",
            domain: "a_i > 0; 0 < q <= 1",
            q_rule: QRule::Any,
            params: &["a_list"],
            samples: || {
                vec![
                    p().with_list(vec![0.5, 1.5]).with("q", 1.0),
                    p().with_list(vec![0.5, 1.5]).with("q", 0.5),
                    p().with_list(vec![0.2, 1.0, 3.0]).with("q", 0.8),
                ]
            },
            build: build_split_ratio,
        },
        TheoremCase {
            id: "psi-prime",
            statement: "psi'(x) = sum (n+x)^{-2} is CM on (0, inf)",
            domain: "q = 1",
            q_rule: QRule::Classical,
            params: &[],
            samples: || vec![p()],
            build: build_psi_prime,
        },
    ]
}
