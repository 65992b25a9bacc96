use crate::qspecial::{dilog_f, log_gamma_q, psi_q_n, EvalConfig, QValue};
use crate::{Error, Result};

/// Building blocks of the composite functions in the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primitive {
    /// `ln Γ_q(y)`.
    LogGamma,
    /// `ψ_q^{(m)}(y)`.
    Psi(usize),
    /// `ln((1-q^y)/(1-q))`, or `ln y` at `q = 1`.
    LogQNumber,
    /// `y ln(1-q) + F(q^y)/ln q`, or `y - y ln y` at `q = 1`; its derivative
    /// is `-LogQNumber`.
    Stirling,
}

/// Eulerian numbers `A(m, j)` for `m ≤ EULERIAN_MAX`.
const EULERIAN_MAX: usize = 16;

fn eulerian_row(m: usize) -> Vec<f64> {
    let mut row = vec![1.0];
    for n in 1..=m {
        let mut next = vec![0.0; n];
        for (j, slot) in next.iter_mut().enumerate() {
            let keep = row.get(j).copied().unwrap_or(0.0) * (j + 1) as f64;
            let shift = if j > 0 {
                row.get(j - 1).copied().unwrap_or(0.0) * (n - j) as f64
            } else {
                0.0
            };
            *slot = keep + shift;
        }
        row = next;
    }
    row
}

/// `Li_{-m}(z) = z A_m(z) / (1-z)^{m+1}` with `one_minus_z = 1 - z` supplied
/// separately to keep precision near `z = 1`.
fn polylog_neg(m: usize, z: f64, one_minus_z: f64) -> f64 {
    let row = eulerian_row(m);
    let poly = row.iter().rev().fold(0.0, |acc, &c| acc * z + c);
    z * poly / one_minus_z.powi(m as i32 + 1)
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

impl Primitive {
    /// `φ^{(k)}(y)`.
    pub fn derivative(self, k: usize, y: f64, q: QValue, cfg: &EvalConfig) -> Result<f64> {
        if !(y > 0.0 && y.is_finite()) {
            return Err(Error::domain(format!(
                "primitive argument must be positive, got {y}"
            )));
        }
        match self {
            Primitive::LogGamma => {
                if k == 0 {
                    Ok(log_gamma_q(y, q, cfg)?.value)
                } else {
                    Ok(psi_q_n(k - 1, y, q, cfg)?.value)
                }
            }
            Primitive::Psi(m) => Ok(psi_q_n(m + k, y, q, cfg)?.value),
            Primitive::LogQNumber => log_q_number(k, y, q),
            Primitive::Stirling => {
                if k > 0 {
                    return Ok(-log_q_number(k - 1, y, q)?);
                }
                if q.is_classical() {
                    return Ok(y - y * y.ln());
                }
                let lnq = q.ln();
                let f = dilog_f((y * lnq).exp(), cfg)?.value;
                Ok(y * (-lnq.exp_m1()).ln() + f / lnq)
            }
        }
    }
}

fn log_q_number(k: usize, y: f64, q: QValue) -> Result<f64> {
    if k > EULERIAN_MAX + 1 {
        return Err(Error::domain(format!("derivative order {k} too high")));
    }
    if q.is_classical() {
        return Ok(if k == 0 {
            y.ln()
        } else {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sign * factorial(k - 1) / y.powi(k as i32)
        });
    }
    let lnq = q.ln();
    let one_minus_z = -(y * lnq).exp_m1();
    if k == 0 {
        return Ok(one_minus_z.ln() - (-lnq.exp_m1()).ln());
    }
    let z = (y * lnq).exp();
    Ok(-lnq.powi(k as i32) * polylog_neg(k - 1, z, one_minus_z))
}

/// One summand `coef · φ^{(k)}(scale·x + shift)` evaluated with its own `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coef: f64,
    pub primitive: Primitive,
    pub scale: f64,
    pub shift: f64,
    pub q: QValue,
}

impl Term {
    pub fn new(coef: f64, primitive: Primitive, shift: f64, q: QValue) -> Term {
        Term {
            coef,
            primitive,
            scale: 1.0,
            shift,
            q,
        }
    }

    pub fn scaled(mut self, scale: f64) -> Term {
        self.scale = scale;
        self
    }
}

/// A finite sum of primitive terms, with exact derivatives of every order.
#[derive(Debug, Clone, PartialEq)]
pub struct Family {
    pub terms: Vec<Term>,
    pub cfg: EvalConfig,
}

impl Family {
    pub fn new(terms: Vec<Term>) -> Family {
        Family {
            terms,
            cfg: EvalConfig::default(),
        }
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        self.derivative(0, x)
    }

    /// `f^{(k)}(x)`.
    pub fn derivative(&self, k: usize, x: f64) -> Result<f64> {
        let mut total = 0.0;
        for term in &self.terms {
            if term.coef == 0.0 {
                continue;
            }
            let y = term.scale * x + term.shift;
            let d = term
                .primitive
                .derivative(k, y, term.q, &self.cfg)
                .map_err(|e| e.at(x))?;
            total += term.coef * term.scale.powi(k as i32) * d;
        }
        Ok(total)
    }

    /// Smallest `x` at which some term leaves its domain.
    pub fn domain_lower(&self) -> f64 {
        self.terms
            .iter()
            .filter(|t| t.coef != 0.0)
            .map(|t| -t.shift / t.scale)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}
