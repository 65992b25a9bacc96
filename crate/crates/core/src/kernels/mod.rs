//! Proof kernels `w(t)` from the integral representations
//! `±∫ e^{-xt} pre(t) w(t) dγ_q(t)`, their sign scans, and the theorem
//! registry that ties each kernel to a composite function of `x`.

mod family;
mod quadrature;
mod registry;
mod scan;

pub use family::{Family, Primitive, Term};
pub use quadrature::{exp_sinh, measure_integral};
pub use registry::{
    registry, Branch, Params, QRule, Representation, TheoremCase, TheoremInstance, Verdict,
};
pub use scan::{scan_kernel, ScanGrid, SignScanReport};

use crate::{Error, Result};

/// Below this `u = t/2`, `u coth u - 1` is taken from its Taylor series.
const SERIES_SWITCH: f64 = 0.25;

/// `G(t) - 1/2` where `G(t) = 1/(1-e^{-t}) - 1/t`, accurate as `t → 0`.
///
/// Uses `G(t) - 1/2 = (u coth u - 1)/t` with `u = t/2`.
pub fn g_minus_half(t: f64) -> f64 {
    let u = 0.5 * t;
    if u < SERIES_SWITCH {
        let u2 = u * u;
        // u coth u - 1 = Σ_{k≥1} 2^{2k} B_{2k} u^{2k} / (2k)!
        let poly = u2
            * (1.0 / 3.0
                + u2 * (-1.0 / 45.0
                    + u2 * (2.0 / 945.0
                        + u2 * (-1.0 / 4725.0
                            + u2 * (2.0 / 93_555.0
                                + u2 * (-1382.0 / 638_512_875.0 + u2 * (4.0 / 18_243_225.0)))))));
        poly / t
    } else {
        (u / u.tanh() - 1.0) / t
    }
}

/// `G(t) = 1/(1-e^{-t}) - 1/t`, increasing from `1/2` to `1`.
pub fn g(t: f64) -> f64 {
    0.5 + g_minus_half(t)
}

/// `sinh(αt)/sinh(t)`, written with decaying exponentials so it cannot overflow.
pub fn kernel_sinh_ratio(alpha: f64, t: f64) -> f64 {
    if alpha == 1.0 {
        return 1.0;
    }
    ((alpha - 1.0) * t).exp() * (-2.0 * alpha * t).exp_m1() / (-2.0 * t).exp_m1()
}

/// The two sides of the sinh-ratio sandwich: `(α e^{(α-1)t}, α)`.
pub fn sinh_ratio_bounds(alpha: f64, t: f64) -> (f64, f64) {
    (alpha * ((alpha - 1.0) * t).exp(), alpha)
}

/// Both margins of the sandwich: `(ratio - lower, upper - ratio)`.
/// Positive for `0 < α < 1`, negative for `α > 1`.
pub fn sinh_ratio_margins(alpha: f64, t: f64) -> (f64, f64) {
    let r = kernel_sinh_ratio(alpha, t);
    let (lo, hi) = sinh_ratio_bounds(alpha, t);
    (r - lo, hi - r)
}

/// `x ≤ y` up to rounding in `y`, for parameter branch boundaries.
pub(crate) fn at_most(x: f64, y: f64) -> bool {
    x <= y + 1e-12 * y.abs().max(1.0)
}

/// `G(t) - α`.
pub fn kernel_g_shift(alpha: f64, t: f64) -> f64 {
    g_minus_half(t) + (0.5 - alpha)
}

/// `(e^{-bt} - e^{-at})/(1-e^{-t}) + (b-a) e^{-ct}`, for `a < b ≤ a+1`.
pub fn kernel_power_ratio(a: f64, b: f64, c: f64, t: f64) -> Result<f64> {
    check_power_ratio(a, b)?;
    Ok(power_ratio_parts(a, b, c, t).iter().sum())
}

fn check_power_ratio(a: f64, b: f64) -> Result<()> {
    if a < b && b <= a + 1.0 {
        Ok(())
    } else {
        Err(Error::parameter(format!(
            "kernel requires a < b ≤ a+1, got a = {a}, b = {b}"
        )))
    }
}

fn power_ratio_parts(a: f64, b: f64, c: f64, t: f64) -> [f64; 2] {
    let d = b - a;
    [
        (-a * t).exp() * (-d * t).exp_m1() / -(-t).exp_m1(),
        d * (-c * t).exp(),
    ]
}

/// `a e^{(a-1)t/2} - sinh(at/2)/sinh(t/2)`.
pub fn kernel_sinh_power(a: f64, t: f64) -> f64 {
    sinh_power_parts(a, t).iter().sum()
}

fn sinh_power_parts(a: f64, t: f64) -> [f64; 2] {
    [
        a * (0.5 * (a - 1.0) * t).exp(),
        -kernel_sinh_ratio(a, 0.5 * t),
    ]
}

/// `-α/(1-e^{-t}) + 1/(1-e^{-t/α}) = G(t/α) - α G(t)`.
pub fn kernel_psi_rescale(alpha: f64, t: f64) -> f64 {
    psi_rescale_parts(alpha, t).iter().sum()
}

fn psi_rescale_parts(alpha: f64, t: f64) -> [f64; 2] {
    [g(t / alpha), -alpha * g(t)]
}

/// `2 sinh((b-a)t/2) - (b-a) t e^{((a+b)/2 - c)t}`, for `0 < a < b`.
pub fn kernel_psi_ratio(a: f64, b: f64, c: f64, t: f64) -> Result<f64> {
    check_psi_ratio(a, b)?;
    Ok(psi_ratio_parts(a, b, c, t).iter().sum())
}

fn check_psi_ratio(a: f64, b: f64) -> Result<()> {
    if 0.0 < a && a < b {
        Ok(())
    } else {
        Err(Error::parameter(format!(
            "kernel requires 0 < a < b, got a = {a}, b = {b}"
        )))
    }
}

fn psi_ratio_parts(a: f64, b: f64, c: f64, t: f64) -> [f64; 2] {
    let d = b - a;
    [
        2.0 * (0.5 * d * t).sinh(),
        -d * t * ((0.5 * (a + b) - c) * t).exp(),
    ]
}

/// `p_α(t) = (12 - t² e^{-αt})/(12(1-e^{-t})) - 1/2 - 1/t`,
/// evaluated as `(G(t) - 1/2) - t e^{-αt}(1 + t G(t))/12`.
pub fn kernel_corrected_binet(alpha: f64, t: f64) -> f64 {
    corrected_binet_parts(alpha, t).iter().sum()
}

fn corrected_binet_parts(alpha: f64, t: f64) -> [f64; 2] {
    [
        g_minus_half(t),
        -t * (-alpha * t).exp() * (1.0 + t * g(t)) / 12.0,
    ]
}

fn require_list(a_list: &[f64]) -> Result<()> {
    if a_list.is_empty() || a_list.iter().any(|&a| !(a > 0.0 && a.is_finite())) {
        Err(Error::parameter(
            "a_list must be a non-empty list of positive numbers",
        ))
    } else {
        Ok(())
    }
}

/// `n e^{-āt} - Σ e^{-a_i t}`; non-positive by convexity of `a ↦ e^{-at}`.
pub fn kernel_mean_ratio(a_list: &[f64], t: f64) -> Result<f64> {
    require_list(a_list)?;
    let (pos, neg) = mean_ratio_parts(a_list, t);
    Ok(pos - neg)
}

fn mean_ratio_parts(a_list: &[f64], t: f64) -> (f64, f64) {
    let n = a_list.len() as f64;
    let mean = a_list.iter().sum::<f64>() / n;
    let sum: f64 = a_list.iter().map(|a| (-a * t).exp()).sum();
    (n * (-mean * t).exp(), sum)
}

/// `n - 1 + e^{-(a_1+…+a_n)t} - Σ e^{-a_i t}`; non-negative.
pub fn kernel_split_ratio(a_list: &[f64], t: f64) -> Result<f64> {
    require_list(a_list)?;
    let zs: Vec<f64> = a_list.iter().map(|a| (-a * t).exp()).collect();
    let (lhs, _) = telescoping_identity(&zs)?;
    Ok(lhs)
}

/// Both sides of
/// `n - 1 + z_1⋯z_n - Σ z_i = Σ_{j=2}^n (1 - z_j)(1 - z_1⋯z_{j-1})`.
pub fn telescoping_identity(z: &[f64]) -> Result<(f64, f64)> {
    if z.iter().any(|&v| !(0.0..1.0).contains(&v)) {
        return Err(Error::domain("identity needs every z_i in [0, 1)"));
    }
    let n = z.len();
    if n == 0 {
        return Ok((0.0, 0.0));
    }
    let product: f64 = z.iter().product();
    let lhs = (n as f64 - 1.0) + product - z.iter().sum::<f64>();
    let mut rhs = 0.0;
    let mut prefix = z[0];
    for &zj in &z[1..] {
        rhs += (1.0 - zj) * (1.0 - prefix);
        prefix *= zj;
    }
    Ok((lhs, rhs))
}

/// Expected sign pattern of a kernel on `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedSign {
    Positive,
    Negative,
    OneSignChange,
    Unspecified,
}

impl ExpectedSign {
    pub fn as_str(self) -> &'static str {
        match self {
            ExpectedSign::Positive => "positive",
            ExpectedSign::Negative => "negative",
            ExpectedSign::OneSignChange => "one-sign-change",
            ExpectedSign::Unspecified => "unspecified",
        }
    }
}

/// A kernel with its parameters bound.
#[derive(Debug, Clone, PartialEq)]
pub enum Kernel {
    /// Sinh-ratio sandwich; scanned value is the margin nearest to failing.
    SinhRatio {
        alpha: f64,
    },
    GShift {
        alpha: f64,
    },
    PowerRatio {
        a: f64,
        b: f64,
        c: f64,
    },
    SinhPower {
        a: f64,
    },
    PsiRescale {
        alpha: f64,
    },
    PsiRatio {
        a: f64,
        b: f64,
        c: f64,
    },
    CorrectedBinet {
        alpha: f64,
    },
    MeanRatio {
        a_list: Vec<f64>,
    },
    SplitRatio {
        a_list: Vec<f64>,
    },
}

/// Stable kernel ids accepted by [`Kernel::from_id`].
pub const KERNEL_IDS: [&str; 9] = [
    "lemma1.2",
    "thm2.1",
    "thm2.5",
    "thm2.6",
    "thm3.1",
    "thm3.2",
    "thm3.4",
    "thm4.1-mean",
    "thm4.1-split",
];

impl Kernel {
    /// Builds a kernel from its id and a parameter set, validating the
    /// parameter domain.
    pub fn from_id(id: &str, params: &Params) -> Result<Kernel> {
        let kernel = match id {
            "lemma1.2" => Kernel::SinhRatio {
                alpha: params.require("alpha")?,
            },
            "thm2.1" => Kernel::GShift {
                alpha: params.require("alpha")?,
            },
            "thm2.5" => Kernel::PowerRatio {
                a: params.require("a")?,
                b: params.require("b")?,
                c: params.require("c")?,
            },
            "thm2.6" => Kernel::SinhPower {
                a: params.require("a")?,
            },
            "thm3.1" => Kernel::PsiRescale {
                alpha: params.require("alpha")?,
            },
            "thm3.2" => Kernel::PsiRatio {
                a: params.require("a")?,
                b: params.require("b")?,
                c: params.require("c")?,
            },
            "thm3.4" => Kernel::CorrectedBinet {
                alpha: params.require("alpha")?,
            },
            "thm4.1-mean" => Kernel::MeanRatio {
                a_list: params.require_list()?.to_vec(),
            },
            "thm4.1-split" => Kernel::SplitRatio {
                a_list: params.require_list()?.to_vec(),
            },
            other => return Err(Error::parameter(format!("unknown kernel id '{other}'"))),
        };
        kernel.validate()?;
        Ok(kernel)
    }

    pub fn id(&self) -> &'static str {
        match self {
            Kernel::SinhRatio { .. } => "lemma1.2",
            Kernel::GShift { .. } => "thm2.1",
            Kernel::PowerRatio { .. } => "thm2.5",
            Kernel::SinhPower { .. } => "thm2.6",
            Kernel::PsiRescale { .. } => "thm3.1",
            Kernel::PsiRatio { .. } => "thm3.2",
            Kernel::CorrectedBinet { .. } => "thm3.4",
            Kernel::MeanRatio { .. } => "thm4.1-mean",
            Kernel::SplitRatio { .. } => "thm4.1-split",
        }
    }

    /// Parameter assignment as a [`Params`] value.
    pub fn params(&self) -> Params {
        let mut p = Params::new();
        match self {
            Kernel::SinhRatio { alpha }
            | Kernel::GShift { alpha }
            | Kernel::PsiRescale { alpha }
            | Kernel::CorrectedBinet { alpha } => {
                p.set("alpha", *alpha);
            }
            Kernel::PowerRatio { a, b, c } | Kernel::PsiRatio { a, b, c } => {
                p.set("a", *a);
                p.set("b", *b);
                p.set("c", *c);
            }
            Kernel::SinhPower { a } => {
                p.set("a", *a);
            }
            Kernel::MeanRatio { a_list } | Kernel::SplitRatio { a_list } => {
                p.set_list(a_list.clone());
            }
        }
        p
    }

    fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::parameter(format!(
                    "{name} must be positive, got {v}"
                )))
            }
        };
        let finite = |name: &str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(Error::parameter(format!("{name} must be finite, got {v}")))
            }
        };
        match self {
            Kernel::SinhRatio { alpha } => positive("alpha", *alpha),
            Kernel::GShift { alpha } | Kernel::CorrectedBinet { alpha } => finite("alpha", *alpha),
            Kernel::PowerRatio { a, b, c } => {
                finite("a", *a)?;
                finite("c", *c)?;
                check_power_ratio(*a, *b)
            }
            Kernel::SinhPower { a } => positive("a", *a),
            Kernel::PsiRescale { alpha } => {
                if *alpha > 0.0 && *alpha < 1.0 {
                    Ok(())
                } else {
                    Err(Error::parameter(format!(
                        "kernel requires 0 < alpha < 1, got {alpha}"
                    )))
                }
            }
            Kernel::PsiRatio { a, b, c } => {
                finite("c", *c)?;
                check_psi_ratio(*a, *b)
            }
            Kernel::MeanRatio { a_list } | Kernel::SplitRatio { a_list } => require_list(a_list),
        }
    }

    /// Kernel value at `t > 0`.
    pub fn eval(&self, t: f64) -> f64 {
        self.parts(t).0
    }

    /// Value together with the sum of the absolute values of the pieces it
    /// is assembled from (the cancellation scale).
    pub fn parts(&self, t: f64) -> (f64, f64) {
        let sum2 = |p: [f64; 2]| (p[0] + p[1], p[0].abs() + p[1].abs());
        match self {
            Kernel::SinhRatio { alpha } => {
                let (lo, hi) = sinh_ratio_margins(*alpha, t);
                let scale = kernel_sinh_ratio(*alpha, t).abs() + alpha.abs();
                let v = if *alpha < 1.0 {
                    lo.min(hi)
                } else if *alpha > 1.0 {
                    lo.max(hi)
                } else {
                    0.0
                };
                (v, scale)
            }
            Kernel::GShift { alpha } => {
                let gm = g_minus_half(t);
                (gm + (0.5 - alpha), gm.abs() + (0.5 - alpha).abs())
            }
            Kernel::PowerRatio { a, b, c } => sum2(power_ratio_parts(*a, *b, *c, t)),
            Kernel::SinhPower { a } => sum2(sinh_power_parts(*a, t)),
            Kernel::PsiRescale { alpha } => sum2(psi_rescale_parts(*alpha, t)),
            Kernel::PsiRatio { a, b, c } => sum2(psi_ratio_parts(*a, *b, *c, t)),
            Kernel::CorrectedBinet { alpha } => sum2(corrected_binet_parts(*alpha, t)),
            Kernel::MeanRatio { a_list } => {
                let (pos, neg) = mean_ratio_parts(a_list, t);
                (pos - neg, pos + neg)
            }
            Kernel::SplitRatio { a_list } => {
                let n = a_list.len() as f64;
                let s: f64 = a_list.iter().sum();
                let sum: f64 = a_list.iter().map(|a| (-a * t).exp()).sum();
                let v = kernel_split_ratio(a_list, t).unwrap_or(f64::NAN);
                (v, (n - 1.0) + (-s * t).exp() + sum)
            }
        }
    }

    /// Value of the kernel in the limit `t → 0⁺`.
    pub fn limit_at_zero(&self) -> f64 {
        match self {
            Kernel::GShift { alpha } => 0.5 - alpha,
            Kernel::PsiRescale { alpha } => 0.5 * (1.0 - alpha),
            _ => 0.0,
        }
    }

    /// Sign pattern the source theorem predicts for these parameters.
    pub fn expected_sign(&self) -> ExpectedSign {
        use ExpectedSign::*;
        match self {
            Kernel::SinhRatio { alpha } => {
                if *alpha < 1.0 {
                    Positive
                } else if *alpha > 1.0 {
                    Negative
                } else {
                    Unspecified
                }
            }
            Kernel::GShift { alpha } => {
                if *alpha <= 0.5 {
                    Positive
                } else if *alpha >= 1.0 {
                    Negative
                } else {
                    OneSignChange
                }
            }
            Kernel::PowerRatio { a, b, c } => {
                if at_most(*c, 0.5 * (a + b - 1.0)) {
                    Positive
                } else if at_most(*a, *c) {
                    Negative
                } else {
                    OneSignChange
                }
            }
            Kernel::SinhPower { a } => {
                if *a > 1.0 {
                    Positive
                } else if *a < 1.0 {
                    Negative
                } else {
                    Unspecified
                }
            }
            Kernel::PsiRescale { .. } => Positive,
            Kernel::PsiRatio { a, b, c } => {
                if at_most(0.5 * (a + b), *c) {
                    Positive
                } else if at_most(*c, *a) {
                    Negative
                } else {
                    OneSignChange
                }
            }
            Kernel::CorrectedBinet { alpha } => {
                if *alpha >= 0.5 {
                    Positive
                } else if *alpha <= 0.0 {
                    Negative
                } else {
                    OneSignChange
                }
            }
            Kernel::MeanRatio { .. } => Negative,
            Kernel::SplitRatio { .. } => Positive,
        }
    }
}
