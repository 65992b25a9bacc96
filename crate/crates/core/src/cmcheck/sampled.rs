use crate::kernels::{sinh_ratio_margins, telescoping_identity};
use crate::sampling::{scale, stream, Kronecker};
use crate::{Error, Result};

/// Which side of `α = 1` the sinh-ratio sweep samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SinhRegime {
    /// `α ∈ (0, 1)`: both margins must be positive.
    Sandwich,
    /// `α ∈ (1, 3]`: both margins must be negative.
    Reversed,
}

impl SinhRegime {
    pub fn as_str(self) -> &'static str {
        match self {
            SinhRegime::Sandwich => "sandwich",
            SinhRegime::Reversed => "reversed",
        }
    }
}

/// Extreme margin of a sinh-ratio sweep and where it occurred.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinhSweep {
    pub regime: SinhRegime,
    pub samples: usize,
    /// Smallest margin for `Sandwich`, largest for `Reversed`.
    pub extreme_margin: f64,
    pub alpha: f64,
    pub t: f64,
}

impl SinhSweep {
    /// Every sampled margin had the expected strict sign.
    pub fn holds(&self) -> bool {
        match self.regime {
            SinhRegime::Sandwich => self.extreme_margin > 0.0,
            SinhRegime::Reversed => self.extreme_margin < 0.0,
        }
    }
}

/// Kronecker sweep of `(α, t)` over the regime's α-range times `t ∈ (0, 50)`.
pub fn sinh_sandwich_sweep(regime: SinhRegime, samples: usize, seed: u64) -> Result<SinhSweep> {
    if samples == 0 {
        return Err(Error::parameter("need at least one sample"));
    }
    let mut out = SinhSweep {
        regime,
        samples,
        extreme_margin: match regime {
            SinhRegime::Sandwich => f64::INFINITY,
            SinhRegime::Reversed => f64::NEG_INFINITY,
        },
        alpha: f64::NAN,
        t: f64::NAN,
    };
    for u in Kronecker::new(2, seed, stream::SINH_RATIO).take(samples) {
        let alpha = match regime {
            SinhRegime::Sandwich => u[0],
            SinhRegime::Reversed => scale(u[0], 1.0, 3.0),
        };
        let t = scale(u[1], 0.0, 50.0);
        let (lo, hi) = sinh_ratio_margins(alpha, t);
        let worse = match regime {
            SinhRegime::Sandwich => lo.min(hi) < out.extreme_margin,
            SinhRegime::Reversed => lo.max(hi) > out.extreme_margin,
        };
        if worse {
            out.extreme_margin = match regime {
                SinhRegime::Sandwich => lo.min(hi),
                SinhRegime::Reversed => lo.max(hi),
            };
            out.alpha = alpha;
            out.t = t;
        }
    }
    Ok(out)
}

/// Largest `|lhs - rhs| / n` over sampled tuples of the telescoping identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentitySweep {
    pub samples: usize,
    pub max_residual_per_term: f64,
    pub witness: Vec<f64>,
}

/// Tuples have length `n ∈ 1..=max_len` and entries `z_i ∈ (0, 1)`.
pub fn telescoping_sweep(samples: usize, max_len: usize, seed: u64) -> Result<IdentitySweep> {
    if samples == 0 || max_len == 0 {
        return Err(Error::parameter("need at least one sample of length ≥ 1"));
    }
    let mut out = IdentitySweep {
        samples,
        max_residual_per_term: 0.0,
        witness: Vec::new(),
    };
    for u in Kronecker::new(max_len + 1, seed, stream::IDENTITY).take(samples) {
        let n = 1 + ((u[0] * max_len as f64) as usize).min(max_len - 1);
        let z = &u[1..=n];
        let (lhs, rhs) = telescoping_identity(z)?;
        let r = (lhs - rhs).abs() / n as f64;
        if r > out.max_residual_per_term || out.witness.is_empty() {
            out.max_residual_per_term = r;
            out.witness = z.to_vec();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sandwich_and_reversal_hold() {
        let s = sinh_sandwich_sweep(SinhRegime::Sandwich, 2000, 3).unwrap();
        assert!(s.holds(), "{s:?}");
        let r = sinh_sandwich_sweep(SinhRegime::Reversed, 500, 3).unwrap();
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn identity_residual_is_rounding_level() {
        let s = telescoping_sweep(2000, 6, 9).unwrap();
        assert!(s.max_residual_per_term <= 1e-14, "{s:?}");
        assert!((1..=6).contains(&s.witness.len()));
    }

    #[test]
    fn sweeps_are_seeded() {
        assert_eq!(telescoping_sweep(100, 6, 1), telescoping_sweep(100, 6, 1));
        assert_ne!(
            sinh_sandwich_sweep(SinhRegime::Sandwich, 50, 1)
                .unwrap()
                .alpha,
            sinh_sandwich_sweep(SinhRegime::Sandwich, 50, 2)
                .unwrap()
                .alpha
        );
    }

    #[test]
    fn zero_samples_rejected() {
        assert!(sinh_sandwich_sweep(SinhRegime::Sandwich, 0, 0).is_err());
        assert!(telescoping_sweep(0, 6, 0).is_err());
    }
}
