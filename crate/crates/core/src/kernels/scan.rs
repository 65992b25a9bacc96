use super::{ExpectedSign, Kernel};
use crate::{Error, Result};

/// Geometric t-grid for sign scans, plus the `t → 0⁺` limit as a virtual point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanGrid {
    pub t_min: f64,
    pub t_max: f64,
    pub points: usize,
    /// Values with `|w| < zero_tol · (1 + local scale)` count as zero.
    pub zero_tol: f64,
    /// Slack allowed on the wrong side of a one-signed expectation.
    pub sign_tol: f64,
}

impl Default for ScanGrid {
    fn default() -> Self {
        ScanGrid {
            t_min: 1e-4,
            t_max: 50.0,
            points: 2000,
            zero_tol: 1e-12,
            sign_tol: 1e-12,
        }
    }
}

impl ScanGrid {
    pub fn validate(&self) -> Result<()> {
        if !(self.t_min > 0.0 && self.t_min < self.t_max && self.t_max.is_finite()) {
            return Err(Error::Grid(format!(
                "scan grid needs 0 < t_min < t_max, got [{}, {}]",
                self.t_min, self.t_max
            )));
        }
        if self.points < 2 {
            return Err(Error::Grid("scan grid needs at least 2 points".into()));
        }
        Ok(())
    }

    pub fn nodes(&self) -> Vec<f64> {
        let ratio = (self.t_max / self.t_min).ln() / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    self.t_max
                } else {
                    self.t_min * (ratio * i as f64).exp()
                }
            })
            .collect()
    }
}

/// Result of scanning one kernel over a [`ScanGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SignScanReport {
    pub kernel: Kernel,
    pub grid: ScanGrid,
    /// `(t, w(t))` samples; the first entry is the limit at `t = 0`.
    pub samples: Vec<(f64, f64)>,
    /// Extremes over the grid nodes; the `t = 0` limit is not included.
    pub min: f64,
    pub max: f64,
    pub sign_change_count: usize,
    /// Adjacent grid points bracketing each sign change.
    pub brackets: Vec<(f64, f64)>,
    pub expected: ExpectedSign,
    pub matches: bool,
}

fn sign_of(value: f64, scale: f64, zero_tol: f64) -> i8 {
    if value.abs() < zero_tol * (1.0 + scale) {
        0
    } else if value > 0.0 {
        1
    } else {
        -1
    }
}

/// Samples `kernel` on `grid`, counts sign changes between consecutive
/// non-zero samples and compares against the kernel's expected sign.
pub fn scan_kernel(kernel: &Kernel, grid: &ScanGrid) -> Result<SignScanReport> {
    grid.validate()?;
    let limit = kernel.limit_at_zero();
    let mut samples = vec![(0.0, limit)];
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut last: Option<(f64, i8)> = match sign_of(limit, limit.abs(), grid.zero_tol) {
        0 => None,
        s => Some((0.0, s)),
    };
    let mut brackets = Vec::new();

    for t in grid.nodes() {
        let (w, scale) = kernel.parts(t);
        if !w.is_finite() {
            return Err(Error::Evaluation {
                x: t,
                source: Box::new(Error::Overflow(format!(
                    "kernel {} is not finite",
                    kernel.id()
                ))),
            });
        }
        samples.push((t, w));
        min = min.min(w);
        max = max.max(w);
        let s = sign_of(w, scale, grid.zero_tol);
        if s == 0 {
            continue;
        }
        if let Some((t_prev, s_prev)) = last {
            if s != s_prev {
                brackets.push((t_prev, t));
            }
        }
        last = Some((t, s));
    }

    let expected = kernel.expected_sign();
    let sign_change_count = brackets.len();
    let matches = match expected {
        ExpectedSign::Positive => min >= -grid.sign_tol,
        ExpectedSign::Negative => max <= grid.sign_tol,
        ExpectedSign::OneSignChange => sign_change_count == 1,
        ExpectedSign::Unspecified => true,
    };
    Ok(SignScanReport {
        kernel: kernel.clone(),
        grid: *grid,
        samples,
        min,
        max,
        sign_change_count,
        brackets,
        expected,
        matches,
    })
}
