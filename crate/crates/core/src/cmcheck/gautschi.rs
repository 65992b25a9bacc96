use rand::Rng;

use crate::qspecial::log_gamma;
use crate::sampling::{rng, stream};
use crate::{Error, Result};

/// Smallest `n - Σ 1/Γ(x_k)` found, with the tuple attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct GautschiReport {
    pub n: usize,
    pub samples: usize,
    pub worst_margin: f64,
    pub witness: Vec<f64>,
}

/// Log-spread of the draws before re-centering.
const LOG_HALF_WIDTH: f64 = 2.5;

/// Samples tuples `x_1..x_n > 0` with `Π x_k = 1` and records the smallest
/// `n - Σ 1/Γ(x_k)`.
///
/// Each tuple is drawn as `y_k ~ U(-2.5, 2.5)` re-centred to mean zero, then
/// `x_k = e^{y_k}`. The generator is ChaCha8 on the `GAUTSCHI_SUM` stream.
pub fn gautschi_sum_check(n: usize, samples: usize, seed: u64) -> Result<GautschiReport> {
    if !(1..=8).contains(&n) {
        return Err(Error::parameter(format!("n must be in 1..=8, got {n}")));
    }
    if samples == 0 {
        return Err(Error::parameter("need at least one sample"));
    }
    let mut r = rng(seed, stream::GAUTSCHI_SUM);
    let mut worst = GautschiReport {
        n,
        samples,
        worst_margin: f64::INFINITY,
        witness: Vec::new(),
    };
    let mut y = vec![0.0; n];
    for _ in 0..samples {
        for v in y.iter_mut() {
            *v = r.random_range(-LOG_HALF_WIDTH..LOG_HALF_WIDTH);
        }
        let mean = y.iter().sum::<f64>() / n as f64;
        let xs: Vec<f64> = y.iter().map(|v| (v - mean).exp()).collect();
        let mut sum = 0.0;
        for &x in &xs {
            sum += (-log_gamma(x)?.value).exp();
        }
        let margin = n as f64 - sum;
        if margin < worst.worst_margin {
            worst.worst_margin = margin;
            worst.witness = xs;
        }
    }
    Ok(worst)
}
