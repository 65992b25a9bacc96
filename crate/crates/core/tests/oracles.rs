//! Reference values checked against independent, deliberately naive oracles.
//!
//! Each frozen constant was produced by the oracle next to it (and agrees
//! with a 30-digit evaluation); the library is then compared with both.

use std::f64::consts::{FRAC_2_SQRT_PI, LN_2, PI};

use qgamma::bounds::kershaw_psi_bounds;
use qgamma::kernels::{g, kernel_g_shift, kernel_sinh_ratio};
use qgamma::qspecial::*;
use qgamma::{EvalConfig, QValue, EULER_GAMMA};

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn q(v: f64) -> QValue {
    QValue::new(v).unwrap()
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

/// `Γ_q(n)` for integer `n ≥ 1` by `Γ_q(k+1) = [k]_q Γ_q(k)`.
fn q_factorial(n: u32, qq: f64) -> f64 {
    (1..n)
        .map(|k| (1.0 - qq.powi(k as i32)) / (1.0 - qq))
        .product()
}

#[test]
fn q_gamma_integer_values() {
    for qq in [0.1, 0.5, 0.9] {
        for n in 2..=6 {
            let got = gamma_q(n as f64, q(qq), &cfg()).unwrap().value;
            assert!(rel_close(got, q_factorial(n, qq), 1e-12), "n={n} q={qq}");
        }
    }
    assert_eq!(q_factorial(4, 0.5), 2.625);
    let lg = log_gamma_q(3.0, q(0.5), &cfg()).unwrap();
    assert!((lg.value - 1.5f64.ln()).abs() <= lg.abs_error_bound + 1e-15);
}

#[test]
fn q_gamma_half_against_long_product() {
    // ln Γ_q(1/2) at q = 0.9 from 5000 product factors.
    const FROZEN: f64 = 0.552_841_092_312_514;
    let (x, qq) = (0.5f64, 0.9f64);
    let mut oracle = (1.0 - x) * (1.0 - qq).ln();
    for n in 0..5000 {
        let nf = n as f64;
        oracle += (-(qq.powf(nf + 1.0))).ln_1p() - (-(qq.powf(nf + x))).ln_1p();
    }
    assert!((oracle - FROZEN).abs() < 1e-13);
    let got = log_gamma_q(x, q(qq), &cfg()).unwrap().value;
    assert!((got - FROZEN).abs() < 1e-12);
}

#[test]
fn log_gamma_half_integers() {
    const LN_SQRT_PI: f64 = 0.572_364_942_924_700_1;
    assert!((0.5 * PI.ln() - LN_SQRT_PI).abs() < 1e-16);
    assert!((log_gamma(0.5).unwrap().value - LN_SQRT_PI).abs() < 1e-14);
    // Γ(3/2) = Γ(1/2)/2
    let three_half = LN_SQRT_PI - LN_2;
    assert!((three_half + 0.120_782_237_635_245_2).abs() < 1e-15);
    assert!((log_gamma(1.5).unwrap().value - three_half).abs() < 1e-14);
}

/// `ψ(x) = lim_N [ln N - Σ_{n<N} 1/(x+n)]`, with the `1/(2N)` correction.
fn digamma_oracle(x: f64) -> f64 {
    let n = 2_000_000;
    let mut sum = 0.0;
    for k in (0..n).rev() {
        sum += 1.0 / (x + k as f64);
    }
    let nf = n as f64;
    (nf + x).ln() - sum - 1.0 / (2.0 * (nf + x))
}

#[test]
fn digamma_values() {
    const PSI_2: f64 = 0.422_784_335_098_467_1;
    const PSI_HALF: f64 = -1.963_510_026_021_423_5;
    assert!((1.0 - EULER_GAMMA - PSI_2).abs() < 1e-15);
    assert!((-EULER_GAMMA - 2.0 * LN_2 - PSI_HALF).abs() < 1e-15);
    assert!((digamma_oracle(2.0) - PSI_2).abs() < 1e-10);
    assert!((digamma_oracle(0.5) - PSI_HALF).abs() < 1e-10);
    assert!((psi(2.0, &cfg()).unwrap().value - PSI_2).abs() < 1e-14);
    assert!((psi(0.5, &cfg()).unwrap().value - PSI_HALF).abs() < 1e-14);
}

/// `Σ_{k≥0} 1/(k+x)^{p}` by partial sums plus the Euler–Maclaurin tail.
fn hurwitz_oracle(p: i32, x: f64) -> f64 {
    let n = 100_000;
    let mut s = 0.0;
    for k in (0..n).rev() {
        s += (k as f64 + x).powi(-p);
    }
    let a = n as f64 + x;
    s + a.powi(1 - p) / (p - 1) as f64 + 0.5 * a.powi(-p)
}

#[test]
fn polygamma_values() {
    const ZETA3: f64 = 1.202_056_903_159_594_3;
    let pi2_6 = PI * PI / 6.0;
    assert!((hurwitz_oracle(2, 1.0) - pi2_6).abs() < 1e-12);
    assert!((hurwitz_oracle(3, 1.0) - ZETA3).abs() < 1e-12);
    assert!((psi_n(1, 1.0, &cfg()).unwrap().value - pi2_6).abs() < 1e-12);
    assert!((psi_n(2, 1.0, &cfg()).unwrap().value + 2.0 * ZETA3).abs() < 1e-12);
    let x = 100.0;
    let asym = 1.0 / x + 0.5 / (x * x);
    assert!(((psi_n(1, x, &cfg()).unwrap().value - asym) / asym).abs() < 1e-3);
    for x in [0.3, 2.7, 11.0] {
        let got = psi_n(1, x, &cfg()).unwrap().value;
        assert!(rel_close(got, hurwitz_oracle(2, x), 1e-11), "x={x}");
    }
}

#[test]
fn q_digamma_against_partial_sums() {
    // ψ_q(1) at q = 1/2, and ψ_q'(1) at q = 1/2.
    const PSI_Q: f64 = -0.420_529_034_356_045_8;
    const PSI_Q1: f64 = 1.318_379_352_148_178_8;
    let (x, qq) = (1.0f64, 0.5f64);
    let lnq = qq.ln();
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    for k in 1..=200 {
        let kf = k as f64;
        let qk = qq.powf(kf * x);
        s0 += qk / (1.0 - qq.powf(kf));
        s1 += kf * qk / (1.0 - qq.powf(kf));
    }
    let oracle0 = -(1.0 - qq).ln() + lnq * s0;
    let oracle1 = lnq * lnq * s1;
    assert!((oracle0 - PSI_Q).abs() < 1e-15 && (oracle1 - PSI_Q1).abs() < 1e-15);
    let r0 = psi_q(x, q(qq), &cfg()).unwrap();
    assert!((r0.value - PSI_Q).abs() <= r0.abs_error_bound + 1e-15);
    let r1 = psi_q_n(1, x, q(qq), &cfg()).unwrap();
    assert!((r1.value - PSI_Q1).abs() <= r1.abs_error_bound + 1e-15);
}

#[test]
fn q_digamma_classical_limit() {
    let target = 1.0 - EULER_GAMMA;
    let errs: Vec<f64> = [0.9, 0.99, 0.999]
        .iter()
        .map(|&qq| (psi_q(2.0, q(qq), &cfg()).unwrap().value - target).abs())
        .collect();
    assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
    const PSI_Q_09: f64 = 0.396_983_703_367_065_4;
    assert!((psi_q(2.0, q(0.9), &cfg()).unwrap().value - PSI_Q_09).abs() < 1e-12);
}

/// Composite Simpson rule on `[a, b]` with `n` (even) panels.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + i as f64 * h);
    }
    s * h / 3.0
}

#[test]
fn dilog_values() {
    const F_HALF: f64 = 0.582_240_526_465_012_5;
    let oracle = simpson(
        |t| if t == 0.0 { 1.0 } else { -(-t).ln_1p() / t },
        0.0,
        0.5,
        2000,
    );
    assert!((oracle - F_HALF).abs() < 1e-13);
    assert!((PI * PI / 12.0 - 0.5 * LN_2 * LN_2 - F_HALF).abs() < 1e-15);
    assert!((dilog_f(0.5, &cfg()).unwrap().value - F_HALF).abs() < 1e-12);
    assert!((dilog_f(1.0, &cfg()).unwrap().value - PI * PI / 6.0).abs() < 1e-12);
    assert_eq!(dilog_f(0.0, &cfg()).unwrap().value, 0.0);
}

#[test]
fn measure_moment_values() {
    assert!((measure_moment(1.0, q(0.5)).unwrap() - LN_2).abs() < 1e-15);
    assert!((measure_moment_over_t(1.0, q(0.5)).unwrap() - LN_2).abs() < 1e-15);
    const M2: f64 = 0.287_682_072_451_780_9;
    assert!((-(0.75f64).ln() - M2).abs() < 1e-16);
    assert!((measure_moment_over_t(2.0, q(0.5)).unwrap() - M2).abs() < 1e-15);
}

#[test]
fn kernel_values() {
    const SINH_RATIO: f64 = 0.443_409_441_985_037;
    assert!((0.5f64.sinh() / 1f64.sinh() - SINH_RATIO).abs() < 1e-15);
    assert!((kernel_sinh_ratio(0.5, 1.0) - SINH_RATIO).abs() < 1e-15);
    assert!((kernel_sinh_ratio(2.0, 1.0) - 2f64.sinh() / 1f64.sinh()).abs() < 1e-14);

    const G1_MINUS_1: f64 = -0.418_023_293_130_673_6;
    assert!((1.0 / (1.0 - (-1f64).exp()) - 2.0 - G1_MINUS_1).abs() < 1e-15);
    assert!((kernel_g_shift(1.0, 1.0) - G1_MINUS_1).abs() < 1e-15);

    // Root of G(t) = 3/4 by bisection on the direct formula.
    const ROOT: f64 = 3.593_511_969_447_426;
    let direct = |t: f64| 1.0 / (1.0 - (-t).exp()) - 1.0 / t - 0.75;
    let (mut lo, mut hi) = (3.0, 4.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if direct(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    assert!((lo - ROOT).abs() < 1e-12);
    assert!(g(ROOT - 1e-9) < 0.75 && g(ROOT + 1e-9) > 0.75);
}

#[test]
fn q_limit_errors() {
    // |Γ_q(x) - Γ(x)| for q = 0.9, 0.99, 0.999.
    const FROZEN: [(f64, [f64; 3]); 3] = [
        (
            0.5,
            [
                0.034_269_499_343_354_1,
                0.003_333_211_372_352_954,
                0.000_332_433_233_656_004_6,
            ],
        ),
        (
            1.5,
            [
                0.005_751_957_571_006_007,
                0.000_555_921_710_912_784_8,
                5.540_938_724_157_036e-5,
            ],
        ),
        (
            2.5,
            [
                0.025_400_774_787_077_97,
                0.002_497_116_391_792_33,
                0.000_249_297_208_131_206_2,
            ],
        ),
    ];
    for (x, errs) in FROZEN {
        let exact = gamma(x).unwrap().value;
        for (qq, want) in [0.9, 0.99, 0.999].into_iter().zip(errs) {
            let got = (gamma_q(x, q(qq), &cfg()).unwrap().value - exact).abs();
            assert!(
                (got - want).abs() < 1e-6 * want,
                "x={x} q={qq}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn kershaw_psi_triple() {
    const TRIPLE: [f64; 3] = [
        1.113_028_860_625_886_7,
        FRAC_2_SQRT_PI,
        1.131_717_314_897_638,
    ];
    let t = kershaw_psi_bounds(1.0, 0.5).unwrap();
    let digamma = statrs::function::gamma::digamma;
    assert!(((0.5 * digamma(1.0 + 0.5f64.sqrt())).exp() - TRIPLE[0]).abs() < 1e-13);
    assert!(((0.5 * digamma(1.75)).exp() - TRIPLE[2]).abs() < 1e-13);
    for (got, want) in [t.lower, t.value, t.upper].into_iter().zip(TRIPLE) {
        assert!((got - want).abs() < 1e-13, "{got} vs {want}");
    }
}
