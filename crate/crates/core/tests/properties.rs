use num_complex::Complex64;
use proptest::prelude::*;

use qgamma::bounds::*;
use qgamma::cmcheck::{check_cm, forward_difference, GridSpec, Subject, Tolerances};
use qgamma::kernels::*;
use qgamma::qspecial::*;
use qgamma::{EvalConfig, QValue};

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn q_gamma_recurrence(x in 0.05f64..20.0, q in 0.05f64..0.95) {
        let qv = QValue::new(q).unwrap();
        let lg0 = log_gamma_q(x, qv, &cfg()).unwrap().value;
        let lg1 = log_gamma_q(x + 1.0, qv, &cfg()).unwrap().value;
        let log_qnum = ((x * q.ln()).exp_m1() / q.ln().exp_m1()).ln();
        prop_assert!((lg1 - lg0 - log_qnum).abs() <= 1e-11 * (1.0 + lg1.abs()));
    }

    #[test]
    fn classical_recurrences(x in 0.05f64..50.0) {
        let lg = log_gamma(x + 1.0).unwrap().value - log_gamma(x).unwrap().value;
        prop_assert!((lg - x.ln()).abs() <= 1e-12 * (1.0 + x.ln().abs()));
        let d = psi(x + 1.0, &cfg()).unwrap().value - psi(x, &cfg()).unwrap().value;
        prop_assert!((d - 1.0 / x).abs() <= 1e-12 * (1.0 + 1.0 / x));
        let d1 = psi_n(1, x, &cfg()).unwrap().value - psi_n(1, x + 1.0, &cfg()).unwrap().value;
        prop_assert!((d1 - 1.0 / (x * x)).abs() <= 1e-11 * (1.0 + 1.0 / (x * x)));
    }

    #[test]
    fn q_polygamma_signs(x in 0.1f64..10.0, q in 0.1f64..0.95, n in 1usize..=6) {
        let v = psi_q_n(n, x, QValue::new(q).unwrap(), &cfg()).unwrap().value;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        prop_assert!(sign * v > 0.0);
    }

    #[test]
    fn sinh_ratio_sandwich(alpha in 1e-3f64..0.999, t in 1e-3f64..50.0) {
        let (lo, hi) = sinh_ratio_margins(alpha, t);
        prop_assert!(lo > 0.0 && hi > 0.0);
    }

    #[test]
    fn sinh_ratio_reversal(alpha in 1.001f64..3.0, t in 1e-3f64..50.0) {
        let (lo, hi) = sinh_ratio_margins(alpha, t);
        prop_assert!(lo < 0.0 && hi < 0.0);
    }

    #[test]
    fn telescoping_identity_holds(z in prop::collection::vec(0.0f64..1.0, 1..=6)) {
        let (lhs, rhs) = telescoping_identity(&z).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-14 * z.len() as f64);
        prop_assert!(lhs >= -1e-15);
    }

    #[test]
    fn split_kernel_nonnegative(a in prop::collection::vec(0.01f64..5.0, 1..=5), t in 1e-3f64..50.0) {
        prop_assert!(kernel_split_ratio(&a, t).unwrap() >= -1e-15);
    }

    #[test]
    fn mean_kernel_nonpositive(a in prop::collection::vec(0.01f64..5.0, 1..=5), t in 1e-3f64..50.0) {
        prop_assert!(kernel_mean_ratio(&a, t).unwrap() <= 1e-15);
    }

    #[test]
    fn g_is_increasing(t in 1e-4f64..40.0, dt in 1e-3f64..1.0) {
        prop_assert!(g(t + dt) > g(t));
        prop_assert!(g(t) > 0.5 && g(t) < 1.0);
    }

    #[test]
    fn exponential_differences(lam in 0.1f64..3.0, x in 0.0f64..5.0, h in 0.05f64..1.0, n in 0usize..=8) {
        let d = forward_difference(|t: f64| Ok((-lam * t).exp()), x, h, n).unwrap();
        let signed = if n % 2 == 0 { d } else { -d };
        let exact = (-lam * x).exp() * (1.0 - (-lam * h).exp()).powi(n as i32);
        prop_assert!((signed - exact).abs() <= 1e-13);
    }

    #[test]
    fn classical_sandwiches(x in 0.01f64..100.0, s in 0.01f64..0.99) {
        prop_assert!(kershaw_psi_bounds(x, s).unwrap().holds());
        prop_assert!(kershaw_power_bounds(x, s).unwrap().holds());
    }

    #[test]
    fn gautschi_sandwich(n in 1u64..200, s in 0.01f64..0.99) {
        prop_assert!(gautschi_bounds(n, s).unwrap().holds());
    }

    #[test]
    fn q_sandwich_holds(x in -0.2f64..30.0, s in 0.5f64..0.99, q in 0.05f64..0.999) {
        let q = QValue::new(q).unwrap();
        prop_assert!(q_sandwich(x, s, q, &cfg()).unwrap().holds());
    }

    #[test]
    fn beta_modulus_at_most_one(
        re_off in 0.01f64..5.0,
        im in -20.0f64..20.0,
        a in 0.0f64..=1.0,
        b in 0.0f64..3.0,
    ) {
        let s = Complex64::new(beta_sigma_floor(a, b) - 0.01 + re_off, im);
        let m = beta_ratio_modulus(s, a, b).unwrap();
        prop_assert!(m.modulus <= 1.0 + 1e-10);
    }

    #[test]
    fn rademacher_bound(re in 0.0f64..5.0, im in -20.0f64..20.0, c in 0.0f64..=1.0) {
        let s = Complex64::new(0.5 * (1.0 - c) + 0.01 + re, im);
        let r = rademacher_ratio_bound(s, c).unwrap();
        prop_assert!(r.margin() >= 0.0);
    }

    #[test]
    fn representation_matches_derivative(x_off in 0.3f64..6.0, idx in 0usize..64) {
        let cases = registry();
        let all: Vec<(usize, Params)> = cases
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.samples().into_iter().map(move |p| (i, p)))
            .collect();
        let (i, params) = &all[idx % all.len()];
        let inst = cases[*i].instantiate(params).unwrap();
        let x = inst.lower.max(0.0) + x_off;
        let analytic = inst.family.derivative(inst.representation.order, x).unwrap();
        let integral = inst.representation.evaluate(x, inst.q).unwrap();
        prop_assert!((analytic - integral).abs() <= 1e-6 * analytic.abs() + 1e-12);
    }
}

#[test]
fn cm_checks_are_deterministic() {
    let cfg = cfg();
    let s = Subject::new("psi'", move |x| Ok(psi_n(1, x, &cfg)?.value)).with_lower(0.0);
    let a = check_cm(&s, &GridSpec::default(), &Tolerances::default()).unwrap();
    let b = check_cm(&s, &GridSpec::default(), &Tolerances::default()).unwrap();
    assert_eq!(a, b);
}
