use std::f64::consts::PI;

use hurwitz_asym::admissibility::{brute_window, tail_bound};
use hurwitz_asym::numerics::chi_complex;
use hurwitz_asym::oracles::{verify_exact_representation, zeta1_reference_general};
use hurwitz_asym::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn sp(sigma: f64, t: f64) -> SPoint {
    SPoint::new(sigma, t).unwrap()
}

/// Distance of `v` from the nearest multiple of 2π.
fn mod_two_pi(v: f64) -> f64 {
    let r = v.rem_euclid(2.0 * PI);
    r.min(2.0 * PI - r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn chi_reflection(sigma in 1e-3f64..=1.0, log_t in -1.0f64..6.0) {
        let s = Complex64::new(sigma, 10f64.powf(log_t));
        let one = Complex64::new(1.0, 0.0);
        let prod = chi_complex(s).unwrap() * chi_complex(one - s).unwrap();
        prop_assert!((prod - one).norm() < 1e-10);
    }

    #[test]
    fn log_gamma_recurrence(re in 0.05f64..3.0, im in -1e5f64..1e5) {
        let z = Complex64::new(re, im);
        let lhs = log_gamma(z + 1.0).unwrap();
        let rhs = log_gamma(z).unwrap() + principal_log(z).unwrap();
        let d = lhs - rhs;
        prop_assert!(d.re.abs() < 1e-9 * (1.0 + lhs.re.abs()));
        prop_assert!(mod_two_pi(d.im) < 1e-8 * (1.0 + lhs.im.abs()));
    }

    #[test]
    fn principal_branch(re in -1e3f64..1e3, im in -1e3f64..1e3) {
        prop_assume!(re != 0.0 || im != 0.0);
        let l = principal_log(Complex64::new(re, im)).unwrap();
        prop_assert!(l.im > -PI && l.im <= PI);
        let back = l.exp();
        prop_assert!((back - Complex64::new(re, im)).norm() <= 1e-13 * back.norm());
    }

    #[test]
    fn check_eta_agrees_with_brute(
        x in 0.0f64..5.0,
        log_t in 0.0f64..6.0,
        log_ratio in -2.5f64..1.0,
        log_eps in -4.0f64..-0.3,
    ) {
        let t = 10f64.powf(log_t);
        let eta = t * 10f64.powf(log_ratio);
        let eps = 10f64.powf(log_eps);
        let w = brute_window(x, t, eta);
        let wide = (*w.start() - 40)..=(*w.end() + 40);
        prop_assert_eq!(check_eta(x, t, eta, eps).admissible, brute_check_eta(x, t, eta, eps, wide));
    }

    #[test]
    fn suggested_eta_is_admissible(x in 0.0f64..4.0, t in 10.0f64..1e5, frac in 0.05f64..2.0) {
        let eps = 0.01;
        if let Ok(eta) = suggest_eta(x, t, frac * t, eps) {
            prop_assert!(check_eta(x, t, eta, eps).admissible);
            prop_assert!((eta - frac * t).abs() <= 0.5 * frac * t);
        }
    }

    #[test]
    fn tail_bound_decreases_in_m(x in 0.0f64..3.0, eta in 1.0f64..500.0, m in 4u64..1_000_000) {
        prop_assume!((eta / 2.0).sin().abs() > 1e-6);
        prop_assert!(tail_bound(x, eta, 0.5, m + 1) < tail_bound(x, eta, 0.5, m));
    }

    #[test]
    fn evaluation_bookkeeping(x in 0.05f64..3.0, t in 50.0f64..2000.0, frac in 0.1f64..1.5) {
        let eps = 0.05;
        let table = CoeffTable::build(2);
        let Ok(eta) = suggest_eta(x, t, frac * t, eps) else { return Ok(()) };
        prop_assume!((x - x.round()).abs() > 1e-9);
        let params = AsymParams::new(x, eta, eps, 2);
        match eval_zeta1_asym(sp(0.5, t), &params, &table) {
            Ok(r) => {
                prop_assert!((r.value - r.reassemble()).norm() <= 1e-15 * r.value.norm().max(1.0));
                prop_assert_eq!(r.term_counts.sum_plus, (t / eta - x).max(0.0).floor() as u64);
                prop_assert_eq!(r.term_counts.residue, (eta / (2.0 * PI)).floor() as u64);
                prop_assert_eq!(r.term_counts.correction, r.m.m);
                prop_assert_eq!(r.regime, Regime::classify(x, t, eta));
                prop_assert!(r.err_bound > 0.0 && r.err_bound.is_finite());
            }
            Err(e) => {
                let expected = matches!(e, Error::Resonance { .. } | Error::MCapExceeded { .. });
                prop_assert!(expected, "unexpected error {}", e);
            }
        }
    }

    #[test]
    fn euler_maclaurin_shift(x in 0.0f64..5.0, sigma in 0.05f64..=1.0, t in 1.0f64..500.0) {
        let s = Complex64::new(sigma, t);
        let cfg = EMConfig::default();
        let a = zeta1_reference_general(x, s, &cfg).unwrap().value;
        let b = zeta1_reference_general(x + 1.0, s, &cfg).unwrap().value;
        let head = (-s * (x + 1.0).ln()).exp();
        prop_assert!((a - b - head).norm() <= 1e-9 * a.norm().max(head.norm()));
    }
}

#[test]
fn coefficient_support() {
    let table = CoeffTable::build(8);
    assert_eq!(table.get(0, 0, 0).unwrap(), GaussianInt::one());
    for n in 0..=8 {
        for b in 0..=n + 2 {
            for c in 0..=n + 2 {
                if b > n || c > n {
                    assert!(table.get(n, b, c).unwrap().is_zero(), "A({n},{b},{c})");
                }
            }
        }
    }
    assert!(matches!(
        table.get(9, 0, 0),
        Err(Error::TableTooSmall { .. })
    ));
}

#[test]
fn em_cutoff_doubling_is_stable() {
    let s = Complex64::new(0.5, 200.0);
    let base = zeta1_reference_general(0.7, s, &EMConfig::default()).unwrap();
    let doubled = EMConfig {
        k: Some(2 * base.k),
        ..EMConfig::default()
    };
    let again = zeta1_reference_general(0.7, s, &doubled).unwrap();
    assert!((base.value - again.value).norm() <= 1e-11 * base.value.norm());
    assert!(base.error_estimate <= 1e-10 * base.value.norm());
}

#[test]
fn residue_bookkeeping_across_two_pi() {
    // η on either side of the first pole 2πi; the residue count changes from 0 to 1
    let s = sp(0.6, 10.0);
    let cfg = QuadConfig::default();
    for eta in [2.0 * PI - 0.3, 2.0 * PI + 0.3] {
        let v = verify_exact_representation(0.7, s, eta, &cfg).unwrap();
        assert!(v.residual < 1e-8, "eta {eta}: residual {}", v.residual);
    }
    let table = CoeffTable::build(1);
    for (eta, expected) in [(2.0 * PI - 0.3, 0), (2.0 * PI + 0.3, 1)] {
        let r = eval_zeta1_asym(sp(0.6, 1.5), &AsymParams::new(0.7, eta, 0.05, 1), &table).unwrap();
        assert_eq!(r.term_counts.residue, expected);
    }
}

#[test]
fn error_decreases_with_order() {
    // well separated parameters, long correction series
    let table = CoeffTable::build(3);
    let s = sp(0.5, 50.0);
    let truth = zeta1_reference(
        0.0,
        s,
        &EMConfig::default().with_precision(Precision::Extended),
    )
    .unwrap();
    let errs: Vec<f64> = (1..=3)
        .map(|n| {
            let p = AsymParams::new(0.0, 200.0, 0.5, n).with_m(1_000_000);
            (eval_zeta1_asym(s, &p, &table).unwrap().value - truth).norm()
        })
        .collect();
    assert!(
        errs[0] > 10.0 * errs[1] && errs[1] > 10.0 * errs[2],
        "{errs:?}"
    );
}

#[test]
fn separated_nonzero_x_improves_with_order() {
    let (x, t, eps) = (1.3, 2000.0, 0.05);
    let s = sp(0.5, t);
    let eta = suggest_eta(x, t, 500.0, eps).unwrap();
    let table = CoeffTable::build(2);
    let truth = zeta1_reference(x, s, &EMConfig::default()).unwrap();
    let errs: Vec<f64> = (1..=2)
        .map(|n| {
            let p = AsymParams::new(x, eta, eps, n).with_mode(MMode::ClosedForm);
            let r = eval_zeta1_asym(s, &p, &table).unwrap();
            let err = (r.value - truth).norm();
            assert!(err <= r.err_bound);
            err
        })
        .collect();
    assert!(errs[1] < errs[0], "{errs:?}");
}

#[test]
fn double_and_extended_agree() {
    let table = CoeffTable::build(2);
    let s = sp(0.5, 1e5);
    let eta = suggest_eta(1.3, 1e5, 1000.0, 0.002).unwrap();
    let p = AsymParams::new(1.3, eta, 0.002, 2);
    let a = eval_zeta1_asym(s, &p, &table).unwrap().value;
    let b = eval_zeta1_asym(s, &p.clone().with_precision(Precision::Extended), &table)
        .unwrap()
        .value;
    assert!((a - b).norm() < 1e-9 * a.norm());
}
