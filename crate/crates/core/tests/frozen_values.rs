//! Values frozen from a 30-digit mpmath run (`tests/oracle/mpmath_values.py`).

#![allow(clippy::excessive_precision)]

use hurwitz_asym::numerics::chi_complex;
use hurwitz_asym::*;
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn log_gamma_matches_mpmath() {
    let cases = [
        (
            c(0.5, 50.0),
            c(-77.62087780654015821978575, 145.6019836241875417825585),
        ),
        (
            c(0.25, -1e5),
            c(-157081.5919723226990262454, -1051292.153798045309951508),
        ),
        (
            c(1e-3, 1e6),
            c(-1570802.301796131838731274, 12815509.7741368241996212),
        ),
        (
            c(2.75, 0.5),
            c(0.4209293818589280865339449, 0.4133303675377547848238869),
        ),
        (
            c(0.0, 7.0),
            c(-11.049590828887260245352, 5.824059971641373990796935),
        ),
    ];
    for (z, want) in cases {
        let got = log_gamma(z).unwrap();
        assert!(
            rel(got, want) < 1e-12,
            "log_gamma({z}) = {got}, want {want}"
        );
    }
}

#[test]
fn chi_matches_mpmath() {
    let cases = [
        (
            c(0.5, 1000.0),
            c(-0.7449278248788057321404455, 0.6671450634767009498774023),
        ),
        (
            c(0.3, 1e6),
            c(-10.9578395612242277734444, 0.5949055709663756627847663),
        ),
        (
            c(0.9, 12.5),
            c(-0.01675900885552821581921933, -0.7593095743406905828111951),
        ),
        (
            c(1.0, 3.0),
            c(1.40156751882645154772206, -0.3610286043984868425322711),
        ),
    ];
    for (s, want) in cases {
        let got = chi_complex(s).unwrap();
        assert!(rel(got, want) < 1e-10, "chi({s}) = {got}, want {want}");
    }
}

const ZETA1: [(f64, f64, f64, Complex64); 8] = [
    (
        0.0,
        0.5,
        50.0,
        Complex64::new(-0.08171210832097997504819315, 0.3307921940386612955878153),
    ),
    (
        1.3,
        0.5,
        2000.0,
        Complex64::new(1.134007620442117156118382, -1.6452157503126424101902),
    ),
    (
        0.3,
        0.6,
        10.0,
        Complex64::new(-0.7978725182420285966261479, -0.8260932558218537207729758),
    ),
    (
        2.7,
        1.0,
        20.0,
        Complex64::new(0.2310303681488172305690423, -0.1260845070117737644907088),
    ),
    (
        0.5,
        0.6,
        2000.0,
        Complex64::new(-0.207870210049427772874599, 0.3358738839215434696796684),
    ),
    (
        0.1,
        0.5,
        100.0,
        Complex64::new(0.9262104713784050328264299, -0.2122526721856203174144131),
    ),
    (
        0.0,
        0.5,
        300.0,
        Complex64::new(0.4774556718784825545360619, 0.607902133279553072659075),
    ),
    (
        1.3,
        0.5,
        1e4,
        Complex64::new(1.589976291686885424636026, -1.716713086287274130341538),
    ),
];

#[test]
fn euler_maclaurin_matches_mpmath() {
    for precision in [Precision::Double, Precision::Extended] {
        let cfg = EMConfig::default().with_precision(precision);
        for (x, sigma, t, want) in ZETA1 {
            let got = zeta1_reference(x, SPoint::new(sigma, t).unwrap(), &cfg).unwrap();
            assert!(
                rel(got, want) < 1e-10,
                "{precision:?} zeta1({x}, {sigma}+{t}i) = {got}"
            );
        }
    }
}

#[test]
fn riemann_zeta_at_one_million() {
    let want = c(0.07608906973822710000556456, 2.805102101019298955393837);
    let s = SPoint::new(0.5, 1e6).unwrap();
    let got = zeta1_reference(
        0.0,
        s,
        &EMConfig::default().with_precision(Precision::Extended),
    )
    .unwrap();
    assert!(rel(got, want) < 1e-9, "zeta(0.5+1e6 i) = {got}");
}

#[test]
fn asymptotic_values_within_bound() {
    let table = CoeffTable::build(4);
    for (x, sigma, t, want) in ZETA1 {
        if t < 50.0 {
            continue;
        }
        let s = SPoint::new(sigma, t).unwrap();
        let params = if x == 0.0 {
            AsymParams::new(x, 3.0 * t, 0.5, 2)
        } else {
            let eps = 0.15;
            AsymParams::new(x, suggest_eta(x, t, t / 2.5, eps).unwrap(), eps, 2)
        };
        let r = eval_zeta1_asym(s, &params, &table).unwrap();
        let err = (r.value - want).norm();
        assert!(
            err <= r.err_bound,
            "x={x} t={t}: err {err:e} > bound {:e}",
            r.err_bound
        );
        assert!(
            err < 0.05 * want.norm(),
            "x={x} t={t} eta={}: err {err:e}",
            params.eta
        );
    }
}
