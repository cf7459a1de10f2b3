//! Complex log-gamma via shifted Stirling series.

use num_complex::Complex64;

use super::dd::{ComplexDD, DoubleDouble as DD};
use crate::error::{Error, Result};

/// Stirling series is used once `|z|` reaches this radius.
const STIRLING_RADIUS: f64 = 15.0;

/// `B_{2k} / (2k (2k-1))` for k = 1..=10.
const STIRLING_COEFFS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

/// Principal `ln z` with both parts in double-double.
pub(crate) fn ln_dd(z: Complex64) -> ComplexDD {
    let r2 = DD::prod(z.re, z.re) + DD::prod(z.im, z.im);
    ComplexDD::new(r2.ln().ldexp(-1), DD::atan2(z.im, z.re))
}

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `ln Γ(z)` in double-double. The imaginary part is not reduced, so the
/// caller can take it modulo 2π without losing digits.
pub(crate) fn log_gamma_dd(z: Complex64) -> Result<ComplexDD> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "log_gamma of non-finite {z}"
        )));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(z.re));
    }
    if z.re < 0.0 {
        // ln Γ(z) = ln π − ln sin(πz) − ln Γ(1 − z)   (mod 2πi)
        let w = Complex64::new(1.0 - z.re, -z.im);
        let lg = log_gamma_dd(w)?;
        let lsin = ln_sin_pi(z);
        let ln_pi = ComplexDD::new(DD::LN_PI, DD::ZERO);
        return Ok(ln_pi - lsin - lg);
    }

    // shift into the Stirling region: ln Γ(z) = ln Γ(z + n) − Σ ln(z + k)
    let mut shift = ComplexDD::default();
    let mut w = z;
    while w.norm() < STIRLING_RADIUS {
        shift = shift + ln_dd(w);
        w.re += 1.0;
    }

    let lw = ln_dd(w);
    let wm = ComplexDD::from_f64(w.re - 0.5, w.im);
    let main = wm * lw - ComplexDD::from_f64(w.re, w.im)
        + ComplexDD::new(DD::LN_TWO_PI.ldexp(-1), DD::ZERO);

    let inv = w.inv();
    let inv2 = inv * inv;
    let mut term = inv;
    let mut corr = Complex64::new(0.0, 0.0);
    for c in STIRLING_COEFFS {
        corr += term * c;
        term *= inv2;
    }
    Ok(main + ComplexDD::from_f64(corr.re, corr.im) - shift)
}

/// `ln sin(πz)` for any non-integer z, via the dominant exponential.
fn ln_sin_pi(z: Complex64) -> ComplexDD {
    let w = ComplexDD::new(DD::PI * z.re, DD::PI * z.im);
    ln_sin_dd(w)
}

/// `ln sin(w)` (some branch) without forming `e^{|Im w|}`.
pub(crate) fn ln_sin_dd(w: ComplexDD) -> ComplexDD {
    let i_w = ComplexDD::new(-w.im, w.re);
    let half_pi = ComplexDD::new(DD::ZERO, DD::HALF_PI);
    let ln2 = ComplexDD::new(DD::LN2, DD::ZERO);
    if w.im.hi >= 0.0 {
        // sin w = (i/2) e^{-iw} (1 − e^{2iw})
        let e = (i_w + i_w).exp();
        -i_w - ln2 + half_pi + ln1m(e)
    } else {
        // sin w = (−i/2) e^{iw} (1 − e^{−2iw})
        let e = (-(i_w + i_w)).exp();
        i_w - ln2 - half_pi + ln1m(e)
    }
}

/// `ln(1 − e)` for `|e| <= 1`.
fn ln1m(e: ComplexDD) -> ComplexDD {
    let e64 = e.to_c64();
    if e64.norm() < 1e-17 {
        return -e;
    }
    let one_minus = ComplexDD::from_f64(1.0, 0.0) - e;
    ln_dd(one_minus.to_c64())
}

/// Complex `ln Γ(z)`.
///
/// Agrees with the principal branch (continuous along the positive real axis)
/// for `Re z >= 0`; for `Re z < 0` the reflection formula is used and the
/// imaginary part is only defined modulo 2π.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma_dd(z)?.to_c64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn gamma_one_and_half() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-15);
        assert!(half.im.abs() < 1e-15);
    }

    #[test]
    fn poles() {
        assert_eq!(log_gamma(c(0.0, 0.0)), Err(Error::Pole(0.0)));
        assert_eq!(log_gamma(c(-3.0, 0.0)), Err(Error::Pole(-3.0)));
    }

    #[test]
    fn factorials() {
        let v = log_gamma(c(11.0, 0.0)).unwrap();
        assert!((v.re - 3628800f64.ln()).abs() < 1e-14);
        let v = log_gamma(c(31.0, 0.0)).unwrap();
        let ln30: f64 = (1..=30).map(|k| (k as f64).ln()).sum();
        assert!((v.re - ln30).abs() < 1e-12);
    }

    #[test]
    fn negative_real_axis_reflection() {
        // Γ(−1/2) = −2√π
        let v = log_gamma(c(-0.5, 0.0)).unwrap();
        assert!((v.re - (2.0 * std::f64::consts::PI.sqrt()).ln()).abs() < 1e-14);
        let arg = v.im.rem_euclid(2.0 * std::f64::consts::PI);
        assert!((arg - std::f64::consts::PI).abs() < 1e-12);
    }
}
