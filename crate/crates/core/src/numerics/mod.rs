//! Complex elementary functions, log-gamma and the functional-equation factor χ.
//!
//! Large-`t` quantities are assembled as logarithms and exponentiated once;
//! phases of size `t log(...)` are carried in double-double and reduced
//! modulo 2π before the final `exp`.

pub mod dd;
mod gamma;

use num_bigint::BigUint;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use dd::{ComplexDD, DoubleDouble};
pub use gamma::log_gamma;
pub(crate) use gamma::{ln_sin_dd, log_gamma_dd};

use crate::error::{Error, Result};

/// Generic complex quantity.
pub type ComplexValue = Complex64;

/// Largest `ln |w|` that still exponentiates to a finite double.
const MAX_LOG: f64 = 709.0;

/// A point `s = σ + it` of the critical strip with `0 < σ <= 1`, `t > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SPoint {
    pub sigma: f64,
    pub t: f64,
}

impl SPoint {
    pub fn new(sigma: f64, t: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "sigma = {sigma} must lie in (0, 1]"
            )));
        }
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "t = {t} must be positive and finite"
            )));
        }
        Ok(Self { sigma, t })
    }

    pub fn s(&self) -> Complex64 {
        Complex64::new(self.sigma, self.t)
    }
}

/// Working precision of the numerics, chosen by `HURWITZ_ASYM_PRECISION`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    /// Plain binary64.
    #[default]
    Double,
    /// Double-double (about 32 digits) for phases and sums.
    Extended,
}

impl Precision {
    pub const ENV_VAR: &'static str = "HURWITZ_ASYM_PRECISION";

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "double" => Ok(Precision::Double),
            "extended" => Ok(Precision::Extended),
            other => Err(Error::InvalidParameter(format!(
                "precision must be 'double' or 'extended', got '{other}'"
            ))),
        }
    }

    /// Reads the environment; unset means [`Precision::Double`].
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(v) => Self::parse(&v),
            Err(_) => Ok(Precision::Double),
        }
    }
}

/// Principal logarithm, `arg` in `(−π, π]`.
pub fn principal_log(z: Complex64) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("logarithm of non-finite {z}")));
    }
    // atan2 returns −π for (−x, −0.0); fold onto the principal interval
    let arg = if z.im == 0.0 && z.re < 0.0 {
        std::f64::consts::PI
    } else {
        z.im.atan2(z.re)
    };
    Ok(Complex64::new(z.norm().ln(), arg))
}

/// `exp` of a complex logarithm, refusing results that would overflow.
pub fn exp_checked(w: Complex64) -> Result<Complex64> {
    if w.re > MAX_LOG || w.re.is_nan() || w.im.is_nan() {
        return Err(Error::Overflow {
            log_magnitude: w.re,
        });
    }
    Ok(w.exp())
}

/// Exponentiates a double-double logarithm, reducing the phase first.
pub fn exp_dd(w: ComplexDD) -> Result<Complex64> {
    let re = w.re.to_f64();
    if re > MAX_LOG || !w.re.is_finite() || !w.im.is_finite() {
        return Err(Error::Overflow { log_magnitude: re });
    }
    let phase = w.im.rem_two_pi().to_f64();
    Ok(Complex64::from_polar(re.exp(), phase))
}

/// `z^s = exp(s · ln z)` on the principal branch.
pub fn complex_pow(z: Complex64, s: Complex64) -> Result<Complex64> {
    let lz = principal_log(z)?;
    exp_checked(s * lz)
}

/// `base^s` for real `base > 0`, with `t · ln(base)` formed in double-double.
pub fn real_pow(base: f64, s: Complex64) -> Result<Complex64> {
    if !(base > 0.0 && base.is_finite()) {
        return Err(Error::Domain(format!(
            "real_pow base {base} must be positive"
        )));
    }
    let lb = DoubleDouble::ln_f64(base);
    exp_dd(ComplexDD::new(lb * s.re, lb * s.im))
}

/// `ln χ(s)` in double-double for any complex `s` away from the poles.
pub(crate) fn log_chi_dd(s: Complex64) -> Result<ComplexDD> {
    let lg = log_gamma_dd(Complex64::new(1.0 - s.re, -s.im))?;
    let w = ComplexDD::new(DoubleDouble::HALF_PI * s.re, DoubleDouble::HALF_PI * s.im);
    if s.im == 0.0 && (s.re / 2.0).fract() == 0.0 {
        // sin(πs/2) vanishes at even integers
        return Err(Error::Domain(format!("chi has a zero at s = {}", s.re)));
    }
    let lsin = ln_sin_dd(w);
    let ln2pi = DoubleDouble::LN_TWO_PI;
    let s_ln2pi = ComplexDD::new(ln2pi * s.re, ln2pi * s.im);
    Ok(s_ln2pi - ComplexDD::new(DoubleDouble::LN_PI, DoubleDouble::ZERO) + lg + lsin)
}

/// `χ(s) = (2π)^s Γ(1−s) sin(πs/2) / π` for general complex `s`.
pub fn chi_complex(s: Complex64) -> Result<Complex64> {
    exp_dd(log_chi_dd(s)?)
}

/// `χ(s)` on the critical strip.
pub fn chi(s: SPoint) -> Result<Complex64> {
    chi_complex(s.s())
}

/// `k!! = 1 · 3 · 5 ⋯ k` for odd `k`, with `(−1)!! = 1`.
pub fn double_factorial(k: i64) -> Result<BigUint> {
    if k < -1 || k % 2 == 0 {
        return Err(Error::Domain(format!(
            "double factorial needs odd k >= -1, got {k}"
        )));
    }
    let mut acc = BigUint::from(1u32);
    let mut j = 3;
    while j <= k {
        acc *= BigUint::from(j as u64);
        j += 2;
    }
    Ok(acc)
}

/// `(2N−1)!!` as a double, for bound formulas.
pub(crate) fn odd_double_factorial_f64(k: i64) -> f64 {
    let mut acc = 1.0;
    let mut j = 3;
    while j <= k {
        acc *= j as f64;
        j += 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn spoint_validation() {
        assert!(SPoint::new(0.5, 10.0).is_ok());
        assert!(SPoint::new(1.0, 1e6).is_ok());
        assert!(SPoint::new(0.0, 10.0).is_err());
        assert!(SPoint::new(1.1, 10.0).is_err());
        assert!(SPoint::new(0.5, 0.0).is_err());
        assert!(SPoint::new(0.5, f64::NAN).is_err());
    }

    #[test]
    fn principal_log_examples() {
        assert_eq!(principal_log(c(1.0, 0.0)).unwrap(), c(0.0, 0.0));
        let v = principal_log(c(0.0, -1.0)).unwrap();
        assert!((v - c(0.0, -PI / 2.0)).norm() < 1e-16);
        let v = principal_log(c(0.0, 3.0)).unwrap();
        assert!((v - c(3f64.ln(), PI / 2.0)).norm() < 1e-16);
        assert_eq!(principal_log(c(-2.0, -0.0)).unwrap().im, PI);
        assert!(matches!(principal_log(c(0.0, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn complex_pow_examples() {
        let v = complex_pow(c(4.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((v - c(2.0, 0.0)).norm() < 1e-15);
        let v = complex_pow(c(0.0, -1.0), c(-0.5, 0.0)).unwrap();
        assert!((v - Complex64::from_polar(1.0, PI / 4.0)).norm() < 1e-15);
        let v = complex_pow(c(2.0, 0.0), c(0.5, 30.0)).unwrap();
        let expect = Complex64::from_polar(2f64.sqrt(), 30.0 * 2f64.ln());
        assert!((v - expect).norm() < 1e-14);
        assert!(matches!(
            complex_pow(c(0.0, 1.0), c(0.5, -1000.0)),
            Err(Error::Overflow { .. })
        ));
        assert!(complex_pow(c(0.0, 0.0), c(0.5, 0.0)).is_err());
    }

    #[test]
    fn real_pow_matches_complex_pow() {
        let s = c(0.3, 123.0);
        let a = real_pow(7.5, s).unwrap();
        let b = complex_pow(c(7.5, 0.0), s).unwrap();
        assert!((a - b).norm() < 1e-13);
    }

    #[test]
    fn chi_at_half_is_one() {
        let v = chi(SPoint::new(0.5, 1e-300).unwrap()).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-14);
        let v = chi_complex(c(0.5, 0.0)).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn chi_unimodular_on_critical_line() {
        let v = chi(SPoint::new(0.5, 1000.0).unwrap()).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1).unwrap(), BigUint::from(1u32));
        assert_eq!(double_factorial(1).unwrap(), BigUint::from(1u32));
        assert_eq!(double_factorial(5).unwrap(), BigUint::from(15u32));
        assert_eq!(double_factorial(21).unwrap(), BigUint::from(13749310575u64));
        assert!(double_factorial(4).is_err());
        assert!(double_factorial(-3).is_err());
        assert_eq!(odd_double_factorial_f64(7), 105.0);
    }

    #[test]
    fn precision_parse() {
        assert_eq!(Precision::parse("double").unwrap(), Precision::Double);
        assert_eq!(Precision::parse(" Extended ").unwrap(), Precision::Extended);
        assert!(Precision::parse("quad").is_err());
    }
}
