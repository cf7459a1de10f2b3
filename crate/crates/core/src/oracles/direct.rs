//! `ζ₁(x, s) = Γ(s)^{−1} ∫_0^∞ e^{−xz} z^{s−1} / (e^z − 1) dz` for `Re s > 1`.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::contour::QuadConfig;
use super::em::bernoulli_numbers;
use super::quad::{integrate, integrate_ray};
use crate::error::{Error, Result};
use crate::numerics::log_gamma;

/// Below this the bracket is summed from its Taylor series.
const SERIES_RADIUS: f64 = 0.5;
const SERIES_TERMS: usize = 30;

/// `B_k(w)` for k = 0..n, from the Bernoulli numbers.
fn bernoulli_polys(w: f64, n: usize) -> Result<Vec<f64>> {
    let even = bernoulli_numbers(n / 2)?;
    let mut b = vec![0.0; n + 1];
    b[0] = 1.0;
    if n >= 1 {
        b[1] = -0.5;
    }
    for (i, v) in even.iter().enumerate() {
        b[2 * (i + 1)] = v.to_f64().unwrap_or(0.0);
    }
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut binom = 1.0;
        let mut acc = 0.0;
        for (j, bj) in b.iter().enumerate().take(k + 1) {
            acc += binom * bj * w.powi((k - j) as i32);
            binom = binom * (k - j) as f64 / (j + 1) as f64;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Direct Mellin-integral oracle, valid only for `Re s > 1` and `x > −1`.
///
/// Near the origin `z e^{−xz}/(e^z − 1) = Σ B_k(−x) z^k / k!`; the first two
/// terms are integrated exactly on `[0, 1]`.
pub fn zeta1_direct_integral(x: f64, s: Complex64, cfg: &QuadConfig) -> Result<Complex64> {
    cfg.validate()?;
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!(
            "direct integral needs Re s > 1, got {}",
            s.re
        )));
    }
    if !(x > -1.0 && x.is_finite()) {
        return Err(Error::Domain(format!(
            "direct integral needs x > -1, got {x}"
        )));
    }
    let polys = bernoulli_polys(-x, SERIES_TERMS)?;
    let b1 = polys[1];
    let mut coeffs = Vec::with_capacity(SERIES_TERMS + 1);
    let mut fact = 1.0;
    for (k, p) in polys.iter().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        coeffs.push(p / fact);
    }

    // z^{s−2} (z e^{−xz}/(e^z−1) − 1 − B_1(−x) z)
    let bracket = |z: f64| -> f64 {
        if z < SERIES_RADIUS {
            coeffs[2..].iter().rev().fold(0.0, |acc, c| acc * z + c) * z * z
        } else {
            z * (-x * z).exp() / z.exp_m1() - 1.0 - b1 * z
        }
    };
    let head = integrate(
        |z| bracket(z) * ((s - 2.0) * z.ln()).exp(),
        0.0,
        1.0,
        cfg.abs_tol,
        cfg.rel_tol,
        cfg.max_subdiv,
    )?
    .value;
    // ∫_0^1 z^{s−2} dz + B_1 ∫_0^1 z^{s−1} dz
    let head = head + 1.0 / (s - 1.0) + b1 / s;
    let tail = integrate_ray(
        |z| ((s - 1.0) * z.ln()).exp() * ((-x * z).exp() / z.exp_m1()),
        1.0,
        2.0 / (1.0 + x),
        cfg.ray_cut,
        cfg.abs_tol,
        cfg.rel_tol,
        cfg.max_subdiv,
    )?
    .value;
    Ok((head + tail) * (-log_gamma(s)?).exp())
}
