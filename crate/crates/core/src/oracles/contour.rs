//! Quadrature of the exact contour representations of `ζ₁(x, s)`.
//!
//! With `P± = e^{±iπs/2}(2π)^{−s}`:
//!
//! ```text
//! G_B = P− ∫_{iη → 0, left semicircle} (e^{(1+x)z} − e^{−xz})/(1 − e^z) z^{s−1} dz
//! G_L = P+ ∫_{−iη}^{∞e^{iφ₂}} e^{−(1+x)z}/(1 − e^{−z}) z^{s−1} dz
//! G_U = P− ∫_{ iη}^{∞e^{iφ₁}} e^{−(1+x)z}/(1 − e^{−z}) z^{s−1} dz
//! ζ₁(x,s) = χ(s) [ Σ_{m≤η/2π} e^{−2πimx} m^{s−1} − G_B + G_L + G_U ]
//! ```
//!
//! Every integrand sample carries its own `P±·z^{s−1}` factor, formed as one
//! exponential, so `e^{±πt/2}` is never materialized.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::em::{zeta1_reference, EMConfig};
use super::quad::{integrate, integrate_ray, Integral};
use crate::admissibility::{select_m_capped, tail_bound, MMode, DEFAULT_M_CAP};
use crate::dn_engine::{BoundaryEvaluator, CoeffTable};
use crate::error::{Error, Result};
use crate::numerics::{
    chi, odd_double_factorial_f64, principal_log, ComplexDD, DoubleDouble as DD, SPoint,
};

/// Largest t the contour oracle accepts.
pub const T_MAX: f64 = 40.0;

/// Closest allowed approach of a contour to a pole `2πim`.
pub const POLE_CLEARANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdiv: usize,
    /// Direction of the ray leaving `iη`.
    pub phi1: f64,
    /// Direction of the ray leaving `−iη`.
    pub phi2: f64,
    /// Rays stop where the integrand drops below `ray_cut` times its peak.
    pub ray_cut: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-14,
            rel_tol: 1e-12,
            max_subdiv: 4000,
            phi1: 0.0,
            phi2: 0.0,
            ray_cut: 1e-18,
        }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0 && self.ray_cut > 0.0) {
            return Err(Error::InvalidParameter(
                "quadrature tolerances must be positive".into(),
            ));
        }
        if !(self.phi1.abs() < FRAC_PI_2 && self.phi2.abs() < FRAC_PI_2) {
            return Err(Error::InvalidParameter(format!(
                "ray angles must satisfy |phi| < pi/2 (phi1 = {}, phi2 = {})",
                self.phi1, self.phi2
            )));
        }
        if self.max_subdiv == 0 {
            return Err(Error::InvalidParameter(
                "max_subdiv must be positive".into(),
            ));
        }
        Ok(())
    }
}

fn check_inputs(x: f64, s: SPoint, eta: f64, cfg: &QuadConfig) -> Result<()> {
    cfg.validate()?;
    if !(x >= 0.0 && x.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "x = {x} must be finite and >= 0"
        )));
    }
    if s.t > T_MAX {
        return Err(Error::InvalidParameter(format!(
            "contour quadrature is limited to t <= {T_MAX}, got {}",
            s.t
        )));
    }
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "eta = {eta} must be positive"
        )));
    }
    Ok(())
}

/// `e^z − 1` without cancellation near zero.
fn expm1(z: Complex64) -> Complex64 {
    let half_sin = (0.5 * z.im).sin();
    let e = z.re.exp();
    Complex64::new(
        z.re.exp_m1() * z.im.cos() - 2.0 * half_sin * half_sin,
        e * z.im.sin(),
    )
}

/// `(e^{(1+x)z} − e^{−xz})/(1 − e^z)`; tends to `−(1+2x)` at 0.
fn arc_kernel(z: Complex64, x: f64) -> Complex64 {
    if z.norm() == 0.0 {
        return Complex64::new(-(1.0 + 2.0 * x), 0.0);
    }
    -(-z * x).exp() * expm1(z * (1.0 + 2.0 * x)) / expm1(z)
}

/// `e^{−(1+x)z}/(1 − e^{−z})`
fn ray_kernel(z: Complex64, x: f64) -> Complex64 {
    -(-z * (1.0 + x)).exp() / expm1(-z)
}

/// `exp(±iπs/2 − s ln 2π + (s−1) ln z)`
fn scaled_power(s: Complex64, z: Complex64, sign: f64) -> Complex64 {
    let lz = principal_log(z).expect("contour avoids the origin");
    let w = Complex64::new(0.0, sign * FRAC_PI_2) * s - s * DD::LN_TWO_PI.hi + (s - 1.0) * lz;
    w.exp()
}

/// Distance from `2πim` (any integer m) to the ray `start + r e^{iφ}`, r ≥ 0.
fn ray_pole_distance(start: Complex64, phi: f64) -> (i64, f64) {
    let dir = Complex64::from_polar(1.0, phi);
    let centre = (start.im / (2.0 * PI)).round() as i64;
    let mut best = (centre, f64::INFINITY);
    for m in (centre - 1000)..=(centre + 1000) {
        let p = Complex64::new(0.0, 2.0 * PI * m as f64) - start;
        let along = (p * dir.conj()).re;
        let d = if along <= 0.0 {
            p.norm()
        } else {
            (p * dir.conj()).im.abs()
        };
        if d < best.1 {
            best = (m, d);
        }
    }
    best
}

fn guard_ray(start: Complex64, phi: f64) -> Result<()> {
    let (m, distance) = ray_pole_distance(start, phi);
    if distance < POLE_CLEARANCE {
        return Err(Error::PoleProximity { m, distance });
    }
    Ok(())
}

fn ray_integral(
    x: f64,
    s: SPoint,
    start: Complex64,
    phi: f64,
    sign: f64,
    cfg: &QuadConfig,
) -> Result<Integral> {
    guard_ray(start, phi)?;
    let sc = s.s();
    let dir = Complex64::from_polar(1.0, phi);
    let width = 2.0 / ((1.0 + x) * phi.cos());
    integrate_ray(
        |r| {
            let z = start + dir * r;
            scaled_power(sc, z, sign) * ray_kernel(z, x) * dir
        },
        0.0,
        width,
        cfg.ray_cut,
        cfg.abs_tol,
        cfg.rel_tol,
        cfg.max_subdiv,
    )
}

/// `G_L` by quadrature along the ray from `−iη` in direction `φ₂`.
pub fn eval_gl_quad(x: f64, s: SPoint, eta: f64, cfg: &QuadConfig) -> Result<Complex64> {
    check_inputs(x, s, eta, cfg)?;
    Ok(ray_integral(x, s, Complex64::new(0.0, -eta), cfg.phi2, 1.0, cfg)?.value)
}

/// `G_U` by quadrature along the ray from `iη` in direction `φ₁`.
pub fn eval_gu_quad(x: f64, s: SPoint, eta: f64, cfg: &QuadConfig) -> Result<Complex64> {
    check_inputs(x, s, eta, cfg)?;
    Ok(ray_integral(x, s, Complex64::new(0.0, eta), cfg.phi1, -1.0, cfg)?.value)
}

fn guard_endpoint(eta: f64) -> Result<()> {
    let m = (eta / (2.0 * PI)).round();
    let distance = (eta - 2.0 * PI * m).abs();
    if m >= 1.0 && distance < POLE_CLEARANCE {
        return Err(Error::PoleProximity {
            m: m as i64,
            distance,
        });
    }
    Ok(())
}

/// `(2π)^{−s} η^s / s`, phase carried in double-double.
fn eta_power_over_s(s: SPoint, eta: f64) -> Result<Complex64> {
    let lr = DD::ln_f64(eta) - DD::LN_TWO_PI;
    Ok(crate::numerics::exp_dd(ComplexDD::new(lr * s.sigma, lr * s.t))? / s.s())
}

/// `G_B` by quadrature over the left semicircle from `iη` to 0.
///
/// The constant `−(1+2x)` is removed from the kernel and integrated exactly,
/// leaving a smooth integrand at the origin.
pub fn eval_gb_quad(x: f64, s: SPoint, eta: f64, cfg: &QuadConfig) -> Result<Complex64> {
    check_inputs(x, s, eta, cfg)?;
    guard_endpoint(eta)?;
    let sc = s.s();
    let c0 = -(1.0 + 2.0 * x);
    let r = 0.5 * eta;
    let body = integrate(
        |tau| {
            let rot = Complex64::from_polar(1.0, tau);
            let z = Complex64::new(0.0, r) + Complex64::new(0.0, r) * rot;
            let dz = -rot * r;
            scaled_power(sc, z, -1.0) * (arc_kernel(z, x) - c0) * dz
        },
        0.0,
        PI,
        cfg.abs_tol,
        cfg.rel_tol,
        cfg.max_subdiv,
    )?;
    Ok(body.value - eta_power_over_s(s, eta)? * c0)
}

/// `Σ_{m=1}^{⌊η/2π⌋} e^{−2πimx} m^{s−1}`
fn residue_sum(x: f64, s: SPoint, eta: f64) -> Complex64 {
    let count = (eta / (2.0 * PI)).floor() as u64;
    let sc = s.s();
    (1..=count)
        .map(|m| {
            let mf = m as f64;
            ((sc - 1.0) * mf.ln() - Complex64::new(0.0, 2.0 * PI * mf * x)).exp()
        })
        .sum()
}

/// An assembled representation compared with the Euler–Maclaurin value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub assembled: Complex64,
    pub reference: Complex64,
    /// `|assembled − reference| / |reference|`
    pub residual: f64,
}

fn compare(assembled: Complex64, x: f64, s: SPoint) -> Result<Verification> {
    let reference = zeta1_reference(x, s, &EMConfig::default())?;
    Ok(Verification {
        assembled,
        reference,
        residual: (assembled - reference).norm() / reference.norm(),
    })
}

/// Pieces of the η-representation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactPieces {
    pub residue: Complex64,
    pub gb: Complex64,
    pub gl: Complex64,
    pub gu: Complex64,
    pub chi: Complex64,
}

impl ExactPieces {
    pub fn assemble(&self) -> Complex64 {
        self.chi * (self.residue - self.gb + self.gl + self.gu)
    }
}

pub fn exact_pieces(x: f64, s: SPoint, eta: f64, cfg: &QuadConfig) -> Result<ExactPieces> {
    Ok(ExactPieces {
        residue: residue_sum(x, s, eta),
        gb: eval_gb_quad(x, s, eta, cfg)?,
        gl: eval_gl_quad(x, s, eta, cfg)?,
        gu: eval_gu_quad(x, s, eta, cfg)?,
        chi: chi(s)?,
    })
}

/// Checks `ζ₁ = χ(s)[residues − G_B + G_L + G_U]` against the reference.
pub fn verify_exact_representation(
    x: f64,
    s: SPoint,
    eta: f64,
    cfg: &QuadConfig,
) -> Result<Verification> {
    compare(exact_pieces(x, s, eta, cfg)?.assemble(), x, s)
}

/// Checks the α-representation
/// `ζ₁ = χ(s)(2π)^{−s}[∫_0^α h(u)u^{s−1}du + e^{iπs/2}∫_{−iα}^{∞} + e^{−iπs/2}∫_{iα}^{∞}]`,
/// `h(u) = (e^{i(1+x)u} − e^{−ixu})/(1 − e^{iu})`.
pub fn verify_alpha_representation(
    x: f64,
    s: SPoint,
    alpha: f64,
    cfg: &QuadConfig,
) -> Result<Verification> {
    check_inputs(x, s, alpha, cfg)?;
    if !(alpha > 0.0 && alpha < 2.0 * PI) {
        return Err(Error::InvalidParameter(format!(
            "alpha = {alpha} must lie in (0, 2pi)"
        )));
    }
    let sc = s.s();
    let c0 = -(1.0 + 2.0 * x);
    let segment = integrate(
        |u| {
            let h = arc_kernel(Complex64::new(0.0, u), x);
            (h - c0) * ((sc - 1.0) * u.ln()).exp()
        },
        0.0,
        alpha,
        cfg.abs_tol,
        cfg.rel_tol,
        cfg.max_subdiv,
    )?
    .value;
    // ∫_0^α c0 u^{s−1} du = c0 α^s / s
    let segment = segment + (sc * alpha.ln()).exp() / sc * c0;
    let two_pi_neg_s = (-sc * DD::LN_TWO_PI.hi).exp();
    let gl = eval_gl_quad(x, s, alpha, cfg)?;
    let gu = eval_gu_quad(x, s, alpha, cfg)?;
    let assembled = chi(s)? * (two_pi_neg_s * segment + gl + gu);
    compare(assembled, x, s)
}

/// `G_L` by quadrature against its boundary-term expansion.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GlCheck {
    pub quad: Complex64,
    pub expansion: Complex64,
    pub difference: f64,
    /// `10 (2N−1)!! (N+1)² η^{σ−N−1} (2π)^{−σ}`
    pub envelope: f64,
    pub m: u64,
    pub tail_bound: f64,
}

impl GlCheck {
    pub fn passed(&self) -> bool {
        self.difference <= self.envelope
    }
}

/// Compares `G_L` with
/// `e^{iπσ/2} e^{it ln η} (2π)^{−s} Σ_{n=1}^{M} Σ_{j<N} e^{i(x+n)η} B_j(−iη; x+n)`.
///
/// Without an explicit `m` the closed-form M is used.
#[allow(clippy::too_many_arguments)]
pub fn verify_gl_expansion(
    x: f64,
    s: SPoint,
    eta: f64,
    n: usize,
    table: &CoeffTable,
    cfg: &QuadConfig,
    m: Option<u64>,
) -> Result<GlCheck> {
    check_inputs(x, s, eta, cfg)?;
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    table.require(n - 1)?;
    let m = match m {
        Some(m) => m,
        None => {
            select_m_capped(
                x,
                eta,
                n,
                f64::EPSILON,
                s,
                MMode::ClosedForm,
                0.0,
                DEFAULT_M_CAP,
            )?
            .m
        }
    };
    let quad = eval_gl_quad(x, s, eta, cfg)?;
    let ev = BoundaryEvaluator::new(table, n, Complex64::new(0.0, -eta), s)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..=m {
        let xi = x + k as f64;
        acc += Complex64::from_polar(1.0, xi * eta) * ev.sum(xi)?;
    }
    let phase = DD::HALF_PI * s.sigma + (DD::ln_f64(eta) - DD::LN_TWO_PI) * s.t;
    let pref = crate::numerics::exp_dd(ComplexDD::new(-(DD::LN_TWO_PI * s.sigma), phase))?;
    let expansion = pref * acc;
    let nf = n as f64;
    let envelope = 10.0
        * odd_double_factorial_f64(2 * n as i64 - 1)
        * (nf + 1.0).powi(2)
        * eta.powf(s.sigma - nf - 1.0)
        * (2.0 * PI).powf(-s.sigma);
    Ok(GlCheck {
        quad,
        expansion,
        difference: (quad - expansion).norm(),
        envelope,
        m,
        tail_bound: tail_bound(x, eta, s.sigma, m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(sigma: f64, t: f64) -> SPoint {
        SPoint::new(sigma, t).unwrap()
    }

    #[test]
    fn kernel_limits() {
        let small = Complex64::new(1e-9, 2e-9);
        assert!((arc_kernel(small, 0.4) - Complex64::new(-1.8, 0.0)).norm() < 1e-8);
        let z = Complex64::new(-0.7, 1.1);
        let direct = ((z * 1.4).exp() - (-z * 0.4).exp()) / (1.0 - z.exp());
        assert!((arc_kernel(z, 0.4) - direct).norm() < 1e-14);
    }

    #[test]
    fn x_zero_gb_closed_form() {
        // integrand collapses to −z^{s−1}: G_B = (2π)^{−s} η^s / s
        let s = sp(0.6, 10.0);
        let eta = 5.0;
        let gb = eval_gb_quad(0.0, s, eta, &QuadConfig::default()).unwrap();
        let expect = eta_power_over_s(s, eta).unwrap();
        assert!((gb - expect).norm() < 1e-12 * expect.norm());
    }

    #[test]
    fn gl_angle_independence() {
        let s = sp(0.6, 10.0);
        let a = eval_gl_quad(0.7, s, 9.0, &QuadConfig::default()).unwrap();
        let cfg = QuadConfig {
            phi2: PI / 4.0,
            ..QuadConfig::default()
        };
        let b = eval_gl_quad(0.7, s, 9.0, &cfg).unwrap();
        assert!((a - b).norm() < 1e-10 * a.norm());
    }

    #[test]
    fn pole_and_range_guards() {
        let s = sp(0.6, 10.0);
        let cfg = QuadConfig::default();
        assert!(matches!(
            eval_gl_quad(0.5, s, 2.0 * PI, &cfg),
            Err(Error::PoleProximity { m: -1, .. })
        ));
        assert!(matches!(
            eval_gb_quad(0.5, s, 4.0 * PI, &cfg),
            Err(Error::PoleProximity { m: 2, .. })
        ));
        assert!(eval_gl_quad(0.5, sp(0.6, 41.0), 5.0, &cfg).is_err());
        let bad = QuadConfig {
            phi1: FRAC_PI_2,
            ..cfg
        };
        assert!(eval_gu_quad(0.5, s, 5.0, &bad).is_err());
    }

    #[test]
    fn assembled_identity() {
        let v =
            verify_exact_representation(0.7, sp(0.6, 10.0), 9.0, &QuadConfig::default()).unwrap();
        assert!(v.residual < 1e-6, "residual {}", v.residual);
    }
}
