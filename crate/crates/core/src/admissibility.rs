//! Separation of η from the stationary values `t/(x+n)`, repair of a requested
//! η, and choice of the correction-series length M.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::SPoint;

/// Default ceiling on M.
pub const DEFAULT_M_CAP: u64 = 100_000_000;

/// Below this `|sin(η/2)|` the oscillatory tail bound is useless.
pub const RESONANCE_FLOOR: f64 = 1e-6;

/// Verdict on `|(x+n)η − t| > εt` for all integers n.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    /// The integer closest to `t/η − x`, the only one that can fail.
    pub worst_n: i64,
    /// `|(x + worst_n)η − t| − εt`
    pub margin: f64,
    /// `εt`
    pub required_gap: f64,
}

pub fn check_eta(x: f64, t: f64, eta: f64, eps: f64) -> AdmissibilityReport {
    let worst_n = (t / eta - x + 0.5).floor() as i64;
    let required_gap = eps * t;
    let margin = ((x + worst_n as f64) * eta - t).abs() - required_gap;
    AdmissibilityReport {
        admissible: margin > 0.0,
        worst_n,
        margin,
        required_gap,
    }
}

/// Exhaustive version of [`check_eta`] over `n_range`.
pub fn brute_check_eta(x: f64, t: f64, eta: f64, eps: f64, n_range: RangeInclusive<i64>) -> bool {
    n_range
        .into_iter()
        .all(|n| ((x + n as f64) * eta - t).abs() > eps * t)
}

/// A window that always contains the decisive integer.
pub fn brute_window(x: f64, t: f64, eta: f64) -> RangeInclusive<i64> {
    let u = t / eta - x;
    (u.ceil() as i64 - 3)..=(u.floor() as i64 + 3)
}

/// The admissible η nearest to `eta_target`.
///
/// An inadmissible target is moved so that `t/η − x` lands on a half-integer,
/// the point farthest from every forbidden value. Only candidates within 50%
/// of the target are considered.
pub fn suggest_eta(x: f64, t: f64, eta_target: f64, eps: f64) -> Result<f64> {
    if !(eta_target > 0.0 && eta_target.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "eta target {eta_target} must be positive"
        )));
    }
    if !(eps > 0.0 && t > 0.0 && x >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "suggest_eta needs x >= 0, t > 0, eps > 0 (got x={x}, t={t}, eps={eps})"
        )));
    }
    if check_eta(x, t, eta_target, eps).admissible {
        return Ok(eta_target);
    }
    let u0 = t / eta_target - x;
    let k0 = u0.floor() as i64;
    let mut best: Option<f64> = None;
    for k in (k0 - 3)..=(k0 + 3) {
        let u = k as f64 + 0.5;
        if x + u <= 0.0 {
            continue;
        }
        let eta = t / (x + u);
        if (eta - eta_target).abs() > 0.5 * eta_target {
            continue;
        }
        if !check_eta(x, t, eta, eps).admissible {
            continue;
        }
        if best.is_none_or(|b| (eta - eta_target).abs() < (b - eta_target).abs()) {
            best = Some(eta);
        }
    }
    best.ok_or(Error::NoAdmissibleEta {
        target: eta_target,
        eps,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MMode {
    /// `M = ⌈x + max(1, η^{N−1}, η^N/|sin(η/2)|)⌉`
    ClosedForm,
    /// `M = ⌈x + η^{σ−1}/(tol·|sin(η/2)|)⌉`
    #[default]
    ToleranceTargeted,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MSelection {
    pub m: u64,
    pub mode: MMode,
    /// `η^{σ−1} / ((M − x)|sin(η/2)|)`, the Abel-summation bound on the
    /// dropped part of the leading correction series.
    pub tail_bound: f64,
}

/// Dropped-tail certificate for a given M.
pub fn tail_bound(x: f64, eta: f64, sigma: f64, m: u64) -> f64 {
    let sin_half = (eta / 2.0).sin().abs();
    eta.powf(sigma - 1.0) / ((m as f64 - x) * sin_half)
}

fn resonance_guard(eta: f64) -> Result<f64> {
    let sin_half = (eta / 2.0).sin().abs();
    if sin_half < RESONANCE_FLOOR {
        return Err(Error::Resonance { eta, sin_half });
    }
    Ok(sin_half)
}

/// Smallest M that keeps every index near the stationary value `t/η − x`
/// inside the summed range, so the dropped terms decrease monotonically.
pub fn stationary_floor(x: f64, t: f64, eta: f64, eps: f64) -> u64 {
    let past_stationary = ((1.0 + eps) * t / eta - x).ceil().max(0.0) as u64 + 1;
    let above_x = x.floor() as u64 + 1;
    past_stationary.max(above_x)
}

/// Validates a caller-chosen M and attaches its certificate.
pub fn fixed_m(x: f64, eta: f64, s: SPoint, m: u64) -> Result<MSelection> {
    resonance_guard(eta)?;
    if (m as f64) <= x {
        return Err(Error::InvalidParameter(format!(
            "M = {m} must exceed x = {x}"
        )));
    }
    Ok(MSelection {
        m,
        mode: MMode::ToleranceTargeted,
        tail_bound: tail_bound(x, eta, s.sigma, m),
    })
}

/// Chooses M for the correction series, capped at `m_cap`.
#[allow(clippy::too_many_arguments)]
pub fn select_m_capped(
    x: f64,
    eta: f64,
    n: usize,
    eps: f64,
    s: SPoint,
    mode: MMode,
    tol: f64,
    m_cap: u64,
) -> Result<MSelection> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let sin_half = resonance_guard(eta)?;
    let raw = match mode {
        MMode::ClosedForm => {
            let n = n as i32;
            x + 1f64.max(eta.powi(n - 1)).max(eta.powi(n) / sin_half)
        }
        MMode::ToleranceTargeted => {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "tolerance {tol} must be positive"
                )));
            }
            x + eta.powf(s.sigma - 1.0) / (tol * sin_half)
        }
    };
    let m = raw.ceil().max(stationary_floor(x, s.t, eta, eps) as f64);
    if !(m <= m_cap as f64) {
        return Err(Error::MCapExceeded { m, cap: m_cap });
    }
    let m = m as u64;
    Ok(MSelection {
        m,
        mode,
        tail_bound: tail_bound(x, eta, s.sigma, m),
    })
}

/// [`select_m_capped`] with the default cap.
pub fn select_m(
    x: f64,
    eta: f64,
    n: usize,
    eps: f64,
    s: SPoint,
    mode: MMode,
    tol: f64,
) -> Result<MSelection> {
    select_m_capped(x, eta, n, eps, s, mode, tol, DEFAULT_M_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_eta_examples() {
        let r = check_eta(0.3, 100.0, 40.0, 0.05);
        assert_eq!(r.worst_n, 2);
        assert!((r.margin - 3.0).abs() < 1e-12);
        assert!(r.admissible);
        assert_eq!(r.required_gap, 5.0);

        let r = check_eta(0.3, 100.0, 100.0 / 2.3, 1e-9);
        assert!(!r.admissible);

        let r = check_eta(0.0, 50.0, 300.0, 0.5);
        assert_eq!(r.worst_n, 0);
        assert!((r.margin - 25.0).abs() < 1e-12);
        assert!(r.admissible);
    }

    #[test]
    fn brute_agrees_on_examples() {
        for &(x, t, eta, eps) in &[
            (0.3, 100.0, 40.0, 0.05),
            (0.0, 50.0, 300.0, 0.5),
            (1.3, 2000.0, 20.0, 0.05),
        ] {
            let fast = check_eta(x, t, eta, eps).admissible;
            assert_eq!(
                fast,
                brute_check_eta(x, t, eta, eps, brute_window(x, t, eta))
            );
        }
    }

    #[test]
    fn suggest_repairs_exact_resonance() {
        let (x, t, eps) = (0.3, 100.0, 0.05);
        let target = t / (x + 2.0);
        let eta = suggest_eta(x, t, target, eps).unwrap();
        let r = check_eta(x, t, eta, eps);
        assert!(r.admissible && r.margin > 0.0);
        assert!((eta - target).abs() <= 0.5 * target);
        assert_eq!(suggest_eta(0.3, 100.0, 40.0, 0.05).unwrap(), 40.0);
    }

    #[test]
    fn suggest_fails_for_huge_eps() {
        let err = suggest_eta(1.3, 2000.0, 20.0, 0.05).unwrap_err();
        assert!(matches!(err, Error::NoAdmissibleEta { .. }));
    }

    #[test]
    fn select_m_examples() {
        let s = SPoint::new(0.5, 1.0).unwrap();
        let m = select_m(0.5, 3.0, 2, 0.05, s, MMode::ClosedForm, 0.0).unwrap();
        assert_eq!(m.m, 10);

        let m = select_m(0.0, 300.0, 3, 0.5, s, MMode::ClosedForm, 0.0).unwrap();
        let expect = (2.7e7 / 150f64.sin().abs()).ceil() as u64;
        assert_eq!(m.m, expect);
        assert!(m.m > 37_000_000 && m.m < 38_000_000);

        let s = SPoint::new(0.5, 10.0).unwrap();
        let m = select_m(1.3, 20.0, 3, 0.05, s, MMode::ToleranceTargeted, 3e-5).unwrap();
        assert_eq!(m.m, 13_703);
        assert!(m.tail_bound <= 3e-5);
    }

    #[test]
    fn select_m_errors() {
        let s = SPoint::new(0.5, 10.0).unwrap();
        let eta = 2.0 * std::f64::consts::PI * 3.0;
        assert!(matches!(
            select_m(0.5, eta, 2, 0.1, s, MMode::ClosedForm, 0.0),
            Err(Error::Resonance { .. })
        ));
        assert!(matches!(
            select_m_capped(0.0, 300.0, 3, 0.5, s, MMode::ClosedForm, 0.0, 1000),
            Err(Error::MCapExceeded { .. })
        ));
        assert!(select_m(0.5, 3.0, 0, 0.1, s, MMode::ClosedForm, 0.0).is_err());
    }

    #[test]
    fn stationary_floor_applies() {
        // t/η − x ≈ 49.7, so every index up to past 52 must be kept
        let s = SPoint::new(0.5, 1000.0).unwrap();
        let m = select_m(0.3, 20.0, 1, 0.05, s, MMode::ToleranceTargeted, 1e3).unwrap();
        assert_eq!(m.m, stationary_floor(0.3, 1000.0, 20.0, 0.05));
        assert!(m.m >= 53);
    }
}
