//! Finite asymptotic series for `ζ₁(x, s) = Σ_{n≥1} (n + x)^{−s}` at large t.
//!
//! ```text
//! ζ₁(x,s) = Σ_{n=1}^{⌊t/η−x⌋} (x+n)^{−s} − Σ_{n=0}^{⌊x−t/η⌋} (x−n)^{−s}
//!         + χ(s) [ Σ_{m≤η/2π} e^{−2πimx} m^{s−1} + upper + lower ] + remainder
//! ```
//!
//! where the two correction series collect the boundary terms `B_j(±iη; ξ)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::admissibility::{check_eta, fixed_m, select_m_capped, MMode, MSelection, DEFAULT_M_CAP};
use crate::dn_engine::{BoundaryEvaluator, CoeffTable};
use crate::error::{Error, Result};
use crate::numerics::{
    chi, exp_dd, odd_double_factorial_f64, ComplexDD, DoubleDouble as DD, Precision, SPoint,
};

/// Which direct sums survive, by the position of η relative to `t/x` and `t/(x+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// `η > t/x`: only the subtracted sum.
    Case1,
    /// `η < t/(x+1)`: only the forward sum.
    Case2,
    /// in between: neither.
    Case3,
}

impl Regime {
    pub fn classify(x: f64, t: f64, eta: f64) -> Self {
        if x > 0.0 && eta > t / x {
            Regime::Case1
        } else if eta < t / (x + 1.0) {
            Regime::Case2
        } else {
            Regime::Case3
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Case1 => "case1",
            Regime::Case2 => "case2",
            Regime::Case3 => "case3",
        }
    }
}

/// Parameters of one asymptotic evaluation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymParams {
    pub x: f64,
    pub eta: f64,
    pub eps: f64,
    /// Number of boundary terms per index (`j = 0..N−1`).
    pub n: usize,
    pub m_mode: MMode,
    /// Tail tolerance for [`MMode::ToleranceTargeted`]; defaults to the error bound.
    pub tol: Option<f64>,
    /// Explicit M, bypassing selection.
    pub m: Option<u64>,
    /// O-constant of the remainder.
    pub constant: f64,
    pub precision: Precision,
    pub m_cap: u64,
}

impl AsymParams {
    pub fn new(x: f64, eta: f64, eps: f64, n: usize) -> Self {
        Self {
            x,
            eta,
            eps,
            n,
            m_mode: MMode::ToleranceTargeted,
            tol: None,
            m: None,
            constant: 1.0,
            precision: Precision::Double,
            m_cap: DEFAULT_M_CAP,
        }
    }

    pub fn with_mode(mut self, mode: MMode) -> Self {
        self.m_mode = mode;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = Some(tol);
        self
    }

    pub fn with_m(mut self, m: u64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_constant(mut self, c: f64) -> Self {
        self.constant = c;
        self
    }

    pub fn with_precision(mut self, p: Precision) -> Self {
        self.precision = p;
        self
    }

    pub fn with_m_cap(mut self, cap: u64) -> Self {
        self.m_cap = cap;
        self
    }

    fn validate(&self, table: &CoeffTable) -> Result<()> {
        if !(self.x >= 0.0 && self.x.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "x = {} must be finite and >= 0",
                self.x
            )));
        }
        if !(self.eta > 0.0 && self.eta.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "eta = {} must be positive",
                self.eta
            )));
        }
        if !(self.eps > 0.0 && self.eps.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "eps = {} must be positive",
                self.eps
            )));
        }
        if self.n == 0 {
            return Err(Error::InvalidParameter("N must be at least 1".into()));
        }
        if !(self.constant > 0.0) {
            return Err(Error::InvalidParameter(
                "the O-constant must be positive".into(),
            ));
        }
        table.require(self.n - 1)
    }

    /// Integer x (including 0) goes through the Riemann path.
    pub fn is_integer_x(&self) -> bool {
        self.x == self.x.round()
    }
}

/// Number of terms in each piece.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermCounts {
    pub sum_plus: u64,
    pub sum_minus: u64,
    pub residue: u64,
    /// M, the length of each correction series.
    pub correction: u64,
}

/// Value of the asymptotic series with its pieces.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Complex64,
    pub sum_plus: Complex64,
    pub sum_minus: Complex64,
    pub residue_series: Complex64,
    pub corr_upper: Complex64,
    pub corr_lower: Complex64,
    pub chi: Complex64,
    pub err_bound: f64,
    pub regime: Regime,
    pub eta: f64,
    pub m: MSelection,
    pub term_counts: TermCounts,
}

impl EvalResult {
    /// `sum_plus − sum_minus + χ (residue + upper + lower)`.
    pub fn reassemble(&self) -> Complex64 {
        self.sum_plus - self.sum_minus
            + self.chi * (self.residue_series + self.corr_upper + self.corr_lower)
    }
}

/// `K_N(x) = max(x, (x−⌊x⌋)^{−N−1}, (⌊x⌋−x+1)^{−N−1})`.
pub fn k_n(x: f64, n: usize) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("K_N needs x > 0, got {x}")));
    }
    let frac = x - x.floor();
    if frac == 0.0 {
        return Err(Error::Domain(format!("K_N is infinite at integer x = {x}")));
    }
    let p = -(n as i32) - 1;
    Ok(x.max(frac.powi(p)).max((1.0 - frac).powi(p)))
}

/// Remainder bound without the `|χ(s)|` factor.
pub fn remainder_bracket(params: &AsymParams, s: SPoint) -> Result<f64> {
    let n = params.n;
    let nf = n as f64;
    let common = params.constant * odd_double_factorial_f64(2 * n as i64 + 1) * (nf + 1.0).powi(2)
        / s.sigma
        * ((1.0 + params.eps) / params.eps).powi(2 * n as i32 + 2);
    if params.is_integer_x() {
        Ok(common * s.t.powf(s.sigma - nf - 1.0))
    } else {
        let x = params.x;
        Ok(common * s.t.min(params.eta).powf(s.sigma - nf - 1.0) * x.powf(-s.sigma) * k_n(x, n)?)
    }
}

/// Certified error bound `C (2N+1)!! (N+1)² σ^{−1} min(t,η)^{σ−N−1} x^{−σ} K_N(x) ((1+ε)/ε)^{2N+2} |χ(s)|`.
///
/// For integer x the x-dependent factors are dropped and `min(t,η)` becomes t.
pub fn error_bound(params: &AsymParams, s: SPoint) -> Result<f64> {
    Ok(remainder_bracket(params, s)? * chi(s)?.norm())
}

/// `ln y` in the requested precision.
fn ln_of(y: DD, precision: Precision) -> DD {
    match precision {
        Precision::Double => DD::from_f64(y.to_f64().ln()),
        Precision::Extended => y.ln(),
    }
}

/// `exp(a + i b)` where the phase may be large.
fn expi(a: f64, phase: DD, precision: Precision) -> Complex64 {
    match precision {
        Precision::Double => Complex64::from_polar(a.exp(), phase.to_f64()),
        Precision::Extended => Complex64::from_polar(a.exp(), phase.rem_two_pi().to_f64()),
    }
}

/// `y^{−s}` for `y > 0`.
fn pow_neg_s(y: DD, s: SPoint, precision: Precision) -> Complex64 {
    let ly = ln_of(y, precision);
    let phase = match precision {
        Precision::Double => DD::from_f64(-s.t * ly.hi),
        Precision::Extended => -(ly * s.t),
    };
    expi(-s.sigma * ly.to_f64(), phase, precision)
}

fn index_sum(x: f64, n: u64, precision: Precision) -> DD {
    match precision {
        Precision::Double => DD::from_f64(x + n as f64),
        Precision::Extended => DD::sum(x, n as f64),
    }
}

fn product(a: DD, b: f64, precision: Precision) -> DD {
    match precision {
        Precision::Double => DD::from_f64(a.to_f64() * b),
        Precision::Extended => a * b,
    }
}

/// `Σ_{n=1}^{count} (x+n)^{−s}`
fn forward_sum(x: f64, count: u64, s: SPoint, precision: Precision) -> Complex64 {
    (1..=count)
        .map(|n| pow_neg_s(index_sum(x, n, precision), s, precision))
        .sum()
}

/// `Σ_{n=0}^{count−1} (x−n)^{−s}`
fn backward_sum(x: f64, count: u64, s: SPoint, precision: Precision) -> Complex64 {
    (0..count)
        .map(|n| {
            let y = match precision {
                Precision::Double => DD::from_f64(x - n as f64),
                Precision::Extended => DD::sum(x, -(n as f64)),
            };
            pow_neg_s(y, s, precision)
        })
        .sum()
}

/// `Σ_{m=1}^{count} e^{−2πimx} m^{s−1}`
fn residue_series(x: f64, count: u64, s: SPoint, precision: Precision) -> Complex64 {
    let frac = x - x.floor();
    (1..=count)
        .map(|m| {
            let lm = ln_of(DD::from_f64(m as f64), precision);
            // e^{−2πimx} only depends on the fractional part of x
            let turn = match precision {
                Precision::Double => DD::from_f64(2.0 * std::f64::consts::PI * m as f64 * frac),
                Precision::Extended => DD::TWO_PI * (m as f64 * frac),
            };
            let phase = product(lm, s.t, precision) - turn;
            expi((s.sigma - 1.0) * lm.to_f64(), phase, precision)
        })
        .sum()
}

/// `e^{∓iπσ/2} e^{it ln η} (2π)^{−s}`, upper sign for the `z = iη` series.
fn correction_prefactor(s: SPoint, eta: f64, upper: bool) -> Result<Complex64> {
    let half = DD::HALF_PI * s.sigma;
    let twist = if upper { -half } else { half };
    let phase = twist + (DD::ln_f64(eta) - DD::LN_TWO_PI) * s.t;
    exp_dd(ComplexDD::new(-(DD::LN_TWO_PI * s.sigma), phase))
}

/// `Σ_{n=1}^{M} e^{−i(x+n)η} Σ_{j<N} B_j(iη; x+n)`
fn upper_series(
    x: f64,
    eta: f64,
    m: u64,
    ev: &BoundaryEvaluator,
    precision: Precision,
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..=m {
        let xi = index_sum(x, n, precision);
        let phase = -product(xi, eta, precision);
        acc += expi(0.0, phase, precision) * ev.sum(xi.to_f64())?;
    }
    Ok(acc)
}

/// `Σ_{n=0}^{M} e^{i(n−x)η} Σ_{j<N} B_j(−iη; n−x)`
fn lower_series(
    x: f64,
    eta: f64,
    m: u64,
    ev: &BoundaryEvaluator,
    precision: Precision,
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 0..=m {
        let xi = match precision {
            Precision::Double => DD::from_f64(n as f64 - x),
            Precision::Extended => DD::sum(n as f64, -x),
        };
        let phase = product(xi, eta, precision);
        acc += expi(0.0, phase, precision) * ev.sum(xi.to_f64())?;
    }
    Ok(acc)
}

/// Both correction series, scaled by their prefactors.
pub(crate) fn correction_series(
    x: f64,
    s: SPoint,
    eta: f64,
    n_terms: usize,
    m: u64,
    table: &CoeffTable,
    precision: Precision,
) -> Result<(Complex64, Complex64)> {
    let up = BoundaryEvaluator::new(table, n_terms, Complex64::new(0.0, eta), s)?;
    let lo = BoundaryEvaluator::new(table, n_terms, Complex64::new(0.0, -eta), s)?;
    let upper = correction_prefactor(s, eta, true)? * upper_series(x, eta, m, &up, precision)?;
    let lower = correction_prefactor(s, eta, false)? * lower_series(x, eta, m, &lo, precision)?;
    Ok((upper, lower))
}

/// The `ξ = 0` term of the lower series (Riemann path) in closed form:
/// `−(1/s)(η/2π)^s (1 − (σ/(−it))^N)`.
pub fn riemann_n0_closed_form(s: SPoint, eta: f64, n: usize) -> Result<Complex64> {
    let sc = s.s();
    let ratio = Complex64::new(s.sigma, 0.0) / Complex64::new(0.0, -s.t);
    let lr = DD::ln_f64(eta) - DD::LN_TWO_PI;
    let pow = exp_dd(ComplexDD::new(lr * s.sigma, lr * s.t))?;
    Ok(-(pow / sc) * (Complex64::new(1.0, 0.0) - ratio.powi(n as i32)))
}

/// The same term summed from the boundary terms at `ξ = 0`.
pub fn riemann_n0_generic(s: SPoint, eta: f64, n: usize, table: &CoeffTable) -> Result<Complex64> {
    let ev = BoundaryEvaluator::new(table, n, Complex64::new(0.0, -eta), s)?;
    Ok(correction_prefactor(s, eta, false)? * ev.sum(0.0)?)
}

fn floor_count(v: f64) -> u64 {
    if v.is_finite() && v >= 0.0 {
        v.floor() as u64
    } else {
        0
    }
}

fn resolve_m(params: &AsymParams, xm: f64, s: SPoint, bound: f64) -> Result<MSelection> {
    match params.m {
        Some(m) => fixed_m(xm, params.eta, s, m),
        None => {
            let tol = params.tol.unwrap_or(bound);
            select_m_capped(
                xm,
                params.eta,
                params.n,
                params.eps,
                s,
                params.m_mode,
                tol,
                params.m_cap,
            )
        }
    }
}

/// Evaluates `ζ₁(x, s)` by the finite asymptotic series.
///
/// Integer x is reduced to the Riemann case, `ζ₁(k, s) = ζ(s) − Σ_{j=1}^{k} j^{−s}`,
/// which requires `η > (1+ε)t`.
pub fn eval_zeta1_asym(s: SPoint, params: &AsymParams, table: &CoeffTable) -> Result<EvalResult> {
    params.validate(table)?;
    let (x, eta, t) = (params.x, params.eta, s.t);
    let precision = params.precision;
    let integer_x = params.is_integer_x();

    if integer_x {
        if !(eta > (1.0 + params.eps) * t) {
            return Err(Error::Regime(format!(
                "integer x = {x} needs eta > (1+eps) t = {}, got eta = {eta}",
                (1.0 + params.eps) * t
            )));
        }
    } else {
        let report = check_eta(x, t, eta, params.eps);
        if !report.admissible {
            return Err(Error::Inadmissible {
                eta,
                worst_n: report.worst_n,
                margin: report.margin,
            });
        }
    }

    let chi_s = chi(s)?;
    let err_bound = remainder_bracket(params, s)? * chi_s.norm();
    // the correction series run with x = 0 on the Riemann path
    let xm = if integer_x { 0.0 } else { x };
    let msel = resolve_m(params, xm, s, err_bound)?;

    let (plus_count, minus_count) = if integer_x {
        (0, x as u64)
    } else {
        let minus = x - t / eta;
        (
            floor_count(t / eta - x),
            if minus >= 0.0 {
                minus.floor() as u64 + 1
            } else {
                0
            },
        )
    };
    let sum_plus = forward_sum(x, plus_count, s, precision);
    let sum_minus = if integer_x {
        forward_sum(0.0, minus_count, s, precision)
    } else {
        backward_sum(x, minus_count, s, precision)
    };
    let residue_count = floor_count(eta / (2.0 * std::f64::consts::PI));
    let residue = residue_series(xm, residue_count, s, precision);
    let (corr_upper, corr_lower) =
        correction_series(xm, s, eta, params.n, msel.m, table, precision)?;

    let mut result = EvalResult {
        value: Complex64::new(0.0, 0.0),
        sum_plus,
        sum_minus,
        residue_series: residue,
        corr_upper,
        corr_lower,
        chi: chi_s,
        err_bound,
        regime: Regime::classify(x, t, eta),
        eta,
        m: msel,
        term_counts: TermCounts {
            sum_plus: plus_count,
            sum_minus: minus_count,
            residue: residue_count,
            correction: msel.m,
        },
    };
    result.value = result.reassemble();
    if !(result.value.re.is_finite() && result.value.im.is_finite()) {
        return Err(Error::Overflow {
            log_magnitude: f64::INFINITY,
        });
    }
    Ok(result)
}

/// `ζ(s)` through the `x = 0` series; needs `η > (1+ε)t`.
pub fn eval_riemann_asym(
    s: SPoint,
    eta: f64,
    eps: f64,
    n: usize,
    table: &CoeffTable,
) -> Result<EvalResult> {
    eval_zeta1_asym(s, &AsymParams::new(0.0, eta, eps, n), table)
}

/// Leading-order value `Σ_+ − Σ_− + χ(s)·residue series` and its regime.
pub fn eval_leading_order(x: f64, s: SPoint, eta: f64) -> Result<(Complex64, Regime)> {
    if !(x >= 0.0 && eta > 0.0 && x.is_finite() && eta.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "need x >= 0 and eta > 0 (x={x}, eta={eta})"
        )));
    }
    let t = s.t;
    let near = |thr: f64| thr.is_finite() && (eta - thr).abs() <= 1e-12 * thr;
    for thr in [if x > 0.0 { t / x } else { f64::INFINITY }, t / (x + 1.0)] {
        if near(thr) {
            return Err(Error::ThresholdBoundary {
                eta,
                threshold: thr,
            });
        }
    }
    let p = Precision::Double;
    let plus = forward_sum(x, floor_count(t / eta - x), s, p);
    let minus_arg = x - t / eta;
    let minus_count = if minus_arg >= 0.0 {
        minus_arg.floor() as u64 + 1
    } else {
        0
    };
    let minus = backward_sum(x, minus_count, s, p);
    let residue = residue_series(x, floor_count(eta / (2.0 * std::f64::consts::PI)), s, p);
    Ok((
        plus - minus + chi(s)? * residue,
        Regime::classify(x, t, eta),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(sigma: f64, t: f64) -> SPoint {
        SPoint::new(sigma, t).unwrap()
    }

    #[test]
    fn k_n_examples() {
        assert_eq!(k_n(0.5, 1).unwrap(), 4.0);
        assert_eq!(k_n(10.5, 1).unwrap(), 10.5);
        assert_eq!(k_n(0.5, 9).unwrap(), 1024.0);
        assert!(matches!(k_n(2.0, 1), Err(Error::Domain(_))));
        assert!(k_n(0.0, 1).is_err());
    }

    #[test]
    fn bracket_example() {
        let p = AsymParams::new(0.5, 25.0, 0.1, 1);
        let b = remainder_bracket(&p, sp(0.5, 100.0)).unwrap();
        let expect = 12.0 * 2.0 * 25f64.powf(-1.5) * 0.5f64.powf(-0.5) * 4.0 * 11f64.powi(4);
        assert!((b - expect).abs() < 1e-10 * expect);
        assert!((b - 1.59e4).abs() < 0.01e4);
    }

    #[test]
    fn bracket_integer_path() {
        let p = AsymParams::new(0.0, 300.0, 0.5, 3);
        let b = remainder_bracket(&p, sp(0.5, 50.0)).unwrap();
        let expect = 105.0 * 16.0 / 0.5 * 50f64.powf(-3.5) * 3f64.powi(8);
        assert!((b - expect).abs() < 1e-12 * expect);
    }

    #[test]
    fn regime_classification() {
        assert_eq!(Regime::classify(0.3, 100.0, 40.0), Regime::Case2);
        assert_eq!(Regime::classify(0.3, 100.0, 400.0), Regime::Case1);
        assert_eq!(Regime::classify(0.3, 100.0, 90.0), Regime::Case3);
        assert_eq!(Regime::classify(0.0, 50.0, 300.0), Regime::Case3);
        assert_eq!(Regime::classify(0.0, 50.0, 20.0), Regime::Case2);
    }

    #[test]
    fn n0_paths_agree() {
        let table = CoeffTable::build(6);
        for &(sigma, t, eta, n) in &[
            (1.0, 10.0, 40.0, 2),
            (0.5, 50.0, 300.0, 3),
            (0.3, 1e4, 3e4, 5),
        ] {
            let s = sp(sigma, t);
            let a = riemann_n0_closed_form(s, eta, n).unwrap();
            let b = riemann_n0_generic(s, eta, n, &table).unwrap();
            assert!((a - b).norm() <= 1e-12 * a.norm(), "{a} vs {b}");
        }
    }

    #[test]
    fn inadmissible_and_regime_errors() {
        let table = CoeffTable::build(3);
        let s = sp(0.5, 100.0);
        let p = AsymParams::new(0.3, 100.0 / 2.3, 0.05, 2);
        assert!(matches!(
            eval_zeta1_asym(s, &p, &table),
            Err(Error::Inadmissible { .. })
        ));
        let p = AsymParams::new(0.0, 120.0, 0.5, 2);
        assert!(matches!(
            eval_zeta1_asym(s, &p, &table),
            Err(Error::Regime(_))
        ));
        let p = AsymParams::new(0.3, 40.0, 0.05, 5);
        assert!(matches!(
            eval_zeta1_asym(s, &p, &table),
            Err(Error::TableTooSmall { .. })
        ));
    }

    #[test]
    fn bookkeeping_and_counts() {
        let table = CoeffTable::build(3);
        let s = sp(0.5, 100.0);
        let r = eval_zeta1_asym(s, &AsymParams::new(0.3, 40.0, 0.05, 2), &table).unwrap();
        assert_eq!(r.regime, Regime::Case2);
        assert_eq!(r.term_counts.sum_plus, 2);
        assert_eq!(r.term_counts.sum_minus, 0);
        assert_eq!(r.term_counts.residue, 6);
        assert_eq!(r.sum_minus, Complex64::new(0.0, 0.0));
        assert_eq!(r.reassemble(), r.value);
    }

    #[test]
    fn leading_order_threshold() {
        let s = sp(0.5, 100.0);
        assert!(matches!(
            eval_leading_order(0.5, s, 200.0),
            Err(Error::ThresholdBoundary { .. })
        ));
        let (_, regime) = eval_leading_order(0.3, s, 90.0).unwrap();
        assert_eq!(regime, Regime::Case3);
    }
}
