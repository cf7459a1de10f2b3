use hurwitz_asym::oracles::{
    verify_alpha_representation, verify_exact_representation, verify_gl_expansion,
    zeta1_reference_general, EMConfig, QuadConfig, Verification, TARGET_REL,
};
use hurwitz_asym::perf::compare;
use hurwitz_asym::{
    check_eta, eval_zeta1_asym, suggest_eta, AsymParams, CoeffTable, Error, EvalResult, MMode,
    Precision, Result, SPoint,
};

use crate::args::*;
use crate::table::{Cell, Table};

/// Residual accepted by the verification commands.
pub const VERIFY_TOL: f64 = 1e-6;

fn spoint(p: &PointArgs) -> Result<SPoint> {
    check_x(p.x)?;
    SPoint::new(p.sigma, p.t)
}

fn check_x(x: f64) -> Result<()> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "x = {x} must be finite and >= 0"
        )));
    }
    Ok(())
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    Ok(())
}

fn params(x: f64, eta: f64, n: usize, s: &SeriesArgs, precision: Precision) -> AsymParams {
    let mut p = AsymParams::new(x, eta, s.eps, n)
        .with_mode(MMode::from(s.m_mode))
        .with_precision(precision)
        .with_m_cap(s.m_cap);
    if let Some(tol) = s.tol {
        p = p.with_tol(tol);
    }
    if let Some(m) = s.m {
        p = p.with_m(m);
    }
    p
}

fn quad_config(q: &QuadArgs) -> Result<QuadConfig> {
    let cfg = QuadConfig {
        abs_tol: q.abs_tol,
        rel_tol: q.rel_tol,
        phi1: q.phi1,
        phi2: q.phi2,
        ..QuadConfig::default()
    };
    cfg.validate()?;
    Ok(cfg)
}

fn reference(x: f64, s: SPoint, precision: Precision) -> Result<num_complex::Complex64> {
    Ok(zeta1_reference_general(x, s.s(), &EMConfig::default().with_precision(precision))?.value)
}

fn mode_name(m: MMode) -> &'static str {
    match m {
        MMode::ClosedForm => "closed_form",
        MMode::ToleranceTargeted => "tolerance_targeted",
    }
}

pub fn eval(a: &EvalArgs, precision: Precision) -> Result<Table> {
    let s = spoint(&a.point)?;
    check_n(a.n)?;
    let table = CoeffTable::build(a.n);
    let r = eval_zeta1_asym(
        s,
        &params(a.point.x, a.eta, a.n, &a.series, precision),
        &table,
    )?;
    let mut t = Table::new(&[
        "x",
        "sigma",
        "t",
        "eta",
        "eps",
        "N",
        "precision",
        "value_re",
        "value_im",
        "err_bound",
        "regime",
        "M",
        "m_mode",
        "tail_bound",
        "sum_plus_re",
        "sum_plus_im",
        "sum_minus_re",
        "sum_minus_im",
        "residue_re",
        "residue_im",
        "corr_upper_re",
        "corr_upper_im",
        "corr_lower_re",
        "corr_lower_im",
        "chi_re",
        "chi_im",
        "term_counts.sum_plus",
        "term_counts.sum_minus",
        "term_counts.residue",
        "term_counts.correction",
    ]);
    t.push(eval_row(a, s, &r, precision));
    Ok(t)
}

fn eval_row(a: &EvalArgs, s: SPoint, r: &EvalResult, precision: Precision) -> Vec<Cell> {
    let tc = r.term_counts;
    vec![
        a.point.x.into(),
        s.sigma.into(),
        s.t.into(),
        r.eta.into(),
        a.series.eps.into(),
        a.n.into(),
        precision_name(precision).into(),
        r.value.re.into(),
        r.value.im.into(),
        r.err_bound.into(),
        r.regime.as_str().into(),
        r.m.m.into(),
        mode_name(r.m.mode).into(),
        r.m.tail_bound.into(),
        r.sum_plus.re.into(),
        r.sum_plus.im.into(),
        r.sum_minus.re.into(),
        r.sum_minus.im.into(),
        r.residue_series.re.into(),
        r.residue_series.im.into(),
        r.corr_upper.re.into(),
        r.corr_upper.im.into(),
        r.corr_lower.re.into(),
        r.corr_lower.im.into(),
        r.chi.re.into(),
        r.chi.im.into(),
        tc.sum_plus.into(),
        tc.sum_minus.into(),
        tc.residue.into(),
        tc.correction.into(),
    ]
}

fn precision_name(p: Precision) -> &'static str {
    match p {
        Precision::Double => "double",
        Precision::Extended => "extended",
    }
}

pub fn reference_cmd(a: &ReferenceArgs, precision: Precision) -> Result<Table> {
    let s = spoint(&a.point)?;
    let cfg = EMConfig {
        k: a.k,
        j: a.j,
        precision,
    };
    let r = zeta1_reference_general(a.point.x, s.s(), &cfg)?;
    let target = TARGET_REL * r.value.norm();
    let mut t = Table::new(&[
        "x",
        "sigma",
        "t",
        "precision",
        "value_re",
        "value_im",
        "error_estimate",
        "error_target",
        "pass",
        "K",
        "J_used",
    ]);
    t.push(vec![
        a.point.x.into(),
        s.sigma.into(),
        s.t.into(),
        precision_name(precision).into(),
        r.value.re.into(),
        r.value.im.into(),
        r.error_estimate.into(),
        target.into(),
        (r.error_estimate <= target).into(),
        r.k.into(),
        r.j_used.into(),
    ]);
    Ok(t)
}

fn verification_table(extra: &'static str) -> Table {
    Table::new(&[
        "x",
        "sigma",
        "t",
        extra,
        "assembled_re",
        "assembled_im",
        "reference_re",
        "reference_im",
        "residual",
        "tolerance",
        "pass",
    ])
}

fn verification_row(x: f64, s: SPoint, extra: f64, v: &Verification) -> Vec<Cell> {
    vec![
        x.into(),
        s.sigma.into(),
        s.t.into(),
        extra.into(),
        v.assembled.re.into(),
        v.assembled.im.into(),
        v.reference.re.into(),
        v.reference.im.into(),
        v.residual.into(),
        VERIFY_TOL.into(),
        (v.residual <= VERIFY_TOL).into(),
    ]
}

pub fn verify_exact(a: &VerifyExactArgs) -> Result<Table> {
    let s = spoint(&a.point)?;
    let v = verify_exact_representation(a.point.x, s, a.eta, &quad_config(&a.quad)?)?;
    let mut t = verification_table("eta");
    t.push(verification_row(a.point.x, s, a.eta, &v));
    Ok(t)
}

pub fn verify_alpha(a: &VerifyAlphaArgs) -> Result<Table> {
    let s = spoint(&a.point)?;
    let v = verify_alpha_representation(a.point.x, s, a.alpha, &quad_config(&a.quad)?)?;
    let mut t = verification_table("alpha");
    t.push(verification_row(a.point.x, s, a.alpha, &v));
    Ok(t)
}

pub fn verify_gl(a: &VerifyGlArgs) -> Result<Table> {
    let s = spoint(&a.point)?;
    check_n(a.n)?;
    let table = CoeffTable::build(a.n);
    let c = verify_gl_expansion(
        a.point.x,
        s,
        a.eta,
        a.n,
        &table,
        &quad_config(&a.quad)?,
        a.m,
    )?;
    let mut t = Table::new(&[
        "x",
        "sigma",
        "t",
        "eta",
        "N",
        "M",
        "quad_re",
        "quad_im",
        "expansion_re",
        "expansion_im",
        "difference",
        "envelope",
        "tail_bound",
        "pass",
    ]);
    t.push(vec![
        a.point.x.into(),
        s.sigma.into(),
        s.t.into(),
        a.eta.into(),
        a.n.into(),
        c.m.into(),
        c.quad.re.into(),
        c.quad.im.into(),
        c.expansion.re.into(),
        c.expansion.im.into(),
        c.difference.into(),
        c.envelope.into(),
        c.tail_bound.into(),
        c.passed().into(),
    ]);
    Ok(t)
}

pub fn sweep_n(a: &SweepNArgs, precision: Precision) -> Result<Table> {
    let s = spoint(&a.point)?;
    check_n(a.n_max)?;
    let table = CoeffTable::build(a.n_max);
    let truth = reference(a.point.x, s, precision)?;
    let mut t = Table::new(&[
        "x",
        "sigma",
        "t",
        "eta",
        "eps",
        "N",
        "M",
        "value_re",
        "value_im",
        "reference_re",
        "reference_im",
        "error",
        "err_bound",
        "within_bound",
        "decreasing",
    ]);
    let mut previous: Option<f64> = None;
    for n in 1..=a.n_max {
        let r = eval_zeta1_asym(
            s,
            &params(a.point.x, a.eta, n, &a.series, precision),
            &table,
        )?;
        let err = (r.value - truth).norm();
        t.push(vec![
            a.point.x.into(),
            s.sigma.into(),
            s.t.into(),
            a.eta.into(),
            a.series.eps.into(),
            n.into(),
            r.m.m.into(),
            r.value.re.into(),
            r.value.im.into(),
            truth.re.into(),
            truth.im.into(),
            err.into(),
            r.err_bound.into(),
            (err <= r.err_bound).into(),
            previous.map(|p| err < p).into(),
        ]);
        previous = Some(err);
    }
    Ok(t)
}

pub fn sweep_eta(a: &SweepEtaArgs, precision: Precision) -> Result<Table> {
    let s = spoint(&a.point)?;
    check_n(a.n)?;
    if !(a.eta_min > 0.0 && a.eta_max >= a.eta_min && a.eta_max.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "need 0 < eta-min <= eta-max (got {}, {})",
            a.eta_min, a.eta_max
        )));
    }
    if a.steps == 0 {
        return Err(Error::InvalidParameter("steps must be positive".into()));
    }
    let table = CoeffTable::build(a.n);
    let truth = reference(a.point.x, s, precision)?;
    let mut t = Table::new(&[
        "eta",
        "admissible",
        "worst_n",
        "margin",
        "required_gap",
        "status",
        "M",
        "value_re",
        "value_im",
        "error",
        "err_bound",
        "within_bound",
    ]);
    for i in 0..a.steps {
        let eta = if a.steps == 1 {
            a.eta_min
        } else {
            a.eta_min + (a.eta_max - a.eta_min) * i as f64 / (a.steps - 1) as f64
        };
        let rep = check_eta(a.point.x, s.t, eta, a.series.eps);
        let mut row: Vec<Cell> = vec![
            eta.into(),
            rep.admissible.into(),
            rep.worst_n.into(),
            rep.margin.into(),
            rep.required_gap.into(),
        ];
        match eval_zeta1_asym(
            s,
            &params(a.point.x, eta, a.n, &a.series, precision),
            &table,
        ) {
            Ok(r) => {
                let err = (r.value - truth).norm();
                row.extend([
                    "ok".into(),
                    r.m.m.into(),
                    r.value.re.into(),
                    r.value.im.into(),
                    err.into(),
                    r.err_bound.into(),
                    (err <= r.err_bound).into(),
                ]);
            }
            Err(e) => {
                row.push(e.name().into());
                row.extend(std::iter::repeat_n(Cell::Empty, 6));
            }
        }
        t.push(row);
    }
    Ok(t)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let k = points.len() as f64;
    let lx: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ly: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}

/// Rows over the t grid, then one `fit` row. The dropped tail is kept two
/// decades below `t^{σ−N−1}` so the fit sees the truncation error.
pub fn scaling(a: &ScalingArgs, precision: Precision) -> Result<Table> {
    check_x(a.x)?;
    check_n(a.n)?;
    if a.t_values.len() < 2 {
        return Err(Error::InvalidParameter(
            "scaling needs at least two t values".into(),
        ));
    }
    let table = CoeffTable::build(a.n);
    let order = a.sigma - a.n as f64 - 1.0;
    let mut t = Table::new(&[
        "kind",
        "t",
        "eta",
        "M",
        "error",
        "err_bound",
        "predicted_order",
        "within_bound",
        "fitted_slope",
        "target_slope",
        "pass",
    ]);
    let mut points = Vec::new();
    for &tv in &a.t_values {
        let s = SPoint::new(a.sigma, tv)?;
        let eta = suggest_eta(a.x, tv, a.eta_factor * tv, a.eps)?;
        let p = AsymParams::new(a.x, eta, a.eps, a.n)
            .with_tol(1e-2 * tv.powf(order))
            .with_precision(precision);
        let r = eval_zeta1_asym(s, &p, &table)?;
        let truth = reference(a.x, s, Precision::Extended)?;
        let err = (r.value - truth).norm();
        points.push((tv, err));
        t.push(vec![
            "point".into(),
            tv.into(),
            eta.into(),
            r.m.m.into(),
            err.into(),
            r.err_bound.into(),
            tv.powf(order).into(),
            (err <= r.err_bound).into(),
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
        ]);
    }
    let slope = loglog_slope(&points);
    t.push(vec![
        "fit".into(),
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        slope.into(),
        order.into(),
        ((slope - order).abs() <= a.slope_tol).into(),
    ]);
    Ok(t)
}

pub fn bench(a: &BenchArgs, precision: Precision) -> Result<Table> {
    let s = spoint(&a.point)?;
    check_n(a.n)?;
    let eta = suggest_eta(a.point.x, s.t, a.eta, a.series.eps)?;
    let table = CoeffTable::build(a.n);
    let p = params(a.point.x, eta, a.n, &a.series, precision);
    let r = compare(
        s,
        &p,
        &table,
        &EMConfig::default().with_precision(precision),
        a.repeats,
    )?;
    let tc = r.term_counts;
    let mut t = Table::new(&[
        "x",
        "sigma",
        "t",
        "eta",
        "eps",
        "N",
        "precision",
        "terms.sum_plus",
        "terms.residue",
        "terms.M",
        "reference_terms",
        "asym_seconds",
        "reference_seconds",
        "speedup",
        "min_speedup",
        "abs_diff",
        "err_bound",
        "within_bound",
        "pass",
    ]);
    t.push(vec![
        a.point.x.into(),
        s.sigma.into(),
        s.t.into(),
        eta.into(),
        a.series.eps.into(),
        a.n.into(),
        precision_name(precision).into(),
        tc.sum_plus.into(),
        tc.residue.into(),
        tc.correction.into(),
        r.reference_terms.into(),
        r.asym_seconds.into(),
        r.reference_seconds.into(),
        r.speedup.into(),
        a.min_speedup.into(),
        r.abs_diff.into(),
        r.err_bound.into(),
        (r.abs_diff <= r.err_bound).into(),
        (r.speedup >= a.min_speedup).into(),
    ]);
    Ok(t)
}
