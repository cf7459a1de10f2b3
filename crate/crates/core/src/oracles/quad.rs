//! Adaptive 7/15-point Gauss–Kronrod quadrature for complex-valued integrands
//! of a real parameter.

#![allow(clippy::excessive_precision)]

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One panel: Kronrod value, |Kronrod − Gauss|, and the largest sampled modulus.
pub fn gk15<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> (Complex64, f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut peak = fc.norm();
    for i in 0..7 {
        let dx = h * XGK[i];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        peak = peak.max(f1.norm()).max(f2.norm());
        kron += (f1 + f2) * WGK[i];
        if i % 2 == 1 {
            gauss += (f1 + f2) * WG[i / 2];
        }
    }
    (kron * h, ((kron - gauss) * h).norm(), peak)
}

#[derive(Clone, Copy, Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    peak: f64,
}

/// Result of an adaptive integration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Integral {
    pub value: Complex64,
    pub error: f64,
    /// Largest integrand modulus seen.
    pub peak: f64,
    pub panels: usize,
}

/// Bisects the worst panel until the summed error estimate meets
/// `max(abs_tol, rel_tol·|I|)`.
pub fn integrate<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdiv: usize,
) -> Result<Integral> {
    let panel = |f: &mut F, a: f64, b: f64| {
        let (value, error, peak) = gk15(f, a, b);
        Panel {
            a,
            b,
            value,
            error,
            peak,
        }
    };
    let mut panels = vec![panel(&mut f, a, b)];
    loop {
        let value: Complex64 = panels.iter().map(|p| p.value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        let peak = panels.iter().map(|p| p.peak).fold(0.0, f64::max);
        if !(value.re.is_finite() && value.im.is_finite() && error.is_finite()) {
            return Err(Error::Tolerance {
                estimate: f64::INFINITY,
                subdivisions: panels.len(),
            });
        }
        if error <= abs_tol.max(rel_tol * value.norm()) {
            return Ok(Integral {
                value,
                error,
                peak,
                panels: panels.len(),
            });
        }
        if panels.len() >= max_subdiv {
            return Err(Error::Tolerance {
                estimate: error,
                subdivisions: panels.len(),
            });
        }
        let (worst, _) = panels.iter().enumerate().fold((0, -1.0), |acc, (i, p)| {
            if p.error > acc.1 {
                (i, p.error)
            } else {
                acc
            }
        });
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        panels.push(panel(&mut f, p.a, mid));
        panels.push(panel(&mut f, mid, p.b));
    }
}

/// `∫_{start}^{∞} f(r) dr` by consecutive panels of width `width`, stopping
/// once two panels in a row stay below `cut` times the running peak.
#[allow(clippy::too_many_arguments)]
pub fn integrate_ray<F: FnMut(f64) -> Complex64>(
    mut f: F,
    start: f64,
    width: f64,
    cut: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdiv: usize,
) -> Result<Integral> {
    const MAX_PANELS: usize = 10_000;
    let mut total = Integral {
        value: Complex64::new(0.0, 0.0),
        error: 0.0,
        peak: 0.0,
        panels: 0,
    };
    let mut quiet = 0;
    let mut r = start;
    for _ in 0..MAX_PANELS {
        let piece = integrate(&mut f, r, r + width, abs_tol, rel_tol, max_subdiv)?;
        total.value += piece.value;
        total.error += piece.error;
        total.peak = total.peak.max(piece.peak);
        total.panels += piece.panels;
        r += width;
        if piece.peak < cut * total.peak {
            quiet += 1;
            if quiet == 2 {
                return Ok(total);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::Tolerance {
        estimate: total.error,
        subdivisions: total.panels,
    })
}
