use num_complex::Complex64;

use super::table::CoeffTable;
use crate::error::{Error, Result};
use crate::numerics::{complex_pow, SPoint};

/// Relative floor on `|ξz − it|` below which evaluation is refused.
pub const SINGULAR_FLOOR: f64 = 1e-12;

fn denominator(z: Complex64, xi: f64, t: f64) -> Result<Complex64> {
    let xz = z * xi;
    let d = xz - Complex64::new(0.0, t);
    let floor = SINGULAR_FLOOR * xz.norm().max(t);
    if d.norm() < floor || d.norm() == 0.0 {
        return Err(Error::SingularDenominator {
            modulus: d.norm(),
            floor,
        });
    }
    Ok(d)
}

/// `Σ_b P_b p^b q^{n−b} d^{−n}` with `p = t/d`, `q = ξz/d`.
fn reduced_sum(polys: &[Complex64], p: Complex64, q: Complex64, d: Complex64) -> Complex64 {
    let n = polys.len() - 1;
    // Horner in the ratio p/q would divide by zero at ξ = 0, so build powers directly
    let mut q_pows = vec![Complex64::new(1.0, 0.0); n + 1];
    for k in 1..=n {
        q_pows[k] = q_pows[k - 1] * q;
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut p_pow = Complex64::new(1.0, 0.0);
    for (b, poly) in polys.iter().enumerate() {
        acc += poly * p_pow * q_pows[n - b];
        p_pow *= p;
    }
    acc * d.powi(-(n as i32))
}

/// `D_n(z; ξ; σ, t)`.
pub fn eval_dn(
    table: &CoeffTable,
    n: usize,
    z: Complex64,
    xi: f64,
    s: SPoint,
) -> Result<Complex64> {
    table.require(n)?;
    let d = denominator(z, xi, s.t)?;
    let zpow = complex_pow(z, Complex64::new(s.sigma - 1.0, 0.0))?;
    let polys = table.sigma_polys(n, s.sigma);
    Ok(reduced_sum(&polys, s.t / d, z * xi / d, d) * zpow)
}

/// Integration-by-parts boundary term `B_j(z; ξ) = z/(ξz − it) · D_j(z)`.
pub fn eval_boundary_term(
    table: &CoeffTable,
    j: usize,
    z: Complex64,
    xi: f64,
    s: SPoint,
) -> Result<Complex64> {
    let d = denominator(z, xi, s.t)?;
    Ok(eval_dn(table, j, z, xi, s)? * z / d)
}

/// Sums `Σ_{j<N} B_j(z; ξ)` for a fixed `z` and many `ξ`, reusing `z^{σ−1}`
/// and the σ-polynomials of every order.
#[derive(Clone, Debug)]
pub struct BoundaryEvaluator {
    z: Complex64,
    t: f64,
    zpow: Complex64,
    polys: Vec<Vec<Complex64>>,
}

impl BoundaryEvaluator {
    pub fn new(table: &CoeffTable, n_terms: usize, z: Complex64, s: SPoint) -> Result<Self> {
        if n_terms == 0 {
            return Err(Error::InvalidParameter(
                "need at least one boundary term".into(),
            ));
        }
        table.require(n_terms - 1)?;
        let zpow = complex_pow(z, Complex64::new(s.sigma - 1.0, 0.0))?;
        let polys = (0..n_terms)
            .map(|j| table.sigma_polys(j, s.sigma))
            .collect();
        Ok(Self {
            z,
            t: s.t,
            zpow,
            polys,
        })
    }

    /// `Σ_{j<N} B_j(z; ξ)`.
    pub fn sum(&self, xi: f64) -> Result<Complex64> {
        let d = denominator(self.z, xi, self.t)?;
        let p = self.t / d;
        let q = self.z * xi / d;
        let mut acc = Complex64::new(0.0, 0.0);
        for polys in &self.polys {
            acc += reduced_sum(polys, p, q, d);
        }
        Ok(acc * self.zpow * self.z / d)
    }
}
