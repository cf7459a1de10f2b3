use num_bigint::BigInt;
use num_complex::Complex64;
use serde::Serialize;

use super::gaussian::GaussianInt;
use crate::error::{Error, Result};

/// Exact coefficients `A_{bc}^{(N)}` of the operator `D_N`, orders `0..=max_n`.
///
/// `D_N(z) = Σ_{b,c} A_{bc}^{(N)} t^b ξ^{N−b} σ^c z^{N−b} (ξz − it)^{−2N} z^{σ−1}`.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    max_n: usize,
    /// `exact[n][b][c]`
    exact: Vec<Vec<Vec<GaussianInt>>>,
    /// the same entries rounded to double precision
    approx: Vec<Vec<Vec<Complex64>>>,
}

/// One row of the JSON dump.
#[derive(Serialize)]
struct DumpEntry {
    #[serde(rename = "N")]
    n: usize,
    b: usize,
    c: usize,
    re: String,
    im: String,
}

impl CoeffTable {
    /// Builds all orders up to `max_n` with the four-term recursion.
    pub fn build(max_n: usize) -> Self {
        let mut exact = vec![vec![vec![GaussianInt::one()]]];
        for n in 0..max_n {
            let prev = &exact[n];
            let mut next = vec![vec![GaussianInt::zero(); n + 2]; n + 2];
            for b in 0..=n {
                for c in 0..=n {
                    let a = &prev[b][c];
                    if a.is_zero() {
                        continue;
                    }
                    next[b][c] += &a.scale(-((n + 1 + b) as i64));
                    next[b][c + 1] += a;
                    let minus_i_a = -a.mul_i();
                    next[b + 1][c] += &minus_i_a.scale((n - b) as i64);
                    next[b + 1][c + 1] += &minus_i_a;
                }
            }
            exact.push(next);
        }
        let approx = exact
            .iter()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(GaussianInt::to_c64).collect())
                    .collect()
            })
            .collect();
        Self {
            max_n,
            exact,
            approx,
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Fails unless order `n` is stored.
    pub fn require(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::TableTooSmall {
                max_n: self.max_n,
                requested: n,
            });
        }
        Ok(())
    }

    /// `A_{bc}^{(n)}`; zero outside `0 <= b, c <= n`.
    pub fn get(&self, n: usize, b: usize, c: usize) -> Result<GaussianInt> {
        self.require(n)?;
        Ok(self.exact[n]
            .get(b)
            .and_then(|row| row.get(c))
            .cloned()
            .unwrap_or_default())
    }

    /// Largest `|A_{bc}^{(n)}|²` over the order-`n` block.
    pub fn max_norm_sqr(&self, n: usize) -> Result<BigInt> {
        self.require(n)?;
        Ok(self.exact[n]
            .iter()
            .flatten()
            .map(GaussianInt::norm_sqr)
            .max()
            .unwrap_or_default())
    }

    /// `P_b(σ) = Σ_c A_{bc}^{(n)} σ^c` for `b = 0..=n`.
    pub(crate) fn sigma_polys(&self, n: usize, sigma: f64) -> Vec<Complex64> {
        self.approx[n]
            .iter()
            .map(|row| {
                row.iter()
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |acc, a| acc * sigma + a)
            })
            .collect()
    }

    /// Serializes every entry as `{"N","b","c","re","im"}` with exact decimal strings.
    pub fn to_json(&self) -> String {
        let mut rows = Vec::new();
        for (n, m) in self.exact.iter().enumerate() {
            for (b, row) in m.iter().enumerate() {
                for (c, a) in row.iter().enumerate() {
                    rows.push(DumpEntry {
                        n,
                        b,
                        c,
                        re: a.re.to_string(),
                        im: a.im.to_string(),
                    });
                }
            }
        }
        serde_json::to_string_pretty(&rows).expect("plain data serializes")
    }
}
