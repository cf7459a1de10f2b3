//! Euler–Maclaurin reference for `ζ₁(x, s) = ζ_H(s, x + 1)`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::numerics::{ComplexDD, DoubleDouble as DD, Precision, SPoint};

/// Most Bernoulli corrections ever applied.
pub const MAX_J: usize = 30;

/// Requested relative accuracy of the reference.
pub const TARGET_REL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EMConfig {
    /// Direct-sum cutoff; `None` picks `max(10, ⌈|s|⌉) + 2J`.
    pub k: Option<u64>,
    /// Bernoulli corrections, at most [`MAX_J`].
    pub j: usize,
    pub precision: Precision,
}

impl Default for EMConfig {
    fn default() -> Self {
        Self {
            k: None,
            j: MAX_J,
            precision: Precision::Double,
        }
    }
}

impl EMConfig {
    pub fn with_precision(mut self, p: Precision) -> Self {
        self.precision = p;
        self
    }

    fn cutoff(&self, s: Complex64) -> Result<u64> {
        if self.j > MAX_J {
            return Err(Error::InvalidParameter(format!(
                "J = {} exceeds {MAX_J}",
                self.j
            )));
        }
        let floor = 10u64.max(s.norm().ceil() as u64);
        match self.k {
            Some(k) if k < floor => Err(Error::InvalidParameter(format!(
                "K = {k} is below max(10, ceil|s|) = {floor}"
            ))),
            Some(k) => Ok(k),
            None => Ok(floor + 2 * self.j as u64),
        }
    }
}

/// Reference value with its truncation estimate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Reference {
    pub value: Complex64,
    pub error_estimate: f64,
    pub k: u64,
    pub j_used: usize,
}

/// Exact `B_2, B_4, …, B_{2J}`.
pub fn bernoulli_numbers(j: usize) -> Result<Vec<BigRational>> {
    if j > MAX_J {
        return Err(Error::InvalidParameter(format!("J = {j} exceeds {MAX_J}")));
    }
    let top = 2 * j;
    // Σ_{k=0}^{m} C(m+1, k) B_k = 0
    let mut b: Vec<BigRational> = vec![BigRational::from_integer(BigInt::from(1))];
    for m in 1..=top {
        let mut binom = BigInt::from(1);
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += bk * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    Ok((1..=j).map(|i| b[2 * i].clone()).collect())
}

/// `B_{2j}/(2j)!` for j = 1..=J as doubles.
fn em_coefficients(j: usize) -> Result<&'static [f64]> {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    if j > MAX_J {
        return Err(Error::InvalidParameter(format!("J = {j} exceeds {MAX_J}")));
    }
    let all = TABLE.get_or_init(|| scaled_bernoulli(MAX_J).expect("MAX_J is in range"));
    Ok(&all[..j])
}

fn scaled_bernoulli(j: usize) -> Result<Vec<f64>> {
    let bern = bernoulli_numbers(j)?;
    let mut fact = BigInt::from(1);
    let mut out = Vec::with_capacity(j);
    for (i, b) in bern.iter().enumerate() {
        let k = 2 * (i + 1);
        fact *= BigInt::from(k - 1) * BigInt::from(k);
        let q = b / BigRational::from_integer(fact.clone());
        out.push(q.to_f64().unwrap_or(0.0));
    }
    Ok(out)
}

/// Complex arithmetic with the chosen number of digits.
trait Field: Copy + std::ops::Add<Output = Self> + std::ops::Mul<Output = Self> {
    fn zero() -> Self;
    /// `y^{−s}` for real `y > 0`
    fn pow_neg(y: f64, s: Complex64) -> Self;
    fn from_c64(z: Complex64) -> Self;
    fn to_c64(self) -> Complex64;
}

impl Field for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn pow_neg(y: f64, s: Complex64) -> Self {
        (-s * y.ln()).exp()
    }
    fn from_c64(z: Complex64) -> Self {
        z
    }
    fn to_c64(self) -> Complex64 {
        self
    }
}

impl Field for ComplexDD {
    fn zero() -> Self {
        ComplexDD::default()
    }
    fn pow_neg(y: f64, s: Complex64) -> Self {
        let ly = DD::ln_f64(y);
        ComplexDD::new(-(ly * s.re), -(ly * s.im)).exp()
    }
    fn from_c64(z: Complex64) -> Self {
        ComplexDD::from_f64(z.re, z.im)
    }
    fn to_c64(self) -> Complex64 {
        ComplexDD::to_c64(self)
    }
}

fn hurwitz_em<F: Field>(s: Complex64, a: f64, k: u64, coeffs: &[f64]) -> (Complex64, f64, usize) {
    let mut head = F::zero();
    for n in 0..k {
        head = head + F::pow_neg(n as f64 + a, s);
    }
    let y = k as f64 + a;
    let y_neg_s = F::pow_neg(y, s).to_c64();
    let one = Complex64::new(1.0, 0.0);
    let mut tail = y_neg_s * y / (s - one) + y_neg_s * 0.5;

    // term_j = B_{2j}/(2j)! · s(s+1)…(s+2j−2) · y^{−s−2j+1}
    let mut rising = s; // s(s+1)…(s+2j−2)
    let mut ypow = y_neg_s / y; // y^{−s−2j+1}
    let mut used = 0;
    let mut last = f64::INFINITY;
    let scale = (head.to_c64() + tail).norm().max(1e-300);
    for (i, c) in coeffs.iter().enumerate() {
        let j = i + 1;
        let term = rising * ypow * *c;
        if term.norm() > last {
            break; // asymptotic series started to diverge
        }
        tail += term;
        used = j;
        last = term.norm();
        let jf = j as f64;
        rising = rising * (s + (2.0 * jf - 1.0)) * (s + 2.0 * jf);
        ypow /= y * y;
        if last < 1e-20 * scale {
            break;
        }
    }
    // first omitted term, times |s+2J+1|/(σ+2J+1)
    let jf = used as f64;
    let next = if used < coeffs.len() {
        (rising * ypow * coeffs[used]).norm()
    } else {
        last
    };
    let est = next * (s + 2.0 * jf + 1.0).norm() / (s.re + 2.0 * jf + 1.0);
    let value = (head + F::from_c64(tail)).to_c64();
    (value, est, used)
}

/// `ζ_H(s, x+1)` for any complex `s ≠ 1` with `Re s + 2J + 1 > 0`.
pub fn zeta1_reference_general(x: f64, s: Complex64, cfg: &EMConfig) -> Result<Reference> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "x = {x} must be finite and >= 0"
        )));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole(1.0));
    }
    let k = cfg.cutoff(s)?;
    let coeffs = em_coefficients(cfg.j)?;
    let a = x + 1.0;
    let (value, est, used) = match cfg.precision {
        Precision::Double => hurwitz_em::<Complex64>(s, a, k, coeffs),
        Precision::Extended => hurwitz_em::<ComplexDD>(s, a, k, coeffs),
    };
    if !(est <= TARGET_REL * value.norm()) {
        return Err(Error::Precision {
            estimate: est,
            magnitude: value.norm(),
        });
    }
    Ok(Reference {
        value,
        error_estimate: est,
        k,
        j_used: used,
    })
}

/// `ζ₁(x, s)` on the critical strip.
pub fn zeta1_reference(x: f64, s: SPoint, cfg: &EMConfig) -> Result<Complex64> {
    Ok(zeta1_reference_general(x, s.s(), cfg)?.value)
}
