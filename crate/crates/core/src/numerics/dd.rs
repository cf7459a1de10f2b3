//! Double-double arithmetic (about 32 significant digits).
//!
//! Used wherever a phase of size `t * log(...)` must be reduced modulo 2π
//! without losing the digits that a plain `f64` product would discard, and as
//! the extended-precision backend of the Euler–Maclaurin oracle.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const ZERO: Self = Self::new(0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0);
    pub const PI: Self = Self::new(std::f64::consts::PI, 1.2246467991473532e-16);
    pub const TWO_PI: Self = Self::new(std::f64::consts::TAU, 2.4492935982947064e-16);
    pub const HALF_PI: Self = Self::new(std::f64::consts::FRAC_PI_2, 6.123233995736766e-17);
    pub const LN2: Self = Self::new(std::f64::consts::LN_2, 2.3190468138462996e-17);
    pub const LN_TWO_PI: Self = Self::new(1.8378770664093456, -7.756588316134483e-17);
    pub const LN_PI: Self = Self::new(1.1447298858494002, 1.0265951162707826e-17);

    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Exact sum of two doubles.
    pub fn sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Self { hi, lo }
    }

    /// Exact product of two doubles.
    pub fn prod(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Self { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * b);
        Self { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let r = self - Self::prod(q1, b);
        let q2 = r.hi / b;
        let r = r - Self::prod(q2, b);
        let q3 = r.hi / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo } + Self::from_f64(q3)
    }

    /// Multiplication by `2^k` (exact while in range).
    pub fn ldexp(self, k: i32) -> Self {
        let scale = 2f64.powi(k);
        Self::new(self.hi * scale, self.lo * scale)
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn round(self) -> f64 {
        let r = self.hi.round();
        if r == self.hi {
            // hi already integral, lo decides ties
            let (s, _) = quick_two_sum(r, self.lo.round());
            s
        } else if (r - self.hi).abs() == 0.5 {
            // exact tie in hi: lo breaks it
            if self.lo > 0.0 && r < self.hi {
                r + 1.0
            } else if self.lo < 0.0 && r > self.hi {
                r - 1.0
            } else {
                r
            }
        } else {
            r
        }
    }

    /// `exp(self)`; overflows to `+inf` past `hi ≈ 709.78`.
    pub fn exp(self) -> Self {
        if self.hi > 709.78 {
            return Self::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Self::ZERO;
        }
        let k = (self.hi / Self::LN2.hi).round();
        let r = (self - Self::LN2.mul_f64(k)).ldexp(-10);
        // expm1 on the reduced argument, |r| < 3.4e-4
        let mut term = r;
        let mut s = r;
        let mut n = 2.0;
        loop {
            term = (term * r).div_f64(n);
            s = s + term;
            if term.hi.abs() < 1e-36 {
                break;
            }
            n += 1.0;
        }
        // undo the 2^-10 scaling: expm1(2r) = 2 expm1(r) + expm1(r)^2
        for _ in 0..10 {
            s = s.ldexp(1) + s.sqr();
        }
        let v = s + Self::ONE;
        let k = k as i32;
        if k > 1000 {
            v.ldexp(1000).ldexp(k - 1000)
        } else if k < -1000 {
            v.ldexp(-1000).ldexp(k + 1000)
        } else {
            v.ldexp(k)
        }
    }

    /// Natural logarithm; `NaN` for non-positive input.
    pub fn ln(self) -> Self {
        if !(self.hi > 0.0) {
            return Self::from_f64(f64::NAN);
        }
        // one Newton step on exp(y) = x doubles the f64 accuracy
        let y = Self::from_f64(self.hi.ln());
        y + self * (-y).exp() - Self::ONE
    }

    /// `ln(x)` for a double argument.
    pub fn ln_f64(x: f64) -> Self {
        Self::from_f64(x).ln()
    }

    /// Remainder modulo 2π in `(-π, π]`, exact to double-double precision for
    /// arguments up to about 10^15.
    pub fn rem_two_pi(self) -> Self {
        let k = (self.hi / Self::TWO_PI.hi).round();
        let mut r = self - Self::TWO_PI.mul_f64(k);
        if r.hi > Self::PI.hi {
            r = r - Self::TWO_PI;
        } else if r.hi <= -Self::PI.hi {
            r = r + Self::TWO_PI;
        }
        r
    }

    /// `(sin, cos)` to double-double precision.
    pub fn sin_cos(self) -> (Self, Self) {
        let r = self.rem_two_pi();
        let q = (r.hi / Self::HALF_PI.hi).round();
        let r = r - Self::HALF_PI.mul_f64(q);
        let r2 = r.sqr();
        let mut sin = r;
        let mut cos = Self::ONE;
        let mut term_s = r;
        let mut term_c = Self::ONE;
        let mut k = 1.0;
        loop {
            term_s = -(term_s * r2).div_f64((2.0 * k) * (2.0 * k + 1.0));
            term_c = -(term_c * r2).div_f64((2.0 * k - 1.0) * (2.0 * k));
            sin = sin + term_s;
            cos = cos + term_c;
            if term_c.hi.abs() < 1e-34 && term_s.hi.abs() < 1e-34 {
                break;
            }
            k += 1.0;
        }
        match (q as i64).rem_euclid(4) {
            0 => (sin, cos),
            1 => (cos, -sin),
            2 => (-sin, -cos),
            _ => (-cos, sin),
        }
    }

    /// `atan2(y, x)` of double arguments, refined to double-double precision.
    pub fn atan2(y: f64, x: f64) -> Self {
        let theta = Self::from_f64(y.atan2(x));
        if x == 0.0 && y == 0.0 {
            return theta;
        }
        let (s, c) = theta.sin_cos();
        let num = c.mul_f64(y) - s.mul_f64(x);
        let den = c.mul_f64(x) + s.mul_f64(y);
        theta + num / den
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.hi, -self.lo)
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Self { hi, lo }
    }
}

impl Add<f64> for DoubleDouble {
    type Output = Self;
    fn add(self, b: f64) -> Self {
        let (s1, s2) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Self { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Sub<f64> for DoubleDouble {
    type Output = Self;
    fn sub(self, b: f64) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }
}

impl Mul<f64> for DoubleDouble {
    type Output = Self;
    fn mul(self, b: f64) -> Self {
        self.mul_f64(b)
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo } + q3
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} + {:e}", self.hi, self.lo)
    }
}

/// Complex number with double-double parts.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ComplexDD {
    pub re: DoubleDouble,
    pub im: DoubleDouble,
}

impl ComplexDD {
    pub const fn new(re: DoubleDouble, im: DoubleDouble) -> Self {
        Self { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Self::new(DoubleDouble::from_f64(re), DoubleDouble::from_f64(im))
    }

    pub fn to_c64(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn norm_sqr(self) -> DoubleDouble {
        self.re.sqr() + self.im.sqr()
    }

    pub fn scale(self, k: DoubleDouble) -> Self {
        Self::new(self.re * k, self.im * k)
    }

    /// `exp(self)` with the phase reduced in double-double.
    pub fn exp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Self::new(m * c, m * s)
    }

    pub fn recip(self) -> Self {
        let d = self.norm_sqr();
        Self::new(self.re / d, -(self.im / d))
    }
}

impl Add for ComplexDD {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        Self::new(self.re + b.re, self.im + b.im)
    }
}

impl Sub for ComplexDD {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        Self::new(self.re - b.re, self.im - b.im)
    }
}

impl Neg for ComplexDD {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Mul for ComplexDD {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        Self::new(
            self.re * b.re - self.im * b.im,
            self.re * b.im + self.im * b.re,
        )
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for ComplexDD {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        self * b.recip()
    }
}
