use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

/// Exact Gaussian integer `re + i·im`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `|a|²`, exact.
    pub fn norm_sqr(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplication by the integer `k`.
    pub fn scale(&self, k: i64) -> Self {
        Self {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        Self {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    /// Nearest double-precision complex value.
    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, b: Self) -> GaussianInt {
        GaussianInt {
            re: &self.re + &b.re,
            im: &self.im + &b.im,
        }
    }
}

impl AddAssign<&GaussianInt> for GaussianInt {
    fn add_assign(&mut self, b: &GaussianInt) {
        self.re += &b.re;
        self.im += &b.im;
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, b: Self) -> GaussianInt {
        GaussianInt {
            re: &self.re * &b.re - &self.im * &b.im,
            im: &self.re * &b.im + &self.im * &b.re,
        }
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.sign() == num_bigint::Sign::Minus {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = GaussianInt::new(3, -2);
        let b = GaussianInt::new(-1, 5);
        assert_eq!(&a * &b, GaussianInt::new(7, 17));
        assert_eq!(&a + &b, GaussianInt::new(2, 3));
        assert_eq!(a.mul_i(), GaussianInt::new(2, 3));
        assert_eq!(a.norm_sqr(), BigInt::from(13));
        assert_eq!(a.scale(-4), GaussianInt::new(-12, 8));
        assert_eq!(a.to_string(), "3-2i");
        assert_eq!(b.to_c64(), Complex64::new(-1.0, 5.0));
    }
}
