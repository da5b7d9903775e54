//! Gaussian rationals: exact elements of Q(i).
//!
//! The coefficient field for every polynomial in this crate. Complex numbers
//! never appear in floating form on any decision path; `|z|^2` is the exact
//! rational norm and is what comparisons are phrased in.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat_to_f64, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct Gaussian {
    pub re: Rat,
    pub im: Rat,
}

impl Gaussian {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gaussian { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        Gaussian { re, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Gaussian::from_rat(crate::rat::rat_int(n))
    }

    pub fn zero() -> Self {
        Gaussian::from_int(0)
    }

    pub fn one() -> Self {
        Gaussian::from_int(1)
    }

    pub fn i() -> Self {
        Gaussian { re: Rat::zero(), im: Rat::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn neg(&self) -> Self {
        Gaussian { re: -self.re.clone(), im: -self.im.clone() }
    }

    /// |z|^2 = re^2 + im^2, exact.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> Result<Gaussian> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Gaussian { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

impl Add for &Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &Gaussian {
    type Output = Gaussian;
    fn div(self, rhs: &Gaussian) -> Gaussian {
        let inv = rhs.inverse().expect("division by zero Gaussian rational");
        self * &inv
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}*i", self.re, self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn conjugation_is_involution() {
        let z = Gaussian::new(rat(3, 2), rat(-5, 7));
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn norm_of_product_is_product_of_norms() {
        let z = Gaussian::new(rat(1, 2), rat(2, 3));
        let w = Gaussian::new(rat(-3, 1), rat(1, 5));
        let zw = &z * &w;
        assert_eq!(zw.norm_sqr(), z.norm_sqr() * w.norm_sqr());
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let z = Gaussian::new(rat(2, 3), rat(-1, 4));
        let inv = z.inverse().unwrap();
        assert_eq!(&z * &inv, Gaussian::one());
        assert!(Gaussian::zero().inverse().is_err());
    }
}
