//! Rational functions in X over Q(i): the coefficient field for working in
//! the quotient ring Q(i)(X)[Y]/(h).
//!
//! Always kept reduced with a monic denominator.

use std::fmt;

use crate::error::Result;
use crate::gauss::Gaussian;
use crate::poly::uni::UniPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: UniPoly::one(), den: UniPoly::one() }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc { num: p, den: UniPoly::one() }
    }

    pub fn from_const(c: Gaussian) -> Self {
        RatFunc::from_poly(UniPoly::constant(c))
    }

    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(crate::error::Error::DivisionByZero);
        }
        let mut r = RatFunc { num, den };
        r.reduce();
        Ok(r)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = UniPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree_or_zero() > 0 {
            self.num = self.num.divrem(&g).unwrap().0;
            self.den = self.den.divrem(&g).unwrap().0;
        }
        // Monic denominator.
        let lead = self.den.leading().unwrap().clone();
        if lead != Gaussian::one() {
            let inv = lead.inverse().unwrap();
            self.den = self.den.scale(&inv);
            self.num = self.num.scale(&inv);
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFunc::new(num, den).unwrap()
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(crate::error::Error::DivisionByZero);
        }
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inverse(&self) -> Result<RatFunc> {
        RatFunc::one().div(self)
    }

    /// d/dX by the quotient rule.
    pub fn derivative(&self) -> RatFunc {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        let d = self.den.mul(&self.den);
        RatFunc::new(n, d).unwrap()
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> UniPoly {
        UniPoly::x()
    }

    #[test]
    fn reduction_cancels_common_factor() {
        // (X^2 - 1)/(X - 1) = X + 1
        let num = UniPoly::from_ints(&[-1, 0, 1]);
        let den = UniPoly::from_ints(&[-1, 1]);
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r.num(), &UniPoly::from_ints(&[1, 1]));
        assert_eq!(r.den(), &UniPoly::one());
    }

    #[test]
    fn derivative_of_inverse_x() {
        // d/dX (1/X) = -1/X^2
        let r = RatFunc::new(UniPoly::one(), x()).unwrap();
        let d = r.derivative();
        assert_eq!(d.num(), &UniPoly::from_ints(&[-1]));
        assert_eq!(d.den(), &UniPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn field_inverse() {
        let r = RatFunc::new(UniPoly::from_ints(&[1, 2]), UniPoly::from_ints(&[3, 0, 1])).unwrap();
        let prod = r.mul(&r.inverse().unwrap());
        assert_eq!(prod, RatFunc::one());
    }
}
