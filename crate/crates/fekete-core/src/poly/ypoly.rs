//! Polynomials in Y over the rational-function field Q(i)(X), and the
//! extended Euclidean algorithm used to invert elements modulo h(X, Y).

use crate::error::{Error, Result};
use crate::poly::bi::BiPoly;
use crate::poly::ratfunc::RatFunc;
use crate::poly::uni::UniPoly;

#[derive(Clone, PartialEq, Debug)]
pub struct YPoly {
    coeffs: Vec<RatFunc>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        YPoly { coeffs: vec![RatFunc::one()] }
    }

    pub fn y() -> Self {
        YPoly { coeffs: vec![RatFunc::zero(), RatFunc::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<RatFunc>) -> Self {
        let mut p = YPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_bipoly(h: &BiPoly) -> Self {
        YPoly::from_coeffs(h.rows().iter().map(|r| RatFunc::from_poly(r.clone())).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&RatFunc> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        YPoly::from_coeffs((0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        YPoly::from_coeffs((0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect())
    }

    pub fn neg(&self) -> YPoly {
        YPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &YPoly) -> YPoly {
        if self.is_zero() || other.is_zero() {
            return YPoly::zero();
        }
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        YPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &RatFunc) -> YPoly {
        YPoly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn monic(&self) -> YPoly {
        let inv = self.leading().expect("monic of zero").inverse().unwrap();
        self.scale(&inv)
    }

    /// Euclidean division in Y.
    pub fn divrem(&self, div: &YPoly) -> Result<(YPoly, YPoly)> {
        let dd = div.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = div.leading().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((YPoly::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![RatFunc::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + dd].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in div.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(dc));
            }
            quot[k] = c;
        }
        Ok((YPoly::from_coeffs(quot), YPoly::from_coeffs(rem)))
    }

    pub fn rem(&self, div: &YPoly) -> Result<YPoly> {
        Ok(self.divrem(div)?.1)
    }

    /// Clear all rational-function denominators: returns (numerator BiPoly, common
    /// denominator in X) with self = bipoly / den.
    pub fn clear_denominators(&self) -> (BiPoly, UniPoly) {
        let mut den = UniPoly::one();
        for c in &self.coeffs {
            // den <- lcm(den, c.den) via gcd
            let g = den.gcd(c.den());
            den = den.mul(&c.den().divrem(&g).unwrap().0);
        }
        let rows: Vec<UniPoly> = self
            .coeffs
            .iter()
            .map(|c| {
                let extra = den.divrem(c.den()).unwrap().0;
                c.num().mul(&extra)
            })
            .collect();
        (BiPoly::from_rows(rows), den)
    }
}

/// Extended gcd in Q(i)(X)[Y]: returns (g, s, t) with s*a + t*b = g, g monic.
pub fn ext_gcd(a: &YPoly, b: &YPoly) -> Result<(YPoly, YPoly, YPoly)> {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = YPoly::one();
    let mut s1 = YPoly::zero();
    let mut t0 = YPoly::zero();
    let mut t1 = YPoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_zero() {
        return Ok((r0, s0, t0));
    }
    let lead_inv = r0.leading().unwrap().inverse()?;
    Ok((r0.scale(&lead_inv), s0.scale(&lead_inv), t0.scale(&lead_inv)))
}

/// Invert u modulo h in Q(i)(X)[Y], returning the inverse with cleared
/// denominators: u * (num/den) == 1 (mod h).
///
/// A gcd of positive Y-degree means h is reducible; the discovered factor is
/// reported in the error.
pub fn ext_gcd_mod_h(u: &BiPoly, h: &BiPoly) -> Result<(BiPoly, UniPoly)> {
    let hy = YPoly::from_bipoly(h);
    if hy.degree().unwrap_or(0) < 1 {
        return Err(Error::Precondition("h must have positive Y-degree".into()));
    }
    let uy = YPoly::from_bipoly(u).rem(&hy)?;
    if uy.is_zero() {
        return Err(Error::Precondition("u is zero modulo h, not invertible".into()));
    }
    let (g, s, _) = ext_gcd(&uy, &hy)?;
    match g.degree() {
        Some(0) => {
            // g is the monic constant 1; s is the inverse of u mod h.
            let (num, den) = s.rem(&hy)?.clear_denominators();
            Ok((num, den))
        }
        _ => {
            let (factor, _) = g.clear_denominators();
            Err(Error::ReducibleModulus { factor: format!("{}", factor) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invert_y_mod_quadratic() {
        // u = Y, h = Y^2 - (1 - 4X): inverse is Y/(1-4X).
        let u = BiPoly::from_int_grid(&[vec![0], vec![1]]);
        let h = BiPoly::from_int_grid(&[vec![-1, 4], vec![0], vec![1]]);
        let (num, den) = ext_gcd_mod_h(&u, &h).unwrap();
        // u * num == den (mod h), i.e. Y * Y = 1 - 4X times the unit den/(1-4X).
        let prod = u.mul(&num);
        // reduce prod - den modulo h as bivariate: prod - den should be divisible by h.
        let diff = prod.sub(&BiPoly::from_rows(vec![den.clone()]));
        let hy = YPoly::from_bipoly(&h);
        let rem = YPoly::from_bipoly(&diff).rem(&hy).unwrap();
        assert!(rem.is_zero());
        // The expected representation: num = Y (up to the scalar den/(1-4X)).
        assert_eq!(num.deg_y(), Some(1));
    }

    #[test]
    fn invert_one_is_one() {
        let u = BiPoly::from_int_grid(&[vec![1]]);
        let h = BiPoly::from_int_grid(&[vec![-1, 4], vec![0], vec![1]]);
        let (num, den) = ext_gcd_mod_h(&u, &h).unwrap();
        assert_eq!(num, BiPoly::from_rows(vec![den]));
    }

    #[test]
    fn u_equal_h_not_invertible() {
        let h = BiPoly::from_int_grid(&[vec![-1, 4], vec![0], vec![1]]);
        assert!(ext_gcd_mod_h(&h, &h).is_err());
    }

    #[test]
    fn reducible_h_detected() {
        // h = (Y - 1)(Y + 1) = Y^2 - 1, u = Y - 1 shares the factor.
        let h = BiPoly::from_int_grid(&[vec![-1], vec![0], vec![1]]);
        let u = BiPoly::from_int_grid(&[vec![-1], vec![1]]);
        let err = ext_gcd_mod_h(&u, &h).unwrap_err();
        match err {
            Error::ReducibleModulus { factor } => assert!(factor.contains("Y")),
            other => panic!("expected reducibility error, got {other:?}"),
        }
    }
}
