//! Truncated power series over Q(i) with a cleared common denominator.
//!
//! A `Series` is known modulo X^prec. Coefficients are stored as integer
//! numerator vectors (real and imaginary parts) over one positive
//! denominator, so convolution runs on `BigInt` without per-term gcd
//! reduction. Content is stripped once per operation instead.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gauss::Gaussian;
use crate::poly::uni::UniPoly;
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    re: Vec<BigInt>,
    im: Vec<BigInt>,
    den: BigInt,
    prec: usize,
}

fn conv_trunc(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    if out.is_empty() {
        return out;
    }
    for (i, ai) in a.iter().enumerate() {
        if i >= n {
            break;
        }
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= n {
                break;
            }
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

impl Series {
    pub fn zero(prec: usize) -> Self {
        Series {
            re: vec![BigInt::zero(); prec],
            im: vec![BigInt::zero(); prec],
            den: BigInt::one(),
            prec,
        }
    }

    pub fn one(prec: usize) -> Self {
        let mut s = Series::zero(prec);
        if prec > 0 {
            s.re[0] = BigInt::one();
        }
        s
    }

    pub fn constant(c: &Gaussian, prec: usize) -> Self {
        Series::from_gaussians(std::slice::from_ref(c), prec)
    }

    pub fn from_gaussians(coeffs: &[Gaussian], prec: usize) -> Self {
        let mut den = BigInt::one();
        for c in coeffs.iter().take(prec) {
            den = den.lcm(c.re.denom());
            den = den.lcm(c.im.denom());
        }
        let mut re = Vec::with_capacity(prec);
        let mut im = Vec::with_capacity(prec);
        for k in 0..prec {
            if k < coeffs.len() {
                let c = &coeffs[k];
                re.push(c.re.numer() * (&den / c.re.denom()));
                im.push(c.im.numer() * (&den / c.im.denom()));
            } else {
                re.push(BigInt::zero());
                im.push(BigInt::zero());
            }
        }
        Series { re, im, den, prec }
    }

    pub fn from_unipoly(p: &UniPoly, prec: usize) -> Self {
        Series::from_gaussians(p.coeffs(), prec)
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn coeff(&self, k: usize) -> Gaussian {
        if k >= self.prec {
            return Gaussian::zero();
        }
        Gaussian::new(
            Rat::new(self.re[k].clone(), self.den.clone()),
            Rat::new(self.im[k].clone(), self.den.clone()),
        )
    }

    pub fn to_gaussians(&self) -> Vec<Gaussian> {
        (0..self.prec).map(|k| self.coeff(k)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.re.iter().all(|c| c.is_zero()) && self.im.iter().all(|c| c.is_zero())
    }

    fn im_is_zero(&self) -> bool {
        self.im.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, prec: usize) -> Series {
        let p = prec.min(self.prec);
        Series {
            re: self.re[..p].to_vec(),
            im: self.im[..p].to_vec(),
            den: self.den.clone(),
            prec: p,
        }
    }

    /// Extend with unknown-but-zero padding; only valid when the caller
    /// knows the series is exact (e.g. came from a polynomial).
    pub fn pad_to(&self, prec: usize) -> Series {
        if prec <= self.prec {
            return self.truncate(prec);
        }
        let mut re = self.re.clone();
        let mut im = self.im.clone();
        re.resize(prec, BigInt::zero());
        im.resize(prec, BigInt::zero());
        Series { re, im, den: self.den.clone(), prec }
    }

    /// Strip the gcd of the denominator and every numerator.
    pub fn reduce_content(&mut self) {
        let mut g = self.den.clone();
        for c in self.re.iter().chain(self.im.iter()) {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if g.is_one() || g.is_zero() {
            return;
        }
        self.den = &self.den / &g;
        for c in self.re.iter_mut() {
            *c = &*c / &g;
        }
        for c in self.im.iter_mut() {
            *c = &*c / &g;
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let prec = self.prec.min(other.prec);
        let den = self.den.lcm(&other.den);
        let ma = &den / &self.den;
        let mb = &den / &other.den;
        let mut re = Vec::with_capacity(prec);
        let mut im = Vec::with_capacity(prec);
        for k in 0..prec {
            re.push(&self.re[k] * &ma + &other.re[k] * &mb);
            im.push(&self.im[k] * &ma + &other.im[k] * &mb);
        }
        let mut s = Series { re, im, den, prec };
        s.reduce_content();
        s
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            re: self.re.iter().map(|c| -c).collect(),
            im: self.im.iter().map(|c| -c).collect(),
            den: self.den.clone(),
            prec: self.prec,
        }
    }

    pub fn scale(&self, c: &Gaussian) -> Series {
        let num = Series::constant(c, 1);
        // constant multiply without convolution machinery
        let mut re = Vec::with_capacity(self.prec);
        let mut im = Vec::with_capacity(self.prec);
        let (cr, ci) = (&num.re[0], &num.im[0]);
        for k in 0..self.prec {
            re.push(&self.re[k] * cr - &self.im[k] * ci);
            im.push(&self.re[k] * ci + &self.im[k] * cr);
        }
        let mut s = Series { re, im, den: &self.den * &num.den, prec: self.prec };
        s.reduce_content();
        s
    }

    pub fn mul_trunc(&self, other: &Series, n: usize) -> Series {
        let prec = n.min(self.prec).min(other.prec);
        let (re, im);
        if self.im_is_zero() && other.im_is_zero() {
            re = conv_trunc(&self.re, &other.re, prec);
            im = vec![BigInt::zero(); prec];
        } else {
            let rr = conv_trunc(&self.re, &other.re, prec);
            let ii = conv_trunc(&self.im, &other.im, prec);
            let ri = conv_trunc(&self.re, &other.im, prec);
            let ir = conv_trunc(&self.im, &other.re, prec);
            re = rr.iter().zip(ii.iter()).map(|(a, b)| a - b).collect();
            im = ri.iter().zip(ir.iter()).map(|(a, b)| a + b).collect();
        }
        let mut s = Series { re, im, den: &self.den * &other.den, prec };
        s.reduce_content();
        s
    }

    /// Multiplicative inverse mod X^prec by Newton doubling.
    pub fn inverse(&self) -> Result<Series> {
        if self.prec == 0 {
            return Ok(self.clone());
        }
        let a0 = self.coeff(0);
        if a0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut inv = Series::constant(&a0.inverse()?, 1);
        let mut k = 1usize;
        while k < self.prec {
            k = (2 * k).min(self.prec);
            // inv <- inv * (2 - f * inv) mod X^k
            let f = self.truncate(k);
            let t = f.mul_trunc(&inv.pad_to(k), k);
            let two = Series::constant(&Gaussian::from_int(2), k);
            let corr = two.sub(&t);
            inv = inv.pad_to(k).mul_trunc(&corr, k);
        }
        Ok(inv)
    }

    pub fn derivative(&self) -> Series {
        if self.prec == 0 {
            return self.clone();
        }
        let prec = self.prec - 1;
        let mut re = Vec::with_capacity(prec);
        let mut im = Vec::with_capacity(prec);
        for k in 1..self.prec {
            let kk = BigInt::from(k);
            re.push(&self.re[k] * &kk);
            im.push(&self.im[k] * &kk);
        }
        let mut s = Series { re, im, den: self.den.clone(), prec };
        s.reduce_content();
        s
    }

    /// Leading exponent with nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        (0..self.prec).find(|&k| !self.re[k].is_zero() || !self.im[k].is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn geom(prec: usize) -> Series {
        // 1/(1-X) = 1 + X + X^2 + ...
        let ones: Vec<Gaussian> = (0..prec).map(|_| Gaussian::one()).collect();
        Series::from_gaussians(&ones, prec)
    }

    #[test]
    fn inverse_of_one_minus_x() {
        let p = UniPoly::from_ints(&[1, -1]);
        let s = Series::from_unipoly(&p, 8);
        let inv = s.inverse().unwrap();
        assert_eq!(inv, geom(8));
    }

    #[test]
    fn mul_and_inverse_cancel() {
        let coeffs: Vec<Gaussian> = vec![
            Gaussian::new(rat(2, 3), rat(1, 5)),
            Gaussian::new(rat(-1, 2), rat(0, 1)),
            Gaussian::new(rat(4, 7), rat(-2, 3)),
        ];
        let s = Series::from_gaussians(&coeffs, 9);
        let inv = s.inverse().unwrap();
        let prod = s.mul_trunc(&inv, 9);
        assert_eq!(prod, Series::one(9));
    }

    #[test]
    fn derivative_shifts_and_scales() {
        let p = UniPoly::from_ints(&[5, 3, 0, 2]); // 5 + 3X + 2X^3
        let s = Series::from_unipoly(&p, 4);
        let d = s.derivative();
        assert_eq!(d.coeff(0), Gaussian::from_int(3));
        assert_eq!(d.coeff(1), Gaussian::from_int(0));
        assert_eq!(d.coeff(2), Gaussian::from_int(6));
    }

    #[test]
    fn content_reduction_keeps_value() {
        let a = Series::from_gaussians(&[Gaussian::new(rat(1, 6), rat(0, 1))], 1);
        let b = Series::from_gaussians(&[Gaussian::new(rat(6, 1), rat(0, 1))], 1);
        let prod = a.mul_trunc(&b, 1);
        assert_eq!(prod.coeff(0), Gaussian::one());
        assert_eq!(prod.den, BigInt::one());
    }
}
