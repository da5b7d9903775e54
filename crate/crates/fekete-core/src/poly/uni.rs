//! Dense univariate polynomials over the Gaussian rationals.
//!
//! Coefficients are stored lowest degree first. The representation is
//! canonical: the vector is empty for the zero polynomial and the last
//! entry is nonzero otherwise.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gauss::Gaussian;
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Gaussian>,
}

impl UniPoly {
    // ---- Constructors ----

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Gaussian::one())
    }

    /// The variable X.
    pub fn x() -> Self {
        UniPoly { coeffs: vec![Gaussian::zero(), Gaussian::one()] }
    }

    pub fn constant(c: Gaussian) -> Self {
        if c.is_zero() {
            UniPoly::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    pub fn from_coeffs(coeffs: Vec<Gaussian>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Gaussian::from_int(c)).collect())
    }

    /// c * X^k.
    pub fn monomial(c: Gaussian, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Gaussian::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    // ---- Accessors ----

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with the convention deg 0 = 0, for bound bookkeeping.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> Gaussian {
        self.coeffs.get(k).cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn coeffs(&self) -> &[Gaussian] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Gaussian> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    // ---- Ring operations ----

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &other.coeff(k));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) - &other.coeff(k));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Gaussian::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Gaussian) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, mut e: usize) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * &Gaussian::from_int(k as i64));
        }
        UniPoly::from_coeffs(out)
    }

    // ---- Evaluation ----

    pub fn eval(&self, x: &Gaussian) -> Gaussian {
        let mut acc = Gaussian::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_int(&self, n: &BigInt) -> Gaussian {
        self.eval(&Gaussian::from_rat(Rat::from_integer(n.clone())))
    }

    /// |Q(n)|^2 at an integer point, exact.
    pub fn norm_sqr_at_int(&self, n: &BigInt) -> Rat {
        self.eval_int(n).norm_sqr()
    }

    // ---- Structure ----

    /// Split Q = A + i*B with A, B real-coefficient polynomials.
    pub fn real_imag_split(&self) -> (UniPoly, UniPoly) {
        let re = UniPoly::from_coeffs(
            self.coeffs.iter().map(|c| Gaussian::from_rat(c.re.clone())).collect(),
        );
        let im = UniPoly::from_coeffs(
            self.coeffs.iter().map(|c| Gaussian::from_rat(c.im.clone())).collect(),
        );
        (re, im)
    }

    /// Divide by the leading coefficient; panics on zero.
    pub fn monic(&self) -> UniPoly {
        let lead = self.leading().expect("monic of zero polynomial");
        let inv = lead.inverse().unwrap();
        self.scale(&inv)
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn divrem(&self, div: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = div.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = div.leading().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![Gaussian::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dcoef) in div.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dcoef);
            }
            quot[k] = c;
        }
        Ok((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    /// Monic gcd via a primitive remainder sequence: each remainder is
    /// rescaled to primitive integer form, which keeps coefficient growth
    /// polynomial instead of the exponential blowup of plain monic Euclid.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.primitive_integer_form();
        let mut b = other.primitive_integer_form();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("divrem by nonzero");
            a = b;
            b = r.primitive_integer_form();
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Coefficients of self(X + c), exact Taylor shift (Horner scheme).
    pub fn taylor_shift(&self, c: &Gaussian) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        // Horner: p(X + c) built by repeated multiply-by-(X+c)-and-add.
        let mut out: Vec<Gaussian> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            // out = out * (X + c) + a
            let mut next = vec![Gaussian::zero(); out.len() + 1];
            for (k, o) in out.iter().enumerate() {
                next[k + 1] = &next[k + 1] + o;
                next[k] = &next[k] + &(o * c);
            }
            next[0] = &next[0] + a;
            out = next;
        }
        out.truncate(self.coeffs.len());
        UniPoly::from_coeffs(out)
    }

    /// Clear denominators and strip integer content. For real polynomials the
    /// result has coprime integer coefficients with positive leading entry.
    pub fn primitive_integer_form(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.re.denom().clone());
            lcm = num_integer::lcm(lcm, c.im.denom().clone());
        }
        let scaled: Vec<Gaussian> = self
            .coeffs
            .iter()
            .map(|c| c * &Gaussian::from_rat(Rat::from_integer(lcm.clone())))
            .collect();
        let mut content = BigInt::zero();
        for c in &scaled {
            content = num_integer::Integer::gcd(&content, c.re.numer());
            content = num_integer::Integer::gcd(&content, c.im.numer());
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        let mut out: Vec<Gaussian> = scaled
            .iter()
            .map(|c| {
                Gaussian::new(
                    Rat::new(c.re.numer() / &content, BigInt::one()),
                    Rat::new(c.im.numer() / &content, BigInt::one()),
                )
            })
            .collect();
        // Sign normalization: make the leading nonzero part positive.
        let flip = out
            .last()
            .map(|c| {
                if !c.re.is_zero() {
                    c.re.is_negative()
                } else {
                    c.im.is_negative()
                }
            })
            .unwrap_or(false);
        if flip {
            for c in out.iter_mut() {
                *c = -&*c;
            }
        }
        UniPoly::from_coeffs(out)
    }

    /// Largest magnitude among numerators/denominators, used for crude bounds.
    pub fn max_abs_f64(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| {
                let (re, im) = c.to_f64_pair();
                re.abs().max(im.abs())
            })
            .fold(0.0, f64::max)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({})", c)?;
            } else if k == 1 {
                write!(f, "({})*X", c)?;
            } else {
                write!(f, "({})*X^{}", c, k)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn mul_difference_of_squares() {
        let a = UniPoly::from_ints(&[1, 1]); // 1 + X
        let b = UniPoly::from_ints(&[1, -1]); // 1 - X
        assert_eq!(a.mul(&b), UniPoly::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let c = UniPoly::from_ints(&[7]);
        assert!(c.derivative().is_zero());
    }

    #[test]
    fn eval_root() {
        let p = UniPoly::from_ints(&[1, -1]); // 1 - X
        assert!(p.eval(&Gaussian::one()).is_zero());
    }

    #[test]
    fn divrem_reconstructs() {
        let a = UniPoly::from_ints(&[3, 1, 4, 1, 5]);
        let b = UniPoly::from_ints(&[2, 0, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree_or_zero() < b.degree().unwrap());
    }

    #[test]
    fn gcd_of_multiples() {
        let g = UniPoly::from_ints(&[-2, 1]); // X - 2
        let a = g.mul(&UniPoly::from_ints(&[1, 1]));
        let b = g.mul(&UniPoly::from_ints(&[5, 0, 3]));
        let got = a.gcd(&b);
        assert_eq!(got, g.monic());
    }

    #[test]
    fn taylor_shift_matches_eval() {
        let p = UniPoly::from_ints(&[2, -3, 0, 1]);
        let c = Gaussian::new(rat(5, 3), rat(-1, 2));
        let shifted = p.taylor_shift(&c);
        // shifted(t) = p(t + c); compare at t = 2.
        let t = Gaussian::from_int(2);
        assert_eq!(shifted.eval(&t), p.eval(&(&t + &c)));
    }

    #[test]
    fn split_recombines() {
        let p = UniPoly::from_coeffs(vec![
            Gaussian::new(rat(1, 1), rat(1, 1)),
            Gaussian::new(rat(2, 1), rat(0, 1)),
        ]);
        let (a, b) = p.real_imag_split();
        assert!(a.is_real() && b.is_real());
        let recombined = a.add(&b.scale(&Gaussian::i()));
        assert_eq!(recombined, p);
    }
}
