//! Exact rational scalars and rational interval helpers.
//!
//! `Rat` is a reduced arbitrary-precision fraction with positive denominator
//! (the reduction invariants are maintained by `num-rational`). Everything
//! decision-relevant in this crate is computed in `Rat` or integers; floating
//! point appears only in clearly labeled report fields.
//!
//! The interval helpers exist because a few inequalities from the oscillation
//! machinery involve the transcendental constants e^2 and e^3. Those are
//! enclosed in rationals tight enough (width 1e-39) that no desk-scale
//! comparison is ever decided inside the enclosure width.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Best-effort f64 approximation, for report fields only.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Round `r` to the nearest fraction with denominator 2^bits.
///
/// Used to keep Newton iterates at bounded bit size during root refinement.
pub fn dyadic_round(r: &Rat, bits: u32) -> Rat {
    let scale = BigInt::one() << bits;
    let scaled = r * Rat::from_integer(scale.clone());
    let floor = scaled.floor();
    let frac = &scaled - &floor;
    let mut num = floor.to_integer();
    if frac >= rat(1, 2) {
        num += 1;
    }
    Rat::new(num, scale)
}

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        RatInterval { lo, hi }
    }

    pub fn point(v: Rat) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    /// Multiply by a nonnegative rational.
    pub fn scale(&self, c: &Rat) -> Self {
        assert!(!c.is_negative(), "scale expects a nonnegative factor");
        RatInterval { lo: &self.lo * c, hi: &self.hi * c }
    }

    pub fn mul(&self, other: &RatInterval) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }
}

// e truncated to 39 decimal places; the true value lies strictly between
// E_DIGITS/10^39 and (E_DIGITS+1)/10^39.
const E_DIGITS: &str = "2718281828459045235360287471352662497757";
const E_SCALE_POW: u32 = 39;

fn e_enclosure() -> RatInterval {
    let num: BigInt = E_DIGITS.parse().unwrap();
    let den = BigInt::from(10u32).pow(E_SCALE_POW);
    RatInterval::new(
        Rat::new(num.clone(), den.clone()),
        Rat::new(num + 1, den),
    )
}

/// Rational enclosure of e^2.
pub fn e_squared() -> RatInterval {
    let e = e_enclosure();
    e.mul(&e)
}

/// Rational enclosure of e^3.
pub fn e_cubed() -> RatInterval {
    let e = e_enclosure();
    e.mul(&e).mul(&e)
}

/// Rational enclosure `[lo, hi]` of sqrt(s) with `hi - lo <= 2^-prec_bits * max(1, s)`.
///
/// Plain bisection seeded from the f64 square root; exact comparisons only.
pub fn sqrt_enclosure(s: &Rat, prec_bits: u32) -> RatInterval {
    assert!(!s.is_negative(), "sqrt of negative rational");
    if s.is_zero() {
        return RatInterval::point(Rat::zero());
    }
    let guess = rat_to_f64(s).sqrt();
    let (mut lo, mut hi);
    if guess.is_finite() && guess > 0.0 {
        let g = Rat::from_float(guess).unwrap_or_else(|| rat_int(1));
        lo = &g * rat(1, 2);
        hi = &g * rat_int(2);
    } else {
        lo = Rat::zero();
        hi = s.clone() + Rat::one();
    }
    while &lo * &lo > *s {
        lo = &lo * rat(1, 2);
    }
    while &hi * &hi < *s {
        hi = &hi * rat_int(2);
    }
    let tol = {
        let unit = if *s > Rat::one() { s.clone() } else { Rat::one() };
        unit / Rat::from_integer(BigInt::one() << prec_bits)
    };
    while &hi - &lo > tol {
        let mid = (&lo + &hi) * rat(1, 2);
        if &mid * &mid <= *s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RatInterval::new(lo, hi)
}

/// Integer square root floor for nonnegative `BigInt`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(n.sign() != Sign::Minus);
    n.sqrt()
}

/// gcd of two big integers.
pub fn bigint_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_squared_brackets_known_value() {
        let e2 = e_squared();
        // e^2 = 7.3890560989306495...
        assert!(e2.lo < rat(73890561, 10000000));
        assert!(e2.hi > rat(73890560, 10000000));
        assert!(&e2.hi - &e2.lo < rat(1, 1_000_000_000));
    }

    #[test]
    fn e_cubed_brackets_known_value() {
        let e3 = e_cubed();
        // e^3 = 20.085536923187668...
        assert!(e3.lo < rat(200855370, 10000000));
        assert!(e3.hi > rat(200855369, 10000001));
    }

    #[test]
    fn sqrt_enclosure_squares_bracket() {
        let s = rat(2, 1);
        let enc = sqrt_enclosure(&s, 40);
        assert!(&enc.lo * &enc.lo <= s);
        assert!(&enc.hi * &enc.hi >= s);
        assert!(&enc.hi - &enc.lo < rat(1, 1 << 30));
    }

    #[test]
    fn sqrt_enclosure_exact_square() {
        let enc = sqrt_enclosure(&rat(9, 4), 30);
        assert!(enc.lo <= rat(3, 2) && rat(3, 2) <= enc.hi);
    }

    #[test]
    fn dyadic_round_halves() {
        let r = rat(1, 3);
        let rounded = dyadic_round(&r, 8);
        assert_eq!(rounded, Rat::new(BigInt::from(85), BigInt::from(256)));
    }
}
