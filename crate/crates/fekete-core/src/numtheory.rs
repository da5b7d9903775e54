//! Legendre symbols, Fekete coefficient streams, character sums and
//! smallest nonresidues.
//!
//! The symbol is computed by Jacobi-style reciprocity reduction; the Euler
//! criterion lives in the test suite as an independent oracle. All sums are
//! exact integer arithmetic; the only floating value anywhere is the
//! `normalized` report field, which is labeled approximate.
//!
//! Coefficients are extended p-periodically beyond n = p-1 (so index p maps
//! to symbol 0). The polynomial itself stops at degree p-1; the periodic
//! extension is what the shifted pair sums read.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// An odd prime modulus, 3 <= p < 2^31, checked by deterministic trial
/// division at construction.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidModulus(p, "must be an odd prime >= 3"));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidModulus(p, "must be < 2^31"));
        }
        if p % 2 == 0 {
            return Err(Error::InvalidModulus(p, "must be odd"));
        }
        let mut d = 3u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(Error::InvalidModulus(p, "must be prime"));
            }
            d += 2;
        }
        Ok(PrimeModulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Jacobi symbol (a|n) for odd n >= 1, by the standard reciprocity loop.
fn jacobi(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1 && n >= 1);
    a %= n;
    let mut t: i8 = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Legendre symbol (n|p) in {-1, 0, +1}.
pub fn legendre_symbol(n: i64, p: PrimeModulus) -> i8 {
    let p_i = p.get() as i64;
    let r = n.rem_euclid(p_i) as u64;
    jacobi(r, p.get())
}

/// The Legendre sequence f(n) = (n|p), extended p-periodically over Z.
#[derive(Clone, Debug)]
pub struct FeketeSeries {
    p: PrimeModulus,
    table: Vec<i8>,
}

impl FeketeSeries {
    pub fn new(p: PrimeModulus) -> Self {
        let table = (0..p.get() as i64).map(|n| legendre_symbol(n, p)).collect();
        FeketeSeries { p, table }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    /// f(n) for any integer n (periodic extension).
    pub fn coeff(&self, n: i64) -> i8 {
        let idx = n.rem_euclid(self.p.get() as i64) as usize;
        self.table[idx]
    }

    /// The first `count` coefficients, n = 0 .. count-1.
    pub fn prefix(&self, count: usize) -> Vec<i8> {
        (0..count as i64).map(|n| self.coeff(n)).collect()
    }

    pub fn table(&self) -> &[i8] {
        &self.table
    }
}

/// First `count` values of (n|p), periodically extended when count > p.
pub fn fekete_coefficients(p: PrimeModulus, count: usize) -> Vec<i8> {
    FeketeSeries::new(p).prefix(count)
}

/// Least n >= 1 with (n|p) = -1. For all N <= this value, the geometric
/// series X/(1-X) already matches F_p mod X^N, so d_p(N) = 1.
pub fn smallest_nonresidue(p: PrimeModulus) -> u64 {
    let mut n = 1u64;
    loop {
        if legendre_symbol(n as i64, p) == -1 {
            return n;
        }
        n += 1;
        debug_assert!(n < p.get(), "every odd prime has a nonresidue below p");
    }
}

/// Report for a maximizing incomplete character sum scan.
#[derive(Clone, Debug, Serialize)]
pub struct CharSumReport {
    pub p: u64,
    pub shift_pair: Option<(u64, u64)>,
    pub start: u64,
    pub length: u64,
    pub value: i64,
    /// |value| / (sqrt(p) * ln p); approximate, for reporting only.
    pub normalized: f64,
}

/// Sum_{k=1..length} f(start+k+j) * f(start+k+h), exact.
pub fn incomplete_pair_sum(
    p: PrimeModulus,
    j: u64,
    h: u64,
    start: i64,
    length: u64,
) -> Result<i64> {
    if j >= h {
        return Err(Error::InvalidArgument(format!("need j < h, got j = {j}, h = {h}")));
    }
    if h >= p.get() {
        return Err(Error::InvalidArgument(format!("need h < p, got h = {h}, p = {}", p.get())));
    }
    if length == 0 {
        return Err(Error::InvalidArgument("length must be >= 1".into()));
    }
    let f = FeketeSeries::new(p);
    let mut acc: i64 = 0;
    for k in 1..=length as i64 {
        acc += f.coeff(start + k + j as i64) as i64 * f.coeff(start + k + h as i64) as i64;
    }
    Ok(acc)
}

/// Exhaustive scan over all start positions in [0, p) and lengths in
/// [1, max_length], maximizing |value|. Ties break toward the smallest
/// (start, length) pair. With `shifts = Some((j, h))` the summand is the
/// pair product f(n+j)f(n+h); with None it is the plain value f(n).
pub fn max_incomplete_sum(
    p: PrimeModulus,
    max_length: u64,
    shifts: Option<(u64, u64)>,
) -> Result<CharSumReport> {
    let pp = p.get();
    if max_length == 0 || max_length > pp {
        return Err(Error::InvalidArgument(format!(
            "max_length must be in [1, p]; got {max_length} with p = {pp}"
        )));
    }
    if let Some((j, h)) = shifts {
        if j >= h {
            return Err(Error::InvalidArgument(format!("need j < h, got j = {j}, h = {h}")));
        }
        if h >= pp {
            return Err(Error::InvalidArgument(format!("need h < p, got h = {h}, p = {pp}")));
        }
    }
    let f = FeketeSeries::new(p);
    // g over one period, then prefix sums over a doubled window so that
    // value(start, K) = pre[start + K] - pre[start].
    let g: Vec<i64> = match shifts {
        Some((j, h)) => (0..pp as i64)
            .map(|n| f.coeff(n + j as i64) as i64 * f.coeff(n + h as i64) as i64)
            .collect(),
        None => (0..pp as i64).map(|n| f.coeff(n) as i64).collect(),
    };
    let mut pre = vec![0i64; 2 * pp as usize + 1];
    for i in 0..2 * pp as usize {
        pre[i + 1] = pre[i] + g[i % pp as usize];
    }

    // Partition starts across workers; merge by |value| with lexicographic
    // tie-break on (start, length).
    let best = (0..pp)
        .into_par_iter()
        .map(|start| {
            let mut best: (i64, u64, u64) = (0, u64::MAX, u64::MAX); // (value, start, length)
            // value(start, len) = sum_{k=1..len} g(start+k) = pre[start+len+1] - pre[start+1]
            let base = pre[start as usize + 1];
            for len in 1..=max_length {
                let v = pre[(start + len + 1) as usize] - base;
                let better = v.abs() > best.0.abs()
                    || (v.abs() == best.0.abs() && (start, len) < (best.1, best.2));
                if better {
                    best = (v, start, len);
                }
            }
            best
        })
        .reduce(
            || (0i64, u64::MAX, u64::MAX),
            |a, b| {
                if b.0.abs() > a.0.abs() || (b.0.abs() == a.0.abs() && (b.1, b.2) < (a.1, a.2)) {
                    b
                } else {
                    a
                }
            },
        );

    let (value, start, length) = best;
    let pf = pp as f64;
    let normalized = value.abs() as f64 / (pf.sqrt() * pf.ln());
    Ok(CharSumReport { p: pp, shift_pair: shifts, start, length, value, normalized })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Euler-criterion oracle: n^((p-1)/2) mod p mapped to {-1, 0, 1}.
    /// Deliberately independent of the reciprocity implementation.
    pub fn euler_symbol(n: i64, p: u64) -> i8 {
        let r = n.rem_euclid(p as i64) as u64;
        if r == 0 {
            return 0;
        }
        let mut base = r % p;
        let mut exp = (p - 1) / 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        if acc == 1 {
            1
        } else {
            debug_assert_eq!(acc, p - 1);
            -1
        }
    }

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn modulus_validation() {
        assert!(PrimeModulus::new(2).is_err());
        assert!(PrimeModulus::new(9).is_err());
        assert!(PrimeModulus::new(15).is_err());
        assert!(PrimeModulus::new(1).is_err());
        assert!(PrimeModulus::new(7).is_ok());
        assert!(PrimeModulus::new(2147483647).is_ok()); // 2^31 - 1 is prime
    }

    #[test]
    fn symbol_basic_values() {
        assert_eq!(legendre_symbol(1, pm(5)), 1);
        assert_eq!(legendre_symbol(0, pm(7)), 0);
        // 3^3 = 27 = 6 = -1 mod 7
        assert_eq!(legendre_symbol(3, pm(7)), -1);
    }

    #[test]
    fn symbol_matches_euler_oracle_smallish() {
        for p in [3u64, 5, 7, 11, 13, 17, 101, 499] {
            for n in 0..p as i64 {
                assert_eq!(legendre_symbol(n, pm(p)), euler_symbol(n, p), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn fekete_mod7() {
        assert_eq!(fekete_coefficients(pm(7), 7), vec![0, 1, 1, -1, 1, -1, -1]);
        assert_eq!(fekete_coefficients(pm(3), 3), vec![0, 1, -1]);
        // periodic extension: index 7 == 0 (mod 7)
        assert_eq!(fekete_coefficients(pm(7), 8), vec![0, 1, 1, -1, 1, -1, -1, 0]);
    }

    #[test]
    fn smallest_nonresidues() {
        assert_eq!(smallest_nonresidue(pm(3)), 2);
        assert_eq!(smallest_nonresidue(pm(7)), 3);
        assert_eq!(smallest_nonresidue(pm(17)), 3);
    }

    #[test]
    fn pair_sum_examples() {
        // Full period, (j,h) = (0,1): the complete sum of (n(n+1)|p) is -1.
        assert_eq!(incomplete_pair_sum(pm(7), 0, 1, 0, 7).unwrap(), -1);
        // Single term: f(1) f(2) = 1 * 1.
        assert_eq!(incomplete_pair_sum(pm(7), 0, 1, 0, 1).unwrap(), 1);
        // j >= h rejected.
        assert!(incomplete_pair_sum(pm(7), 1, 1, 0, 3).is_err());
    }

    #[test]
    fn pair_sum_triangle_inequality() {
        for len in 1..=20 {
            let v = incomplete_pair_sum(pm(23), 2, 5, 7, len).unwrap();
            assert!(v.abs() <= len as i64);
        }
    }

    #[test]
    fn max_scan_plain_mod7() {
        let rep = max_incomplete_sum(pm(7), 7, None).unwrap();
        assert!(rep.value.abs() >= 2, "run 1,1 at n = 1,2 gives 2");
        // Brute-force oracle over all 49 (start, length) pairs.
        let f = FeketeSeries::new(pm(7));
        let mut best = 0i64;
        for start in 0..7i64 {
            for len in 1..=7i64 {
                let mut acc = 0;
                for k in 1..=len {
                    acc += f.coeff(start + k) as i64;
                }
                if acc.abs() > best.abs() {
                    best = acc;
                }
            }
        }
        assert_eq!(rep.value.abs(), best.abs());
    }

    #[test]
    fn full_period_plain_sum_is_zero() {
        for p in [7u64, 11, 13] {
            let f = FeketeSeries::new(pm(p));
            for start in 0..p as i64 {
                let total: i64 = (1..=p as i64).map(|k| f.coeff(start + k) as i64).sum();
                assert_eq!(total, 0);
            }
        }
    }

    #[test]
    fn normalized_below_one_for_101_pair01() {
        let rep = max_incomplete_sum(pm(101), 101, Some((0, 1))).unwrap();
        assert!(rep.normalized < 1.0, "normalized = {}", rep.normalized);
    }
}
