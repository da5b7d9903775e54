//! Certified complex root enclosures.
//!
//! Floating point (Aberth-Ehrlich) provides seeds only. Every reported disc
//! is certified exactly: real roots of real polynomials by Sturm counts on
//! rational intervals, everything else by a Pellet-style coefficient test on
//! the exact Taylor shift, which bounds the number of roots in the disc by
//! Rouché. Multiplicities come from Yun's square-free decomposition, so the
//! certified counts always sum to the degree.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gauss::Gaussian;
use crate::poly::uni::UniPoly;
use crate::rat::{dyadic_round, rat, rat_int, Rat};

const REFINE_BUDGET: u32 = 64;

#[derive(Clone, Debug, PartialEq)]
pub enum Realness {
    Real,
    NonReal,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct RootEnclosure {
    pub center: Gaussian,
    pub radius: Rat,
    pub multiplicity: usize,
    pub realness: Realness,
}

impl RootEnclosure {
    pub fn center_f64(&self) -> (f64, f64) {
        self.center.to_f64_pair()
    }

    pub fn radius_f64(&self) -> f64 {
        crate::rat::rat_to_f64(&self.radius)
    }

    /// Certified: every root in this disc satisfies |t - lambda| >= threshold
    /// for the rational real point t. Conservative (false = inconclusive).
    pub fn point_distance_at_least(&self, t: &Rat, threshold: &Rat) -> bool {
        let need = threshold + &self.radius;
        if need.is_negative() {
            return true;
        }
        let dx = t - &self.center.re;
        let dy = &self.center.im;
        &dx * &dx + dy * dy >= &need * &need
    }

    /// Certified: some point of the disc is at distance < threshold from t
    /// (definite hypothesis violation when the disc radius is small).
    pub fn point_distance_definitely_less(&self, t: &Rat, threshold: &Rat) -> bool {
        if threshold < &self.radius {
            return false;
        }
        let slack = threshold - &self.radius;
        let dx = t - &self.center.re;
        let dy = &self.center.im;
        &dx * &dx + dy * dy < &slack * &slack
    }

    /// For a certified-real root: the real interval containing it.
    pub fn real_interval(&self) -> Option<(Rat, Rat)> {
        match self.realness {
            Realness::Real => {
                Some((&self.center.re - &self.radius, &self.center.re + &self.radius))
            }
            _ => None,
        }
    }

    fn disjoint_from(&self, other: &RootEnclosure) -> bool {
        let d = &self.center - &other.center;
        let rr = &self.radius + &other.radius;
        d.norm_sqr() > &rr * &rr
    }
}

// ---- Square-free decomposition (Yun) ----

/// Returns (multiplicity, square-free factor) pairs with
/// f = c * prod factor_i^mult_i and the factors pairwise coprime.
pub fn squarefree_decomposition(f: &UniPoly) -> Vec<(usize, UniPoly)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let g = f.gcd(&fp);
    if g.degree_or_zero() == 0 {
        out.push((1, f.monic()));
        return out;
    }
    let mut w = f.divrem(&g).unwrap().0;
    let mut y = fp.divrem(&g).unwrap().0;
    let mut z = y.sub(&w.derivative());
    let mut i = 1usize;
    let max_rounds = f.degree_or_zero() + 2;
    while w.degree_or_zero() > 0 {
        assert!(i <= max_rounds, "square-free decomposition failed to terminate");
        let gi = w.gcd(&z);
        if gi.degree_or_zero() > 0 {
            out.push((i, gi.clone()));
            w = w.divrem(&gi).unwrap().0;
            z = z.divrem(&gi).unwrap().0;
        }
        y = z.clone();
        z = y.sub(&w.derivative());
        i += 1;
    }
    out
}

// ---- Sturm sequences for real square-free polynomials ----

fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].divrem(&chain[n - 1]).unwrap().1;
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

fn sign_at(p: &UniPoly, x: &Rat) -> i32 {
    let v = p.eval(&Gaussian::from_rat(x.clone()));
    debug_assert!(v.im.is_zero());
    if v.re.is_zero() {
        0
    } else if v.re.is_negative() {
        -1
    } else {
        1
    }
}

fn sign_variations(chain: &[UniPoly], x: &Rat) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in chain {
        let s = sign_at(p, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of real roots of the square-free real polynomial in (a, b].
fn sturm_count(chain: &[UniPoly], a: &Rat, b: &Rat) -> usize {
    sign_variations(chain, a) - sign_variations(chain, b)
}

/// Cauchy root bound: all roots have |lambda| < bound.
fn cauchy_bound(p: &UniPoly) -> Rat {
    let lead = p.leading().expect("bound of zero polynomial");
    let lead_norm = lead.norm_sqr();
    let mut max_ratio = Rat::zero();
    for c in p.coeffs().iter().take(p.coeffs().len() - 1) {
        // |c| / |lead| <= sqrt(norm(c)/norm(lead)); bound via norms squared
        // and take a rational over-estimate: (1 + norm(c)/norm(lead)).
        let q = c.norm_sqr() / lead_norm.clone();
        if q > max_ratio {
            max_ratio = q;
        }
    }
    // |c|/|lead| <= max(1, norm ratio), so 1 + ratio is a safe bound.
    rat_int(2) + max_ratio
}

/// Isolating intervals (width <= tol) for all real roots of a square-free
/// real polynomial. Rational roots are deflated exactly and reported with
/// radius zero.
fn real_root_intervals_squarefree(p: &UniPoly, tol: &Rat) -> Vec<(Rat, Rat)> {
    let mut poly = p.monic();
    let mut found = Vec::new();
    'deflate: loop {
        if poly.degree_or_zero() == 0 {
            break;
        }
        let chain = sturm_chain(&poly);
        let bound = cauchy_bound(&poly);
        let lo = -bound.clone();
        let hi = bound;
        // Endpoint hi could be a root only if |root| = bound, excluded by strictness.
        let total = sturm_count(&chain, &lo, &hi);
        if total == 0 {
            break;
        }
        let mut stack = vec![(lo, hi, total)];
        let mut intervals = Vec::new();
        while let Some((a, b, count)) = stack.pop() {
            if count == 0 {
                continue;
            }
            let width = &b - &a;
            if count == 1 && width <= *tol {
                intervals.push((a, b));
                continue;
            }
            let mid = (&a + &b) * rat(1, 2);
            if sign_at(&poly, &mid) == 0 {
                // Exact rational root: deflate and restart.
                found.push((mid.clone(), mid.clone()));
                let linear = UniPoly::from_coeffs(vec![
                    Gaussian::from_rat(-mid.clone()),
                    Gaussian::one(),
                ]);
                poly = poly.divrem(&linear).unwrap().0;
                continue 'deflate;
            }
            let left = sturm_count(&chain, &a, &mid);
            stack.push((a, mid.clone(), left));
            stack.push((mid, b, count - left));
        }
        found.extend(intervals);
        break;
    }
    found
}

// ---- Aberth-Ehrlich floating seeds ----

fn to_complex_coeffs(p: &UniPoly) -> Vec<Complex64> {
    let scale = p.max_abs_f64().max(1.0);
    p.coeffs()
        .iter()
        .map(|c| {
            let (re, im) = c.to_f64_pair();
            Complex64::new(re / scale, im / scale)
        })
        .collect()
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

fn aberth_seeds(p: &UniPoly) -> Vec<Complex64> {
    let coeffs = to_complex_coeffs(p);
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let deriv: Vec<Complex64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();
    // Initial guesses on a circle with a deterministic angular offset.
    let r0 = 1.0 + coeffs[..n]
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max)
        / coeffs[n].norm().max(1e-300);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.354) / n as f64 + 0.7;
            Complex64::from_polar(r0 * (0.5 + 0.5 * ((k % 3) as f64 + 1.0) / 3.0), theta)
        })
        .collect();
    for _ in 0..400 {
        let mut moved: f64 = 0.0;
        for k in 0..n {
            let pv = horner(&coeffs, z[k]);
            let dv = horner(&deriv, z[k]);
            if dv.norm() < 1e-300 {
                z[k] += Complex64::new(1e-6, 1e-6);
                continue;
            }
            let w = pv / dv;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    let d = z[k] - z[j];
                    if d.norm() > 1e-300 {
                        s += Complex64::new(1.0, 0.0) / d;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let corr = if denom.norm() < 1e-300 { w } else { w / denom };
            z[k] -= corr;
            moved = moved.max(corr.norm());
        }
        if moved < 1e-14 {
            break;
        }
    }
    z
}

// ---- Pellet certification ----

/// Lower bound for |z|: max(|re|, |im|).
fn abs_lower(z: &Gaussian) -> Rat {
    let re = z.re.abs();
    let im = z.im.abs();
    if re > im {
        re
    } else {
        im
    }
}

/// Upper bound for |z|: |re| + |im|.
fn abs_upper(z: &Gaussian) -> Rat {
    z.re.abs() + z.im.abs()
}

/// Certify that the disc |z - c| <= r contains exactly m roots of p
/// (counted with multiplicity in p): Rouché against the m-th Taylor term.
pub fn pellet_certifies(p: &UniPoly, c: &Gaussian, r: &Rat, m: usize) -> bool {
    if r.is_negative() {
        return false;
    }
    let shifted = p.taylor_shift(c);
    let n = shifted.degree_or_zero();
    if m > n {
        return false;
    }
    let mut rhs = Rat::zero();
    let mut rpow = Rat::one();
    for k in 0..=n {
        let coef = shifted.coeff(k);
        if k != m && !coef.is_zero() {
            rhs += abs_upper(&coef) * rpow.clone();
        }
        if k == m {
            // defer lhs
        }
        rpow *= r.clone();
    }
    let mut lhs = abs_lower(&shifted.coeff(m));
    for _ in 0..m {
        lhs *= r.clone();
    }
    lhs > rhs
}

// ---- Main entry points ----

/// Certified enclosures of all roots of q (with multiplicity); the
/// multiplicities sum to deg q. Discs are pairwise disjoint.
pub fn root_enclosures(q: &UniPoly, tol: &Rat) -> Result<Vec<RootEnclosure>> {
    if q.is_zero() {
        return Err(Error::Precondition("root enclosures of the zero polynomial".into()));
    }
    if tol.is_zero() || tol.is_negative() {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let deg = q.degree().unwrap();
    let mut enclosures: Vec<RootEnclosure> = Vec::new();
    if deg == 0 {
        return Ok(enclosures);
    }
    for (mult, factor) in squarefree_decomposition(q) {
        let mut encl = enclose_squarefree(&factor, tol)?;
        for e in encl.iter_mut() {
            e.multiplicity = mult;
        }
        enclosures.extend(encl);
    }
    let total: usize = enclosures.iter().map(|e| e.multiplicity).sum();
    if total != deg {
        return Err(Error::Internal(format!(
            "enclosure multiplicities sum to {total}, expected {deg}"
        )));
    }
    // Enforce pairwise disjointness by re-running both sides tighter.
    let mut shrink = tol.clone();
    for _ in 0..REFINE_BUDGET {
        let mut clash = false;
        'outer: for i in 0..enclosures.len() {
            for j in (i + 1)..enclosures.len() {
                if !enclosures[i].disjoint_from(&enclosures[j]) {
                    clash = true;
                    break 'outer;
                }
            }
        }
        if !clash {
            return Ok(enclosures);
        }
        shrink = shrink * rat(1, 16);
        enclosures.clear();
        for (mult, factor) in squarefree_decomposition(q) {
            let mut encl = enclose_squarefree(&factor, &shrink)?;
            for e in encl.iter_mut() {
                e.multiplicity = mult;
            }
            enclosures.extend(encl);
        }
    }
    Err(Error::CertificationFailure(
        "could not separate root enclosures within the refinement budget".into(),
    ))
}

/// All real roots of a real polynomial as certified enclosures
/// (isolating intervals, multiplicity from the square-free decomposition).
pub fn real_root_enclosures(q: &UniPoly, tol: &Rat) -> Result<Vec<RootEnclosure>> {
    if !q.is_real() {
        return Err(Error::Precondition("real_root_enclosures requires a real polynomial".into()));
    }
    if q.is_zero() {
        return Err(Error::Precondition("root enclosures of the zero polynomial".into()));
    }
    let mut out = Vec::new();
    for (mult, factor) in squarefree_decomposition(q) {
        for (lo, hi) in real_root_intervals_squarefree(&factor, tol) {
            let center = (&lo + &hi) * rat(1, 2);
            let radius = (&hi - &lo) * rat(1, 2);
            out.push(RootEnclosure {
                center: Gaussian::from_rat(center),
                radius,
                multiplicity: mult,
                realness: Realness::Real,
            });
        }
    }
    Ok(out)
}

fn enclose_squarefree(f: &UniPoly, tol: &Rat) -> Result<Vec<RootEnclosure>> {
    let deg = f.degree().unwrap_or(0);
    let mut out = Vec::new();
    if deg == 0 {
        return Ok(out);
    }
    if deg == 1 {
        // Exact root: -c0/c1.
        let root = &f.coeff(0).neg() / &f.coeff(1);
        let realness = if root.im.is_zero() { Realness::Real } else { Realness::NonReal };
        out.push(RootEnclosure { center: root, radius: Rat::zero(), multiplicity: 1, realness });
        return Ok(out);
    }

    let is_real_poly = f.is_real();
    let mut remaining = deg;

    if is_real_poly {
        let intervals = real_root_intervals_squarefree(f, tol);
        for (lo, hi) in &intervals {
            let center = (lo + hi) * rat(1, 2);
            let radius = (hi - lo) * rat(1, 2);
            out.push(RootEnclosure {
                center: Gaussian::from_rat(center),
                radius,
                multiplicity: 1,
                realness: Realness::Real,
            });
        }
        remaining -= intervals.len();
    }
    if remaining == 0 {
        return Ok(out);
    }

    // Non-real (or non-real-poly) roots from floating seeds + Pellet.
    let seeds = aberth_seeds(f);
    let mut candidates: Vec<Complex64> = if is_real_poly {
        // Keep one of each conjugate pair (im > 0); mirror after certification.
        seeds.into_iter().filter(|z| z.im > 1e-12 * (1.0 + z.re.abs())).collect()
    } else {
        seeds
    };
    // Deterministic processing order.
    candidates.sort_by(|a, b| {
        (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap_or(std::cmp::Ordering::Equal)
    });

    let needed = if is_real_poly { remaining / 2 } else { remaining };
    if candidates.len() < needed {
        return Err(Error::CertificationFailure(format!(
            "floating seeds found {} non-real candidates, needed {}",
            candidates.len(),
            needed
        )));
    }

    let fprime = f.derivative();
    let mut seps: Vec<f64> = Vec::new();
    for (i, z) in candidates.iter().enumerate() {
        let mut best = f64::MAX;
        for (j, w) in candidates.iter().enumerate() {
            if i != j {
                best = best.min((z - w).norm());
            }
            // Distance to (certified) real roots also limits the radius.
        }
        for e in &out {
            let (re, im) = e.center_f64();
            best = best.min((z - Complex64::new(re, im)).norm());
        }
        if is_real_poly {
            best = best.min(2.0 * z.im.abs());
        }
        seps.push(if best == f64::MAX { 1.0 } else { best });
    }

    let mut certified: Vec<RootEnclosure> = Vec::new();
    for (z, sep) in candidates.iter().zip(seps.iter()) {
        let mut bits = 64u32;
        let mut c = Gaussian::new(
            Rat::from_float(z.re).unwrap_or_else(Rat::zero),
            Rat::from_float(z.im).unwrap_or_else(Rat::zero),
        );
        let sep_rat = Rat::from_float(*sep).unwrap_or_else(|| rat_int(1));
        let mut done = false;
        for _ in 0..REFINE_BUDGET {
            // Exact Newton step with dyadic rounding.
            let pv = f.eval(&c);
            let dv = fprime.eval(&c);
            if !dv.is_zero() {
                let step = &pv / &dv;
                c = &c - &step;
                c = Gaussian::new(dyadic_round(&c.re, bits), dyadic_round(&c.im, bits));
                let residual = f.eval(&c);
                let dv2 = fprime.eval(&c);
                if !dv2.is_zero() {
                    let w = &residual / &dv2;
                    let r_est = abs_upper(&w) * rat_int(4) + Rat::new(BigInt::from(1), BigInt::from(1) << bits.min(400));
                    let r_cap = (&sep_rat * rat(1, 3)).min(tol.clone());
                    let r = if r_est < r_cap { r_est } else { r_cap };
                    if !r.is_zero() && pellet_certifies(f, &c, &r, 1) {
                        let realness = decide_realness(&c, &r);
                        certified.push(RootEnclosure {
                            center: c.clone(),
                            radius: r,
                            multiplicity: 1,
                            realness,
                        });
                        done = true;
                        break;
                    }
                }
            } else {
                c = &c + &Gaussian::new(Rat::new(BigInt::from(1), BigInt::from(1) << 20), Rat::zero());
            }
            bits += 32;
        }
        if !done {
            return Err(Error::CertificationFailure(format!(
                "could not certify a root near ({:.6}, {:.6})",
                z.re, z.im
            )));
        }
        if certified.len() == needed {
            break;
        }
    }
    if certified.len() < needed {
        return Err(Error::CertificationFailure(
            "not enough certified non-real roots".into(),
        ));
    }
    if is_real_poly {
        // Mirror each certified disc; conjugate roots of a real polynomial.
        let mirrored: Vec<RootEnclosure> = certified
            .iter()
            .map(|e| RootEnclosure {
                center: e.center.conj(),
                radius: e.radius.clone(),
                multiplicity: 1,
                realness: e.realness.clone(),
            })
            .collect();
        certified.extend(mirrored);
    }
    out.extend(certified);
    Ok(out)
}

fn decide_realness(c: &Gaussian, r: &Rat) -> Realness {
    if c.im.abs() > *r {
        Realness::NonReal
    } else {
        Realness::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Rat {
        rat(1, 1 << 20)
    }

    #[test]
    fn quadratic_real_roots() {
        // X^2 - 1: roots +1 and -1.
        let q = UniPoly::from_ints(&[-1, 0, 1]);
        let mut enc = root_enclosures(&q, &tol()).unwrap();
        enc.sort_by(|a, b| a.center.re.cmp(&b.center.re));
        assert_eq!(enc.len(), 2);
        for (e, target) in enc.iter().zip([-1i64, 1]) {
            let t = rat_int(target);
            assert!((&e.center.re - &t).abs() <= e.radius);
            assert_eq!(e.multiplicity, 1);
            assert_eq!(e.realness, Realness::Real);
        }
    }

    #[test]
    fn double_root_multiplicity() {
        // (X - 2)^2
        let q = UniPoly::from_ints(&[4, -4, 1]);
        let enc = root_enclosures(&q, &tol()).unwrap();
        assert_eq!(enc.len(), 1);
        assert_eq!(enc[0].multiplicity, 2);
        assert!((&enc[0].center.re - &rat_int(2)).abs() <= enc[0].radius);
    }

    #[test]
    fn pure_imaginary_pair() {
        // X^2 + 1: roots +-i.
        let q = UniPoly::from_ints(&[1, 0, 1]);
        let enc = root_enclosures(&q, &tol()).unwrap();
        assert_eq!(enc.len(), 2);
        for e in &enc {
            assert_eq!(e.realness, Realness::NonReal);
            assert!((e.center.im.abs() - rat_int(1)).abs() <= e.radius);
        }
    }

    #[test]
    fn mixed_roots_sum_to_degree() {
        // (X^2 + 1)(X - 3)(X + 1/2)
        let q = UniPoly::from_ints(&[1, 0, 1])
            .mul(&UniPoly::from_ints(&[-3, 1]))
            .mul(&UniPoly::from_coeffs(vec![
                Gaussian::from_rat(rat(1, 2)),
                Gaussian::one(),
            ]));
        let enc = root_enclosures(&q, &tol()).unwrap();
        let total: usize = enc.iter().map(|e| e.multiplicity).sum();
        assert_eq!(total, 4);
        let reals = enc.iter().filter(|e| e.realness == Realness::Real).count();
        assert_eq!(reals, 2);
    }

    #[test]
    fn pellet_rejects_wrong_count() {
        let q = UniPoly::from_ints(&[-1, 0, 1]); // roots at +-1
        // A disc around 0 with radius 1/4 contains no root.
        assert!(!pellet_certifies(&q, &Gaussian::zero(), &rat(1, 4), 1));
        // A disc around 1 with radius 1/4 contains exactly one.
        assert!(pellet_certifies(&q, &Gaussian::from_int(1), &rat(1, 4), 1));
    }

    #[test]
    fn rational_root_deflation_is_exact() {
        // (X - 1/2)(X^2 - 2): rational root 1/2 exact, irrational pair enclosed.
        let q = UniPoly::from_coeffs(vec![
            Gaussian::from_rat(rat(-1, 2)),
            Gaussian::one(),
        ])
        .mul(&UniPoly::from_ints(&[-2, 0, 1]));
        let enc = root_enclosures(&q, &tol()).unwrap();
        assert_eq!(enc.len(), 3);
        assert!(enc
            .iter()
            .any(|e| e.radius.is_zero() && e.center.re == rat(1, 2)));
    }
}
