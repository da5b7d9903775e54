//! Minimal algebraic-approximation degree by exact nullspace guessing,
//! plus a polynomial-recurrence guesser used for cross-checks.
//!
//! guess_algebraic sets up the linear system whose unknowns are the (d+1)^2
//! coefficients of h and whose equations force the first N coefficients of
//! h(X, G(X)) to vanish; the kernel is computed by fraction-free elimination
//! over the integers and the witness is normalized to a primitive integer
//! vector whose first nonzero coordinate (X-degree major) is positive.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gauss::Gaussian;
use crate::holonomy::PRecurrence;
use crate::linalg::kernel_basis_int;
use crate::numtheory::{fekete_coefficients, smallest_nonresidue, PrimeModulus};
use crate::poly::{BiPoly, Series, UniPoly};
use crate::rat::Rat;

/// Exact truncation A_0 .. A_{N-1} of a power series, N >= 2.
#[derive(Clone, Debug)]
pub struct SeriesPrefix {
    coeffs: Vec<Rat>,
}

impl SeriesPrefix {
    pub fn new(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Precondition("series prefix needs at least 2 terms".into()));
        }
        Ok(SeriesPrefix { coeffs })
    }

    pub fn from_ints(values: &[i8]) -> Result<Self> {
        SeriesPrefix::new(values.iter().map(|&v| Rat::from_integer(BigInt::from(v))).collect())
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }
}

/// A nonzero h with bidegree <= (d, d) annihilating the prefix mod X^N.
#[derive(Clone, Debug)]
pub struct AlgebraicGuess {
    pub h: BiPoly,
    pub degree: usize,
    /// Largest k with h(X, G) == 0 mod X^k confirmed by re-evaluation.
    pub residual_order: usize,
}

/// Witness for one d_p(N) value.
#[derive(Clone, Debug)]
pub struct DpnResult {
    pub p: u64,
    pub n: usize,
    pub d: usize,
    pub witness: AlgebraicGuess,
    /// (N / (sqrt(p) ln p))^(1/10); shape-only reference, no implied constant.
    pub theorem_reference: f64,
    /// Flag for rows outside the N < p regime.
    pub n_ge_p: bool,
}

fn prefix_powers(prefix: &SeriesPrefix, d: usize) -> Vec<Series> {
    let n = prefix.len();
    let gauss: Vec<Gaussian> =
        prefix.coeffs().iter().map(|r| Gaussian::from_rat(r.clone())).collect();
    let g = Series::from_gaussians(&gauss, n);
    let mut powers = Vec::with_capacity(d + 1);
    powers.push(Series::one(n));
    for _ in 1..=d {
        let prev = powers.last().unwrap();
        powers.push(prev.mul_trunc(&g, n));
    }
    powers
}

/// The exact (N x (d+1)^2) system: column (alpha, beta) ordered X-degree
/// major; row k demands the coefficient of X^k in h(X, G) vanish.
fn build_system(prefix: &SeriesPrefix, d: usize) -> Vec<Vec<BigInt>> {
    let n = prefix.len();
    let powers = prefix_powers(prefix, d);
    let cols = (d + 1) * (d + 1);
    let mut mat = Vec::with_capacity(n);
    for k in 0..n {
        // Collect rational entries, then clear the row to integers.
        let mut row_rat: Vec<Rat> = Vec::with_capacity(cols);
        for alpha in 0..=d {
            for beta in 0..=d {
                if k < alpha {
                    row_rat.push(Rat::zero());
                } else {
                    row_rat.push(powers[beta].coeff(k - alpha).re);
                }
            }
        }
        let mut lcm = BigInt::from(1);
        for r in &row_rat {
            lcm = lcm.lcm(r.denom());
        }
        let row: Vec<BigInt> = row_rat.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
        mat.push(row);
    }
    mat
}

fn vector_to_bipoly(v: &[BigInt], d: usize) -> BiPoly {
    // v is X-degree major: v[alpha*(d+1) + beta].
    let mut rows: Vec<Vec<Gaussian>> = vec![Vec::new(); d + 1];
    for alpha in 0..=d {
        for (beta, row) in rows.iter_mut().enumerate() {
            row.push(Gaussian::from_rat(Rat::from_integer(v[alpha * (d + 1) + beta].clone())));
        }
    }
    BiPoly::from_rows(rows.into_iter().map(UniPoly::from_coeffs).collect())
}

fn total_degree_of_vector(v: &[BigInt], d: usize) -> usize {
    let mut best = 0usize;
    for alpha in 0..=d {
        for beta in 0..=d {
            if !v[alpha * (d + 1) + beta].is_zero() {
                best = best.max(alpha + beta);
            }
        }
    }
    best
}

/// Try to find a nonzero h of per-variable degree <= d annihilating the
/// prefix mod X^N. Returns None when the kernel is trivial.
pub fn guess_algebraic(prefix: &SeriesPrefix, d: usize) -> Option<AlgebraicGuess> {
    if d == 0 {
        return None;
    }
    let n = prefix.len();
    let cols = (d + 1) * (d + 1);
    let mat = build_system(prefix, d);
    let kernel = kernel_basis_int(&mat, cols);
    if kernel.is_empty() {
        return None;
    }
    // Smallest total degree, ties by lexicographic coefficient order.
    let chosen = kernel
        .iter()
        .min_by(|a, b| {
            let ta = total_degree_of_vector(a, d);
            let tb = total_degree_of_vector(b, d);
            ta.cmp(&tb).then_with(|| a.cmp(b))
        })
        .unwrap();
    let h = vector_to_bipoly(chosen, d);
    // Soundness recheck by an independent evaluation pass.
    let gauss: Vec<Gaussian> =
        prefix.coeffs().iter().map(|r| Gaussian::from_rat(r.clone())).collect();
    let g = Series::from_gaussians(&gauss, n);
    let residual = h.compose_series(&g, n);
    assert!(
        residual.is_zero(),
        "guessed annihilator fails its own system: {h}"
    );
    Some(AlgebraicGuess { h, degree: d, residual_order: n })
}

/// Smallest d for which guess_algebraic succeeds. Terminates at or before
/// the counting cap: once (d+1)^2 > N there are more unknowns than
/// equations, so the kernel is nontrivial.
pub fn min_algebraic_degree(prefix: &SeriesPrefix) -> (usize, AlgebraicGuess) {
    let n = prefix.len();
    let mut d = 1usize;
    loop {
        if let Some(guess) = guess_algebraic(prefix, d) {
            return (d, guess);
        }
        debug_assert!(
            (d + 1) * (d + 1) <= n,
            "counting cap violated: trivial kernel with more unknowns than equations"
        );
        d += 1;
    }
}

/// d_p(N) for the Fekete coefficient sequence, with the Theorem-shape
/// reference value for reporting.
pub fn compute_dpn(p: PrimeModulus, n: usize) -> Result<DpnResult> {
    if n < 2 {
        return Err(Error::Precondition("d_p(N) needs N >= 2".into()));
    }
    let coeffs = fekete_coefficients(p, n);
    let prefix = SeriesPrefix::from_ints(&coeffs)?;
    let (d, witness) = min_algebraic_degree(&prefix);
    Ok(DpnResult {
        p: p.get(),
        n,
        d,
        witness,
        theorem_reference: crate::oscillation::theorem_reference(p, n),
        n_ge_p: n as u64 >= p.get(),
    })
}

/// Consequence of the smallest-nonresidue remark: d_p(N) = 1 whenever
/// N <= smallest nonresidue (the geometric series X/(1-X) matches).
pub fn trivial_regime_cap(p: PrimeModulus) -> u64 {
    smallest_nonresidue(p)
}

/// Guess a polynomial recurrence of order <= order_cap with coefficient
/// degree <= degree_cap annihilating the terms on every available window.
pub fn guess_recurrence(
    terms: &[Rat],
    order_cap: usize,
    degree_cap: usize,
) -> Result<Option<PRecurrence>> {
    let needed = (order_cap + 1) * (degree_cap + 1) + order_cap + 10;
    if terms.len() < needed {
        return Err(Error::InsufficientData { needed, got: terms.len() });
    }
    let cols = (order_cap + 1) * (degree_cap + 1);
    let rows = terms.len() - order_cap;
    let mut mat = Vec::with_capacity(rows);
    for n in 0..rows {
        let mut row_rat: Vec<Rat> = Vec::with_capacity(cols);
        let mut npow = vec![Rat::from_integer(BigInt::from(1)); degree_cap + 1];
        for t in 1..=degree_cap {
            npow[t] = &npow[t - 1] * Rat::from_integer(BigInt::from(n as i64));
        }
        for j in 0..=order_cap {
            for np in npow.iter() {
                row_rat.push(np * &terms[n + j]);
            }
        }
        let mut lcm = BigInt::from(1);
        for r in &row_rat {
            lcm = lcm.lcm(r.denom());
        }
        mat.push(row_rat.iter().map(|r| r.numer() * (&lcm / r.denom())).collect::<Vec<_>>());
    }
    let kernel = kernel_basis_int(&mat, cols);
    if kernel.is_empty() {
        return Ok(None);
    }
    let chosen = kernel.iter().min().unwrap();
    let mut polys: Vec<UniPoly> = (0..=order_cap)
        .map(|j| {
            let coeffs: Vec<Gaussian> = (0..=degree_cap)
                .map(|t| {
                    Gaussian::from_rat(Rat::from_integer(
                        chosen[j * (degree_cap + 1) + t].clone(),
                    ))
                })
                .collect();
            UniPoly::from_coeffs(coeffs)
        })
        .collect();
    while polys.last().map_or(false, |p| p.is_zero()) {
        polys.pop();
    }
    if polys.is_empty() {
        return Ok(None);
    }
    Ok(Some(PRecurrence::new(polys)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomy::verify_annihilates;
    use crate::rat::rat_int;

    fn prefix_of(ints: &[i8]) -> SeriesPrefix {
        SeriesPrefix::from_ints(ints).unwrap()
    }

    fn catalan(n: usize) -> Vec<Rat> {
        // Binomial-formula oracle: C_k = binom(2k, k) / (k+1).
        let mut out = Vec::with_capacity(n);
        for k in 0..n as u64 {
            let mut binom = BigInt::from(1);
            for i in 0..k {
                binom = binom * BigInt::from(2 * k - i) / BigInt::from(i + 1);
            }
            out.push(Rat::new(binom, BigInt::from(k + 1)));
        }
        out
    }

    #[test]
    fn fekete7_degree_one_witness() {
        // F_7 mod X^3 = [0, 1, 1]: h = Y - X - XY, i.e. G = X/(1-X).
        let prefix = prefix_of(&[0, 1, 1]);
        let guess = guess_algebraic(&prefix, 1).expect("kernel should be nontrivial");
        let h = &guess.h;
        assert_eq!(h.coeff(0, 0), Gaussian::zero());
        assert_eq!(h.coeff(0, 1), Gaussian::one());
        assert_eq!(h.coeff(1, 0), Gaussian::from_int(-1));
        assert_eq!(h.coeff(1, 1), Gaussian::from_int(-1));
    }

    #[test]
    fn fekete7_four_terms_needs_degree_two() {
        // F_7 mod X^4 = [0, 1, 1, -1]: the 4x4 degree-1 system is regular.
        let prefix = prefix_of(&[0, 1, 1, -1]);
        assert!(guess_algebraic(&prefix, 1).is_none());
        let (d, _) = min_algebraic_degree(&prefix);
        assert_eq!(d, 2);
    }

    #[test]
    fn catalan_recovered_at_degree_two() {
        let prefix = SeriesPrefix::new(catalan(12)).unwrap();
        let guess = guess_algebraic(&prefix, 2).expect("Catalan annihilator");
        // Proportional to XY^2 - Y + 1.
        let target = BiPoly::from_int_grid(&[vec![1], vec![-1], vec![0, 1]]);
        // Both are primitive integer with positive first nonzero; equality.
        assert_eq!(guess.h, target);
    }

    #[test]
    fn geometric_is_degree_one() {
        let prefix = prefix_of(&[1, 1, 1, 1, 1]);
        let (d, g) = min_algebraic_degree(&prefix);
        assert_eq!(d, 1);
        assert_eq!(g.residual_order, 5);
    }

    #[test]
    fn counting_cap_respected() {
        for n in 2..=20usize {
            let vals: Vec<i8> = (0..n).map(|k| [1i8, -1, 0, 1][(k * k + 1) % 4]).collect();
            let prefix = prefix_of(&vals);
            let (d, _) = min_algebraic_degree(&prefix);
            let cap = (1..).find(|&d| (d + 1) * (d + 1) > n).unwrap();
            assert!(d <= cap, "d = {d}, cap = {cap}, n = {n}");
        }
    }

    #[test]
    fn dpn_small_cases() {
        let p = PrimeModulus::new(7).unwrap();
        assert_eq!(compute_dpn(p, 3).unwrap().d, 1);
        assert_eq!(compute_dpn(p, 4).unwrap().d, 2);
    }

    #[test]
    fn recurrence_guess_constant() {
        let terms: Vec<Rat> = (0..20).map(|_| rat_int(5)).collect();
        let rec = guess_recurrence(&terms, 1, 0).unwrap().expect("constant recurrence");
        assert_eq!(rec.order(), 1);
        let g: Vec<Gaussian> = terms.iter().map(|r| Gaussian::from_rat(r.clone())).collect();
        assert!(verify_annihilates(&rec, &g));
    }

    #[test]
    fn recurrence_guess_catalan() {
        let terms = catalan(60);
        let rec = guess_recurrence(&terms, 1, 1).unwrap().expect("Catalan recurrence");
        let g: Vec<Gaussian> = terms.iter().map(|r| Gaussian::from_rat(r.clone())).collect();
        assert!(verify_annihilates(&rec, &g));
        // Proportional to (n+2) A_{n+1} - (4n+2) A_n.
        let known = PRecurrence::new(vec![
            UniPoly::from_ints(&[-2, -4]),
            UniPoly::from_ints(&[2, 1]),
        ])
        .unwrap();
        let cats: Vec<Gaussian> = catalan(200)
            .iter()
            .map(|r| Gaussian::from_rat(r.clone()))
            .collect();
        assert!(verify_annihilates(&known, &cats));
        assert!(verify_annihilates(&rec, &cats));
    }

    #[test]
    fn recurrence_guess_fekete_has_no_small_recurrence() {
        let p = PrimeModulus::new(101).unwrap();
        let terms: Vec<Rat> = fekete_coefficients(p, 60)
            .iter()
            .map(|&v| Rat::from_integer(BigInt::from(v)))
            .collect();
        assert!(guess_recurrence(&terms, 1, 1).unwrap().is_none());
    }

    #[test]
    fn recurrence_guess_insufficient_data() {
        let terms: Vec<Rat> = (0..5).map(|_| rat_int(1)).collect();
        match guess_recurrence(&terms, 2, 2) {
            Err(Error::InsufficientData { .. }) => {}
            other => panic!("expected insufficient data, got {other:?}"),
        }
    }
}
