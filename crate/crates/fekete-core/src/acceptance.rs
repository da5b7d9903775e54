//! The acceptance suite: one function per criterion, runnable from the CLI
//! (`repro`) and from the integration test target. Each criterion carries
//! its own independent oracle where one is called for; none of the oracles
//! share code with the implementation path they check.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::gauss::Gaussian;
use crate::guess::compute_dpn;
use crate::holonomy::{
    algebraic_to_ode, audit_bounds, check_bounds, extend, ode_to_recurrence, series_root,
    verify_annihilates,
};
use crate::numtheory::{
    fekete_coefficients, legendre_symbol, max_incomplete_sum, smallest_nonresidue, FeketeSeries,
    PrimeModulus,
};
use crate::oscillation::{delta_search, interval_plan, recertify_plan};
use crate::poly::{BiPoly, UniPoly};
use crate::rat::Rat;

/// Result of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {}: {} [{}] {:.2}s - {}",
            self.index,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.seconds,
            self.detail
        )
    }
}

fn outcome(
    index: usize,
    name: &'static str,
    started: Instant,
    result: Result<String, String>,
) -> CriterionOutcome {
    let seconds = started.elapsed().as_secs_f64();
    match result {
        Ok(detail) => CriterionOutcome { index, name, passed: true, detail, seconds },
        Err(detail) => CriterionOutcome { index, name, passed: false, detail, seconds },
    }
}

fn primes_below(n: u64) -> Vec<u64> {
    let mut sieve = vec![true; n as usize];
    let mut out = Vec::new();
    for p in 2..n as usize {
        if sieve[p] {
            out.push(p as u64);
            let mut q = p * p;
            while q < n as usize {
                sieve[q] = false;
                q += p;
            }
        }
    }
    out
}

fn odd_primes_in(lo: u64, hi: u64) -> Vec<u64> {
    primes_below(hi + 1).into_iter().filter(|&p| p >= lo.max(3)).collect()
}

/// Euler-criterion oracle, independent of the reciprocity implementation.
fn euler_symbol(n: i64, p: u64) -> i8 {
    let r = n.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let mut base = r;
    let mut exp = (p - 1) / 2;
    let mut acc: u64 = 1;
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
        -1
    }
}

// ---- Criterion 1 ----

pub fn criterion_1() -> CriterionOutcome {
    let started = Instant::now();
    let mut checked = 0u64;
    for p in odd_primes_in(3, 499) {
        let pm = PrimeModulus::new(p).unwrap();
        for n in 0..p as i64 {
            if legendre_symbol(n, pm) != euler_symbol(n, p) {
                return outcome(
                    1,
                    "legendre symbol vs Euler criterion",
                    started,
                    Err(format!("mismatch at n = {n}, p = {p}")),
                );
            }
            checked += 1;
        }
    }
    outcome(
        1,
        "legendre symbol vs Euler criterion",
        started,
        Ok(format!("{checked} symbol values agree for all primes below 500")),
    )
}

// ---- Criterion 2 ----

pub fn criterion_2(seed: u64) -> CriterionOutcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xFE2E);
    for p in odd_primes_in(3, 499) {
        let pm = PrimeModulus::new(p).unwrap();
        let coeffs = fekete_coefficients(pm, p as usize);
        if coeffs[0] != 0 {
            return outcome(2, "fekete invariants", started, Err(format!("nonzero at 0, p = {p}")));
        }
        let plus = coeffs.iter().filter(|&&v| v == 1).count();
        let minus = coeffs.iter().filter(|&&v| v == -1).count();
        if plus != minus || plus != (p as usize - 1) / 2 {
            return outcome(
                2,
                "fekete invariants",
                started,
                Err(format!("balance broken for p = {p}: +{plus}/-{minus}")),
            );
        }
        let total: i64 = coeffs.iter().map(|&v| v as i64).sum();
        if total != 0 {
            return outcome(
                2,
                "fekete invariants",
                started,
                Err(format!("full-period sum {total} != 0 for p = {p}")),
            );
        }
        for _ in 0..1000 {
            let a = rng.random_range(1..p) as i64;
            let b = rng.random_range(1..p) as i64;
            let ab = (a * b).rem_euclid(p as i64);
            if legendre_symbol(ab, pm) != legendre_symbol(a, pm) * legendre_symbol(b, pm) {
                return outcome(
                    2,
                    "fekete invariants",
                    started,
                    Err(format!("multiplicativity broken at ({a}, {b}) mod {p}")),
                );
            }
        }
    }
    outcome(
        2,
        "fekete invariants",
        started,
        Ok("zero at 0, balance, full-period sum 0, multiplicativity (1000 pairs/prime), p < 500".into()),
    )
}

// ---- Corpus for criteria 3, 4 and 9 ----

/// Named annihilators with a smooth rational branch at the origin.
pub fn named_corpus() -> Vec<(&'static str, BiPoly, Gaussian)> {
    vec![
        ("geometric", BiPoly::from_int_grid(&[vec![-1], vec![1, -1]]), Gaussian::one()),
        (
            "central-binomial",
            BiPoly::from_int_grid(&[vec![-1], vec![0], vec![1, -4]]),
            Gaussian::one(),
        ),
        ("catalan", BiPoly::from_int_grid(&[vec![1], vec![-1], vec![0, 1]]), Gaussian::one()),
    ]
}

/// Seeded random h with bidegree <= (3, 3), zero constant term and a
/// nonzero Y-coefficient at the origin, so A_0 = 0 is a smooth branch.
/// Candidates whose quotient-ring inversion detects a reducible modulus are
/// rerolled deterministically.
pub fn random_corpus(seed: u64, count: usize) -> Vec<(String, BiPoly, Gaussian)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC0_BD);
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 10_000, "random corpus generation stalled");
        let mut grid = vec![vec![0i64; 4]; 4];
        for (beta, row) in grid.iter_mut().enumerate() {
            for (alpha, cell) in row.iter_mut().enumerate() {
                if beta == 0 && alpha == 0 {
                    continue; // h(0,0) = 0
                }
                *cell = rng.random_range(-3..=3);
            }
        }
        if grid[1][0] == 0 {
            grid[1][0] = if rng.random_bool(0.5) { 1 } else { -1 };
        }
        let h = BiPoly::from_int_grid(&grid);
        if h.deg_y().unwrap_or(0) < 1 {
            continue;
        }
        // The pipeline itself is the reducibility filter.
        match algebraic_to_ode(&h) {
            Ok(_) => out.push((format!("random-{}", out.len()), h, Gaussian::zero())),
            Err(Error::ReducibleModulus { .. }) => continue,
            Err(e) => panic!("unexpected corpus failure: {e}"),
        }
    }
    out
}

fn full_corpus(seed: u64) -> Vec<(String, BiPoly, Gaussian)> {
    let mut corpus: Vec<(String, BiPoly, Gaussian)> = named_corpus()
        .into_iter()
        .map(|(name, h, b)| (name.to_string(), h, b))
        .collect();
    corpus.extend(random_corpus(seed, 25));
    corpus
}

/// Round-trip one corpus entry at the given length; singular indices are
/// cleared by supplying a longer initial prefix (the relation still holds
/// there; only forward solving is blocked).
fn round_trip(h: &BiPoly, branch: &Gaussian, len: usize) -> Result<(), String> {
    let reference =
        series_root(h, std::slice::from_ref(branch), len).map_err(|e| e.to_string())?;
    let ode = algebraic_to_ode(h).map_err(|e| e.to_string())?;
    let rec = ode_to_recurrence(&ode);
    let mut prefix_len = rec.order().max(1);
    loop {
        match extend(&rec, &reference[..prefix_len.min(len)], len) {
            Ok(ext) => {
                if ext != reference {
                    return Err("extension disagrees with the series root".into());
                }
                return Ok(());
            }
            Err(Error::SingularIndex(n)) => {
                let need = (n as usize) + rec.order() + 1;
                if need <= prefix_len || need > len {
                    return Err(format!("singular index {n} cannot be cleared"));
                }
                prefix_len = need;
            }
            Err(e) => return Err(e.to_string()),
        }
    }
}

// ---- Criterion 3 ----

pub fn criterion_3(seed: u64) -> CriterionOutcome {
    let started = Instant::now();
    let corpus = full_corpus(seed);
    for (name, h, branch) in &corpus {
        if let Err(e) = round_trip(h, branch, 500) {
            return outcome(3, "holonomy round-trip", started, Err(format!("{name}: {e}")));
        }
        let ode = algebraic_to_ode(h).unwrap();
        let rec = ode_to_recurrence(&ode);
        let reports = check_bounds(h, &ode, &rec);
        // Lemma-level bounds are hard assertions here.
        for r in &reports[..2] {
            if !r.satisfied {
                return outcome(
                    3,
                    "holonomy round-trip",
                    started,
                    Err(format!("{name}: {} measured {} > bound {}", r.quantity, r.measured, r.bound)),
                );
            }
        }
    }
    outcome(
        3,
        "holonomy round-trip",
        started,
        Ok(format!(
            "{} corpus entries reproduce 500 series terms exactly; ODE order/degree bounds hold",
            corpus.len()
        )),
    )
}

// ---- Criterion 4 ----

/// Binomial-formula Catalan oracle: C_k = binom(2k, k)/(k+1).
pub fn catalan_oracle(count: usize) -> Vec<Gaussian> {
    let mut out = Vec::with_capacity(count);
    for k in 0..count as u64 {
        let mut binom = BigInt::one();
        for i in 0..k {
            binom = binom * BigInt::from(2 * k - i) / BigInt::from(i + 1);
        }
        out.push(Gaussian::from_rat(Rat::new(binom, BigInt::from(k + 1))));
    }
    out
}

pub fn criterion_4() -> CriterionOutcome {
    let started = Instant::now();
    let h = BiPoly::from_int_grid(&[vec![1], vec![-1], vec![0, 1]]);
    let ode = match algebraic_to_ode(&h) {
        Ok(o) => o,
        Err(e) => return outcome(4, "catalan recurrence recovery", started, Err(e.to_string())),
    };
    let rec = ode_to_recurrence(&ode);
    let cats = catalan_oracle(200);
    if !verify_annihilates(&rec, &cats) {
        return outcome(
            4,
            "catalan recurrence recovery",
            started,
            Err("derived recurrence does not annihilate the binomial-formula Catalan numbers".into()),
        );
    }
    // Equivalence with (n+2) A_{n+1} - (4n+2) A_n up to a common factor:
    // cross-multiplied coefficient identity P_1(n) * (4n+2) = -P_0(n) * (n+2).
    if rec.order() != 1 {
        return outcome(
            4,
            "catalan recurrence recovery",
            started,
            Err(format!("expected order 1, got {}", rec.order())),
        );
    }
    let p0 = &rec.coeffs()[0];
    let p1 = &rec.coeffs()[1];
    let lhs = p1.mul(&UniPoly::from_ints(&[2, 4]));
    let rhs = p0.mul(&UniPoly::from_ints(&[2, 1])).neg();
    if lhs != rhs {
        return outcome(
            4,
            "catalan recurrence recovery",
            started,
            Err("recurrence is not proportional to (n+2) A_{n+1} = (4n+2) A_n".into()),
        );
    }
    outcome(
        4,
        "catalan recurrence recovery",
        started,
        Ok("(n+2) A_{n+1} = (4n+2) A_n recovered; annihilates 200 oracle terms".into()),
    )
}

// ---- Criterion 5 ----

/// Plain rational RREF rank, written independently of the Bareiss kernel.
fn rref_rank_oracle(mat: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = mat.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = Rat::one() / m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c].clone();
                let row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(row.iter()) {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Oracle: does a nonzero h of per-variable degree <= d kill the prefix?
/// Builds the system directly from the definition and compares row rank to
/// the number of unknowns.
fn algebraic_kernel_nontrivial_oracle(prefix: &[i8], d: usize) -> bool {
    let n = prefix.len();
    let cols = (d + 1) * (d + 1);
    // powers[beta][k] = coefficient of X^k in (prefix series)^beta
    let mut powers: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n]; d + 1];
    powers[0][0] = Rat::one();
    for beta in 1..=d {
        for k in 0..n {
            let mut acc = Rat::zero();
            for i in 0..=k {
                let a = &powers[beta - 1][i];
                if !a.is_zero() {
                    acc += a * &Rat::from_integer(BigInt::from(prefix[k - i]));
                }
            }
            powers[beta][k] = acc;
        }
    }
    let mut mat = Vec::with_capacity(n);
    for k in 0..n {
        let mut row = Vec::with_capacity(cols);
        for alpha in 0..=d {
            for beta in 0..=d {
                row.push(if k < alpha { Rat::zero() } else { powers[beta][k - alpha].clone() });
            }
        }
        mat.push(row);
    }
    rref_rank_oracle(&mat) < cols
}

pub fn criterion_5() -> CriterionOutcome {
    let started = Instant::now();
    for p in [7u64, 11, 13, 17, 19, 23] {
        let pm = PrimeModulus::new(p).unwrap();
        let nonres = smallest_nonresidue(pm);
        let mut prev_d = 0usize;
        for n in 2..=30usize {
            let res = match compute_dpn(pm, n) {
                Ok(r) => r,
                Err(e) => return outcome(5, "exact d_p(N) grid", started, Err(e.to_string())),
            };
            if res.d < prev_d {
                return outcome(
                    5,
                    "exact d_p(N) grid",
                    started,
                    Err(format!("monotonicity broken at p = {p}, N = {n}")),
                );
            }
            prev_d = res.d;
            if (n as u64) <= nonres && res.d != 1 {
                return outcome(
                    5,
                    "exact d_p(N) grid",
                    started,
                    Err(format!("trivial regime broken: p = {p}, N = {n}, d = {}", res.d)),
                );
            }
            let cap = (1..).find(|&d| (d + 1) * (d + 1) > n).unwrap();
            if res.d > cap {
                return outcome(
                    5,
                    "exact d_p(N) grid",
                    started,
                    Err(format!("counting cap broken: p = {p}, N = {n}, d = {}", res.d)),
                );
            }
        }
    }
    // Pinned values for p = 7, cross-checked by the brute-force oracle.
    let pm7 = PrimeModulus::new(7).unwrap();
    let d3 = compute_dpn(pm7, 3).unwrap().d;
    let d4 = compute_dpn(pm7, 4).unwrap().d;
    let f7 = fekete_coefficients(pm7, 4);
    let oracle_d1_n3 = algebraic_kernel_nontrivial_oracle(&f7[..3], 1);
    let oracle_d1_n4 = algebraic_kernel_nontrivial_oracle(&f7[..4], 1);
    let oracle_d2_n4 = algebraic_kernel_nontrivial_oracle(&f7[..4], 2);
    if d3 != 1 || d4 != 2 || !oracle_d1_n3 || oracle_d1_n4 || !oracle_d2_n4 {
        return outcome(
            5,
            "exact d_p(N) grid",
            started,
            Err(format!(
                "p = 7 pins broken: d(3) = {d3}, d(4) = {d4}, oracle = ({oracle_d1_n3}, {oracle_d1_n4}, {oracle_d2_n4})"
            )),
        );
    }
    outcome(
        5,
        "exact d_p(N) grid",
        started,
        Ok("monotone, trivial regime, counting cap for p in {7..23}, N <= 30; p = 7 pins oracle-checked".into()),
    )
}

// ---- Criterion 6 ----

pub fn criterion_6() -> CriterionOutcome {
    let started = Instant::now();
    let mut max_ratio: f64 = 0.0;
    let mut arg = 0u64;
    for p in odd_primes_in(100, 2000) {
        let pm = PrimeModulus::new(p).unwrap();
        let rep = match max_incomplete_sum(pm, p, Some((0, 1))) {
            Ok(r) => r,
            Err(e) => return outcome(6, "character-sum shape", started, Err(e.to_string())),
        };
        if rep.normalized >= 1.0 {
            return outcome(
                6,
                "character-sum shape",
                started,
                Err(format!(
                    "normalized max {} >= 1 at p = {p} (start {}, length {}, value {})",
                    rep.normalized, rep.start, rep.length, rep.value
                )),
            );
        }
        if rep.normalized > max_ratio {
            max_ratio = rep.normalized;
            arg = p;
        }
    }
    outcome(
        6,
        "character-sum shape",
        started,
        Ok(format!("max normalized pair sum {max_ratio:.4} at p = {arg}; all below 1.0")),
    )
}

// ---- Criterion 7 ----

/// tau for the Legendre sequence: exact exhaustive maximum of the shifted
/// pair sums over all pairs 1 <= j < h <= m.
pub fn legendre_tau(p: PrimeModulus, m: usize) -> Rat {
    let mut best: i64 = 0;
    for j in 1..=m as u64 {
        for h in (j + 1)..=m as u64 {
            let rep = max_incomplete_sum(p, p.get(), Some((j, h))).unwrap();
            best = best.max(rep.value.abs());
        }
    }
    Rat::from_integer(BigInt::from(best.max(1)))
}

/// Random polynomials with degree <= cap, not all zero, forcing the stated
/// cap to be realized by at least one leading coefficient.
pub fn random_qs(rng: &mut ChaCha8Rng, m: usize, cap: usize) -> Vec<UniPoly> {
    loop {
        let qs: Vec<UniPoly> = (0..m)
            .map(|_| {
                let coeffs: Vec<i64> =
                    (0..=cap).map(|_| rng.random_range(-5..=5)).collect();
                UniPoly::from_ints(&coeffs)
            })
            .collect();
        let realized = qs.iter().map(|q| q.degree_or_zero()).max().unwrap_or(0);
        if realized == cap && qs.iter().any(|q| !q.is_zero()) {
            return qs;
        }
    }
}

pub fn criterion_7(seed: u64) -> CriterionOutcome {
    let started = Instant::now();
    let p = PrimeModulus::new(101).unwrap();
    let fseries = FeketeSeries::new(p);
    let f = |n: i64| Gaussian::from_int(fseries.coeff(n) as i64);
    let tau = legendre_tau(p, 3);
    let kappa = Rat::one();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xDE17A);
    let mut max_witness = 0u64;
    for trial in 0..100 {
        let qs = random_qs(&mut rng, 3, 2);
        match delta_search(&f, &qs, &kappa, &tau) {
            Ok(w) => max_witness = max_witness.max(w.n),
            Err(e) => {
                return outcome(
                    7,
                    "nonvanishing witness suite",
                    started,
                    Err(format!("trial {trial}: {e}; Qs = {qs:?}")),
                );
            }
        }
    }
    outcome(
        7,
        "nonvanishing witness suite",
        started,
        Ok(format!(
            "100 trials at p = 101, m = 3, D = 2, tau = {tau}: all witnesses below the cap (max n = {max_witness})"
        )),
    )
}

// ---- Criterion 8 ----

pub fn criterion_8(seed: u64) -> CriterionOutcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1E34);
    let mut cells = 0;
    for a_param in [1i64, 10, 100] {
        for degree_cap in [1usize, 2, 3] {
            for m in [1usize, 2, 3] {
                let qs = random_qs(&mut rng, m, degree_cap);
                let a_rat = Rat::from_integer(BigInt::from(a_param));
                let plan = match interval_plan(&qs, &a_rat, degree_cap) {
                    Ok(p) => p,
                    Err(e) => {
                        return outcome(
                            8,
                            "interval construction grid",
                            started,
                            Err(format!("A={a_param} D={degree_cap} m={m}: {e}")),
                        );
                    }
                };
                if let Err(e) = recertify_plan(&qs, &a_rat, degree_cap, &plan) {
                    return outcome(
                        8,
                        "interval construction grid",
                        started,
                        Err(format!("recertification failed at A={a_param} D={degree_cap} m={m}: {e}")),
                    );
                }
                if !plan.bound.satisfied {
                    return outcome(
                        8,
                        "interval construction grid",
                        started,
                        Err(format!("b-bound failed at A={a_param} D={degree_cap} m={m}")),
                    );
                }
                cells += 1;
            }
        }
    }
    outcome(
        8,
        "interval construction grid",
        started,
        Ok(format!("{cells} grid cells constructed, recertified, and inside the b bound")),
    )
}

// ---- Criterion 9 ----

pub fn criterion_9(seed: u64) -> CriterionOutcome {
    let started = Instant::now();
    let corpus = full_corpus(seed);
    let mut flagged = 0usize;
    let mut lines = Vec::new();
    for (name, h, _) in &corpus {
        let ode = match algebraic_to_ode(h) {
            Ok(o) => o,
            Err(e) => return outcome(9, "recurrence bound audit", started, Err(format!("{name}: {e}"))),
        };
        let rec = ode_to_recurrence(&ode);
        let reports = audit_bounds(h, &ode, &rec);
        for r in &reports {
            if !r.satisfied {
                flagged += 1;
                lines.push(format!("{name}: {} = {} exceeds {} ({})", r.quantity, r.measured, r.bound, r.formula));
            }
        }
    }
    let detail = if flagged == 0 {
        format!("{} corpus entries audited; no stated-bound violations", corpus.len())
    } else {
        format!(
            "{} corpus entries audited; {flagged} stated-bound flags (reported, not fatal): {}",
            corpus.len(),
            lines.join("; ")
        )
    };
    outcome(9, "recurrence bound audit", started, Ok(detail))
}

/// Run all criteria with one seed; the same entry point backs the CLI
/// `repro` command and the acceptance test target.
pub fn run_all(seed: u64) -> Vec<CriterionOutcome> {
    vec![
        criterion_1(),
        criterion_2(seed),
        criterion_3(seed),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(seed),
        criterion_8(seed),
        criterion_9(seed),
    ]
}

/// The default seed used by `repro` and the test target.
pub const DEFAULT_SEED: u64 = 20240718;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_matches_quadratic_residues_mod_13() {
        let squares: Vec<i64> = (1..13).map(|n: i64| n * n % 13).collect();
        for n in 1..13i64 {
            let expected = if squares.contains(&n) { 1 } else { -1 };
            assert_eq!(euler_symbol(n, 13), expected);
        }
    }

    #[test]
    fn catalan_oracle_prefix() {
        let cats = catalan_oracle(6);
        let expected: Vec<Gaussian> = [1i64, 1, 2, 5, 14, 42]
            .iter()
            .map(|&n| Gaussian::from_int(n))
            .collect();
        assert_eq!(cats, expected);
    }

    #[test]
    fn rref_oracle_rank() {
        let mat = vec![
            vec![Rat::one(), Rat::zero()],
            vec![Rat::one(), Rat::zero()],
        ];
        assert_eq!(rref_rank_oracle(&mat), 1);
    }

    #[test]
    fn random_corpus_is_deterministic() {
        let a = random_corpus(7, 3);
        let b = random_corpus(7, 3);
        assert_eq!(a.len(), 3);
        for ((_, ha, _), (_, hb, _)) in a.iter().zip(b.iter()) {
            assert_eq!(ha, hb);
        }
    }
}
