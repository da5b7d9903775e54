//! Oscillation machinery: critical sets, the recursive interval
//! construction, nonvanishing-witness search, and per-instance verification
//! of the three summation lemmas.
//!
//! Every inequality on a decision path is evaluated in exact rational
//! arithmetic. The transcendental constants e^2 and e^3 enter only through
//! rational enclosures wide enough by a factor ~1e30 to never straddle a
//! desk-scale comparison; if one ever did, the code errors out rather than
//! guessing.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gauss::Gaussian;
use crate::numtheory::PrimeModulus;
use crate::poly::roots::{real_root_enclosures, root_enclosures, RootEnclosure};
use crate::poly::UniPoly;
use crate::rat::{e_cubed, e_squared, rat, Rat, RatInterval};

const DEFAULT_TOL_BITS: u32 = 24;
const MAX_TOL_BITS: u32 = 96;

fn tol_at(bits: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << bits)
}

// ---- Theorem-shape reference value ----

/// (N / (sqrt(p) ln p))^(1/10), natural log; shape-only report value with no
/// implied constant.
pub fn theorem_reference(p: PrimeModulus, n: usize) -> f64 {
    let pf = p.get() as f64;
    (n as f64 / (pf.sqrt() * pf.ln())).powf(0.1)
}

// ---- Critical sets ----

/// C(Q) from the real/imaginary split Q = A + iB: zeros of A'B' when both
/// parts are nonconstant, of the single nonconstant part's derivative when
/// one is constant, empty when both are.
#[derive(Clone, Debug)]
pub struct CriticalSet {
    /// Which polynomial the zeros were taken from (for audit).
    pub source: UniPoly,
    /// Complete certified list of the *real* members of C(Q).
    pub real_points: Vec<RootEnclosure>,
    /// Full complex root set of the source (for audit).
    pub all_roots: Vec<RootEnclosure>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum IntervalStatus {
    Disjoint,
    Intersects,
    Inconclusive,
}

impl CriticalSet {
    /// Certified relation between the real members of C(Q) and [a, b].
    pub fn interval_status(&self, a: &Rat, b: &Rat) -> IntervalStatus {
        let mut verdict = IntervalStatus::Disjoint;
        for e in &self.real_points {
            let (lo, hi) = e.real_interval().expect("real enclosure");
            if &hi < a || &lo > b {
                continue;
            }
            if &lo >= a && &hi <= b {
                return IntervalStatus::Intersects;
            }
            verdict = IntervalStatus::Inconclusive;
        }
        verdict
    }
}

pub fn critical_set(q: &UniPoly) -> Result<CriticalSet> {
    critical_set_tol(q, DEFAULT_TOL_BITS)
}

fn critical_set_tol(q: &UniPoly, tol_bits: u32) -> Result<CriticalSet> {
    let (a, b) = q.real_imag_split();
    let ap = a.derivative();
    let bp = b.derivative();
    let source = match (a.is_constant(), b.is_constant()) {
        (true, true) => UniPoly::one(), // no zeros: C(Q) empty
        (true, false) => bp,
        (false, true) => ap,
        (false, false) => ap.mul(&bp),
    };
    let tol = tol_at(tol_bits);
    if source.degree_or_zero() == 0 {
        return Ok(CriticalSet { source, real_points: Vec::new(), all_roots: Vec::new() });
    }
    let real_points = real_root_enclosures(&source, &tol)?;
    let all_roots = root_enclosures(&source, &tol)?;
    Ok(CriticalSet { source, real_points, all_roots })
}

// ---- Condition reports ----

#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub name: String,
    pub satisfied: bool,
    /// Exact left-hand value when the condition is a single comparison.
    pub lhs: Option<Rat>,
    /// Exact or enclosed right-hand value.
    pub rhs_lo: Option<Rat>,
    pub rhs_hi: Option<Rat>,
    pub detail: String,
}

impl ConditionReport {
    fn exact(name: &str, satisfied: bool, lhs: Rat, rhs: Rat, detail: &str) -> Self {
        ConditionReport {
            name: name.into(),
            satisfied,
            lhs: Some(lhs),
            rhs_lo: Some(rhs.clone()),
            rhs_hi: Some(rhs),
            detail: detail.into(),
        }
    }

    fn enclosed(name: &str, satisfied: bool, lhs: Rat, rhs: &RatInterval, detail: &str) -> Self {
        ConditionReport {
            name: name.into(),
            satisfied,
            lhs: Some(lhs),
            rhs_lo: Some(rhs.lo.clone()),
            rhs_hi: Some(rhs.hi.clone()),
            detail: detail.into(),
        }
    }

    fn bare(name: &str, satisfied: bool, detail: &str) -> Self {
        ConditionReport {
            name: name.into(),
            satisfied,
            lhs: None,
            rhs_lo: None,
            rhs_hi: None,
            detail: detail.into(),
        }
    }

    pub fn to_json(&self) -> Value {
        let ratj = |r: &Option<Rat>| -> Value {
            match r {
                Some(v) => crate::jsonio::rat_to_json(v),
                None => Value::Null,
            }
        };
        json!({
            "name": self.name,
            "satisfied": self.satisfied,
            "lhs": ratj(&self.lhs),
            "rhs_lo": ratj(&self.rhs_lo),
            "rhs_hi": ratj(&self.rhs_hi),
            "detail": self.detail,
        })
    }
}

/// Outcome of one lemma verification: hypothesis reports, conclusion report,
/// and the overall verdict (conclusion holds whenever hypotheses do).
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub lemma: String,
    pub hypotheses: Vec<ConditionReport>,
    pub conclusion: ConditionReport,
}

impl LemmaReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|c| c.satisfied)
    }

    /// True when the lemma instance is confirmed: hypotheses and conclusion,
    /// or hypotheses fail (nothing asserted).
    pub fn verdict(&self) -> bool {
        !self.hypotheses_hold() || self.conclusion.satisfied
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lemma": self.lemma,
            "hypothesis_status": self.hypotheses.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "conclusion": self.conclusion.to_json(),
            "verdict": self.verdict(),
        })
    }
}

// ---- Interval construction (recursive R sequence) ----

/// The realized construction: interval [a, b], window parameter L, the
/// R sequence, the chosen index, and the certified conditions.
#[derive(Clone, Debug)]
pub struct IntervalPlan {
    pub a: BigInt,
    pub b: BigInt,
    pub big_l: u64,
    pub r_sequence: Vec<BigInt>,
    pub chosen_index: usize,
    pub conditions: Vec<ConditionReport>,
    pub bound: ConditionReport,
}

impl IntervalPlan {
    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "L": self.big_l,
            "R_sequence": self.r_sequence.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "chosen_index": self.chosen_index,
            "conditions": self.conditions.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "bound": self.bound.to_json(),
        })
    }
}

fn ceil_div(num: &BigInt, den: &BigInt) -> BigInt {
    assert!(den > &BigInt::zero());
    let (q, r) = num_integer::Integer::div_rem(num, den);
    if r.is_zero() || num < &BigInt::zero() {
        q
    } else {
        q + 1
    }
}

fn ceil_rat(r: &Rat) -> BigInt {
    ceil_div(r.numer(), r.denom())
}

/// Ceiling of an enclosed value; errors if the enclosure straddles an
/// integer boundary (enclosures here are ~1e-30 wide, so this is a bug trap,
/// not an expected path).
fn ceil_interval(iv: &RatInterval) -> Result<BigInt> {
    let lo = ceil_rat(&iv.lo);
    let hi = ceil_rat(&iv.hi);
    if lo != hi {
        return Err(Error::Internal(
            "constant enclosure straddles an integer; tighten the enclosure".into(),
        ));
    }
    Ok(lo)
}

/// Degree parameter for bound formulas: max(1, max deg Q_i).
fn degree_param(qs: &[UniPoly]) -> usize {
    qs.iter().map(|q| q.degree_or_zero()).max().unwrap_or(0).max(1)
}

/// Nearest integer in [a, b] to the rational x.
fn clamp_round(x: &Rat, a: &BigInt, b: &BigInt) -> BigInt {
    let half = rat(1, 2);
    let rounded = ceil_rat(&(x - half));
    if &rounded < a {
        a.clone()
    } else if &rounded > b {
        b.clone()
    } else {
        rounded
    }
}

/// Root-distance condition: every root of every nonzero Q stays at distance
/// >= threshold from every integer in [a, b]. Tri-state via enclosures.
fn root_distance_status(
    enclosures: &[Vec<RootEnclosure>],
    a: &BigInt,
    b: &BigInt,
    threshold: &Rat,
) -> IntervalStatus {
    let mut verdict = IntervalStatus::Disjoint;
    for encl in enclosures {
        for e in encl {
            let j = clamp_round(&e.center.re, a, b);
            let jr = Rat::from_integer(j);
            if e.point_distance_at_least(&jr, threshold) {
                continue;
            }
            if e.point_distance_definitely_less(&jr, threshold) {
                return IntervalStatus::Intersects;
            }
            verdict = IntervalStatus::Inconclusive;
        }
    }
    verdict
}

/// Build the interval plan for the given polynomials: L = 9m^2, the
/// recursive R sequence, and the first index whose interval
/// [D^2 L R_i, D^2 L R_i + R_i] certifies conditions (i)-(iv).
pub fn interval_plan(qs: &[UniPoly], a_param: &Rat, degree_cap: usize) -> Result<IntervalPlan> {
    let m = qs.len();
    if m == 0 {
        return Err(Error::Precondition("need at least one polynomial".into()));
    }
    if a_param < &Rat::one() {
        return Err(Error::Precondition("A must be >= 1".into()));
    }
    if degree_cap == 0 {
        return Err(Error::Precondition("D must be >= 1".into()));
    }
    for q in qs {
        if q.degree_or_zero() > degree_cap {
            return Err(Error::Precondition(format!(
                "polynomial degree {} exceeds cap {degree_cap}",
                q.degree_or_zero()
            )));
        }
    }
    let d = degree_cap;
    let big_l: u64 = 9 * (m as u64) * (m as u64);
    let e2 = e_squared();
    // R_1 = ceil(A(m-1)e^2 + 1).
    let base = e2.scale(&(a_param * Rat::from_integer(BigInt::from(m as i64 - 1))));
    let r1 = ceil_interval(&RatInterval::new(
        &base.lo + Rat::one(),
        &base.hi + Rat::one(),
    ))?;
    let t = d * m + 2 * d * m * m;
    let d2l = BigInt::from((d * d) as u64 * big_l);
    let num_factor = &d2l + BigInt::from(d as u64) + BigInt::one();
    let den_factor = &d2l - BigInt::from(d as u64);
    if den_factor <= BigInt::zero() {
        return Err(Error::Internal("D^2 L - D must be positive".into()));
    }
    let mut r_sequence = vec![r1.clone()];
    for _ in 1..t {
        let prev = r_sequence.last().unwrap();
        r_sequence.push(ceil_div(&(prev * &num_factor), &den_factor));
    }

    // Padded intervals [D^2 L R - D R, D^2 L R + D R + R] must be pairwise
    // disjoint for the counting argument; assert on the realized sequence.
    let dd = BigInt::from(d as u64);
    for w in r_sequence.windows(2) {
        let hi_prev = &d2l * &w[0] + &dd * &w[0] + &w[0];
        let lo_next = &d2l * &w[1] - &dd * &w[1];
        if lo_next <= hi_prev {
            return Err(Error::Internal(
                "padded R-sequence intervals failed pairwise disjointness".into(),
            ));
        }
    }

    // Critical sets of pairwise products and root enclosures of the Q_i.
    let mut tol_bits = DEFAULT_TOL_BITS;
    'attempt: while tol_bits <= MAX_TOL_BITS {
        let mut crit_sets = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                if qs[i].is_zero() || qs[j].is_zero() {
                    continue;
                }
                crit_sets.push(critical_set_tol(&qs[i].mul(&qs[j]), tol_bits)?);
            }
        }
        let tol = tol_at(tol_bits);
        let mut q_roots = Vec::new();
        for q in qs {
            if !q.is_zero() && q.degree_or_zero() >= 1 {
                q_roots.push(root_enclosures(q, &tol)?);
            }
        }

        let mut inconclusive_seen = false;
        for (idx, r) in r_sequence.iter().enumerate() {
            let a = &d2l * r;
            let b = &a + r;
            let ar = Rat::from_integer(a.clone());
            let br = Rat::from_integer(b.clone());

            // (i) b - a > A(m-1)e^2, from R > A(m-1)e^2.
            let cond_i_ok = Rat::from_integer(r.clone()) > base.hi;
            // (ii) |j - lambda| >= a / (L D).
            let threshold = &ar / Rat::from_integer(BigInt::from(big_l * d as u64));
            let status_ii = root_distance_status(&q_roots, &a, &b, &threshold);
            // (iii) (b - a)/a <= 1/(D^2 L), exact.
            let lhs_iii = (&br - &ar) * Rat::from_integer(d2l.clone());
            let cond_iii_ok = lhs_iii <= ar;
            // (iv) critical sets avoid [a, b].
            let mut status_iv = IntervalStatus::Disjoint;
            for cs in &crit_sets {
                match cs.interval_status(&ar, &br) {
                    IntervalStatus::Disjoint => {}
                    IntervalStatus::Intersects => {
                        status_iv = IntervalStatus::Intersects;
                        break;
                    }
                    IntervalStatus::Inconclusive => status_iv = IntervalStatus::Inconclusive,
                }
            }

            if matches!(status_ii, IntervalStatus::Inconclusive)
                || matches!(status_iv, IntervalStatus::Inconclusive)
            {
                inconclusive_seen = true;
                continue;
            }
            if !cond_i_ok
                || !cond_iii_ok
                || status_ii != IntervalStatus::Disjoint
                || status_iv != IntervalStatus::Disjoint
            {
                continue;
            }

            // All four conditions certified; assemble the report.
            let conditions = vec![
                ConditionReport::enclosed(
                    "condition_i",
                    true,
                    Rat::from_integer(r.clone()),
                    &base,
                    "b - a > A (m-1) e^2",
                ),
                ConditionReport::bare(
                    "condition_ii",
                    true,
                    "|j - lambda| >= a/(L D) for all integer j in [a, b] and all roots",
                ),
                ConditionReport::exact(
                    "condition_iii",
                    true,
                    lhs_iii,
                    ar.clone(),
                    "(b - a) D^2 L <= a",
                ),
                ConditionReport::bare(
                    "condition_iv",
                    true,
                    "union of C(Q_i Q_j) avoids [a, b]",
                ),
            ];

            // b < 20 A e^3 D^2 m^3 (A + D m).
            let e3 = e_cubed();
            let scalar = a_param
                * Rat::from_integer(BigInt::from(20 * (d * d) as u64))
                * Rat::from_integer(BigInt::from((m * m * m) as u64))
                * (a_param + Rat::from_integer(BigInt::from((d * m) as u64)));
            let bound_iv = e3.scale(&scalar);
            let b_rat = Rat::from_integer(b.clone());
            let bound_ok = b_rat < bound_iv.lo;
            if !bound_ok && b_rat < bound_iv.hi {
                return Err(Error::Internal("b-bound comparison fell inside the e^3 enclosure".into()));
            }
            let bound = ConditionReport::enclosed(
                "b_bound",
                bound_ok,
                b_rat,
                &bound_iv,
                "b < 20 A e^3 D^2 m^3 (A + D m)",
            );
            if !bound_ok {
                return Err(Error::BoundViolation(format!(
                    "interval construction produced b = {b} exceeding 20 A e^3 D^2 m^3 (A+Dm)"
                )));
            }
            return Ok(IntervalPlan {
                a,
                b,
                big_l,
                r_sequence: r_sequence.clone(),
                chosen_index: idx + 1,
                conditions,
                bound,
            });
        }
        if inconclusive_seen {
            tol_bits += 24;
            continue 'attempt;
        }
        break;
    }
    Err(Error::CertificationFailure(
        "no index in the R sequence certified conditions (i)-(iv)".into(),
    ))
}

/// Independent recertification of a finished plan: re-derives the
/// thresholds from (Qs, A, D, m) and re-checks all four conditions with
/// freshly computed enclosures at a tighter tolerance.
pub fn recertify_plan(
    qs: &[UniPoly],
    a_param: &Rat,
    degree_cap: usize,
    plan: &IntervalPlan,
) -> Result<()> {
    let m = qs.len();
    let d = degree_cap;
    let big_l = 9 * (m as u64) * (m as u64);
    if plan.big_l != big_l {
        return Err(Error::BoundViolation(format!(
            "plan L = {} but 9 m^2 = {big_l}",
            plan.big_l
        )));
    }
    let a = &plan.a;
    let b = &plan.b;
    if b <= a || a <= &BigInt::zero() {
        return Err(Error::BoundViolation("plan interval is not positive and increasing".into()));
    }
    // (i) strict: (b - a) > A (m - 1) e^2 certified against the upper bound.
    let len = Rat::from_integer(b - a);
    let rhs = e_squared().scale(&(a_param * Rat::from_integer(BigInt::from(m as i64 - 1))));
    if len <= rhs.hi {
        if len > rhs.lo {
            return Err(Error::Internal("condition (i) recheck inside enclosure".into()));
        }
        return Err(Error::BoundViolation("condition (i) failed on recheck".into()));
    }
    // (iii).
    let lhs = (&len * Rat::from_integer(BigInt::from((d * d) as u64 * big_l))).clone();
    if lhs > Rat::from_integer(a.clone()) {
        return Err(Error::BoundViolation("condition (iii) failed on recheck".into()));
    }
    // (ii): per root of each nonzero Q, walk candidate integers directly.
    let threshold =
        Rat::from_integer(a.clone()) / Rat::from_integer(BigInt::from(big_l * d as u64));
    let tol = tol_at(MAX_TOL_BITS);
    for q in qs {
        if q.is_zero() || q.degree_or_zero() == 0 {
            continue;
        }
        for e in root_enclosures(q, &tol)? {
            let j = clamp_round(&e.center.re, a, b);
            if !e.point_distance_at_least(&Rat::from_integer(j.clone()), &threshold) {
                return Err(Error::BoundViolation(format!(
                    "condition (ii) failed on recheck near j = {j}"
                )));
            }
        }
    }
    // (iv).
    let ar = Rat::from_integer(a.clone());
    let br = Rat::from_integer(b.clone());
    for i in 0..m {
        for jdx in (i + 1)..m {
            if qs[i].is_zero() || qs[jdx].is_zero() {
                continue;
            }
            let cs = critical_set_tol(&qs[i].mul(&qs[jdx]), MAX_TOL_BITS)?;
            if cs.interval_status(&ar, &br) != IntervalStatus::Disjoint {
                return Err(Error::BoundViolation("condition (iv) failed on recheck".into()));
            }
        }
    }
    // b bound.
    let scalar = a_param
        * Rat::from_integer(BigInt::from(20 * (d * d) as u64))
        * Rat::from_integer(BigInt::from((m * m * m) as u64))
        * (a_param + Rat::from_integer(BigInt::from((d * m) as u64)));
    let bound = e_cubed().scale(&scalar);
    if Rat::from_integer(b.clone()) >= bound.lo {
        return Err(Error::BoundViolation("b exceeds the stated bound on recheck".into()));
    }
    Ok(())
}

// ---- Delta search ----

/// First index with Delta(n) != 0, with the evaluated Prop-style cap.
#[derive(Clone, Debug)]
pub struct DeltaWitness {
    pub n: u64,
    pub value: Gaussian,
    pub bound_lo: Rat,
    pub bound_hi: Rat,
    pub m: usize,
    pub degree_cap: usize,
    pub kappa: Rat,
    pub tau: Rat,
}

impl DeltaWitness {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "delta_re": crate::jsonio::rat_to_json(&self.value.re),
            "delta_im": crate::jsonio::rat_to_json(&self.value.im),
            "bound_lo": crate::jsonio::rat_to_json(&self.bound_lo),
            "bound_hi": crate::jsonio::rat_to_json(&self.bound_hi),
            "m": self.m,
            "D": self.degree_cap,
            "kappa": crate::jsonio::rat_to_json(&self.kappa),
            "tau": crate::jsonio::rat_to_json(&self.tau),
        })
    }
}

/// Scan Delta(n) = sum_{j=1..m} Q_j(n) f(n+j) for n = 0, 1, 2, ... and
/// return the first nonzero value, asserting the witness index sits below
/// 168 tau kappa^-1 e^3 D^3 m^4 (evaluated in rational interval
/// arithmetic). The caller certifies the oscillation hypotheses for f.
pub fn delta_search(
    f: &dyn Fn(i64) -> Gaussian,
    qs: &[UniPoly],
    kappa: &Rat,
    tau: &Rat,
) -> Result<DeltaWitness> {
    let m = qs.len();
    if m == 0 {
        return Err(Error::Precondition("need at least one polynomial".into()));
    }
    if qs.iter().all(|q| q.is_zero()) {
        return Err(Error::Precondition("all polynomials are zero".into()));
    }
    if kappa.is_zero() || kappa.is_negative() || tau.is_zero() || tau.is_negative() {
        return Err(Error::Precondition("kappa and tau must be positive".into()));
    }
    if &(tau * Rat::from_integer(BigInt::from(4))) < kappa {
        return Err(Error::Precondition("need 4 tau >= kappa".into()));
    }
    let d = degree_param(qs);
    let scalar = Rat::from_integer(BigInt::from(168u32))
        * tau.clone()
        / kappa.clone()
        * Rat::from_integer(BigInt::from((d * d * d) as u64))
        * Rat::from_integer(BigInt::from((m * m * m * m) as u64));
    let bound = e_cubed().scale(&scalar);
    let scan_cap = ceil_rat(&bound.hi)
        .to_u64()
        .ok_or_else(|| Error::Internal("scan bound exceeds u64".into()))?;
    for n in 0..scan_cap {
        let nn = BigInt::from(n);
        let mut acc = Gaussian::zero();
        for (j, q) in qs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let c = q.eval_int(&nn);
            if !c.is_zero() {
                let fv = f(n as i64 + j as i64 + 1);
                if !fv.is_zero() {
                    acc = &acc + &(&c * &fv);
                }
            }
        }
        if !acc.is_zero() {
            let n_rat = Rat::from_integer(BigInt::from(n));
            if n_rat >= bound.lo {
                if n_rat < bound.hi {
                    return Err(Error::Internal(
                        "witness index fell inside the e^3 enclosure".into(),
                    ));
                }
                return Err(Error::BoundViolation(format!(
                    "Delta({n}) != 0 but n is not below 168 tau kappa^-1 e^3 D^3 m^4"
                )));
            }
            return Ok(DeltaWitness {
                n,
                value: acc,
                bound_lo: bound.lo,
                bound_hi: bound.hi,
                m,
                degree_cap: d,
                kappa: kappa.clone(),
                tau: tau.clone(),
            });
        }
    }
    Err(Error::BoundViolation(format!(
        "Delta(n) = 0 for every n below the stated bound (scanned to {scan_cap}); \
         either a hypothesis fails for f or the bound is violated"
    )))
}

// ---- Lemma checks ----

fn norm_sqr_sum(f: &dyn Fn(i64) -> Gaussian, from: i64, to: i64) -> Rat {
    let mut acc = Rat::zero();
    for n in from..=to {
        acc += f(n).norm_sqr();
    }
    acc
}

/// Lemma-1-style check: hypotheses (i) root distances, (ii) relative window
/// width, (iii) lower bound on sum |f|^2; conclusion
/// sum |Q(j)|^2 |f(j)|^2 >= (b-a) kappa e^-2 max |Q(j)|^2.
pub fn lemma31_check(
    q: &UniPoly,
    f: &dyn Fn(i64) -> Gaussian,
    a: u64,
    b: u64,
    big_l: u64,
    kappa: &Rat,
) -> Result<LemmaReport> {
    if q.is_zero() {
        return Err(Error::Precondition("Q must be nonzero".into()));
    }
    if a >= b {
        return Err(Error::Precondition("need a < b".into()));
    }
    let d = q.degree_or_zero().max(1);
    let ab = BigInt::from(a);
    let bb = BigInt::from(b);
    let ar = Rat::from_integer(ab.clone());
    let br = Rat::from_integer(bb.clone());
    let len = &br - &ar;

    // (i) root distances.
    let threshold = &ar / Rat::from_integer(BigInt::from(big_l * d as u64));
    let mut hyp_i = true;
    if q.degree_or_zero() >= 1 {
        let encl = vec![root_enclosures(q, &tol_at(MAX_TOL_BITS))?];
        hyp_i = matches!(root_distance_status(&encl, &ab, &bb, &threshold), IntervalStatus::Disjoint);
    }
    // (ii) (b-a)/a <= 1/(L D^2).
    let lhs_ii = &len * Rat::from_integer(BigInt::from(big_l * (d * d) as u64));
    let hyp_ii = lhs_ii <= ar;
    // (iii) sum |f|^2 >= kappa (b-a).
    let sum_f = norm_sqr_sum(f, a as i64, b as i64);
    let hyp_iii = sum_f >= kappa * &len;

    // Conclusion.
    let mut lhs = Rat::zero();
    let mut max_q = Rat::zero();
    for j in a..=b {
        let jj = BigInt::from(j);
        let qn = q.norm_sqr_at_int(&jj);
        if qn > max_q {
            max_q = qn.clone();
        }
        lhs += qn * f(j as i64).norm_sqr();
    }
    let rhs_numer = &len * kappa * &max_q;
    let e2 = e_squared();
    // rhs = rhs_numer / e^2 in [rhs_numer/e2.hi, rhs_numer/e2.lo].
    let rhs = RatInterval::new(&rhs_numer / &e2.hi, &rhs_numer / &e2.lo);
    let concl_ok = if lhs >= rhs.hi {
        true
    } else if lhs < rhs.lo {
        false
    } else {
        return Err(Error::Internal("lemma comparison fell inside the e^2 enclosure".into()));
    };

    Ok(LemmaReport {
        lemma: "polynomial-weighted lower bound".into(),
        hypotheses: vec![
            ConditionReport::exact(
                "root_distance",
                hyp_i,
                threshold.clone(),
                threshold,
                "|j - lambda| >= a/(L D) over [a, b]",
            ),
            ConditionReport::exact("window_width", hyp_ii, lhs_ii, ar, "(b-a) L D^2 <= a"),
            ConditionReport::exact(
                "f_mass",
                hyp_iii,
                sum_f,
                kappa * &len,
                "sum |f|^2 >= kappa (b-a)",
            ),
        ],
        conclusion: ConditionReport::enclosed(
            "weighted_mass",
            concl_ok,
            lhs,
            &rhs,
            "sum |Q f|^2 >= (b-a) kappa e^-2 max |Q|^2",
        ),
    })
}

/// Decide |z| <= c * (|u| + |v|) exactly for rational c >= 0 and Gaussian
/// z, u, v: two squarings remove the square roots.
fn abs_le_scaled_abs_sum(z: &Gaussian, c: &Rat, u: &Gaussian, v: &Gaussian) -> bool {
    let x2 = z.norm_sqr();
    let u2 = u.norm_sqr();
    let v2 = v.norm_sqr();
    let c2 = c * c;
    // X^2 <= c^2 (u^2 + v^2 + 2uv): S := X^2 - c^2(u^2+v^2) <= 2 c^2 sqrt(u^2 v^2)
    let s = &x2 - &(&c2 * &(&u2 + &v2));
    if s <= Rat::zero() {
        return true;
    }
    &s * &s <= &(&c2 * &c2) * &(&u2 * &v2) * Rat::from_integer(BigInt::from(4))
}

/// Lemma-2-style check: [a, b] avoids C(Q) and the partial sums of f are
/// bounded by tau; then |sum Q(j) f(n+j)| <= 4 tau (|Q(b)| + |Q(a)|).
pub fn lemma32_check(
    q: &UniPoly,
    f: &dyn Fn(i64) -> Gaussian,
    n: i64,
    a: u64,
    b: u64,
    tau: &Rat,
) -> Result<LemmaReport> {
    if a >= b {
        return Err(Error::Precondition("need a < b".into()));
    }
    let ar = Rat::from_integer(BigInt::from(a));
    let br = Rat::from_integer(BigInt::from(b));
    let cs = critical_set(q)?;
    let hyp_crit = cs.interval_status(&ar, &br) == IntervalStatus::Disjoint;

    let tau2 = tau * tau;
    let mut partial = Gaussian::zero();
    let mut hyp_partial = true;
    let mut total = Gaussian::zero();
    for j in a..=b {
        let fv = f(n + j as i64);
        partial = &partial + &fv;
        if partial.norm_sqr() > tau2 {
            hyp_partial = false;
        }
        let qv = q.eval_int(&BigInt::from(j));
        total = &total + &(&qv * &fv);
    }
    let qa = q.eval_int(&BigInt::from(a));
    let qb = q.eval_int(&BigInt::from(b));
    let four_tau = tau * Rat::from_integer(BigInt::from(4));
    let concl = abs_le_scaled_abs_sum(&total, &four_tau, &qb, &qa);

    Ok(LemmaReport {
        lemma: "summation-by-parts bound".into(),
        hypotheses: vec![
            ConditionReport::bare("critical_set_avoidance", hyp_crit, "[a, b] avoids C(Q)"),
            ConditionReport::exact(
                "partial_sums",
                hyp_partial,
                partial.norm_sqr(),
                tau2,
                "every prefix sum |sum f(n+j)| <= tau (squared comparison)",
            ),
        ],
        conclusion: ConditionReport::exact(
            "weighted_sum",
            concl,
            total.norm_sqr(),
            &(&four_tau * &four_tau) * &(qb.norm_sqr() + qa.norm_sqr()),
            "|sum Q f| <= 4 tau (|Q(b)| + |Q(a)|), decided by double squaring",
        ),
    })
}

/// Lemma-3-style check: all six hypotheses verified exactly, conclusion
/// (some Delta(n) != 0 with n in [a, b]) by exhaustive scan.
#[allow(clippy::too_many_arguments)]
pub fn lemma33_check(
    qs: &[UniPoly],
    f: &dyn Fn(i64) -> Gaussian,
    a: u64,
    b: u64,
    big_l: u64,
    kappa: &Rat,
    tau: &Rat,
) -> Result<LemmaReport> {
    let m = qs.len();
    if m == 0 || a >= b {
        return Err(Error::Precondition("need polynomials and a < b".into()));
    }
    let d = degree_param(qs);
    let ab = BigInt::from(a);
    let bb = BigInt::from(b);
    let ar = Rat::from_integer(ab.clone());
    let br = Rat::from_integer(bb.clone());
    let len = &br - &ar;
    let mut hypotheses = Vec::new();

    // (i) b - a > 4 tau (m-1) e^2 / kappa.
    let scalar = tau * Rat::from_integer(BigInt::from(4 * (m as i64 - 1))) / kappa.clone();
    let rhs_i = e_squared().scale(&scalar);
    let hyp_i = if len > rhs_i.hi {
        true
    } else if len <= rhs_i.lo {
        false
    } else {
        return Err(Error::Internal("hypothesis (i) fell inside the e^2 enclosure".into()));
    };
    hypotheses.push(ConditionReport::enclosed(
        "window_length",
        hyp_i,
        len.clone(),
        &rhs_i,
        "b - a > 4 tau (m-1) e^2 / kappa",
    ));

    // (ii) root distances.
    let threshold = &ar / Rat::from_integer(BigInt::from(big_l * d as u64));
    let mut encl = Vec::new();
    for q in qs {
        if !q.is_zero() && q.degree_or_zero() >= 1 {
            encl.push(root_enclosures(q, &tol_at(MAX_TOL_BITS))?);
        }
    }
    let hyp_ii = matches!(root_distance_status(&encl, &ab, &bb, &threshold), IntervalStatus::Disjoint);
    hypotheses.push(ConditionReport::bare(
        "root_distance",
        hyp_ii,
        "|j - lambda| >= a/(L D) over [a, b] for roots of each nonzero Q_i",
    ));

    // (iii) (b-a)/a <= 1/(D^2 L).
    let lhs_iii = &len * Rat::from_integer(BigInt::from((d * d) as u64 * big_l));
    let hyp_iii = lhs_iii <= ar;
    hypotheses.push(ConditionReport::exact(
        "window_width",
        hyp_iii,
        lhs_iii,
        ar.clone(),
        "(b-a) D^2 L <= a",
    ));

    // (iv) critical sets of pairwise products avoid [a, b].
    let mut hyp_iv = true;
    for i in 0..m {
        for j in (i + 1)..m {
            if qs[i].is_zero() || qs[j].is_zero() {
                continue;
            }
            let cs = critical_set(&qs[i].mul(&qs[j]))?;
            if cs.interval_status(&ar, &br) != IntervalStatus::Disjoint {
                hyp_iv = false;
            }
        }
    }
    hypotheses.push(ConditionReport::bare(
        "critical_set_avoidance",
        hyp_iv,
        "union of C(Q_i Q_j) avoids [a, b]",
    ));

    // (I) shifted f mass.
    let mut hyp_cap_i = true;
    for j in 1..=m as i64 {
        let sum = norm_sqr_sum(f, a as i64 + j, b as i64 + j);
        if sum < kappa * &len {
            hyp_cap_i = false;
        }
    }
    hypotheses.push(ConditionReport::bare(
        "shifted_f_mass",
        hyp_cap_i,
        "sum_{n=a+j}^{b+j} |f|^2 >= kappa (b-a) for j = 1..m",
    ));

    // (II) pair-correlation partial sums over all windows [s, r] in [a, b].
    let tau2 = tau * tau;
    let mut hyp_cap_ii = true;
    let w = (b - a + 1) as usize;
    'pairs: for j in 1..=m as i64 {
        for k in (j + 1)..=m as i64 {
            let mut pre = vec![Gaussian::zero(); w + 1];
            for idx in 0..w {
                let n = a as i64 + idx as i64;
                let term = &f(n + j) * &f(n + k).conj();
                pre[idx + 1] = &pre[idx] + &term;
            }
            for s in 0..w {
                for r in s..w {
                    let val = &pre[r + 1] - &pre[s];
                    if val.norm_sqr() > tau2 {
                        hyp_cap_ii = false;
                        break 'pairs;
                    }
                }
            }
        }
    }
    hypotheses.push(ConditionReport::bare(
        "pair_correlation",
        hyp_cap_ii,
        "|sum_{n=s}^{r} f(n+j) conj(f(n+k))| <= tau for all a <= s <= r <= b, j < k <= m",
    ));

    // Conclusion: exhaustive scan for a nonzero Delta.
    let mut witness: Option<u64> = None;
    for n in a..=b {
        let nn = BigInt::from(n);
        let mut acc = Gaussian::zero();
        for (j, q) in qs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let c = q.eval_int(&nn);
            if !c.is_zero() {
                acc = &acc + &(&c * &f(n as i64 + j as i64 + 1));
            }
        }
        if !acc.is_zero() {
            witness = Some(n);
            break;
        }
    }
    let concl = ConditionReport::bare(
        "delta_nonzero",
        witness.is_some(),
        &match witness {
            Some(n) => format!("Delta({n}) != 0 with n in [a, b]"),
            None => "Delta vanishes on all of [a, b]".to_string(),
        },
    );

    Ok(LemmaReport {
        lemma: "oscillation forces a nonzero Delta".into(),
        hypotheses,
        conclusion: concl,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn const_one() -> impl Fn(i64) -> Gaussian {
        |_| Gaussian::one()
    }

    #[test]
    fn critical_set_cases() {
        // Constant: empty.
        let cs = critical_set(&UniPoly::from_ints(&[5])).unwrap();
        assert!(cs.real_points.is_empty());
        // X^2: zeros of A' = 2X -> {0}.
        let cs = critical_set(&UniPoly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(cs.real_points.len(), 1);
        let (lo, hi) = cs.real_points[0].real_interval().unwrap();
        assert!(lo <= Rat::zero() && Rat::zero() <= hi);
        // (1+i)X: A' and B' are nonzero constants -> empty.
        let q = UniPoly::from_coeffs(vec![
            Gaussian::zero(),
            Gaussian::new(rat_int(1), rat_int(1)),
        ]);
        let cs = critical_set(&q).unwrap();
        assert!(cs.real_points.is_empty());
    }

    #[test]
    fn interval_plan_m2_example() {
        // m = 2, A = 1: R_1 = ceil(e^2 + 1) = 9, L = 36.
        let qs = vec![UniPoly::from_ints(&[1, 1]), UniPoly::from_ints(&[-1, 2])];
        let plan = interval_plan(&qs, &Rat::one(), 1).unwrap();
        assert_eq!(plan.big_l, 36);
        assert_eq!(plan.r_sequence[0], BigInt::from(9));
        assert!(plan.b > plan.a);
        recertify_plan(&qs, &Rat::one(), 1, &plan).unwrap();
    }

    #[test]
    fn delta_search_constant_case() {
        // f = 1, Qs = [1]: witness n = 0, bound 168 e^3 < 3375.
        let qs = vec![UniPoly::one()];
        let w = delta_search(&const_one(), &qs, &Rat::one(), &Rat::one()).unwrap();
        assert_eq!(w.n, 0);
        assert_eq!(w.value, Gaussian::one());
        assert!(w.bound_hi < rat_int(3375));
        assert!(w.bound_lo > rat_int(3374));
    }

    #[test]
    fn delta_search_rejects_all_zero() {
        let qs = vec![UniPoly::zero(), UniPoly::zero()];
        match delta_search(&const_one(), &qs, &Rat::one(), &Rat::one()) {
            Err(Error::Precondition(_)) => {}
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn lemma31_constant_q() {
        // Q = 1, f = 1: lhs = b - a + 1 >= (b-a)/e^2.
        let q = UniPoly::one();
        let rep = lemma31_check(&q, &const_one(), 10, 20, 9, &Rat::one()).unwrap();
        assert!(rep.hypotheses_hold());
        assert!(rep.conclusion.satisfied);
        assert!(rep.verdict());
    }

    #[test]
    fn lemma32_engineered_hypothesis_failure() {
        // tau = 0.01 forces the partial-sum hypothesis to fail for f = 1.
        let q = UniPoly::one();
        let rep = lemma32_check(&q, &const_one(), 0, 3, 9, &rat(1, 100)).unwrap();
        assert!(!rep.hypotheses_hold());
        // Hypothesis failure is reported separately from the conclusion.
        assert!(rep.hypotheses.iter().any(|h| !h.satisfied));
        assert!(rep.verdict(), "nothing asserted when hypotheses fail");
    }

    #[test]
    fn lemma33_constant_smoke() {
        // f = 1, one Q = 1: hypotheses hold trivially at small scale and
        // Delta(n) = 1 everywhere.
        let qs = vec![UniPoly::one()];
        let rep = lemma33_check(&qs, &const_one(), 50, 60, 9, &Rat::one(), &rat_int(20)).unwrap();
        assert!(rep.conclusion.satisfied);
        assert!(rep.verdict());
    }

    #[test]
    fn theorem_reference_values() {
        let p = PrimeModulus::new(101).unwrap();
        // N = sqrt(p) log p exactly would give 1; N = 100 gives ~1.0799.
        let v = theorem_reference(p, 100);
        assert!((v - 1.0799).abs() < 1e-3, "v = {v}");
        // Monotone in N.
        assert!(theorem_reference(p, 50) < theorem_reference(p, 100));
    }
}
