//! Command-line surface: exact Fekete/character-sum computations, the
//! annihilator -> ODE -> recurrence pipeline, d_p(N) grids, oscillation
//! suites, and the full acceptance reproduction run.
//!
//! Exit codes: 0 success, 2 usage/parse error, 3 mathematical precondition
//! violation, 4 bound-violation counterexample. Logs go to stderr; data goes
//! to stdout or --out.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use fekete_core::acceptance::{self, DEFAULT_SEED};
use fekete_core::error::Error;
use fekete_core::gauss::Gaussian;
use fekete_core::guess::{compute_dpn, guess_algebraic, guess_recurrence, SeriesPrefix};
use fekete_core::holonomy::{algebraic_to_ode, audit_bounds, check_bounds, extend, ode_to_recurrence};
use fekete_core::jsonio;
use fekete_core::numtheory::{fekete_coefficients, max_incomplete_sum, FeketeSeries, PrimeModulus};
use fekete_core::oscillation::{delta_search, interval_plan, recertify_plan};
use fekete_core::rat::Rat;

#[derive(Parser)]
#[command(name = "fekete", version, about = "Exact arithmetic for Fekete polynomials, holonomic recurrences and oscillation bounds")]
struct Cli {
    /// RNG seed for the seeded suites; fixed seed gives byte-identical output.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Worker threads for grid scans (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Output format for tabular data.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write data here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the first `count` Fekete coefficients (n|p).
    Fekete {
        #[arg(short, long)]
        prime: u64,
        #[arg(short, long)]
        count: usize,
    },
    /// Exhaustive incomplete character-sum scan, maximizing |value|.
    Charsum {
        #[arg(short, long)]
        prime: u64,
        /// Scan lengths 1..=max-length (default p).
        #[arg(long)]
        max_length: Option<u64>,
        /// Optional shift pair "j,h" turning the summand into f(n+j)f(n+h).
        #[arg(long)]
        shifts: Option<String>,
    },
    /// Convert an annihilating polynomial (text grid file) to an ODE and
    /// recurrence, with bound reports.
    Alg2rec {
        /// Coefficient grid: rows = Y-degree, columns = X-degree.
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Extend a sequence with a recurrence (JSON from alg2rec or guess).
    Extend {
        #[arg(short, long)]
        rec: PathBuf,
        /// Comma-separated initial terms (integers or rationals like 3/4).
        #[arg(short, long)]
        initial: String,
        #[arg(short, long)]
        count: usize,
    },
    /// Guess an algebraic annihilator or a polynomial recurrence from terms.
    Guess {
        /// Comma-separated terms (integers or rationals).
        #[arg(long, conflicts_with = "terms_file")]
        terms: Option<String>,
        /// File with one term per line.
        #[arg(long)]
        terms_file: Option<PathBuf>,
        /// Algebraic mode: per-variable degree bound d.
        #[arg(long, conflicts_with_all = ["order", "degree"])]
        algebraic_degree: Option<usize>,
        /// Recurrence mode: order cap L.
        #[arg(short = 'L', long)]
        order: Option<usize>,
        /// Recurrence mode: coefficient degree cap D.
        #[arg(short = 'D', long)]
        degree: Option<usize>,
    },
    /// d_p(N) grid over a prime list and an N range.
    Dpn {
        /// Comma-separated primes.
        #[arg(short, long)]
        primes: String,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Oscillation suites: smoke (constant f), legendre (seeded witness
    /// trials), grid (interval construction with recertification).
    Oscillation {
        #[arg(long, value_enum, default_value_t = Suite::Smoke)]
        suite: Suite,
        /// Trial count for the legendre suite.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Run the full acceptance suite and print one line per criterion.
    Repro,
}

#[derive(Copy, Clone, ValueEnum)]
enum Suite {
    Smoke,
    Legendre,
    Grid,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("fekete: failed to size worker pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fekete: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::BoundViolation(_) => 4,
        Error::InvalidModulus(..)
        | Error::InvalidArgument(_)
        | Error::Precondition(_)
        | Error::InsufficientData { .. }
        | Error::SingularBranch
        | Error::BranchMismatch
        | Error::SingularIndex(_)
        | Error::ReducibleModulus { .. }
        | Error::DivisionByZero => 3,
        Error::CertificationFailure(_) | Error::Internal(_) => 4,
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| Error::Parse(format!("stdout: {e}")))
        }
    }
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt, Error> {
        t.parse::<BigInt>().map_err(|e| Error::Parse(format!("bad number '{t}': {e}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den == BigInt::from(0) {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

fn parse_rat_list(s: &str) -> Result<Vec<Rat>, Error> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_rat).collect()
}

fn rat_display(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn require_json(format: Format, what: &str) -> Result<(), Error> {
    if format == Format::Csv {
        return Err(Error::Parse(format!("{what} has no CSV form; use --format json")));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.cmd {
        Cmd::Fekete { prime, count } => cmd_fekete(cli, *prime, *count),
        Cmd::Charsum { prime, max_length, shifts } => {
            cmd_charsum(cli, *prime, *max_length, shifts.as_deref())
        }
        Cmd::Alg2rec { input } => cmd_alg2rec(cli, input),
        Cmd::Extend { rec, initial, count } => cmd_extend(cli, rec, initial, *count),
        Cmd::Guess { terms, terms_file, algebraic_degree, order, degree } => cmd_guess(
            cli,
            terms.as_deref(),
            terms_file.as_deref(),
            *algebraic_degree,
            *order,
            *degree,
        ),
        Cmd::Dpn { primes, n_min, n_max } => cmd_dpn(cli, primes, *n_min, *n_max),
        Cmd::Oscillation { suite, trials } => cmd_oscillation(cli, *suite, *trials),
        Cmd::Repro => cmd_repro(cli),
    }
}

fn cmd_fekete(cli: &Cli, prime: u64, count: usize) -> Result<(), Error> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be >= 1".into()));
    }
    let p = PrimeModulus::new(prime)?;
    let coeffs = fekete_coefficients(p, count);
    match cli.format {
        Format::Json => {
            let v = json!({ "p": prime, "count": count, "coefficients": coeffs });
            emit(&cli.out, &json_line(&v))
        }
        Format::Csv => {
            let mut s = String::from("n,value\n");
            for (n, c) in coeffs.iter().enumerate() {
                s.push_str(&format!("{n},{c}\n"));
            }
            emit(&cli.out, &s)
        }
    }
}

fn parse_shifts(s: &str) -> Result<(u64, u64), Error> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse("shifts must be 'j,h'".into()));
    }
    let j = parts[0].trim().parse().map_err(|e| Error::Parse(format!("bad shift: {e}")))?;
    let h = parts[1].trim().parse().map_err(|e| Error::Parse(format!("bad shift: {e}")))?;
    Ok((j, h))
}

fn cmd_charsum(cli: &Cli, prime: u64, max_length: Option<u64>, shifts: Option<&str>) -> Result<(), Error> {
    let p = PrimeModulus::new(prime)?;
    let max_length = max_length.unwrap_or(prime);
    let shift_pair = shifts.map(parse_shifts).transpose()?;
    let report = max_incomplete_sum(p, max_length, shift_pair)?;
    match cli.format {
        Format::Json => {
            let v = serde_json::to_value(&report).expect("serializable");
            emit(&cli.out, &json_line(&v))
        }
        Format::Csv => {
            let (j, h) = match report.shift_pair {
                Some((j, h)) => (j.to_string(), h.to_string()),
                None => (String::new(), String::new()),
            };
            let s = format!(
                "p,j,h,start,length,value,normalized\n{},{},{},{},{},{},{}\n",
                report.p, j, h, report.start, report.length, report.value, report.normalized
            );
            emit(&cli.out, &s)
        }
    }
}

fn cmd_alg2rec(cli: &Cli, input: &PathBuf) -> Result<(), Error> {
    require_json(cli.format, "alg2rec output")?;
    let text = fs::read_to_string(input)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", input.display())))?;
    let h = jsonio::parse_h_grid(&text)?;
    let ode = algebraic_to_ode(&h)?;
    let rec = ode_to_recurrence(&ode);
    let bounds = check_bounds(&h, &ode, &rec);
    let audit = audit_bounds(&h, &ode, &rec);
    let v = json!({
        "h": jsonio::bipoly_to_int_grid_json(&h)?,
        "ode": jsonio::ode_to_json(&ode)?,
        "recurrence": jsonio::recurrence_to_json(&rec)?,
        "bounds": serde_json::to_value(&bounds).expect("serializable"),
        "audit": serde_json::to_value(&audit).expect("serializable"),
    });
    emit(&cli.out, &json_line(&v))
}

fn cmd_extend(cli: &Cli, rec_path: &PathBuf, initial: &str, count: usize) -> Result<(), Error> {
    let text = fs::read_to_string(rec_path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", rec_path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    let rec = jsonio::recurrence_from_json(&v)?;
    let init: Vec<Gaussian> =
        parse_rat_list(initial)?.into_iter().map(Gaussian::from_rat).collect();
    let terms = extend(&rec, &init, count)?;
    match cli.format {
        Format::Json => {
            let arr: Result<Vec<Value>, Error> =
                terms.iter().map(jsonio::gaussian_to_json).collect();
            let v = json!({ "count": count, "terms": arr? });
            emit(&cli.out, &json_line(&v))
        }
        Format::Csv => {
            let mut s = String::from("n,value\n");
            for (n, t) in terms.iter().enumerate() {
                s.push_str(&format!("{n},{}\n", rat_display(&t.re)));
            }
            emit(&cli.out, &s)
        }
    }
}

fn cmd_guess(
    cli: &Cli,
    terms: Option<&str>,
    terms_file: Option<&std::path::Path>,
    algebraic_degree: Option<usize>,
    order: Option<usize>,
    degree: Option<usize>,
) -> Result<(), Error> {
    require_json(cli.format, "guess output")?;
    let raw = match (terms, terms_file) {
        (Some(t), None) => t.to_string(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect::<Vec<_>>()
            .join(","),
        _ => return Err(Error::Parse("supply exactly one of --terms / --terms-file".into())),
    };
    let values = parse_rat_list(&raw)?;
    match (algebraic_degree, order, degree) {
        (Some(d), None, None) => {
            let prefix = SeriesPrefix::new(values)?;
            let v = match guess_algebraic(&prefix, d) {
                Some(g) => json!({
                    "found": true,
                    "d": g.degree,
                    "witness_h": jsonio::bipoly_to_int_grid_json(&g.h)?,
                    "residual_order": g.residual_order,
                }),
                None => json!({ "found": false, "d": d }),
            };
            emit(&cli.out, &json_line(&v))
        }
        (None, Some(l), Some(d)) => {
            let v = match guess_recurrence(&values, l, d)? {
                Some(rec) => json!({
                    "found": true,
                    "recurrence": jsonio::recurrence_to_json(&rec)?,
                }),
                None => json!({ "found": false }),
            };
            emit(&cli.out, &json_line(&v))
        }
        _ => Err(Error::Parse(
            "choose a mode: --algebraic-degree d, or --order L with --degree D".into(),
        )),
    }
}

fn cmd_dpn(cli: &Cli, primes: &str, n_min: usize, n_max: usize) -> Result<(), Error> {
    if n_min < 2 || n_max < n_min {
        return Err(Error::InvalidArgument("need 2 <= n_min <= n_max".into()));
    }
    let plist: Result<Vec<u64>, Error> = primes
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u64>().map_err(|e| Error::Parse(format!("bad prime: {e}"))))
        .collect();
    let mut rows = Vec::new();
    for p in plist? {
        let pm = PrimeModulus::new(p)?;
        for n in n_min..=n_max {
            let res = compute_dpn(pm, n)?;
            if res.n_ge_p {
                eprintln!("fekete: note: N = {n} >= p = {p}; outside the N < p regime");
            }
            rows.push(res);
        }
    }
    match cli.format {
        Format::Json => {
            let arr: Result<Vec<Value>, Error> = rows
                .iter()
                .map(|r| {
                    Ok(json!({
                        "p": r.p,
                        "N": r.n,
                        "d": r.d,
                        "witness_h": jsonio::bipoly_to_int_grid_json(&r.witness.h)?,
                        "theorem_reference_value": r.theorem_reference,
                        "n_ge_p": r.n_ge_p,
                    }))
                })
                .collect();
            emit(&cli.out, &json_line(&Value::Array(arr?)))
        }
        Format::Csv => {
            let mut s = String::from("p,N,d_p(N),bound_value\n");
            for r in &rows {
                s.push_str(&format!("{},{},{},{}\n", r.p, r.n, r.d, r.theorem_reference));
            }
            emit(&cli.out, &s)
        }
    }
}

fn cmd_oscillation(cli: &Cli, suite: Suite, trials: usize) -> Result<(), Error> {
    require_json(cli.format, "oscillation reports")?;
    use rand::SeedableRng;
    match suite {
        Suite::Smoke => {
            // Constant sequence, single constant polynomial.
            let qs = vec![fekete_core::poly::UniPoly::one()];
            let f = |_: i64| Gaussian::one();
            let w = delta_search(&f, &qs, &Rat::one(), &Rat::one())?;
            let v = json!({ "suite": "smoke", "witness": w.to_json() });
            emit(&cli.out, &json_line(&v))
        }
        Suite::Legendre => {
            let p = PrimeModulus::new(101).unwrap();
            let fs = FeketeSeries::new(p);
            let f = |n: i64| Gaussian::from_int(fs.coeff(n) as i64);
            let tau = acceptance::legendre_tau(p, 3);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cli.seed ^ 0xDE17A);
            let mut witnesses = Vec::new();
            for trial in 0..trials {
                let qs = acceptance::random_qs(&mut rng, 3, 2);
                match delta_search(&f, &qs, &Rat::one(), &tau) {
                    Ok(w) => witnesses.push(json!({ "trial": trial, "witness": w.to_json() })),
                    Err(e) => {
                        let dump = json!({
                            "suite": "legendre",
                            "trial": trial,
                            "error": e.to_string(),
                            "qs": format!("{qs:?}"),
                        });
                        emit(&cli.out, &json_line(&dump))?;
                        return Err(Error::BoundViolation(format!("trial {trial}: {e}")));
                    }
                }
            }
            let v = json!({
                "suite": "legendre",
                "p": 101,
                "m": 3,
                "D": 2,
                "kappa": "1",
                "tau": tau.to_string(),
                "trials": trials,
                "witnesses": witnesses,
            });
            emit(&cli.out, &json_line(&v))
        }
        Suite::Grid => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cli.seed ^ 0x1E34);
            let mut cells = Vec::new();
            for a_param in [1i64, 10, 100] {
                for degree_cap in [1usize, 2, 3] {
                    for m in [1usize, 2, 3] {
                        let qs = acceptance::random_qs(&mut rng, m, degree_cap);
                        let a_rat = Rat::from_integer(BigInt::from(a_param));
                        let plan = interval_plan(&qs, &a_rat, degree_cap)?;
                        recertify_plan(&qs, &a_rat, degree_cap, &plan)?;
                        cells.push(json!({
                            "A": a_param,
                            "D": degree_cap,
                            "m": m,
                            "plan": plan.to_json(),
                            "recertified": true,
                        }));
                    }
                }
            }
            let v = json!({ "suite": "grid", "cells": cells });
            emit(&cli.out, &json_line(&v))
        }
    }
}

fn cmd_repro(cli: &Cli) -> Result<(), Error> {
    let outcomes = acceptance::run_all(cli.seed);
    let mut text = String::new();
    for o in &outcomes {
        text.push_str(&o.line());
        text.push('\n');
    }
    emit(&cli.out, &text)?;
    if outcomes.iter().all(|o| o.passed) {
        Ok(())
    } else {
        Err(Error::BoundViolation("one or more acceptance criteria failed".into()))
    }
}
