//! Python bindings for the fekete toolkit.
//!
//! Exact values cross the boundary as decimal strings (rationals as
//! "num/den"), structured results as JSON strings or dicts; nothing is
//! rounded on the Rust side.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use num_bigint::BigInt;

use fekete_core::error::Error;
use fekete_core::gauss::Gaussian;
use fekete_core::guess;
use fekete_core::holonomy;
use fekete_core::jsonio;
use fekete_core::numtheory;
use fekete_core::oscillation;
use fekete_core::poly::{BiPoly, UniPoly};
use fekete_core::rat::Rat;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn prime(p: u64) -> PyResult<numtheory::PrimeModulus> {
    numtheory::PrimeModulus::new(p).map_err(err)
}

fn parse_rat(s: &str) -> PyResult<Rat> {
    let s = s.trim();
    let int = |t: &str| -> PyResult<BigInt> {
        t.parse::<BigInt>()
            .map_err(|e| PyValueError::new_err(format!("bad number '{t}': {e}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = int(d)?;
            if den == BigInt::from(0) {
                return Err(PyValueError::new_err("zero denominator"));
            }
            Ok(Rat::new(int(n)?, den))
        }
        None => Ok(Rat::from_integer(int(s)?)),
    }
}

fn rat_str(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn gaussian_str(g: &Gaussian) -> String {
    if g.is_real() {
        rat_str(&g.re)
    } else {
        format!("{g}")
    }
}

fn grid_to_bipoly(grid: Vec<Vec<i64>>) -> PyResult<BiPoly> {
    let h = BiPoly::from_int_grid(&grid);
    if h.is_zero() {
        return Err(PyValueError::new_err("zero polynomial grid"));
    }
    Ok(h)
}

fn coeffs_to_unipoly(coeffs: Vec<String>) -> PyResult<UniPoly> {
    let parsed: PyResult<Vec<Gaussian>> =
        coeffs.iter().map(|s| parse_rat(s).map(Gaussian::from_rat)).collect();
    Ok(UniPoly::from_coeffs(parsed?))
}

// ---- Number theory ----

#[pyfunction]
fn legendre_symbol(n: i64, p: u64) -> PyResult<i8> {
    Ok(numtheory::legendre_symbol(n, prime(p)?))
}

#[pyfunction]
fn fekete_coefficients(p: u64, count: usize) -> PyResult<Vec<i8>> {
    Ok(numtheory::fekete_coefficients(prime(p)?, count))
}

#[pyfunction]
fn smallest_nonresidue(p: u64) -> PyResult<u64> {
    Ok(numtheory::smallest_nonresidue(prime(p)?))
}

#[pyfunction]
fn incomplete_pair_sum(p: u64, j: u64, h: u64, start: i64, length: u64) -> PyResult<i64> {
    numtheory::incomplete_pair_sum(prime(p)?, j, h, start, length).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (p, max_length, shifts=None))]
fn max_incomplete_sum(
    py: Python<'_>,
    p: u64,
    max_length: u64,
    shifts: Option<(u64, u64)>,
) -> PyResult<Py<PyDict>> {
    let rep = numtheory::max_incomplete_sum(prime(p)?, max_length, shifts).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("p", rep.p)?;
    d.set_item("shift_pair", rep.shift_pair)?;
    d.set_item("start", rep.start)?;
    d.set_item("length", rep.length)?;
    d.set_item("value", rep.value)?;
    d.set_item("normalized", rep.normalized)?;
    Ok(d.into())
}

// ---- Holonomy pipeline ----

#[pyfunction]
fn series_root(grid: Vec<Vec<i64>>, branch: Vec<String>, count: usize) -> PyResult<Vec<String>> {
    let h = grid_to_bipoly(grid)?;
    let branch: PyResult<Vec<Gaussian>> =
        branch.iter().map(|s| parse_rat(s).map(Gaussian::from_rat)).collect();
    let terms = holonomy::series_root(&h, &branch?, count).map_err(err)?;
    Ok(terms.iter().map(gaussian_str).collect())
}

/// Full conversion: returns the same JSON document as the CLI alg2rec
/// command (h, ode, recurrence, bounds, audit).
#[pyfunction]
fn alg2rec(grid: Vec<Vec<i64>>) -> PyResult<String> {
    let h = grid_to_bipoly(grid)?;
    let ode = holonomy::algebraic_to_ode(&h).map_err(err)?;
    let rec = holonomy::ode_to_recurrence(&ode);
    let bounds = holonomy::check_bounds(&h, &ode, &rec);
    let audit = holonomy::audit_bounds(&h, &ode, &rec);
    let v = serde_json::json!({
        "h": jsonio::bipoly_to_int_grid_json(&h).map_err(err)?,
        "ode": jsonio::ode_to_json(&ode).map_err(err)?,
        "recurrence": jsonio::recurrence_to_json(&rec).map_err(err)?,
        "bounds": serde_json::to_value(&bounds).expect("serializable"),
        "audit": serde_json::to_value(&audit).expect("serializable"),
    });
    Ok(v.to_string())
}

#[pyfunction]
fn extend_recurrence(rec_json: &str, initial: Vec<String>, count: usize) -> PyResult<Vec<String>> {
    let v: serde_json::Value =
        serde_json::from_str(rec_json).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let rec = jsonio::recurrence_from_json(&v).map_err(err)?;
    let init: PyResult<Vec<Gaussian>> =
        initial.iter().map(|s| parse_rat(s).map(Gaussian::from_rat)).collect();
    let terms = holonomy::extend(&rec, &init?, count).map_err(err)?;
    Ok(terms.iter().map(gaussian_str).collect())
}

#[pyfunction]
fn verify_annihilates(rec_json: &str, terms: Vec<String>) -> PyResult<bool> {
    let v: serde_json::Value =
        serde_json::from_str(rec_json).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let rec = jsonio::recurrence_from_json(&v).map_err(err)?;
    let parsed: PyResult<Vec<Gaussian>> =
        terms.iter().map(|s| parse_rat(s).map(Gaussian::from_rat)).collect();
    Ok(holonomy::verify_annihilates(&rec, &parsed?))
}

// ---- Guessing ----

#[pyfunction]
fn guess_algebraic(terms: Vec<String>, d: usize) -> PyResult<Option<String>> {
    let values: PyResult<Vec<Rat>> = terms.iter().map(|s| parse_rat(s)).collect();
    let prefix = guess::SeriesPrefix::new(values?).map_err(err)?;
    Ok(guess::guess_algebraic(&prefix, d).map(|g| {
        serde_json::json!({
            "d": g.degree,
            "witness_h": jsonio::bipoly_to_int_grid_json(&g.h).unwrap(),
            "residual_order": g.residual_order,
        })
        .to_string()
    }))
}

#[pyfunction]
fn min_algebraic_degree(terms: Vec<String>) -> PyResult<(usize, String)> {
    let values: PyResult<Vec<Rat>> = terms.iter().map(|s| parse_rat(s)).collect();
    let prefix = guess::SeriesPrefix::new(values?).map_err(err)?;
    let (d, g) = guess::min_algebraic_degree(&prefix);
    let witness = serde_json::json!({
        "d": g.degree,
        "witness_h": jsonio::bipoly_to_int_grid_json(&g.h).map_err(err)?,
        "residual_order": g.residual_order,
    });
    Ok((d, witness.to_string()))
}

#[pyfunction]
fn guess_recurrence(terms: Vec<String>, order: usize, degree: usize) -> PyResult<Option<String>> {
    let values: PyResult<Vec<Rat>> = terms.iter().map(|s| parse_rat(s)).collect();
    let rec = guess::guess_recurrence(&values?, order, degree).map_err(err)?;
    match rec {
        Some(r) => Ok(Some(
            jsonio::recurrence_to_json(&r).map_err(err)?.to_string(),
        )),
        None => Ok(None),
    }
}

#[pyfunction]
fn compute_dpn(py: Python<'_>, p: u64, n: usize) -> PyResult<Py<PyDict>> {
    let res = guess::compute_dpn(prime(p)?, n).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("p", res.p)?;
    d.set_item("N", res.n)?;
    d.set_item("d", res.d)?;
    d.set_item(
        "witness_h",
        jsonio::bipoly_to_int_grid_json(&res.witness.h).map_err(err)?.to_string(),
    )?;
    d.set_item("theorem_reference_value", res.theorem_reference)?;
    d.set_item("n_ge_p", res.n_ge_p)?;
    Ok(d.into())
}

// ---- Oscillation ----

#[pyfunction]
fn theorem_reference(p: u64, n: usize) -> PyResult<f64> {
    Ok(oscillation::theorem_reference(prime(p)?, n))
}

#[pyfunction]
fn critical_set(coeffs: Vec<String>) -> PyResult<String> {
    let q = coeffs_to_unipoly(coeffs)?;
    let cs = oscillation::critical_set(&q).map_err(err)?;
    let points: Vec<serde_json::Value> = cs
        .real_points
        .iter()
        .map(|e| {
            let (lo, hi) = e.real_interval().expect("real enclosure");
            serde_json::json!({
                "lo": rat_str(&lo),
                "hi": rat_str(&hi),
                "multiplicity": e.multiplicity,
            })
        })
        .collect();
    Ok(serde_json::json!({ "real_points": points }).to_string())
}

#[pyfunction]
fn interval_plan(qs: Vec<Vec<String>>, a: &str, degree_cap: usize) -> PyResult<String> {
    let polys: PyResult<Vec<UniPoly>> = qs.into_iter().map(coeffs_to_unipoly).collect();
    let a_rat = parse_rat(a)?;
    let plan = oscillation::interval_plan(&polys?, &a_rat, degree_cap).map_err(err)?;
    Ok(plan.to_json().to_string())
}

/// Delta search against the Legendre sequence mod p.
#[pyfunction]
fn delta_search_legendre(p: u64, qs: Vec<Vec<String>>, kappa: &str, tau: &str) -> PyResult<String> {
    let polys: PyResult<Vec<UniPoly>> = qs.into_iter().map(coeffs_to_unipoly).collect();
    let polys = polys?;
    let series = numtheory::FeketeSeries::new(prime(p)?);
    let f = |n: i64| Gaussian::from_int(series.coeff(n) as i64);
    let w = oscillation::delta_search(&f, &polys, &parse_rat(kappa)?, &parse_rat(tau)?)
        .map_err(err)?;
    Ok(w.to_json().to_string())
}

#[pymodule]
fn fekete_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(legendre_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(fekete_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(smallest_nonresidue, m)?)?;
    m.add_function(wrap_pyfunction!(incomplete_pair_sum, m)?)?;
    m.add_function(wrap_pyfunction!(max_incomplete_sum, m)?)?;
    m.add_function(wrap_pyfunction!(series_root, m)?)?;
    m.add_function(wrap_pyfunction!(alg2rec, m)?)?;
    m.add_function(wrap_pyfunction!(extend_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(verify_annihilates, m)?)?;
    m.add_function(wrap_pyfunction!(guess_algebraic, m)?)?;
    m.add_function(wrap_pyfunction!(min_algebraic_degree, m)?)?;
    m.add_function(wrap_pyfunction!(guess_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(compute_dpn, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_reference, m)?)?;
    m.add_function(wrap_pyfunction!(critical_set, m)?)?;
    m.add_function(wrap_pyfunction!(interval_plan, m)?)?;
    m.add_function(wrap_pyfunction!(delta_search_legendre, m)?)?;
    Ok(())
}
