//! Canonical JSON forms for ODEs and recurrences, and the plain-text
//! coefficient-grid format for bivariate polynomials.
//!
//! Rationals serialize as two-element arrays of decimal strings
//! [numerator, denominator], polynomials as coefficient arrays lowest
//! degree first. Only real (rational) coefficients are serializable; the
//! Gaussian field is internal.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gauss::Gaussian;
use crate::holonomy::{LinearOde, PRecurrence};
use crate::poly::{BiPoly, UniPoly};
use crate::rat::Rat;

pub fn rat_to_json(r: &Rat) -> Value {
    json!([r.numer().to_string(), r.denom().to_string()])
}

pub fn gaussian_to_json(c: &Gaussian) -> Result<Value> {
    if !c.is_real() {
        return Err(Error::Parse("non-real coefficient has no canonical JSON form".into()));
    }
    Ok(rat_to_json(&c.re))
}

pub fn unipoly_to_json(p: &UniPoly) -> Result<Value> {
    let coeffs: Result<Vec<Value>> = p.coeffs().iter().map(gaussian_to_json).collect();
    Ok(Value::Array(coeffs?))
}

pub fn ode_to_json(ode: &LinearOde) -> Result<Value> {
    let coeffs: Result<Vec<Value>> = ode.coeffs().iter().map(unipoly_to_json).collect();
    Ok(json!({
        "order": ode.order(),
        "coefficients": coeffs?,
    }))
}

pub fn recurrence_to_json(rec: &PRecurrence) -> Result<Value> {
    let coeffs: Result<Vec<Value>> = rec.coeffs().iter().map(unipoly_to_json).collect();
    Ok(json!({
        "order": rec.order(),
        "coefficients": coeffs?,
    }))
}

fn rat_from_json(v: &Value) -> Result<Rat> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("rational must be [num, den]".into()))?;
    if arr.len() != 2 {
        return Err(Error::Parse("rational must have exactly two entries".into()));
    }
    let num: BigInt = arr[0]
        .as_str()
        .ok_or_else(|| Error::Parse("rational entries must be decimal strings".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad numerator: {e}")))?;
    let den: BigInt = arr[1]
        .as_str()
        .ok_or_else(|| Error::Parse("rational entries must be decimal strings".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad denominator: {e}")))?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rat::new(num, den))
}

pub fn unipoly_from_json(v: &Value) -> Result<UniPoly> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("polynomial must be an array".into()))?;
    let coeffs: Result<Vec<Gaussian>> =
        arr.iter().map(|c| rat_from_json(c).map(Gaussian::from_rat)).collect();
    Ok(UniPoly::from_coeffs(coeffs?))
}

pub fn recurrence_from_json(v: &Value) -> Result<PRecurrence> {
    // Accept either a bare recurrence object or anything carrying a
    // "recurrence" field (e.g. a full conversion report).
    let obj = if let Some(inner) = v.get("recurrence") { inner } else { v };
    let coeffs = obj
        .get("coefficients")
        .ok_or_else(|| Error::Parse("missing 'coefficients'".into()))?
        .as_array()
        .ok_or_else(|| Error::Parse("'coefficients' must be an array".into()))?;
    let polys: Result<Vec<UniPoly>> = coeffs.iter().map(unipoly_from_json).collect();
    PRecurrence::new(polys?)
}

pub fn ode_from_json(v: &Value) -> Result<LinearOde> {
    let obj = if let Some(inner) = v.get("ode") { inner } else { v };
    let coeffs = obj
        .get("coefficients")
        .ok_or_else(|| Error::Parse("missing 'coefficients'".into()))?
        .as_array()
        .ok_or_else(|| Error::Parse("'coefficients' must be an array".into()))?;
    let polys: Result<Vec<UniPoly>> = coeffs.iter().map(unipoly_from_json).collect();
    LinearOde::new(polys?)
}

/// Integer coefficient grid for a BiPoly as JSON rows (Y-degree major).
pub fn bipoly_to_int_grid_json(h: &BiPoly) -> Result<Value> {
    let mut rows = Vec::new();
    let dx = h.deg_x().unwrap_or(0);
    for row in h.rows() {
        let mut cells = Vec::new();
        for alpha in 0..=dx {
            let c = row.coeff(alpha);
            if !c.is_real() || !c.re.denom().is_one() {
                return Err(Error::Parse(
                    "grid serialization requires integer coefficients".into(),
                ));
            }
            cells.push(Value::String(c.re.numer().to_string()));
        }
        rows.push(Value::Array(cells));
    }
    Ok(Value::Array(rows))
}

// ---- Plain-text grid format for h(X, Y) ----

/// Parse the text grid format: rows are Y-degrees (top row = Y^0), columns
/// are X-degrees, whitespace separated integers; one optional leading
/// comment line starting with '#'.
pub fn parse_h_grid(text: &str) -> Result<BiPoly> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('#') {
            if idx == 0 || rows.is_empty() {
                continue;
            }
            return Err(Error::Parse("comment lines are only allowed at the top".into()));
        }
        let row: std::result::Result<Vec<i64>, _> =
            trimmed.split_whitespace().map(str::parse::<i64>).collect();
        rows.push(row.map_err(|e| Error::Parse(format!("line {}: {e}", idx + 1)))?);
    }
    if rows.is_empty() {
        return Err(Error::Parse("empty coefficient grid".into()));
    }
    let h = BiPoly::from_int_grid(&rows);
    if h.is_zero() {
        return Err(Error::Parse("grid holds the zero polynomial".into()));
    }
    Ok(h)
}

/// Render a BiPoly with integer coefficients back to the text grid.
pub fn format_h_grid(h: &BiPoly) -> Result<String> {
    let dx = h.deg_x().unwrap_or(0);
    let mut out = String::new();
    for row in h.rows() {
        let mut cells = Vec::new();
        for alpha in 0..=dx {
            let c = row.coeff(alpha);
            if !c.is_real() || !c.re.denom().is_one() {
                return Err(Error::Parse("grid format requires integer coefficients".into()));
            }
            cells.push(c.re.numer().to_string());
        }
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomy::{algebraic_to_ode, ode_to_recurrence};

    #[test]
    fn grid_round_trip() {
        let text = "# catalan\n1 0\n-1 0\n0 1\n";
        let h = parse_h_grid(text).unwrap();
        assert_eq!(h.deg_x(), Some(1));
        assert_eq!(h.deg_y(), Some(2));
        let back = format_h_grid(&h).unwrap();
        let h2 = parse_h_grid(&back).unwrap();
        assert_eq!(h, h2);
    }

    #[test]
    fn grid_rejects_garbage() {
        assert!(parse_h_grid("").is_err());
        assert!(parse_h_grid("1 2\nx y\n").is_err());
        assert!(parse_h_grid("0\n0\n").is_err());
    }

    #[test]
    fn ode_and_recurrence_json_round_trip() {
        let h = parse_h_grid("1 0\n-1 0\n0 1\n").unwrap();
        let ode = algebraic_to_ode(&h).unwrap();
        let rec = ode_to_recurrence(&ode);
        let jv = ode_to_json(&ode).unwrap();
        let back = ode_from_json(&jv).unwrap();
        assert_eq!(back.coeffs(), ode.coeffs());
        let jr = recurrence_to_json(&rec).unwrap();
        let back = recurrence_from_json(&jr).unwrap();
        assert_eq!(back.coeffs(), rec.coeffs());
    }
}
