//! Output encodings. Rationals are written as separate numerator and
//! denominator fields; floats with 15 significant digits.

use std::fmt::Write as _;

use serde_json::{json, Value};
use xopkit_core::bispectral::BandMatrix;
use xopkit_core::numerics::{Orthogonality, SpectrumResult};
use xopkit_core::{FamilyParams, Rational, UniPoly};

pub fn sig15(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    format!("{rounded:?}")
}

pub fn rational_json(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn params_json(p: &FamilyParams) -> Value {
    let mut v = json!({
        "family": p.family.to_string(),
        "ell": p.ell,
        "g": p.g.to_string(),
    });
    if !p.family.is_laguerre() {
        v["h"] = json!(p.h.to_string());
    }
    v
}

/// One generated polynomial.
pub struct GenRow {
    pub n: usize,
    pub poly: UniPoly,
    pub eigenvalue_os: Rational,
}

pub fn gen_json(params: &FamilyParams, rows: &[GenRow]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "degree": r.poly.degree(),
                "eigenvalue_os": r.eigenvalue_os.to_string(),
                "coefficients": r.poly.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "params": params_json(params), "variable": "eta", "rows": rows })
}

pub fn gen_csv(rows: &[GenRow]) -> String {
    let width = rows
        .iter()
        .filter_map(|r| r.poly.degree())
        .max()
        .map_or(0, |d| d + 1);
    let mut out = String::from("n,degree,eigenvalue_os");
    for k in 0..width {
        write!(out, ",coeff_{k}_num,coeff_{k}_den").unwrap();
    }
    out.push('\n');
    for r in rows {
        let degree = r.poly.degree().map_or_else(String::new, |d| d.to_string());
        write!(out, "{},{},{}", r.n, degree, r.eigenvalue_os).unwrap();
        for k in 0..width {
            let c = r.poly.coeff(k);
            write!(out, ",{},{}", c.numer(), c.denom()).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn band_csv(m: &BandMatrix) -> String {
    let mut out = String::from("row,col,num,den\n");
    for (&(i, j), v) in m.entries() {
        writeln!(out, "{i},{j},{},{}", v.numer(), v.denom()).unwrap();
    }
    out
}

pub fn spectrum_csv(s: &SpectrumResult, exact: &[f64]) -> String {
    let mut out = String::from("level,eigenvalue,closed_form,relative_error\n");
    let errors = s.relative_errors(exact);
    for (k, e) in s.eigenvalues.iter().enumerate() {
        writeln!(
            out,
            "{k},{},{},{}",
            sig15(*e),
            sig15(exact[k]),
            sig15(errors[k])
        )
        .unwrap();
    }
    out
}

pub fn spectrum_json(
    params: &FamilyParams,
    side: &str,
    s: &SpectrumResult,
    exact: &[f64],
) -> Value {
    let errors = s.relative_errors(exact);
    let levels: Vec<Value> = s
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(k, e)| {
            json!({
                "level": k,
                "eigenvalue": sig15(*e),
                "closed_form": sig15(exact[k]),
                "relative_error": sig15(errors[k]),
            })
        })
        .collect();
    json!({
        "params": params_json(params),
        "side": side,
        "grid": s.grid,
        "domain": [sig15(s.domain.0), sig15(s.domain.1)],
        "order": s.order,
        "levels": levels,
    })
}

pub fn ortho_csv(o: &Orthogonality) -> String {
    let mut out = String::from("n,m,gram,normalized\n");
    for (n, row) in o.gram.iter().enumerate() {
        for (m, g) in row.iter().enumerate() {
            writeln!(out, "{n},{m},{},{}", sig15(*g), sig15(o.normalized[n][m])).unwrap();
        }
    }
    out
}

pub fn ortho_json(params: &FamilyParams, order: usize, o: &Orthogonality) -> Value {
    let entries: Vec<Value> = o
        .gram
        .iter()
        .enumerate()
        .flat_map(|(n, row)| {
            row.iter().enumerate().map(move |(m, g)| {
                json!({ "n": n, "m": m, "gram": sig15(*g), "normalized": sig15(o.normalized[n][m]) })
            })
        })
        .collect();
    json!({
        "params": params_json(params),
        "order": order,
        "max_residual": sig15(o.max_residual),
        "diagonal_ratios": o.diagonal_ratios.iter().map(|x| sig15(*x)).collect::<Vec<_>>(),
        "entries": entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(sig15(14.0), "14.0");
        assert_eq!(sig15(1.0 / 3.0), "0.333333333333333");
        assert_eq!(sig15(4.5e-8), "4.5e-8");
    }
}
