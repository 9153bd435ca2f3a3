//! Bundled reference tables.
//!
//! Plain text, one `key = value` header entry or one `row key=value ...`
//! record per line, `#` comments. Numbers may be written as decimals, as
//! fractions such as `2/3`, or as `pi`, `pi/2`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::Polarization;

const BUNDLED: [(&str, &str); 4] = [
    ("table1_universal", include_str!("../../fixtures/table1_universal.txt")),
    ("table2_wedge90", include_str!("../../fixtures/table2_wedge90.txt")),
    ("table3_cone", include_str!("../../fixtures/table3_cone.txt")),
    ("table4_combined", include_str!("../../fixtures/table4_combined.txt")),
];

/// Names of the bundled fixtures.
pub fn fixture_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(n, _)| *n).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureRow {
    pub label: Option<String>,
    pub polarization: Polarization,
    /// Printed degree; an input without a cone, an expected output with one.
    pub nu: Option<f64>,
    pub m: f64,
    pub k: Option<u32>,
    pub n: u32,
    pub wedge_deg: f64,
    pub cone_deg: f64,
    /// Printed dimensionless root, when the table lists it.
    pub x: Option<f64>,
    pub f_theory_ghz: f64,
    pub f_reference_ghz: Option<f64>,
    pub error_percent: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceFixture {
    pub name: String,
    pub provenance: Vec<String>,
    pub radius_m: f64,
    /// Allowed recomputed-vs-printed theory deviation in percent.
    pub theory_tol_percent: f64,
    /// Absolute alternative to the percentage, in GHz.
    pub theory_tol_ghz: Option<f64>,
    pub root_tol: Option<f64>,
    pub nu_tol: Option<f64>,
    pub reference_bound_percent: Option<f64>,
    pub reference_slack_percent: f64,
    pub rows: Vec<FixtureRow>,
}

/// Parses `1.5`, `2/3`, `pi`, `pi/2`, `-0.8`.
pub fn parse_number(s: &str) -> Option<f64> {
    let atom = |t: &str| -> Option<f64> {
        let t = t.trim();
        if t.eq_ignore_ascii_case("pi") {
            Some(PI)
        } else {
            t.parse::<f64>().ok()
        }
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let d = atom(b)?;
            (d != 0.0).then(|| atom(a).map(|n| n / d)).flatten()
        }
        None => atom(s),
    }
}

fn parse_err(line: usize, detail: impl Into<String>) -> Error {
    Error::FixtureParse {
        line,
        detail: detail.into(),
    }
}

fn parse_row(line: usize, body: &str) -> Result<FixtureRow> {
    let mut kv = BTreeMap::new();
    for tok in body.split_whitespace() {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| parse_err(line, format!("expected key=value, got `{tok}`")))?;
        kv.insert(k, v);
    }
    let num = |key: &str| -> Result<Option<f64>> {
        kv.get(key)
            .map(|v| parse_number(v).ok_or_else(|| parse_err(line, format!("bad number for {key}: `{v}`"))))
            .transpose()
    };
    let int = |key: &str| -> Result<Option<u32>> {
        kv.get(key)
            .map(|v| v.parse::<u32>().map_err(|_| parse_err(line, format!("bad integer for {key}: `{v}`"))))
            .transpose()
    };
    let polarization: Polarization = kv
        .get("pol")
        .ok_or_else(|| parse_err(line, "missing pol"))?
        .parse()
        .map_err(|e: Error| parse_err(line, e.to_string()))?;
    let nu = num("nu")?;
    let m = num("m")?.unwrap_or(0.0);
    let f_theory_ghz = num("f_theory_ghz")?.ok_or_else(|| parse_err(line, "missing f_theory_ghz"))?;
    Ok(FixtureRow {
        label: kv.get("label").map(|s| s.to_string()),
        polarization,
        nu,
        m,
        k: int("k")?,
        n: int("n")?.unwrap_or(1),
        wedge_deg: num("wedge_deg")?.unwrap_or(360.0),
        cone_deg: num("cone_deg")?.unwrap_or(0.0),
        x: num("x")?,
        f_theory_ghz,
        f_reference_ghz: num("f_reference_ghz")?,
        error_percent: num("error_percent")?,
    })
}

/// Parses fixture text.
pub fn parse_fixture(text: &str) -> Result<ReferenceFixture> {
    let mut header = BTreeMap::new();
    let mut provenance = Vec::new();
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(c) = t.strip_prefix('#') {
            provenance.push(c.trim().to_string());
            continue;
        }
        if let Some(body) = t.strip_prefix("row ") {
            rows.push(parse_row(line, body)?);
            continue;
        }
        let (k, v) = t
            .split_once('=')
            .ok_or_else(|| parse_err(line, format!("unrecognized line `{t}`")))?;
        header.insert(k.trim().to_string(), v.trim().to_string());
    }
    let num = |key: &str| -> Result<Option<f64>> {
        header
            .get(key)
            .map(|v| parse_number(v).ok_or_else(|| parse_err(0, format!("bad header value for {key}: `{v}`"))))
            .transpose()
    };
    let name = header
        .get("name")
        .cloned()
        .ok_or_else(|| parse_err(0, "missing header `name`"))?;
    let radius_mm = num("radius_mm")?.ok_or_else(|| parse_err(0, "missing header `radius_mm`"))?;
    Ok(ReferenceFixture {
        name,
        provenance,
        radius_m: radius_mm * 1e-3,
        theory_tol_percent: num("theory_tol_percent")?.unwrap_or(0.5),
        theory_tol_ghz: num("theory_tol_ghz")?,
        root_tol: num("root_tol")?,
        nu_tol: num("nu_tol")?,
        reference_bound_percent: num("reference_bound_percent")?,
        reference_slack_percent: num("reference_slack_percent")?.unwrap_or(0.3),
        rows,
    })
}

/// Looks up and parses a bundled fixture by name.
pub fn load_fixture(name: &str) -> Result<ReferenceFixture> {
    let text = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::FixtureNotFound(name.to_string()))?;
    parse_fixture(text)
}
