use serde::Serialize;

use super::config::CavityConfig;
use super::fixtures::{load_fixture, FixtureRow, ReferenceFixture};
use crate::angular::{azimuthal_indices, cone_nu};
use crate::error::{Error, Result};
use crate::radial::{frequency_from_root, j_zero, riccati_deriv_zero};
use crate::specfun::SeriesControl;
use crate::Polarization;

/// Recomputed values for one fixture row and their deviations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowCheck {
    pub label: String,
    pub polarization: Polarization,
    /// Azimuthal index actually used (the admissible one nearest the printed m).
    pub m: f64,
    pub m_printed: f64,
    pub nu: f64,
    pub x: f64,
    pub f_ghz: f64,
    pub f_theory_ghz: f64,
    /// Signed, in percent of the printed theory value.
    pub theory_dev_percent: f64,
    pub theory_ok: bool,
    pub root_dev: Option<f64>,
    pub root_ok: bool,
    pub nu_dev: Option<f64>,
    pub nu_ok: bool,
    /// Signed deviation of the recomputed frequency from the reference column.
    pub reference_dev_percent: Option<f64>,
    pub reference_ok: bool,
}

impl RowCheck {
    pub fn pass(&self) -> bool {
        self.theory_ok && self.root_ok && self.nu_ok && self.reference_ok
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub name: String,
    pub rows: Vec<RowCheck>,
    pub max_theory_dev_percent: f64,
    pub mean_theory_dev_percent: f64,
    pub max_reference_dev_percent: Option<f64>,
    pub pass: bool,
}

fn nearest_index(config: &CavityConfig, printed: f64) -> Result<f64> {
    let domain = config.angular_domain()?;
    if !domain.has_wedge() {
        return Ok(printed);
    }
    let count = (printed * domain.azimuth_opening_rad / std::f64::consts::PI).ceil() as usize + 2;
    Ok(azimuthal_indices(&domain, count)
        .into_iter()
        .min_by(|a, b| (a - printed).abs().total_cmp(&(b - printed).abs()))
        .unwrap_or(printed))
}

fn check_row(fx: &ReferenceFixture, i: usize, row: &FixtureRow) -> Result<RowCheck> {
    let config = CavityConfig::new(fx.radius_m, row.wedge_deg, row.cone_deg)?;
    let m = nearest_index(&config, row.m)?;
    let cone = config.cone_half_angle_deg > 0.0;
    let nu = if cone {
        cone_nu(m, row.cone_deg.to_radians(), row.polarization, 1, SeriesControl::default())?
    } else if let Some(k) = row.k {
        m + k as f64
    } else {
        row.nu
            .ok_or_else(|| Error::FixtureParse { line: 0, detail: format!("row {} has no degree", i + 1) })?
    };
    let root = match row.polarization {
        Polarization::TE => j_zero(nu, row.n)?,
        Polarization::TM => riccati_deriv_zero(nu, row.n)?,
    };
    let f_ghz = frequency_from_root(root.x, fx.radius_m) * 1e-9;

    let theory_dev_percent = 100.0 * (f_ghz - row.f_theory_ghz) / row.f_theory_ghz;
    let theory_ok = match fx.theory_tol_ghz {
        Some(tol) => (f_ghz - row.f_theory_ghz).abs() <= tol,
        None => theory_dev_percent.abs() <= fx.theory_tol_percent,
    };
    let root_dev = row.x.map(|x| root.x - x);
    let root_ok = match (root_dev, fx.root_tol) {
        (Some(d), Some(tol)) => d.abs() <= tol,
        _ => true,
    };
    let nu_dev = cone.then_some(row.nu).flatten().map(|p| nu - p);
    let nu_ok = match (nu_dev, fx.nu_tol) {
        (Some(d), Some(tol)) => d.abs() <= tol,
        _ => true,
    };
    let reference_dev_percent = row.f_reference_ghz.map(|r| 100.0 * (f_ghz - r) / r);
    let reference_ok = match (reference_dev_percent, fx.reference_bound_percent) {
        (Some(d), Some(bound)) => d.abs() <= bound + fx.reference_slack_percent,
        _ => true,
    };
    Ok(RowCheck {
        label: row.label.clone().unwrap_or_else(|| (i + 1).to_string()),
        polarization: row.polarization,
        m,
        m_printed: row.m,
        nu,
        x: root.x,
        f_ghz,
        f_theory_ghz: row.f_theory_ghz,
        theory_dev_percent,
        theory_ok,
        root_dev,
        root_ok,
        nu_dev,
        nu_ok,
        reference_dev_percent,
        reference_ok,
    })
}

/// Recomputes every row of a parsed fixture.
pub fn validate_fixture(fx: &ReferenceFixture) -> Result<ValidationReport> {
    let rows = fx
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| check_row(fx, i, r))
        .collect::<Result<Vec<_>>>()?;
    let devs: Vec<f64> = rows.iter().map(|r| r.theory_dev_percent.abs()).collect();
    let max_theory_dev_percent = devs.iter().copied().fold(0.0, f64::max);
    let mean_theory_dev_percent = if devs.is_empty() {
        0.0
    } else {
        devs.iter().sum::<f64>() / devs.len() as f64
    };
    let max_reference_dev_percent = rows
        .iter()
        .filter_map(|r| r.reference_dev_percent.map(f64::abs))
        .reduce(f64::max);
    let pass = rows.iter().all(RowCheck::pass);
    Ok(ValidationReport {
        name: fx.name.clone(),
        rows,
        max_theory_dev_percent,
        mean_theory_dev_percent,
        max_reference_dev_percent,
        pass,
    })
}

/// Recomputes a bundled fixture by name.
pub fn validate(name: &str) -> Result<ValidationReport> {
    validate_fixture(&load_fixture(name)?)
}
