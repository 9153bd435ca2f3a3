use serde::Serialize;

use super::config::CavityConfig;
use crate::angular::{azimuthal_indices, cone_nu};
use crate::error::{Error, Result};
use crate::radial::{frequency_from_root, j_zero, riccati_deriv_zero};
use crate::specfun::SeriesControl;
use crate::Polarization;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConeSweepRow {
    pub theta_c_deg: f64,
    pub m: f64,
    pub nu: f64,
    pub x: f64,
    pub frequency_hz: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WedgeSweepRow {
    pub opening_deg: f64,
    pub m: f64,
    pub nu: f64,
    pub x: f64,
    pub frequency_hz: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DispersionRow {
    pub nu: f64,
    pub x_te: f64,
    pub f_te_hz: f64,
    pub x_tm: f64,
    pub f_tm_hz: f64,
}

/// Branch-1 TM degree and fundamental TM frequency per cone half-angle. The
/// azimuthal index is the lowest one allowed by the template's wedge.
pub fn cone_sweep(template: &CavityConfig, theta_c_deg: &[f64]) -> Result<Vec<ConeSweepRow>> {
    let ctrl = SeriesControl::default();
    theta_c_deg
        .iter()
        .map(|&t| {
            let cfg = CavityConfig {
                cone_half_angle_deg: t,
                ..*template
            };
            let domain = cfg.angular_domain()?;
            if !domain.has_cone() {
                return Err(Error::Config("cone sweep needs positive half-angles".into()));
            }
            let m = azimuthal_indices(&domain, 1)[0];
            let nu = cone_nu(m, domain.cone_half_angle_rad, Polarization::TM, 1, ctrl)?;
            let x = riccati_deriv_zero(nu, 1)?.x;
            Ok(ConeSweepRow {
                theta_c_deg: t,
                m,
                nu,
                x,
                frequency_hz: frequency_from_root(x, cfg.radius_m),
            })
        })
        .collect()
}

/// Fundamental TM frequency per wedge opening. On a wedge this is the
/// sectoral mode at the lowest azimuthal index; the full sphere gives `ν = 1`.
pub fn wedge_sweep(template: &CavityConfig, openings_deg: &[f64]) -> Result<Vec<WedgeSweepRow>> {
    if template.cone_half_angle_deg != 0.0 {
        return Err(Error::Config("wedge sweep takes a template without a cone".into()));
    }
    openings_deg
        .iter()
        .map(|&phi| {
            let cfg = CavityConfig {
                wedge_opening_deg: phi,
                ..*template
            };
            let domain = cfg.angular_domain()?;
            let m = if domain.has_wedge() {
                azimuthal_indices(&domain, 1)[0]
            } else {
                1.0
            };
            let x = riccati_deriv_zero(m, 1)?.x;
            Ok(WedgeSweepRow {
                opening_deg: phi,
                m,
                nu: m,
                x,
                frequency_hz: frequency_from_root(x, cfg.radius_m),
            })
        })
        .collect()
}

/// First TE and TM roots and frequencies for each degree.
pub fn dispersion_table(nu_list: &[f64], radius_m: f64) -> Result<Vec<DispersionRow>> {
    if !(radius_m > 0.0) {
        return Err(Error::Config(format!("radius {radius_m} m must be positive")));
    }
    nu_list
        .iter()
        .map(|&nu| {
            let x_te = j_zero(nu, 1)?.x;
            let x_tm = riccati_deriv_zero(nu, 1)?.x;
            Ok(DispersionRow {
                nu,
                x_te,
                f_te_hz: frequency_from_root(x_te, radius_m),
                x_tm,
                f_tm_hz: frequency_from_root(x_tm, radius_m),
            })
        })
        .collect()
}
