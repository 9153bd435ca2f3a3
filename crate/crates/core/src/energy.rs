//! Stored energy of a mode and the angular normalization integrals.
//!
//! Every squared field component separates into radial, polar and azimuthal
//! factors, so the volume integral reduces to 1-D quadratures:
//!
//! * radial: `∫ j² dr`, `∫ ([xj]')² dr`, `∫ j² r² dr`
//! * polar: `∫ Θ² sin θ dθ`, `∫ Θ'² sin θ dθ`, `∫ Θ²/sin θ dθ`
//! * azimuthal: `∫ |g|² dφ`, `∫ |g'|² dφ` (closed form)

use std::f64::consts::PI;

use serde::Serialize;

use crate::angular::Family;
use crate::error::{domain, Result};
use crate::fields::{Azimuth, ModeSpec};
use crate::numeric::quad::{integrate, QuadOptions};
use crate::specfun::bessel::j_and_riccati;
use crate::specfun::gamma::ln_gamma;
use crate::Polarization;

const QUAD_TOL: f64 = 1e-8;

/// `I_r = ∫₀^a j_ν(kr)² r² dr`, `I_θ = ∫ Θ² sin θ dθ`, `I_φ = ∫ |g|² dφ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Factorization {
    pub i_r: f64,
    pub i_theta: f64,
    pub i_phi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyReport {
    pub radial_integrable: bool,
    /// `∫ Θ² sin θ dθ` over the polar range, closed form where available.
    pub angular_norm: f64,
    /// Time-averaged stored energy in joules for the mode amplitude.
    pub total_energy: f64,
    pub electric_energy: f64,
    pub magnetic_energy: f64,
    pub factorization: Factorization,
}

/// Finite field energy near the origin requires `ν > -1/2`.
pub fn radial_integrable(nu: f64) -> bool {
    nu > -0.5
}

/// `∫₀^π sin^{2m+1} θ dθ = √π Γ(m+1)/Γ(m+3/2)`.
pub fn sectoral_angular_norm(m: f64) -> Result<f64> {
    if !(m > -1.0) || !m.is_finite() {
        return Err(domain("sectoral_angular_norm", format!("m = {m} must exceed -1")));
    }
    Ok(PI.sqrt() * (ln_gamma(m + 1.0)? - ln_gamma(m + 1.5)?).exp())
}

/// `∫₀^π P_ℓ(cos θ)² sin θ dθ = 2/(2ℓ+1)`.
pub fn zonal_norm(ell: u32) -> f64 {
    2.0 / (2 * ell + 1) as f64
}

/// Polar integrals of a mode's angular function over its polar range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarIntegrals {
    /// `∫ Θ² sin θ dθ`
    pub value_sq: f64,
    /// `∫ Θ'² sin θ dθ`
    pub deriv_sq: f64,
    /// `∫ Θ²/sin θ dθ`, zero when `m = 0` (it is then multiplied by `m²`).
    pub over_sin: f64,
}

fn quad(f: impl FnMut(f64) -> f64, a: f64, b: f64) -> Result<f64> {
    Ok(integrate(f, a, b, QuadOptions::relative(QUAD_TOL))?.value)
}

/// Polar integrals by adaptive quadrature.
pub fn polar_integrals(mode: &ModeSpec) -> Result<PolarIntegrals> {
    let lo = mode.theta_min();
    let mut err = None;
    let mut eval = |t: f64| match mode.angular(t) {
        Ok(v) => v,
        Err(e) => {
            err.get_or_insert(e);
            (0.0, 0.0)
        }
    };
    let value_sq = quad(|t| eval(t).0.powi(2) * t.sin(), lo, PI)?;
    let deriv_sq = quad(|t| eval(t).1.powi(2) * t.sin(), lo, PI)?;
    let over_sin = if mode.eigenpair.m == 0.0 {
        0.0
    } else {
        quad(|t| eval(t).0.powi(2) / t.sin(), lo, PI)?
    };
    if let Some(e) = err {
        return Err(e);
    }
    Ok(PolarIntegrals {
        value_sq,
        deriv_sq,
        over_sin,
    })
}

/// `(∫ |g|² dφ, ∫ |g'|² dφ)` over the azimuthal opening.
pub fn azimuthal_integrals(azimuth: Azimuth, m: f64, opening: f64) -> (f64, f64) {
    let half = 0.5 * opening;
    // ∫₀^Φ sin²(mφ) dφ = Φ/2 - sin(2mΦ)/(4m)
    let osc = if m == 0.0 {
        half
    } else {
        (2.0 * m * opening).sin() / (4.0 * m)
    };
    match azimuth {
        Azimuth::Traveling => (opening, m * m * opening),
        Azimuth::Sine if m == 0.0 => (0.0, 0.0),
        Azimuth::Sine => (half - osc, m * m * (half + osc)),
        Azimuth::Cosine if m == 0.0 => (opening, 0.0),
        Azimuth::Cosine => (half + osc, m * m * (half - osc)),
    }
}

fn closed_form_norm(mode: &ModeSpec) -> Result<Option<f64>> {
    if mode.domain.has_cone() {
        return Ok(None);
    }
    let pair = mode.eigenpair;
    Ok(match pair.family {
        Family::Sectoral => Some(sectoral_angular_norm(pair.m)?),
        Family::Zonal | Family::Null => pair.k.map(zonal_norm),
        Family::Tesseral => None,
    })
}

/// Energy report for a mode, by separable quadrature of the stored-energy
/// density `¼(ε|E|² + μ|H|²)`.
pub fn mode_energy(mode: &ModeSpec) -> Result<EnergyReport> {
    let nu = mode.eigenpair.nu;
    let m = mode.eigenpair.m;
    let a = mode.radius_m;
    let k = mode.wavenumber();
    let omega = mode.omega();
    let (eps, mu) = (mode.medium.epsilon, mode.medium.mu);
    let amp2 = mode.amplitude.norm_sqr();
    let lam = nu * (nu + 1.0);

    let mut err = None;
    let mut radial = |r: f64| match j_and_riccati(nu, k * r) {
        Ok(v) => v,
        Err(e) => {
            err.get_or_insert(e);
            (0.0, 0.0)
        }
    };
    let r_j2 = quad(|r| radial(r).0.powi(2), 0.0, a)?;
    let r_rd2 = quad(|r| radial(r).1.powi(2), 0.0, a)?;
    let r_j2r2 = quad(|r| (radial(r).0 * r).powi(2), 0.0, a)?;
    if let Some(e) = err {
        return Err(e);
    }

    let polar = polar_integrals(mode)?;
    let (p0, p1) = azimuthal_integrals(mode.azimuth, m, mode.domain.azimuth_opening_rad);

    // |∇×∇×(rΠ)|² and |∇×(rΠ)|² integrated over the volume
    let curl_curl = amp2
        * (lam * lam * r_j2 * polar.value_sq * p0
            + r_rd2 * (polar.deriv_sq * p0 + polar.over_sin * p1));
    let curl = amp2 * r_j2r2 * (polar.over_sin * p1 + polar.deriv_sq * p0);

    let (electric, magnetic) = match mode.polarization {
        Polarization::TM => (0.25 * eps * curl_curl, 0.25 * mu * (omega * eps).powi(2) * curl),
        Polarization::TE => (0.25 * eps * (omega * mu).powi(2) * curl, 0.25 * mu * curl_curl),
    };

    let angular_norm = closed_form_norm(mode)?.unwrap_or(polar.value_sq);
    Ok(EnergyReport {
        radial_integrable: radial_integrable(nu),
        angular_norm,
        total_energy: electric + magnetic,
        electric_energy: electric,
        magnetic_energy: magnetic,
        factorization: Factorization {
            i_r: r_j2r2,
            i_theta: angular_norm,
            i_phi: p0,
        },
    })
}
