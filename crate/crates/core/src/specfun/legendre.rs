//! North-regular solution of the associated Legendre equation for real
//! degree `ν` and real order `m >= 0`.
//!
//! `Θ(θ) = sin^m θ · ₂F₁(m-ν, m+ν+1; m+1; sin²(θ/2))`, normalized so that
//! `Θ / sin^m θ → 1` at the north pole. Where the series is slow (past
//! `sin²(θ/2) = 3/4` without termination) the equation is integrated
//! numerically instead, in the variable `u = ln tan(θ/2)` where it reads
//! `Θ_uu = [m² - ν(ν+1) sech² u] Θ`.

use std::f64::consts::FRAC_PI_2;

use super::hyp::{hyp2f1, non_positive_integer};
use super::SeriesControl;
use crate::error::{domain, Result};
use crate::numeric::ode::{self, OdeOptions};

const SERIES_LIMIT: f64 = 0.75;

fn check(func: &'static str, nu: f64, m: f64, theta: f64) -> Result<()> {
    if !(m >= 0.0) || !m.is_finite() {
        return Err(domain(func, format!("order m = {m} must be >= 0")));
    }
    if !nu.is_finite() {
        return Err(domain(func, format!("degree nu = {nu} must be finite")));
    }
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(domain(func, format!("theta = {theta} must lie in (0, pi)")));
    }
    Ok(())
}

/// `Θ(θ)`.
pub fn legendre_theta(nu: f64, m: f64, theta: f64, ctrl: SeriesControl) -> Result<f64> {
    check("legendre_theta", nu, m, theta)?;
    Ok(theta_pair(nu, m, theta, ctrl)?.0)
}

/// `dΘ/dθ`.
pub fn legendre_theta_deriv(nu: f64, m: f64, theta: f64, ctrl: SeriesControl) -> Result<f64> {
    check("legendre_theta_deriv", nu, m, theta)?;
    Ok(theta_pair(nu, m, theta, ctrl)?.1)
}

fn terminates(nu: f64, m: f64) -> bool {
    non_positive_integer(m - nu).is_some() || non_positive_integer(m + nu + 1.0).is_some()
}

/// `(Θ, dΘ/dθ)`; arguments are assumed validated.
pub(crate) fn theta_pair(nu: f64, m: f64, theta: f64, ctrl: SeriesControl) -> Result<(f64, f64)> {
    let z = (0.5 * theta).sin().powi(2);
    if z <= SERIES_LIMIT || terminates(nu, m) {
        series_pair(nu, m, theta, ctrl)
    } else {
        ode_pair(nu, m, theta, ctrl)
    }
}

fn series_pair(nu: f64, m: f64, theta: f64, ctrl: SeriesControl) -> Result<(f64, f64)> {
    // snap so the value and derivative series agree on termination
    let nu = match non_positive_integer(m - nu) {
        Some(k) => m + k as f64,
        None => nu,
    };
    let (a, b, c) = (m - nu, m + nu + 1.0, m + 1.0);
    let z = (0.5 * theta).sin().powi(2);
    let (s, co) = theta.sin_cos();
    let f = hyp2f1(a, b, c, z, ctrl)?;
    let ab = a * b;
    let fp = if ab == 0.0 || non_positive_integer(a) == Some(0) || non_positive_integer(b) == Some(0) {
        0.0
    } else {
        ab / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z, ctrl)?
    };
    let value = s.powf(m) * f;
    // d/dθ[sin^m θ F(z)] with dz/dθ = sin θ / 2
    let deriv = if m == 0.0 {
        0.5 * s * fp
    } else {
        s.powf(m - 1.0) * (m * co * f + 0.5 * s * s * fp)
    };
    Ok((value, deriv))
}

fn ode_pair(nu: f64, m: f64, theta: f64, ctrl: SeriesControl) -> Result<(f64, f64)> {
    // At θ = π/2 (u = 0) the series converges quickly and dΘ/du = dΘ/dθ.
    let (t0, d0) = series_pair(nu, m, FRAC_PI_2, ctrl)?;
    let u1 = (0.5 * theta).tan().ln();
    let lam = nu * (nu + 1.0);
    let m2 = m * m;
    let y = ode::integrate(
        |u, y: &[f64; 2]| {
            let sech = 1.0 / u.cosh();
            [y[1], (m2 - lam * sech * sech) * y[0]]
        },
        0.0,
        [t0, d0],
        u1,
        OdeOptions::default(),
    )?;
    Ok((y[0], y[1] / theta.sin()))
}
