//! Gamma-family functions on the positive real axis.

use crate::error::{domain, Result};

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("ln_gamma", format!("x = {x} must be positive")));
    }
    Ok(statrs::function::gamma::ln_gamma(x))
}

/// Digamma `ψ(x)` for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("digamma", format!("x = {x} must be positive")));
    }
    Ok(statrs::function::gamma::digamma(x))
}

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    if r < 0.5 {
        (std::f64::consts::PI * r).sin()
    } else if r < 1.5 {
        (std::f64::consts::PI * (1.0 - r)).sin()
    } else {
        (std::f64::consts::PI * (r - 2.0)).sin()
    }
}
