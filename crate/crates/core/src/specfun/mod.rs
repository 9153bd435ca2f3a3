//! Real-argument special functions.

pub mod airy;
pub mod bessel;
pub mod gamma;
pub mod hyp;
pub mod legendre;

pub use airy::AiryRootTable;
pub use bessel::{riccati_deriv, spherical_j};
pub use gamma::{digamma, ln_gamma, sin_pi};
pub use hyp::hyp2f1;
pub use legendre::{legendre_theta, legendre_theta_deriv};

use crate::error::{Error, Result};

/// Term budget and relative cutoff for series summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub max_terms: usize,
    pub tolerance: f64,
}

impl SeriesControl {
    pub fn new(max_terms: usize, tolerance: f64) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::Config("max_terms must be at least 1".into()));
        }
        if !(tolerance > 0.0 && tolerance < 1.0) {
            return Err(Error::Config(format!(
                "series tolerance {tolerance} must lie in (0, 1)"
            )));
        }
        Ok(Self {
            max_terms,
            tolerance,
        })
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            max_terms: 5000,
            tolerance: 1e-16,
        }
    }
}
