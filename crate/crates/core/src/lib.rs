//! Electromagnetic modes of perfectly conducting spherical cavities, with
//! optional azimuthal wedges and polar cones.
//!
//! The crate is layered bottom-up: [`specfun`] provides the real-argument
//! special functions, [`angular`] and [`radial`] solve the separated
//! eigenproblems, [`fields`] and [`energy`] evaluate physical quantities of a
//! single mode, and [`spectrum`] enumerates and validates whole spectra.

// NaN must fail range checks, hence `!(x > 0.0)` style comparisons
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angular;
pub mod energy;
pub mod error;
pub mod fields;
pub mod numeric;
pub mod radial;
pub mod specfun;
pub mod spectrum;

pub use error::{Error, Result};

/// Speed of light in vacuum, m/s.
pub const C0: f64 = 299_792_458.0;
/// Vacuum permeability, H/m.
pub const MU0: f64 = 1.256_637_062_12e-6;
/// Vacuum permittivity, F/m, from `1/(μ₀ c²)`.
pub const EPS0: f64 = 1.0 / (MU0 * C0 * C0);

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

/// Mode polarization: transverse magnetic (no radial H) or transverse
/// electric (no radial E).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Polarization {
    TM,
    TE,
}

impl fmt::Display for Polarization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarization::TM => "TM",
            Polarization::TE => "TE",
        })
    }
}

impl FromStr for Polarization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "TM" => Ok(Polarization::TM),
            "TE" => Ok(Polarization::TE),
            other => Err(Error::Config(format!("unknown polarization `{other}`"))),
        }
    }
}
