use serde::Serialize;

use crate::angular::{AngularDomain, FaceKind, Family};
use crate::error::{Error, Result};
use crate::Polarization;

/// Cavity geometry: radius plus optional wedge and cone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CavityConfig {
    pub radius_m: f64,
    /// Retained azimuthal opening; 360 is the full sphere.
    pub wedge_opening_deg: f64,
    /// Half-angle of the conducting cone at the north pole; 0 means none.
    pub cone_half_angle_deg: f64,
    pub wedge_face_kind: FaceKind,
}

impl CavityConfig {
    pub fn new(radius_m: f64, wedge_opening_deg: f64, cone_half_angle_deg: f64) -> Result<Self> {
        let c = Self {
            radius_m,
            wedge_opening_deg,
            cone_half_angle_deg,
            wedge_face_kind: FaceKind::PecPec,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn full_sphere(radius_m: f64) -> Result<Self> {
        Self::new(radius_m, 360.0, 0.0)
    }

    pub fn with_face_kind(mut self, kind: FaceKind) -> Self {
        self.wedge_face_kind = kind;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.radius_m > 0.0) || !self.radius_m.is_finite() {
            return Err(Error::Config(format!("radius {} m must be positive", self.radius_m)));
        }
        if !(self.wedge_opening_deg > 0.0 && self.wedge_opening_deg <= 360.0) {
            return Err(Error::Config(format!(
                "wedge opening {} deg outside (0, 360]",
                self.wedge_opening_deg
            )));
        }
        if !(self.cone_half_angle_deg >= 0.0 && self.cone_half_angle_deg < 90.0) {
            return Err(Error::Config(format!(
                "cone half-angle {} deg outside [0, 90)",
                self.cone_half_angle_deg
            )));
        }
        Ok(())
    }

    pub fn is_full_sphere(&self) -> bool {
        self.wedge_opening_deg == 360.0 && self.cone_half_angle_deg == 0.0
    }

    pub fn angular_domain(&self) -> Result<AngularDomain> {
        self.validate()?;
        AngularDomain::new(
            self.wedge_opening_deg.to_radians(),
            self.cone_half_angle_deg.to_radians(),
            self.wedge_face_kind,
        )
    }
}

impl Default for CavityConfig {
    fn default() -> Self {
        Self {
            radius_m: 0.015,
            wedge_opening_deg: 360.0,
            cone_half_angle_deg: 0.0,
            wedge_face_kind: FaceKind::PecPec,
        }
    }
}

/// One resonance of the cavity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeRecord {
    pub polarization: Polarization,
    pub nu: f64,
    pub m: f64,
    /// Offset in `ν = m + k`; absent when a cone sets `ν`.
    pub k: Option<u32>,
    /// Cone eigenvalue branch; absent without a cone.
    pub branch: Option<u32>,
    pub n: u32,
    pub root_x: f64,
    pub frequency_hz: f64,
    pub family: Family,
}

impl ModeRecord {
    pub fn frequency_ghz(&self) -> f64 {
        self.frequency_hz * 1e-9
    }
}
