//! Field components of a single cavity mode built from its Debye potential
//! `Π = A j_ν(kr) Θ(θ) g(φ)`.
//!
//! TM modes take `E = ∇×∇×(rΠ r̂)`, `H = -iωε ∇×(rΠ r̂)`; TE modes are the
//! dual, `H = ∇×∇×(rΠ r̂)`, `E = iωμ ∇×(rΠ r̂)`. Time dependence `e^{-iωt}`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::angular::{AngularDomain, AngularEigenpair, FaceKind};
use crate::error::{domain, Error, Result};
use crate::numeric::quad::{integrate_2d, QuadOptions};
use crate::radial::{RadialRoot, RootKind};
use crate::specfun::bessel::j_and_riccati;
use crate::specfun::legendre::theta_pair;
use crate::specfun::SeriesControl;
use crate::{Polarization, EPS0, MU0};

/// Azimuthal factor `g(φ)` of the potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Azimuth {
    /// `e^{imφ}`.
    Traveling,
    /// `sin(mφ)`.
    Sine,
    /// `cos(mφ)`.
    Cosine,
}

impl Azimuth {
    /// `(g, dg/dφ)`.
    pub fn factor(self, m: f64, phi: f64) -> (Complex64, Complex64) {
        match self {
            Azimuth::Traveling => {
                let g = Complex64::from_polar(1.0, m * phi);
                (g, Complex64::i() * m * g)
            }
            Azimuth::Sine => {
                let (s, c) = (m * phi).sin_cos();
                (s.into(), (m * c).into())
            }
            Azimuth::Cosine => {
                let (s, c) = (m * phi).sin_cos();
                (c.into(), (-m * s).into())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Medium {
    pub epsilon: f64,
    pub mu: f64,
}

impl Default for Medium {
    fn default() -> Self {
        Self {
            epsilon: EPS0,
            mu: MU0,
        }
    }
}

impl Medium {
    /// Intrinsic impedance `√(μ/ε)`.
    pub fn eta(&self) -> f64 {
        (self.mu / self.epsilon).sqrt()
    }
}

/// A fully specified mode, ready for field evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeSpec {
    pub polarization: Polarization,
    pub eigenpair: AngularEigenpair,
    pub radial: RadialRoot,
    pub radius_m: f64,
    pub amplitude: Complex64,
    pub medium: Medium,
    pub domain: AngularDomain,
    pub azimuth: Azimuth,
    pub ctrl: SeriesControl,
}

/// Field components at one point, in the spherical basis `(r, θ, φ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldSample {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
    pub e: [Complex64; 3],
    pub h: [Complex64; 3],
}

impl FieldSample {
    pub fn is_zero(&self) -> bool {
        self.e.iter().chain(self.h.iter()).all(|c| *c == Complex64::new(0.0, 0.0))
    }
}

/// Ratios of field components that define the wave impedances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Impedances {
    pub te: Complex64,
    pub tm: Complex64,
}

impl ModeSpec {
    /// Builds a mode with unit amplitude in vacuum. On a wedge the azimuthal
    /// factor is chosen so that the face conditions hold.
    pub fn new(
        polarization: Polarization,
        eigenpair: AngularEigenpair,
        radial: RadialRoot,
        radius_m: f64,
        domain: AngularDomain,
    ) -> Result<Self> {
        if !(radius_m > 0.0) {
            return Err(Error::Config(format!("radius {radius_m} m must be positive")));
        }
        if (radial.nu - eigenpair.nu).abs() > 1e-12 * eigenpair.nu.abs().max(1.0) {
            return Err(Error::Config(format!(
                "radial order {} does not match angular degree {}",
                radial.nu, eigenpair.nu
            )));
        }
        if radial.kind != RootKind::from(polarization) {
            return Err(Error::Config(format!(
                "{polarization} mode needs the matching radial root kind, got {:?}",
                radial.kind
            )));
        }
        let mut mode = Self {
            polarization,
            eigenpair,
            radial,
            radius_m,
            amplitude: Complex64::new(1.0, 0.0),
            medium: Medium::default(),
            domain,
            azimuth: Azimuth::Traveling,
            ctrl: SeriesControl::default(),
        };
        if domain.has_wedge() {
            mode.azimuth = mode.select_wedge_azimuth()?;
        }
        Ok(mode)
    }

    pub fn with_amplitude(mut self, amplitude: Complex64) -> Self {
        self.amplitude = amplitude;
        self
    }

    pub fn with_medium(mut self, medium: Medium) -> Self {
        self.medium = medium;
        self
    }

    pub fn with_azimuth(mut self, azimuth: Azimuth) -> Self {
        self.azimuth = azimuth;
        self
    }

    /// Wavenumber `k = x/a`.
    pub fn wavenumber(&self) -> f64 {
        self.radial.x / self.radius_m
    }

    /// Angular frequency `ω = k/√(με)`.
    pub fn omega(&self) -> f64 {
        self.wavenumber() / (self.medium.mu * self.medium.epsilon).sqrt()
    }

    /// Polar range `(θ_min, π)` of the domain.
    pub fn theta_min(&self) -> f64 {
        self.domain.cone_half_angle_rad
    }

    /// `(Θ(θ), dΘ/dθ)` in the domain's orientation.
    pub fn angular(&self, theta: f64) -> Result<(f64, f64)> {
        let (nu, m) = (self.eigenpair.nu, self.eigenpair.m);
        if self.domain.has_cone() {
            let (v, d) = theta_pair(nu, m, PI - theta, self.ctrl)?;
            Ok((v, -d))
        } else {
            theta_pair(nu, m, theta, self.ctrl)
        }
    }

    fn select_wedge_azimuth(&self) -> Result<Azimuth> {
        let phi_max = self.domain.azimuth_opening_rad;
        let lo = self.theta_min();
        let mut best = None;
        for candidate in [Azimuth::Sine, Azimuth::Cosine] {
            let trial = Self {
                azimuth: candidate,
                ..*self
            };
            let mut violation = 0.0;
            let mut scale = 0.0_f64;
            for &fr in &[0.31, 0.57, 0.83] {
                for &ft in &[0.23, 0.47, 0.71] {
                    let r = fr * self.radius_m;
                    let theta = lo + ft * (PI - lo);
                    let f0 = trial.field_at(self.polarization, r, theta, 0.0)?;
                    let f1 = trial.field_at(self.polarization, r, theta, phi_max)?;
                    let mid = trial.field_at(self.polarization, r, theta, 0.5 * phi_max)?;
                    let eta = self.medium.eta();
                    violation += f0.e[0].norm() + f0.e[1].norm();
                    violation += match self.domain.face_kind {
                        FaceKind::PecPec => f1.e[0].norm() + f1.e[1].norm(),
                        FaceKind::PecPmc => eta * (f1.h[0].norm() + f1.h[1].norm()),
                    };
                    for c in mid.e.iter() {
                        scale = scale.max(c.norm());
                    }
                    for c in mid.h.iter() {
                        scale = scale.max(eta * c.norm());
                    }
                }
            }
            if scale > 0.0 && violation <= 1e-8 * scale {
                best = Some(candidate);
                break;
            }
        }
        best.ok_or_else(|| Error::Config(format!(
            "no standing-wave azimuthal factor satisfies the wedge faces for m = {}",
            self.eigenpair.m
        )))
    }

    fn check_point(&self, r: f64, theta: f64, phi: f64) -> Result<()> {
        if !(r > 0.0 && r <= self.radius_m * (1.0 + 1e-12)) {
            return Err(domain("fields::evaluate", format!("r = {r} outside (0, a]")));
        }
        if !(theta > self.theta_min() && theta < PI) && !(theta == self.theta_min() && self.domain.has_cone()) {
            return Err(domain(
                "fields::evaluate",
                format!("theta = {theta} outside the polar range ({}, π)", self.theta_min()),
            ));
        }
        if self.domain.has_wedge() && !(-1e-12..=self.domain.azimuth_opening_rad + 1e-12).contains(&phi) {
            return Err(domain(
                "fields::evaluate",
                format!("phi = {phi} outside the wedge [0, {}]", self.domain.azimuth_opening_rad),
            ));
        }
        Ok(())
    }

    /// Fields of the potential with this mode's `(ν, m, k, g)` under the
    /// given polarization. The wall condition plays no role here.
    fn field_at(&self, pol: Polarization, r: f64, theta: f64, phi: f64) -> Result<FieldSample> {
        let nu = self.eigenpair.nu;
        let k = self.wavenumber();
        let omega = self.omega();
        let (j, rd) = j_and_riccati(nu, k * r)?;
        let (th, dth) = self.angular(theta)?;
        let (g, dg) = self.azimuth.factor(self.eigenpair.m, phi);
        let a = self.amplitude;
        let s = theta.sin();
        let lam = nu * (nu + 1.0);
        let zero = Complex64::new(0.0, 0.0);
        let i = Complex64::i();

        // ∇×∇×(rΠ r̂) and ∇×(rΠ r̂) for Π = A j Θ g
        let cc = [
            a * (lam * j * th / r) * g,
            a * (rd * dth / r) * g,
            a * (rd * th / (r * s)) * dg,
        ];
        let c = [zero, a * (j * th / s) * dg, -a * (j * dth) * g];

        let (e, h) = match pol {
            Polarization::TM => {
                let f = -i * omega * self.medium.epsilon;
                (cc, [zero, f * c[1], f * c[2]])
            }
            Polarization::TE => {
                let f = i * omega * self.medium.mu;
                ([zero, f * c[1], f * c[2]], cc)
            }
        };
        Ok(FieldSample { r, theta, phi, e, h })
    }
}

/// All six components at `(r, θ, φ)`.
pub fn evaluate(mode: &ModeSpec, r: f64, theta: f64, phi: f64) -> Result<FieldSample> {
    mode.check_point(r, theta, phi)?;
    mode.field_at(mode.polarization, r, theta, phi)
}

fn ratio(num: Complex64, den: Complex64, component: &'static str) -> Result<Complex64> {
    if den == Complex64::new(0.0, 0.0) || !den.is_finite() {
        return Err(Error::UndefinedImpedance { component });
    }
    Ok(num / den)
}

/// Wave impedances at a point, from the TE- and TM-type fields of this
/// mode's potential: `Z_TE = E_θ/H_r`, `Z_TM = E_r/H_θ`, or for `m = 0`
/// `Z_TE = E_φ/H_θ`, `Z_TM = E_θ/H_φ`.
pub fn wave_impedances(mode: &ModeSpec, r: f64, theta: f64, phi: f64) -> Result<Impedances> {
    mode.check_point(r, theta, phi)?;
    let te = mode.field_at(Polarization::TE, r, theta, phi)?;
    let tm = mode.field_at(Polarization::TM, r, theta, phi)?;
    if mode.eigenpair.m == 0.0 {
        Ok(Impedances {
            te: ratio(te.e[2], te.h[1], "H_theta")?,
            tm: ratio(tm.e[1], tm.h[2], "H_phi")?,
        })
    } else {
        Ok(Impedances {
            te: ratio(te.e[1], te.h[0], "H_r")?,
            tm: ratio(tm.e[0], tm.h[1], "H_theta")?,
        })
    }
}

/// Time-averaged Poynting vector `½ Re(E × H*)`.
pub fn poynting(sample: &FieldSample) -> [f64; 3] {
    let e = sample.e;
    let h = sample.h.map(|c| c.conj());
    [
        0.5 * (e[1] * h[2] - e[2] * h[1]).re,
        0.5 * (e[2] * h[0] - e[0] * h[2]).re,
        0.5 * (e[0] * h[1] - e[1] * h[0]).re,
    ]
}

/// `∫₀^a ∫ S_φ r² sin θ dθ dr` over the polar range of the domain.
pub fn azimuthal_power(mode: &ModeSpec) -> Result<f64> {
    if mode.azimuth != Azimuth::Traveling {
        return Err(Error::Config(
            "azimuthal power needs the traveling-wave azimuthal factor".into(),
        ));
    }
    if mode.eigenpair.m == 0.0 {
        return Ok(0.0);
    }
    let mut err = None;
    let r = integrate_2d(
        |r, theta| {
            if err.is_some() {
                return 0.0;
            }
            match mode.field_at(mode.polarization, r, theta, 0.0) {
                Ok(s) => poynting(&s)[2] * r * r * theta.sin(),
                Err(e) => {
                    err = Some(e);
                    0.0
                }
            }
        },
        (0.0, mode.radius_m),
        (mode.theta_min(), PI),
        QuadOptions::relative(1e-7),
    )?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(r.value)
}
