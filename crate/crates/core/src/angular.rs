//! Admissible angular eigenpairs `(ν, m)` on full-sphere, wedge, cone and
//! combined domains.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::numeric::roots::brent;
use crate::specfun::gamma::{ln_gamma, sin_pi};
use crate::specfun::legendre::theta_pair;
use crate::specfun::SeriesControl;
use crate::Polarization;

/// Distance from an integer below which `ν - m` counts as that integer.
pub const INTEGER_TOL: f64 = 1e-9;

const CONE_SCAN_START: f64 = 1e-4;
const CONE_SCAN_STEP: f64 = 0.02;
const CONE_XTOL: f64 = 1e-10;

/// Boundary kind on the two wedge faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum FaceKind {
    /// Both faces perfectly conducting.
    #[default]
    PecPec,
    /// One conducting face and one magnetic face. Experimental.
    PecPmc,
}

/// Angular extent of the cavity: an azimuthal opening `Φ` and an optional
/// conducting cone removing a cap of half-angle `θ_c` around the north pole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngularDomain {
    pub azimuth_opening_rad: f64,
    pub cone_half_angle_rad: f64,
    pub face_kind: FaceKind,
}

impl AngularDomain {
    pub fn new(azimuth_opening_rad: f64, cone_half_angle_rad: f64, face_kind: FaceKind) -> Result<Self> {
        if !(azimuth_opening_rad > 0.0 && azimuth_opening_rad <= 2.0 * PI) {
            return Err(Error::Config(format!(
                "azimuthal opening {azimuth_opening_rad} rad outside (0, 2π]"
            )));
        }
        if !(0.0..0.5 * PI).contains(&cone_half_angle_rad) {
            return Err(Error::Config(format!(
                "cone half-angle {cone_half_angle_rad} rad outside [0, π/2)"
            )));
        }
        Ok(Self {
            azimuth_opening_rad,
            cone_half_angle_rad,
            face_kind,
        })
    }

    pub fn full_sphere() -> Self {
        Self {
            azimuth_opening_rad: 2.0 * PI,
            cone_half_angle_rad: 0.0,
            face_kind: FaceKind::PecPec,
        }
    }

    pub fn has_wedge(&self) -> bool {
        self.azimuth_opening_rad < 2.0 * PI
    }

    pub fn has_cone(&self) -> bool {
        self.cone_half_angle_rad > 0.0
    }
}

/// Mode family in the `(ν, m)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Sectoral,
    Tesseral,
    Zonal,
    Null,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Sectoral => "sectoral",
            Family::Tesseral => "tesseral",
            Family::Zonal => "zonal",
            Family::Null => "null",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngularEigenpair {
    pub nu: f64,
    pub m: f64,
    pub family: Family,
    /// Offset `k` in `ν = m + k` when the pair is pole-regular at both poles.
    pub k: Option<u32>,
}

impl AngularEigenpair {
    /// Pair regular at both poles, `ν = m + k`.
    pub fn regular(m: f64, k: u32) -> Result<Self> {
        let nu = nu_regular_both_poles(m, k);
        Ok(Self {
            nu,
            m,
            family: classify(nu, m, false)?,
            k: Some(k),
        })
    }

    /// Pair on a domain with a cone, where `ν` comes from the cone condition.
    pub fn coned(nu: f64, m: f64) -> Result<Self> {
        Ok(Self {
            nu,
            m,
            family: classify(nu, m, true)?,
            k: None,
        })
    }
}

/// The first `count` admissible azimuthal indices for the domain.
///
/// Conducting wedge faces give `m = nπ/Φ`, `n >= 1`; the mixed-face variant
/// gives `m = (2n-1)π/(2Φ)`. The full circle gives `0, 1, 2, ...`.
pub fn azimuthal_indices(domain: &AngularDomain, count: usize) -> Vec<f64> {
    let phi = domain.azimuth_opening_rad;
    if !domain.has_wedge() {
        return (0..count).map(|n| n as f64).collect();
    }
    match domain.face_kind {
        FaceKind::PecPec => (1..=count).map(|n| n as f64 * PI / phi).collect(),
        FaceKind::PecPmc => (1..=count)
            .map(|n| (2 * n - 1) as f64 * PI / (2.0 * phi))
            .collect(),
    }
}

/// `ν = m + k`, the only degrees regular at both poles.
pub fn nu_regular_both_poles(m: f64, k: u32) -> f64 {
    m + k as f64
}

fn nearest_integer(x: f64) -> Option<f64> {
    let r = x.round();
    ((x - r).abs() <= INTEGER_TOL * x.abs().max(1.0)).then_some(r)
}

/// Coefficient of the singular part acquired at the south pole by the
/// north-regular solution. It vanishes exactly when `ν - m` is a
/// non-negative integer.
///
/// For `m > 0` this is `Γ(ν+m+1)/Γ(ν-m+1) · sin((ν-m)π)/π`, and for `m = 0`
/// the logarithmic coefficient `sin(νπ)/π`.
pub fn south_singular_coefficient(nu: f64, m: f64) -> Result<f64> {
    if !(m >= 0.0) || !nu.is_finite() || !m.is_finite() {
        return Err(domain(
            "south_singular_coefficient",
            format!("need finite nu and m >= 0, got nu = {nu}, m = {m}"),
        ));
    }
    if !(nu + m + 1.0 > 0.0) {
        return Err(domain(
            "south_singular_coefficient",
            format!("Γ(ν+m+1) undefined at nu + m + 1 = {}", nu + m + 1.0),
        ));
    }
    let d = nu - m;
    if let Some(r) = nearest_integer(d) {
        if r >= 0.0 {
            return Ok(0.0);
        }
        if m > 0.0 {
            return Err(Error::Evaluation {
                func: "south_singular_coefficient",
                detail: format!(
                    "nu - m = {d} sits on a pole of Γ(ν-m+1) where sin((ν-m)π) also vanishes"
                ),
            });
        }
    }
    if m == 0.0 {
        return Ok(sin_pi(nu) / PI);
    }
    let lg_top = ln_gamma(nu + m + 1.0)?;
    if d + 1.0 > 0.0 {
        Ok((lg_top - ln_gamma(d + 1.0)?).exp() * sin_pi(d) / PI)
    } else {
        // 1/Γ(d+1) = -Γ(-d) sin(πd)/π
        let s = sin_pi(d);
        Ok(-(lg_top + ln_gamma(-d)?).exp() * s * s / (PI * PI))
    }
}

/// Family of `(ν, m)`. Without a cone the pair must satisfy `ν - m ∈ ℤ≥0`.
pub fn classify(nu: f64, m: f64, has_cone: bool) -> Result<Family> {
    let fail = |reason: &str| Error::Classification {
        nu,
        m,
        reason: reason.to_string(),
    };
    if !(nu >= 0.0) || !(m >= 0.0) {
        return Err(fail("nu and m must be non-negative"));
    }
    if !has_cone {
        match nearest_integer(nu - m) {
            Some(r) if r >= 0.0 => {}
            Some(_) => return Err(fail("nu < m is unreachable without a cone")),
            None => return Err(fail("nu - m is not an integer and no cone relaxes regularity")),
        }
    }
    let zero = |x: f64| x.abs() <= INTEGER_TOL;
    Ok(if zero(nu) && zero(m) {
        Family::Null
    } else if zero(m) {
        Family::Zonal
    } else if zero(nu - m) {
        Family::Sectoral
    } else {
        Family::Tesseral
    })
}

/// The function whose zeros in `ν` are the cone eigenvalues: the
/// north-regular solution (TM) or its derivative (TE) at `π - θ_c`.
///
/// The cap around the north pole is removed, so the retained pole is the
/// south one; by the `θ → π - θ` symmetry of the equation, the solution
/// regular there is the north-regular one reflected.
pub fn cone_condition(nu: f64, m: f64, theta_c: f64, pol: Polarization, ctrl: SeriesControl) -> Result<f64> {
    let (v, d) = theta_pair(nu, m, PI - theta_c, ctrl)?;
    Ok(match pol {
        Polarization::TM => v,
        Polarization::TE => d,
    })
}

/// The `branch`-th smallest `ν > 0` satisfying the cone condition.
pub fn cone_nu(m: f64, theta_c: f64, pol: Polarization, branch: u32, ctrl: SeriesControl) -> Result<f64> {
    if branch == 0 {
        return Err(domain("cone_nu", "branch numbering starts at 1"));
    }
    let all = cone_nu_branches(m, theta_c, pol, branch, ctrl)?;
    Ok(all[branch as usize - 1])
}

/// The `count` smallest `ν > 0` satisfying the cone condition, ascending.
pub fn cone_nu_branches(
    m: f64,
    theta_c: f64,
    pol: Polarization,
    count: u32,
    ctrl: SeriesControl,
) -> Result<Vec<f64>> {
    let mut scan = ConeScan::new(m, theta_c, pol, ctrl)?;
    scan.extend_to(count as usize)?;
    Ok(scan.roots)
}

/// Resumable scan for cone eigenvalues at fixed `(m, θ_c, polarization)`.
#[derive(Debug, Clone)]
pub struct ConeScan {
    m: f64,
    theta_c: f64,
    pol: Polarization,
    ctrl: SeriesControl,
    lo: f64,
    f_lo: f64,
    /// Roots found so far, ascending.
    pub roots: Vec<f64>,
}

impl ConeScan {
    pub fn new(m: f64, theta_c: f64, pol: Polarization, ctrl: SeriesControl) -> Result<Self> {
        if !(theta_c > 0.0 && theta_c < 0.5 * PI) {
            return Err(domain("cone_nu", format!("theta_c = {theta_c} outside (0, π/2)")));
        }
        if !(m >= 0.0) || !m.is_finite() {
            return Err(domain("cone_nu", format!("m = {m} must be >= 0")));
        }
        let lo = CONE_SCAN_START;
        let f_lo = cone_condition(lo, m, theta_c, pol, ctrl)?;
        Ok(Self {
            m,
            theta_c,
            pol,
            ctrl,
            lo,
            f_lo,
            roots: Vec::new(),
        })
    }

    /// Continues the scan until `count` roots are known.
    pub fn extend_to(&mut self, count: usize) -> Result<()> {
        let (m, theta_c, pol, ctrl) = (self.m, self.theta_c, self.pol, self.ctrl);
        let nu_max = m + 2.0 * (count as f64 + 1.0);
        while self.roots.len() < count && self.lo < nu_max {
            let lo = self.lo;
            let hi = (lo + CONE_SCAN_STEP).min(nu_max);
            let f_hi = cone_condition(hi, m, theta_c, pol, ctrl)?;
            if self.f_lo == 0.0 {
                self.roots.push(lo);
            } else if self.f_lo.signum() != f_hi.signum() && f_hi != 0.0 {
                let mut err = None;
                let root = brent(
                    |nu| match cone_condition(nu, m, theta_c, pol, ctrl) {
                        Ok(v) => v,
                        Err(e) => {
                            err.get_or_insert(e);
                            f64::NAN
                        }
                    },
                    lo,
                    hi,
                    CONE_XTOL,
                );
                if let Some(e) = err {
                    return Err(e);
                }
                self.roots.push(root?);
            }
            self.lo = hi;
            self.f_lo = f_hi;
        }
        if self.roots.len() < count {
            return Err(Error::Search {
                what: format!("cone eigenvalue (m={m}, θ_c={theta_c}, {pol})"),
                lo: CONE_SCAN_START,
                hi: nu_max,
                found: self.roots.len(),
                wanted: count,
            });
        }
        Ok(())
    }
}

/// `sin^m θ`, the exact sectoral solution.
pub fn sectoral_theta(m: f64, theta: f64) -> f64 {
    theta.sin().powf(m)
}

/// Left-hand side of the angular equation,
/// `Θ'' + cot θ Θ' + [ν(ν+1) - m²/sin²θ] Θ`.
pub fn angular_ode_residual(nu: f64, m: f64, theta: f64, value: f64, deriv: f64, second_deriv: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    second_deriv + c / s * deriv + (nu * (nu + 1.0) - m * m / (s * s)) * value
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctrl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn wedge_indices() {
        let d = AngularDomain::new(1.5 * PI, 0.0, FaceKind::PecPec).unwrap();
        let m = azimuthal_indices(&d, 4);
        for (got, want) in m.iter().zip([2.0 / 3.0, 4.0 / 3.0, 2.0, 8.0 / 3.0]) {
            assert!((got - want).abs() < 1e-15);
        }
        let d = AngularDomain::new(PI, 0.0, FaceKind::PecPec).unwrap();
        assert_eq!(azimuthal_indices(&d, 3), vec![1.0, 2.0, 3.0]);
        assert_eq!(azimuthal_indices(&AngularDomain::full_sphere(), 3), vec![0.0, 1.0, 2.0]);
        let d = AngularDomain::new(1.5 * PI, 0.0, FaceKind::PecPmc).unwrap();
        assert!((azimuthal_indices(&d, 1)[0] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn domain_validation() {
        assert!(AngularDomain::new(0.0, 0.0, FaceKind::PecPec).is_err());
        assert!(AngularDomain::new(7.0, 0.0, FaceKind::PecPec).is_err());
        assert!(AngularDomain::new(PI, 0.5 * PI, FaceKind::PecPec).is_err());
        assert!(AngularDomain::new(PI, -0.1, FaceKind::PecPec).is_err());
    }

    #[test]
    fn regular_degrees() {
        assert!((nu_regular_both_poles(2.0 / 3.0, 0) - 2.0 / 3.0).abs() < 1e-15);
        assert!((nu_regular_both_poles(2.0 / 3.0, 1) - 5.0 / 3.0).abs() < 1e-15);
        assert_eq!(nu_regular_both_poles(0.0, 2), 2.0);
    }

    #[test]
    fn singular_coefficient_examples() {
        assert_eq!(south_singular_coefficient(1.37, 1.37).unwrap(), 0.0);
        assert_eq!(south_singular_coefficient(5.0 / 3.0, 2.0 / 3.0).unwrap(), 0.0);
        assert!((south_singular_coefficient(0.5, 0.0).unwrap() - 1.0 / PI).abs() < 1e-15);
        assert!(south_singular_coefficient(0.5, 1.5).is_err());
        assert!(south_singular_coefficient(-3.0, 1.0).is_err());
    }

    #[test]
    fn singular_coefficient_below_m() {
        // d = ν - m = -1.5: Γ(ν+m+1)/Γ(-0.5) · sin(-1.5π)/π with Γ(-1/2) = -2√π
        let (nu, m) = (0.5, 2.0);
        let want = (ln_gamma(nu + m + 1.0).unwrap()).exp() / (-2.0 * PI.sqrt()) * 1.0 / PI;
        let got = south_singular_coefficient(nu, m).unwrap();
        assert!((got - want).abs() < 1e-13 * want.abs(), "got={got} want={want}");
    }

    #[test]
    fn classification() {
        assert_eq!(classify(2.0, 2.0, false).unwrap(), Family::Sectoral);
        assert_eq!(classify(3.0, 1.0, false).unwrap(), Family::Tesseral);
        assert_eq!(classify(0.0, 0.0, false).unwrap(), Family::Null);
        assert_eq!(classify(2.0, 0.0, false).unwrap(), Family::Zonal);
        assert!(classify(0.5, 1.0, false).is_err());
        assert!(classify(1.3, 1.0, false).is_err());
        assert_eq!(classify(0.3, 0.0, true).unwrap(), Family::Zonal);
        assert_eq!(classify(0.49, 0.5, true).unwrap(), Family::Tesseral);
    }

    #[test]
    fn sectoral_examples() {
        assert_eq!(sectoral_theta(1.0, 0.5 * PI), 1.0);
        assert!((sectoral_theta(2.0 / 3.0, PI / 6.0) - 0.629_960_524_9).abs() < 1e-10);
        assert!((sectoral_theta(3.0, PI / 4.0) - 0.353_553_390_6).abs() < 1e-10);
    }

    #[test]
    fn residual_examples() {
        let t: f64 = 0.7;
        assert_eq!(angular_ode_residual(1.0, 0.0, t, t.cos(), -t.sin(), -t.cos()).abs(), 0.0);
        // Θ = sin^{2/3}θ cos θ, derivatives by hand
        let m = 2.0 / 3.0;
        let (s, c) = t.sin_cos();
        let v = s.powf(m) * c;
        let d = m * s.powf(m - 1.0) * c * c - s.powf(m + 1.0);
        let d2 = m * (m - 1.0) * s.powf(m - 2.0) * c * c * c - 2.0 * m * s.powf(m) * c
            - (m + 1.0) * s.powf(m) * c;
        assert!(angular_ode_residual(5.0 / 3.0, m, t, v, d, d2).abs() < 1e-10);
    }

    #[test]
    fn cone_recovers_integer_degrees() {
        // A cone at the equator would make ν = 1 (P₁ vanishes at π/2); just
        // below, the root approaches 1 from below as the domain grows.
        let nu = cone_nu(0.0, 1.5, Polarization::TM, 1, ctrl()).unwrap();
        assert!(nu > 0.9 && nu < 1.0, "nu={nu}");
    }

    #[test]
    fn cone_small_angle_logarithmic_estimate() {
        let tc = 0.38f64.to_radians();
        let nu = cone_nu(0.0, tc, Polarization::TM, 1, ctrl()).unwrap();
        let est = 1.0 / (2.0 * (2.0 / tc).ln());
        assert!((nu - est).abs() < 0.01, "nu={nu} est={est}");
    }

    #[test]
    fn cone_root_is_a_root() {
        for pol in [Polarization::TM, Polarization::TE] {
            for branch in 1..=2 {
                let nu = cone_nu(0.5, 0.4, pol, branch, ctrl()).unwrap();
                let v = cone_condition(nu, 0.5, 0.4, pol, ctrl()).unwrap();
                let scale = cone_condition(nu + 0.05, 0.5, 0.4, pol, ctrl()).unwrap().abs();
                assert!(v.abs() < 1e-7 * scale, "pol={pol} branch={branch}");
            }
        }
    }

    #[test]
    fn cone_argument_errors() {
        assert!(cone_nu(0.0, 0.0, Polarization::TM, 1, ctrl()).is_err());
        assert!(cone_nu(0.0, 0.3, Polarization::TM, 0, ctrl()).is_err());
        assert!(cone_nu(-0.5, 0.3, Polarization::TM, 1, ctrl()).is_err());
    }
}
