//! Radial quantization: zeros of `j_ν` (TE) and of `[x j_ν(x)]'` (TM).

use std::cell::RefCell;
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::numeric::roots::{brent, scan_sign_change};
use crate::specfun::bessel::j_and_riccati;
use crate::specfun::AiryRootTable;
use crate::{Polarization, C0};

const SCAN_STEP: f64 = 0.05;
const ROOT_XTOL: f64 = 1e-12;

/// Which radial function is being zeroed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RootKind {
    /// `j_ν(x) = 0`, the TE wall condition.
    TeJZero,
    /// `d/dx[x j_ν(x)] = 0`, the TM wall condition.
    TmRiccatiDerivZero,
}

impl From<Polarization> for RootKind {
    fn from(p: Polarization) -> Self {
        match p {
            Polarization::TE => RootKind::TeJZero,
            Polarization::TM => RootKind::TmRiccatiDerivZero,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialRoot {
    pub nu: f64,
    pub n: u32,
    pub kind: RootKind,
    pub x: f64,
    /// The radial function evaluated at `x`.
    pub residual: f64,
}

fn radial_fn(nu: f64, kind: RootKind, x: f64) -> Result<f64> {
    let (j, rd) = j_and_riccati(nu, x)?;
    Ok(match kind {
        RootKind::TeJZero => j,
        RootKind::TmRiccatiDerivZero => rd,
    })
}

/// n-th positive root of `j_ν`.
pub fn j_zero(nu: f64, n: u32) -> Result<RadialRoot> {
    radial_root(nu, n, RootKind::TeJZero)
}

/// n-th positive root of `d/dx[x j_ν(x)]`.
pub fn riccati_deriv_zero(nu: f64, n: u32) -> Result<RadialRoot> {
    radial_root(nu, n, RootKind::TmRiccatiDerivZero)
}

/// First `count` roots of the given kind, in increasing order.
pub fn radial_roots(nu: f64, count: u32, kind: RootKind) -> Result<Vec<RadialRoot>> {
    if !(nu > -0.5) || !nu.is_finite() {
        return Err(domain("radial_root", format!("order nu = {nu} must exceed -1/2")));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let err = RefCell::new(None);
    let f = |x: f64| match radial_fn(nu, kind, x) {
        Ok(v) => v,
        Err(e) => {
            err.borrow_mut().get_or_insert(e);
            f64::NAN
        }
    };

    // Both functions are positive between the origin and their first root,
    // and every root lies above ν.
    let floor = nu.max(1e-3);
    let mut start = floor;
    if nu >= 0.5 {
        let s = nu.max(0.95 * mcmahon_seed(nu, 1, kind));
        if f(s) > 0.0 {
            start = s;
        }
    }
    let limit = nu + PI * (count as f64 + 2.0) + 12.0;

    let mut out = Vec::with_capacity(count as usize);
    for n in 1..=count {
        let bracket = scan_sign_change(f, start, SCAN_STEP, limit);
        if let Some(e) = err.borrow_mut().take() {
            return Err(e);
        }
        let (lo, hi) = bracket.ok_or_else(|| Error::Search {
            what: format!("radial root {kind:?} of order {nu}"),
            lo: start,
            hi: limit,
            found: out.len(),
            wanted: count as usize,
        })?;
        let x = if lo == hi { lo } else { brent(f, lo, hi, ROOT_XTOL)? };
        if let Some(e) = err.borrow_mut().take() {
            return Err(e);
        }
        out.push(RadialRoot {
            nu,
            n,
            kind,
            x,
            residual: radial_fn(nu, kind, x)?,
        });
        start = x + 1e-3;
    }
    Ok(out)
}

fn radial_root(nu: f64, n: u32, kind: RootKind) -> Result<RadialRoot> {
    if n == 0 {
        return Err(domain("radial_root", "radial index starts at 1"));
    }
    let roots = radial_roots(nu, n, kind)?;
    Ok(*roots.last().expect("n >= 1 roots requested"))
}

/// Resonant frequency in Hz for a root `x` in a sphere of radius `radius_m`.
pub fn frequency_from_root(x: f64, radius_m: f64) -> f64 {
    C0 * x / (2.0 * PI * radius_m)
}

/// Large-order estimate of the n-th root.
///
/// Uses the expansion in the Bessel order `μ = ν + 1/2`,
/// `x ≈ μ + c μ^{1/3} + d μ^{-1/3}` with `c = 2^{-1/3} z_n` built from the
/// n-th Airy zero (TE) or Airy-derivative zero (TM). Intended for `ν >= 0.5`.
pub fn mcmahon_seed(nu: f64, n: u32, kind: RootKind) -> f64 {
    let table = AiryRootTable::STANDARD;
    let scale = 2f64.powf(-1.0 / 3.0);
    let mu = nu + 0.5;
    let (c, d) = match kind {
        RootKind::TeJZero => {
            let c = scale * table.ai_zero(n);
            (c, 0.3 * c * c)
        }
        RootKind::TmRiccatiDerivZero => {
            let c = scale * table.ai_prime_zero(n);
            (c, 0.3 * c * c + 3.0 / (20.0 * c))
        }
    };
    mu + c * mu.cbrt() + d / mu.cbrt()
}

/// Leading-order inversion of the dispersion relation: the azimuthal index
/// reached at normalized frequency `X = ωa/c`.
pub fn asymptotic_m_of_omega(omega_a_over_c: f64, kind: RootKind) -> f64 {
    let coef = match kind {
        RootKind::TeJZero => 1.856,
        RootKind::TmRiccatiDerivZero => 0.809,
    };
    omega_a_over_c - coef * omega_a_over_c.cbrt()
}
