use std::cmp::Ordering;
use std::f64::consts::PI;

use super::config::{CavityConfig, ModeRecord};
use crate::angular::{ConeScan, azimuthal_indices, classify, nu_regular_both_poles, Family};
use crate::error::{Error, Result};
use crate::radial::{frequency_from_root, radial_roots, RootKind};
use crate::specfun::SeriesControl;
use crate::{Polarization, C0};

/// Relative slack on the frequency cutoff.
pub const CUTOFF_SLACK: f64 = 1e-6;
const GROWTH: f64 = 1.25;
const MAX_STEPS: usize = 80;

/// How far to enumerate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Limit {
    /// All modes up to this frequency in Hz, inclusive.
    MaxFrequency(f64),
    /// The lowest `n` modes.
    Count(usize),
}

fn wrap(m: f64, k: Option<u32>, n: u32) -> impl Fn(Error) -> Error {
    move |e| Error::Mode {
        m,
        k,
        n,
        source: Box::new(e),
    }
}

/// Roots of the given kind at or below `x_max`.
fn roots_below(nu: f64, kind: RootKind, x_max: f64) -> Result<Vec<f64>> {
    let mut count = ((x_max - nu).max(0.0) / PI).ceil() as u32 + 2;
    loop {
        let roots = radial_roots(nu, count, kind)?;
        let last = roots.last().map(|r| r.x).unwrap_or(f64::INFINITY);
        if last > x_max {
            return Ok(roots.into_iter().map(|r| r.x).filter(|&x| x <= x_max).collect());
        }
        count *= 2;
    }
}

/// Candidate angular degrees for one azimuthal index, per polarization.
/// Cone scans are kept so later branches resume where earlier ones stopped.
struct Degrees {
    m: f64,
    cone: Option<[ConeScan; 2]>,
}

impl Degrees {
    fn new(config: &CavityConfig, m: f64) -> Result<Self> {
        let cone = if config.cone_half_angle_deg > 0.0 {
            let tc = config.cone_half_angle_deg.to_radians();
            let ctrl = SeriesControl::default();
            Some([
                ConeScan::new(m, tc, Polarization::TM, ctrl)?,
                ConeScan::new(m, tc, Polarization::TE, ctrl)?,
            ])
        } else {
            None
        };
        Ok(Self { m, cone })
    }

    fn get(&mut self, index: u32, pol: Polarization) -> Result<f64> {
        let Some(scans) = self.cone.as_mut() else {
            return Ok(nu_regular_both_poles(self.m, index));
        };
        let scan = &mut scans[pol as usize];
        scan.extend_to(index as usize + 1)?;
        Ok(scan.roots[index as usize])
    }
}

fn compare(a: &ModeRecord, b: &ModeRecord) -> Ordering {
    a.frequency_hz
        .total_cmp(&b.frequency_hz)
        .then(a.polarization.cmp(&b.polarization))
        .then(a.m.total_cmp(&b.m))
        .then(a.nu.total_cmp(&b.nu))
        .then(a.n.cmp(&b.n))
}

fn enumerate_to(config: &CavityConfig, f_max: f64, cache: &mut Vec<Degrees>) -> Result<Vec<ModeRecord>> {
    let domain = config.angular_domain()?;
    let has_cone = domain.has_cone();
    let x_max = 2.0 * PI * config.radius_m * f_max / C0 * (1.0 + CUTOFF_SLACK);
    let mut out = Vec::new();

    let mut m_count = 8;
    let mut mi = 0;
    'm: loop {
        let ms = azimuthal_indices(&domain, m_count);
        if mi >= ms.len() {
            m_count *= 2;
            continue;
        }
        let m = ms[mi];
        mi += 1;

        if cache.len() < mi {
            cache.push(Degrees::new(config, m).map_err(wrap(m, None, 1))?);
        }
        let degrees = &mut cache[mi - 1];
        let mut index = 0u32;
        loop {
            let mut lowest = f64::INFINITY;
            for pol in [Polarization::TM, Polarization::TE] {
                let k = (!has_cone).then_some(index);
                let branch = has_cone.then_some(index + 1);
                let nu = degrees.get(index, pol).map_err(wrap(m, k, 1))?;
                let family = classify(nu, m, has_cone).map_err(wrap(m, k, 1))?;
                if family == Family::Null {
                    continue;
                }
                let xs = roots_below(nu, pol.into(), x_max).map_err(wrap(m, k, 1))?;
                // an empty list means even the first root is above the cutoff
                lowest = lowest.min(xs.first().copied().unwrap_or(f64::MAX));
                for (i, &x) in xs.iter().enumerate() {
                    out.push(ModeRecord {
                        polarization: pol,
                        nu,
                        m,
                        k,
                        branch,
                        n: i as u32 + 1,
                        root_x: x,
                        frequency_hz: frequency_from_root(x, config.radius_m),
                        family,
                    });
                }
            }
            if lowest == f64::INFINITY {
                // only the null pair at this index
                index += 1;
                continue;
            }
            if lowest > x_max {
                if index == 0 || (m == 0.0 && !has_cone && index == 1) {
                    // roots grow with ν, and ν with m
                    break 'm;
                }
                break;
            }
            index += 1;
        }
    }
    out.sort_by(compare);
    Ok(out)
}

/// Modes of the cavity sorted by frequency (ties: TM first, then smaller m).
pub fn enumerate_modes(config: &CavityConfig, limit: Limit) -> Result<Vec<ModeRecord>> {
    config.validate()?;
    match limit {
        Limit::MaxFrequency(f) => {
            if !(f > 0.0) {
                return Err(Error::Config(format!("frequency cutoff {f} Hz must be positive")));
            }
            enumerate_to(config, f, &mut Vec::new())
        }
        Limit::Count(n) => {
            if n == 0 {
                return Ok(Vec::new());
            }
            // A few times the full-sphere fundamental is a reasonable start.
            let mut f = 2.0 * frequency_from_root(2.744, config.radius_m);
            let mut cache = Vec::new();
            for _ in 0..MAX_STEPS {
                let mut modes = enumerate_to(config, f, &mut cache)?;
                if modes.len() >= n {
                    modes.truncate(n);
                    return Ok(modes);
                }
                f *= GROWTH;
            }
            Err(Error::Config(format!("could not collect {n} modes")))
        }
    }
}
