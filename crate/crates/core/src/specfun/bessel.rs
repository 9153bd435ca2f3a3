//! Spherical Bessel functions of the first kind for real order `ν > -1/2`.
//!
//! Arguments up to 8 are summed from the power series. Larger arguments go
//! through the cylindrical function `J_{ν+1/2}`: the ratio `J'/J` from the
//! first continued fraction, downward recurrence to an order in `[-1/2, 1/2)`,
//! and Steed's complex continued fraction to fix the normalization through
//! the Wronskian.

use std::f64::consts::PI;

use super::gamma::ln_gamma;
use crate::error::{domain, Error, Result};

const SERIES_CROSSOVER: f64 = 8.0;
const MAX_CF_ITER: usize = 100_000;
const FPMIN: f64 = f64::MIN_POSITIVE / f64::EPSILON;

fn check_order(func: &'static str, nu: f64) -> Result<()> {
    if !(nu > -0.5) || !nu.is_finite() {
        return Err(domain(func, format!("order nu = {nu} must exceed -1/2")));
    }
    Ok(())
}

/// `j_ν(x)`.
pub fn spherical_j(nu: f64, x: f64) -> Result<f64> {
    check_order("spherical_j", nu)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain("spherical_j", format!("x = {x} must be >= 0")));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            f64::INFINITY
        });
    }
    Ok(j_and_riccati(nu, x)?.0)
}

/// `d/dx [x j_ν(x)]`, evaluated analytically.
pub fn riccati_deriv(nu: f64, x: f64) -> Result<f64> {
    check_order("riccati_deriv", nu)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("riccati_deriv", format!("x = {x} must be > 0")));
    }
    Ok(j_and_riccati(nu, x)?.1)
}

/// `(j_ν(x), d/dx[x j_ν(x)])` for `x > 0`; the order is assumed validated.
pub(crate) fn j_and_riccati(nu: f64, x: f64) -> Result<(f64, f64)> {
    if x <= SERIES_CROSSOVER {
        power_series(nu, x)
    } else {
        let (j, jp) = cylindrical_j_steed(nu + 0.5, x)?;
        let s = (PI / (2.0 * x)).sqrt();
        Ok((s * j, s * (0.5 * j + x * jp)))
    }
}

fn power_series(nu: f64, x: f64) -> Result<(f64, f64)> {
    // t_k = (√π/2) (x/2)^{ν+2k} (-1)^k / (k! Γ(ν+k+3/2))
    let half = 0.5 * x;
    let mut term = 0.5 * PI.sqrt() * (nu * half.ln() - ln_gamma(nu + 1.5)?).exp();
    let q = -half * half;
    let mut j = term;
    let mut rd = (nu + 1.0) * term;
    for k in 0..500 {
        let kf = k as f64;
        term *= q / ((kf + 1.0) * (nu + kf + 1.5));
        j += term;
        rd += (nu + 2.0 * kf + 3.0) * term;
        let small = term.abs() <= 1e-17 * j.abs() && term.abs() * (nu + 2.0 * kf + 3.0) <= 1e-17 * rd.abs();
        if small && (kf + 1.0) * (nu + kf + 1.5) > -q {
            return Ok((j, rd));
        }
    }
    Err(Error::Convergence {
        terms: 500,
        partial_sum: j,
        last_term: term.abs(),
    })
}

/// `(J_μ(x), J'_μ(x))` for `μ >= 0` and `x >= 2`.
fn cylindrical_j_steed(mu: f64, x: f64) -> Result<(f64, f64)> {
    debug_assert!(mu >= 0.0 && x >= 2.0);
    let nl = ((mu - x + 1.5).floor()).max(0.0) as usize;
    let xmu = mu - nl as f64;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: J'_μ / J_μ by the modified Lentz method.
    let mut isign = 1.0;
    let mut h = (mu * xi).max(FPMIN);
    let mut b = xi2 * mu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAX_CF_ITER {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() <= f64::EPSILON {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence {
            terms: MAX_CF_ITER,
            partial_sum: h,
            last_term: f64::NAN,
        });
    }

    // Downward recurrence from μ to xmu on unnormalized values.
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut fact = mu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = f64::EPSILON;
    }
    let f = rjpl / rjl;

    // CF2 (Steed): p + iq = (J' + iY')/(J + iY) at order xmu.
    let xmu2 = xmu * xmu;
    let mut a = 0.25 - xmu2;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fct = a * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    let mut converged = false;
    for i in 1..MAX_CF_ITER {
        a += 2.0 * i as f64;
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di = -di / den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() <= f64::EPSILON {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence {
            terms: MAX_CF_ITER,
            partial_sum: p,
            last_term: f64::NAN,
        });
    }
    let gam = (p - f) / q;
    let rjmu = (w / ((p - f) * gam + q)).sqrt().copysign(rjl);
    let scale = rjmu / rjl;
    Ok((rjl1 * scale, rjp1 * scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j0(x: f64) -> f64 {
        x.sin() / x
    }
    fn j1(x: f64) -> f64 {
        x.sin() / (x * x) - x.cos() / x
    }
    fn j2(x: f64) -> f64 {
        (3.0 / (x * x) - 1.0) * x.sin() / x - 3.0 * x.cos() / (x * x)
    }

    /// Relative error measured against the local envelope `1/x`, which keeps
    /// the comparison meaningful at the zeros of the closed forms.
    fn close(got: f64, want: f64, x: f64, tol: f64) -> bool {
        (got - want).abs() <= tol * want.abs().max(1.0 / x)
    }

    #[test]
    fn elementary_closed_forms() {
        for i in 0..=2990 {
            let x = 0.1 + 0.01 * i as f64;
            for (nu, f) in [(0.0, j0 as fn(f64) -> f64), (1.0, j1), (2.0, j2)] {
                let got = spherical_j(nu, x).unwrap();
                assert!(
                    close(got, f(x), x, 1e-12),
                    "nu={nu} x={x} got={got} want={}",
                    f(x)
                );
            }
        }
    }

    #[test]
    fn riccati_deriv_order_zero_is_cosine() {
        for i in 0..=2990 {
            let x = 0.1 + 0.01 * i as f64;
            let got = riccati_deriv(0.0, x).unwrap();
            assert!((got - x.cos()).abs() <= 1e-12, "x={x}");
        }
        assert!(riccati_deriv(0.0, std::f64::consts::FRAC_PI_2).unwrap().abs() < 1e-15);
        assert!((riccati_deriv(0.0, 0.1).unwrap() - 0.995_004_165_3).abs() < 1e-10);
    }

    #[test]
    fn branches_agree_at_crossover() {
        for &nu in &[0.0, 0.078, 0.5, 2.0 / 3.0, 1.7, 5.0, 12.5, 20.0] {
            let x = SERIES_CROSSOVER;
            let (js, rs) = power_series(nu, x).unwrap();
            let (jc, jpc) = cylindrical_j_steed(nu + 0.5, x).unwrap();
            let s = (PI / (2.0 * x)).sqrt();
            assert!((js - s * jc).abs() < 1e-13, "nu={nu}");
            assert!((rs - s * (0.5 * jc + x * jpc)).abs() < 1e-12, "nu={nu}");
        }
    }

    #[test]
    fn riccati_matches_product_rule() {
        // d/dx[x j] = j + x j', and for integer order j' = j_{n-1} - (n+1) j_n / x.
        for i in 1..300 {
            let x = 0.1 * i as f64;
            let lhs = riccati_deriv(1.0, x).unwrap();
            let jp = j0(x) - 2.0 * j1(x) / x;
            let rhs = j1(x) + x * jp;
            assert!((lhs - rhs).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn half_order_zero_is_cylindrical_j1_zero() {
        // First zero of J_1 (bisection oracle, 3.83170597020751).
        let v = spherical_j(0.5, 3.831_705_970_2).unwrap();
        assert!(v.abs() < 1e-9);
    }

    #[test]
    fn small_argument_leading_term() {
        // j_ν(x) · (2ν+1)!! / x^ν → 1, with (2ν+1)!! = 2^{ν+1} Γ(ν+3/2)/√π.
        let nu: f64 = 2.4;
        let dfact = 2f64.powf(nu + 1.0) * ln_gamma(nu + 1.5).unwrap().exp() / PI.sqrt();
        let mut prev = f64::INFINITY;
        for &x in &[1e-1, 1e-2, 1e-3, 1e-4] {
            let ratio = spherical_j(nu, x).unwrap() * dfact / x.powf(nu);
            let dev = (ratio - 1.0).abs();
            assert!(dev < prev);
            prev = dev;
        }
        assert!(prev < 1e-8);
    }

    #[test]
    fn values_at_origin() {
        assert_eq!(spherical_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(spherical_j(1.5, 0.0).unwrap(), 0.0);
        assert!(spherical_j(0.0, std::f64::consts::PI).unwrap().abs() < 1e-16);
    }

    #[test]
    fn order_domain_enforced() {
        assert!(spherical_j(-0.5, 1.0).is_err());
        assert!(riccati_deriv(-0.7, 1.0).is_err());
        assert!(riccati_deriv(1.0, 0.0).is_err());
        assert!(spherical_j(0.3, -1.0).is_err());
        assert!(spherical_j(-0.3, 2.0).is_ok());
    }
}

#[cfg(test)]
mod large_order {
    use super::*;

    #[test]
    #[allow(clippy::excessive_precision)]
    fn below_turning_point() {
        // Reference values from a 30-digit evaluation of √(π/2x) J_{ν+1/2}(x).
        let cases = [
            (25.0, 20.0, 0.001_877_509_279_767_698_6),
            (20.0, 19.5, 0.031_542_523_549_018_133),
            (40.0, 35.0, 0.002_366_595_429_158_107_8),
            (10.0, 9.5, 0.050_380_573_755_839_666),
            (15.0, 8.5, 0.000_146_759_152_356_787_99),
        ];
        for (nu, x, want) in cases {
            let got = spherical_j(nu, x).unwrap();
            assert!(((got - want) / want).abs() < 1e-11, "nu={nu} x={x}");
        }
    }
}
