#![allow(clippy::excessive_precision)]

mod common;

use cavity_modes::specfun::{
    hyp2f1, legendre_theta, legendre_theta_deriv, riccati_deriv, spherical_j, SeriesControl,
};
use common::deriv;
use proptest::prelude::*;
use std::f64::consts::PI;

fn ctrl() -> SeriesControl {
    SeriesControl::default()
}

#[test]
fn non_integer_order_against_references() {
    // 30-digit references (mpmath)
    let cases = [
        (2.0 / 3.0, 5.5, -0.181_108_384_188_370_69, -0.154_626_605_952_882_04),
        (0.1, 12.25, -0.036_902_378_077_937_182, 0.891_883_435_154_713_62),
        (3.7, 2.0, 0.022_374_713_426_508_261, 0.096_273_389_087_823_411),
        (7.0 / 3.0, 30.0, 0.032_455_450_276_077_802, 0.236_153_945_212_912_77),
    ];
    for (nu, x, j, rd) in cases {
        assert!((spherical_j(nu, x).unwrap() - j).abs() < 1e-12 * j.abs().max(1e-2), "j {nu} {x}");
        assert!((riccati_deriv(nu, x).unwrap() - rd).abs() < 1e-12 * rd.abs().max(1e-2), "rd {nu} {x}");
    }
}

#[test]
fn legendre_against_references() {
    let cases = [
        (0.35, 0.0, 2.9, -0.472_147_627_025_550_4),
        (2.4, 2.0 / 3.0, 1.1, 0.069_187_113_344_892_046),
        (1.7, 0.5, 2.6, -0.337_993_152_552_161_58),
    ];
    for (nu, m, t, want) in cases {
        let got = legendre_theta(nu, m, t, ctrl()).unwrap();
        assert!((got - want).abs() < 1e-10 * want.abs(), "{nu} {m} {t}: {got} vs {want}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sectoral_equals_power_of_sine(m in 0.01f64..5.0, theta in 0.05f64..(PI - 0.05)) {
        let got = legendre_theta(m, m, theta, ctrl()).unwrap();
        let want = theta.sin().powf(m);
        prop_assert!((got - want).abs() <= 1e-12 * want, "{got} vs {want}");
    }

    #[test]
    fn terminating_solutions_satisfy_the_equation(
        m in 0.0f64..4.0,
        k in 0u32..5,
        theta in 0.1f64..(PI - 0.1),
    ) {
        let nu = m + k as f64;
        let v = legendre_theta(nu, m, theta, ctrl()).unwrap();
        let d = legendre_theta_deriv(nu, m, theta, ctrl()).unwrap();
        // step shrinks toward the poles where sin^m bends hardest
        let h = 1e-3 * theta.min(PI - theta);
        let d2 = deriv(|t| legendre_theta_deriv(nu, m, t, ctrl()).unwrap(), theta, h);
        let (s, c) = theta.sin_cos();
        let res = d2 + c / s * d + (nu * (nu + 1.0) - m * m / (s * s)) * v;
        let scale = v.abs().max(d.abs()).max(d2.abs()).max(nu * (nu + 1.0) * v.abs()).max(1e-3);
        prop_assert!(res.abs() < 1e-9 * scale, "res {res} scale {scale}");
    }

    #[test]
    fn closed_form_orders(x in 0.5f64..30.0) {
        let (s, c) = x.sin_cos();
        let j0 = s / x;
        let j1 = s / (x * x) - c / x;
        let j2 = (3.0 / (x * x) - 1.0) * s / x - 3.0 * c / (x * x);
        for (nu, want) in [(0.0, j0), (1.0, j1), (2.0, j2)] {
            let got = spherical_j(nu, x).unwrap();
            prop_assert!((got - want).abs() <= 1e-12 * want.abs().max(0.05), "nu={nu} x={x}");
        }
        prop_assert!((riccati_deriv(0.0, x).unwrap() - c).abs() < 1e-12);
    }

    #[test]
    fn three_term_recurrence(nu in 0.5f64..12.0, x in 0.3f64..45.0) {
        let a = spherical_j(nu - 1.0, x).unwrap();
        let b = spherical_j(nu, x).unwrap();
        let c = spherical_j(nu + 1.0, x).unwrap();
        let lhs = a + c;
        let rhs = (2.0 * nu + 1.0) / x * b;
        let scale = a.abs().max(c.abs()).max(rhs.abs());
        prop_assert!((lhs - rhs).abs() <= 1e-11 * scale, "{lhs} vs {rhs}");
    }

    #[test]
    fn riccati_is_derivative_of_x_j(nu in 0.0f64..8.0, x in 0.5f64..40.0) {
        let fd = deriv(|t| t * spherical_j(nu, t).unwrap(), x, 1e-3);
        let got = riccati_deriv(nu, x).unwrap();
        prop_assert!((fd - got).abs() < 1e-9, "{fd} vs {got}");
    }

    #[test]
    fn terminating_hypergeometric_is_exact(
        kk in 0u64..8,
        b in -3.0f64..6.0,
        c in 0.2f64..5.0,
        z in 0.0f64..0.999,
    ) {
        let a = -(kk as f64);
        let tight = hyp2f1(a, b, c, z, SeriesControl::new(10, 1e-16).unwrap()).unwrap();
        let loose = hyp2f1(a, b, c, z, SeriesControl::new(10, 0.5).unwrap()).unwrap();
        prop_assert_eq!(tight, loose);
        let mut term = 1.0;
        let mut sum = 1.0;
        for n in 0..kk {
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
            sum += term;
        }
        prop_assert!((tight - sum).abs() <= 1e-14 * sum.abs().max(1.0));
    }
}
