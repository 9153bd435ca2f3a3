//! Acceptance criteria. Run with
//! `cargo test -p cavity-modes --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::f64::consts::PI;

use cavity_modes::angular::{south_singular_coefficient, AngularDomain, AngularEigenpair};
use cavity_modes::energy::{sectoral_angular_norm, zonal_norm};
use cavity_modes::fields::{evaluate, wave_impedances, ModeSpec};
use cavity_modes::numeric::{integrate, QuadOptions};
use cavity_modes::radial::{
    j_zero, mcmahon_seed, riccati_deriv_zero, RootKind,
};
use cavity_modes::specfun::{legendre_theta, legendre_theta_deriv, SeriesControl};
use cavity_modes::spectrum::{cone_sweep, load_fixture, validate, wedge_sweep, CavityConfig};
use cavity_modes::Polarization;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const A: f64 = 0.015;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn mode(pol: Polarization, m: f64, k: u32) -> ModeSpec {
    let pair = AngularEigenpair::regular(m, k).unwrap();
    let root = match pol {
        Polarization::TE => j_zero(pair.nu, 1).unwrap(),
        Polarization::TM => riccati_deriv_zero(pair.nu, 1).unwrap(),
    };
    ModeSpec::new(pol, pair, root, A, AngularDomain::full_sphere()).unwrap()
}

fn universal_roots() -> Outcome {
    let r = validate("table1_universal").unwrap();
    let max_root = r.rows.iter().filter_map(|x| x.root_dev).map(f64::abs).fold(0.0, f64::max);
    let max_f = r
        .rows
        .iter()
        .map(|x| (x.f_ghz - x.f_theory_ghz).abs())
        .fold(0.0, f64::max);
    outcome(
        r.pass && r.rows.len() == 14,
        format!("max root dev {max_root:.2e}, max freq dev {max_f:.4} GHz over {} rows", r.rows.len()),
    )
}

fn wedge_spectrum() -> Outcome {
    let r = validate("table2_wedge90").unwrap();
    let worst = r
        .rows
        .iter()
        .max_by(|a, b| a.theory_dev_percent.abs().total_cmp(&b.theory_dev_percent.abs()))
        .unwrap();
    outcome(
        r.pass,
        format!(
            "max theory dev {:.2}% (row {}: {:.3} vs {:.2} GHz), max reference dev {:.2}%",
            r.max_theory_dev_percent,
            worst.label,
            worst.f_ghz,
            worst.f_theory_ghz,
            r.max_reference_dev_percent.unwrap_or(0.0)
        ),
    )
}

fn cone_regression() -> Outcome {
    let fx = load_fixture("table3_cone").unwrap();
    let thetas: Vec<f64> = fx.rows.iter().map(|r| r.cone_deg).collect();
    let rows = cone_sweep(&CavityConfig::full_sphere(fx.radius_m).unwrap(), &thetas).unwrap();
    let mut nu_dev = 0.0_f64;
    let mut f_dev = 0.0_f64;
    for (row, got) in fx.rows.iter().zip(&rows) {
        nu_dev = nu_dev.max((got.nu - row.nu.unwrap()).abs());
        f_dev = f_dev.max(100.0 * (got.frequency_hz * 1e-9 - row.f_theory_ghz).abs() / row.f_theory_ghz);
    }
    let monotone = rows.windows(2).all(|w| w[1].nu > w[0].nu);
    let n = rows.len() as f64;
    let (sx, sy) = rows.iter().fold((0.0, 0.0), |(a, b), r| (a + r.theta_c_deg, b + r.nu));
    let (sxx, sxy) = rows
        .iter()
        .fold((0.0, 0.0), |(a, b), r| (a + r.theta_c_deg.powi(2), b + r.theta_c_deg * r.nu));
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    let checks = [
        nu_dev <= 0.005,
        f_dev <= 0.5,
        monotone,
        (slope - 0.010).abs() <= 0.002,
        (intercept - 0.074).abs() <= 0.01,
    ];
    outcome(
        checks.iter().all(|&c| c),
        format!(
            "max nu dev {nu_dev:.4} (<= 0.005: {}), max freq dev {f_dev:.2}% (<= 0.5: {}), monotone {monotone}, slope {slope:.4}/deg, intercept {intercept:.4}",
            checks[0], checks[1]
        ),
    )
}

fn combined_geometry() -> Outcome {
    let r = validate("table4_combined").unwrap();
    let freq_ok = r.rows.iter().all(|x| x.theory_dev_percent.abs() <= 1.0);
    let below = r.rows.iter().all(|x| x.nu < x.m);
    let detail = r
        .rows
        .iter()
        .map(|x| format!("{}: f {:.3} GHz ({:+.2}%), nu {:.4} vs m {:.4}", x.label, x.f_ghz, x.theory_dev_percent, x.nu, x.m))
        .collect::<Vec<_>>()
        .join("; ");
    outcome(freq_ok && below, format!("freq within 1%: {freq_ok}, nu < m: {below}; {detail}"))
}

fn sectoral_exactness(rng: &mut StdRng) -> Outcome {
    let ctrl = SeriesControl::default();
    let mut worst = 0.0_f64;
    for _ in 0..20 {
        let m: f64 = rng.gen_range(1e-6..=5.0);
        for i in 1..=200 {
            let t = PI * i as f64 / 201.0;
            let (s, c) = t.sin_cos();
            let v = legendre_theta(m, m, t, ctrl).unwrap();
            let d = legendre_theta_deriv(m, m, t, ctrl).unwrap();
            let d2 = m * (m - 1.0) * s.powf(m - 2.0) * c * c - m * s.powf(m);
            let res = d2 + c / s * d + (m * (m + 1.0) - m * m / (s * s)) * v;
            let scale = v.abs().max(d.abs()).max(d2.abs());
            worst = worst.max(res.abs() / scale);
        }
    }
    outcome(worst < 1e-9, format!("max relative residual {worst:.2e}"))
}

fn discreteness() -> Outcome {
    let mut ok = true;
    let mut min_mid = f64::INFINITY;
    for &m in &[0.0, 0.5, 1.0] {
        for k in 0..6 {
            ok &= south_singular_coefficient(m + k as f64, m).unwrap() == 0.0;
        }
        for off in [0.5, 1.5, 2.5] {
            let c = south_singular_coefficient(m + off, m).unwrap().abs();
            min_mid = min_mid.min(c);
        }
    }
    outcome(ok && min_mid > 1e-3, format!("zero on ladder: {ok}, min |c| at midpoints {min_mid:.3}"))
}

fn null_field(rng: &mut StdRng) -> Outcome {
    let mut all = true;
    for pol in [Polarization::TM, Polarization::TE] {
        let md = mode(pol, 0.0, 0);
        for _ in 0..100 {
            let s = evaluate(
                &md,
                rng.gen_range(1e-6..A),
                rng.gen_range(1e-3..PI - 1e-3),
                rng.gen_range(0.0..2.0 * PI),
            )
            .unwrap();
            all &= s.is_zero();
        }
    }
    outcome(all, "200 samples")
}

fn duality(rng: &mut StdRng) -> Outcome {
    let mut worst = 0.0_f64;
    for _ in 0..50 {
        let m = rng.gen_range(1..4) as f64;
        let k = rng.gen_range(0..3);
        let md = mode(Polarization::TM, m, k);
        let z = wave_impedances(
            &md,
            rng.gen_range(1e-4..A),
            rng.gen_range(0.05..PI - 0.05),
            rng.gen_range(0.0..2.0 * PI),
        )
        .unwrap();
        let want = -md.medium.mu / md.medium.epsilon;
        worst = worst.max((z.te * z.tm - want).norm() / want.abs());
    }
    outcome(worst <= 1e-12, format!("max relative deviation {worst:.2e}"))
}

fn seed_accuracy() -> Outcome {
    let mut worst = 0.0_f64;
    for nu in [5.0, 8.0, 12.0, 16.0, 20.0] {
        for kind in [RootKind::TeJZero, RootKind::TmRiccatiDerivZero] {
            let root = match kind {
                RootKind::TeJZero => j_zero(nu, 1),
                RootKind::TmRiccatiDerivZero => riccati_deriv_zero(nu, 1),
            }
            .unwrap()
            .x;
            worst = worst.max((mcmahon_seed(nu, 1, kind) - root).abs() / root);
        }
    }
    outcome(worst < 0.01, format!("max relative seed error {:.3}%", 100.0 * worst))
}

fn closed_form_norms() -> Outcome {
    let mut worst = 0.0_f64;
    for i in 1..=50 {
        let m = i as f64 * 0.1;
        let q = integrate(|t: f64| t.sin().powf(2.0 * m + 1.0), 0.0, PI, QuadOptions::relative(1e-12))
            .unwrap()
            .value;
        let c = sectoral_angular_norm(m).unwrap();
        worst = worst.max((c - q).abs() / q);
    }
    let zonal = (0..=10u32).all(|l| zonal_norm(l) == 2.0 / (2 * l + 1) as f64);
    outcome(worst < 1e-8 && zonal, format!("max sectoral deviation {worst:.2e}, zonal exact: {zonal}"))
}

fn wedge_inversion() -> Outcome {
    let rows = wedge_sweep(&CavityConfig::default(), &[270.0, 180.0]).unwrap();
    let (f270, f180) = (rows[0].frequency_hz, rows[1].frequency_hz);
    let drop = 100.0 * (1.0 - f270 / f180);
    outcome(
        drop >= 10.0,
        format!("{:.3} GHz at 270 deg vs {:.3} GHz at 180 deg ({drop:.1}% lower)", f270 * 1e-9, f180 * 1e-9),
    )
}

#[test]
fn acceptance() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let results = [
        ("universal roots and frequencies", universal_roots()),
        ("270 deg wedge spectrum", wedge_spectrum()),
        ("north-pole cone sweep", cone_regression()),
        ("combined wedge and cone", combined_geometry()),
        ("sectoral solution exactness", sectoral_exactness(&mut rng)),
        ("south-pole discreteness", discreteness()),
        ("null-point field", null_field(&mut rng)),
        ("impedance duality", duality(&mut rng)),
        ("large-order root seed", seed_accuracy()),
        ("closed-form angular norms", closed_form_norms()),
        ("wedge vs hemisphere fundamental", wedge_inversion()),
    ];
    let mut failed = Vec::new();
    for (i, (name, o)) in results.iter().enumerate() {
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        if !o.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
