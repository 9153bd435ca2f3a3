use std::f64::consts::PI;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use cavity_modes::angular::{azimuthal_indices, cone_condition, AngularEigenpair, ConeScan, FaceKind};
use cavity_modes::energy::mode_energy;
use cavity_modes::fields::{evaluate, poynting, Azimuth, ModeSpec};
use cavity_modes::radial::{radial_roots, RootKind};
use cavity_modes::specfun::SeriesControl;
use cavity_modes::spectrum::{
    cone_sweep, dispersion_table, enumerate_modes, fixture_names, validate, wedge_sweep,
    CavityConfig, Limit, ModeRecord, ValidationReport,
};
use cavity_modes::Polarization;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "cavity-modes", version, about = "Resonant modes of conducting spherical cavities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List resonances up to a frequency or count.
    Modes {
        #[command(flatten)]
        geometry: Geometry,
        /// Upper frequency in GHz (inclusive).
        #[arg(long, conflicts_with = "count")]
        fmax_ghz: Option<f64>,
        /// Number of lowest modes instead of a cutoff.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// First TE and TM roots for a list of degrees.
    Dispersion {
        #[arg(long, value_delimiter = ',', required = true)]
        nu_list: Vec<f64>,
        #[arg(long, default_value_t = 15.0)]
        radius_mm: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Fundamental TM mode against cone half-angle.
    ConeSweep {
        /// Half-angles in degrees.
        #[arg(long, value_delimiter = ',', required = true)]
        thetas: Vec<f64>,
        #[arg(long, default_value_t = 15.0)]
        radius_mm: f64,
        #[arg(long, default_value_t = 360.0)]
        wedge_deg: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Fundamental TM mode against wedge opening.
    WedgeSweep {
        /// Openings in degrees.
        #[arg(long, value_delimiter = ',', required = true)]
        openings: Vec<f64>,
        #[arg(long, default_value_t = 15.0)]
        radius_mm: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Field components of one mode at a point.
    Field {
        #[command(flatten)]
        geometry: Geometry,
        /// `pol,nu,m,n`, e.g. `TM,0.6667,0.6667,1`.
        #[arg(long)]
        mode: String,
        /// `r,theta,phi` with r in mm and angles in degrees.
        #[arg(long)]
        at: String,
        /// Azimuthal factor on the full sphere (wedges pick their own).
        #[arg(long, value_enum, default_value_t = AzimuthArg::Traveling)]
        azimuth: AzimuthArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Recompute a bundled reference table.
    Validate {
        /// Fixture name; all fixtures when omitted.
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Stored energy of one mode at unit amplitude.
    Energy {
        #[command(flatten)]
        geometry: Geometry,
        /// `pol,nu,m,n`.
        #[arg(long)]
        mode: String,
        #[arg(long, value_enum, default_value_t = AzimuthArg::Traveling)]
        azimuth: AzimuthArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Args)]
struct Geometry {
    #[arg(long, default_value_t = 15.0)]
    radius_mm: f64,
    /// Retained azimuthal opening; 360 for the full sphere.
    #[arg(long, default_value_t = 360.0)]
    wedge_deg: f64,
    /// Half-angle of a conducting cone at the north pole; 0 for none.
    #[arg(long, default_value_t = 0.0)]
    cone_deg: f64,
    /// Second wedge face conducting (pec-pec) or magnetic (pec-pmc).
    #[arg(long, value_enum, default_value_t = Faces::PecPec)]
    faces: Faces,
}

impl Geometry {
    fn config(&self) -> Result<CavityConfig> {
        let kind = match self.faces {
            Faces::PecPec => FaceKind::PecPec,
            Faces::PecPmc => FaceKind::PecPmc,
        };
        Ok(CavityConfig::new(self.radius_mm * 1e-3, self.wedge_deg, self.cone_deg)?.with_face_kind(kind))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Faces {
    PecPec,
    PecPmc,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum AzimuthArg {
    Traveling,
    Sin,
    Cos,
}

impl From<AzimuthArg> for Azimuth {
    fn from(a: AzimuthArg) -> Self {
        match a {
            AzimuthArg::Traveling => Azimuth::Traveling,
            AzimuthArg::Sin => Azimuth::Sine,
            AzimuthArg::Cos => Azimuth::Cosine,
        }
    }
}

#[derive(Serialize)]
struct ModeRow {
    pol: String,
    nu: f64,
    m: f64,
    k: Option<u32>,
    n: u32,
    x: f64,
    #[serde(rename = "f_GHz")]
    f_ghz: f64,
    family: String,
}

impl From<&ModeRecord> for ModeRow {
    fn from(r: &ModeRecord) -> Self {
        Self {
            pol: r.polarization.to_string(),
            nu: r.nu,
            m: r.m,
            k: r.k,
            n: r.n,
            x: r.root_x,
            f_ghz: r.frequency_ghz(),
            family: r.family.to_string(),
        }
    }
}

/// Writes serializable rows as CSV or a JSON array.
fn emit<T: Serialize>(format: Format, rows: &[T]) -> Result<()> {
    let out = io::stdout();
    match format {
        Format::Json => {
            let mut lock = out.lock();
            serde_json::to_writer_pretty(&mut lock, rows)?;
            writeln!(lock)?;
        }
        _ => {
            let mut w = csv::Writer::from_writer(out.lock());
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn print_table(header: &[&str], rows: &[Vec<String>]) {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    println!("{}", line(header.iter().map(|s| s.to_string()).collect()));
    for r in rows {
        println!("{}", line(r.clone()));
    }
}

fn modes(geometry: &Geometry, fmax_ghz: Option<f64>, count: Option<usize>, format: Format) -> Result<()> {
    let config = geometry.config()?;
    let limit = match (fmax_ghz, count) {
        (Some(f), None) => Limit::MaxFrequency(f * 1e9),
        (None, Some(n)) => Limit::Count(n),
        _ => bail!("give one of --fmax-ghz or --count"),
    };
    let records = enumerate_modes(&config, limit)?;
    let rows: Vec<ModeRow> = records.iter().map(ModeRow::from).collect();
    if format == Format::Table {
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                vec![
                    r.pol.clone(),
                    format!("{:.4}", r.nu),
                    format!("{:.4}", r.m),
                    r.k.map(|k| k.to_string()).unwrap_or_else(|| "-".into()),
                    r.n.to_string(),
                    format!("{:.4}", r.x),
                    format!("{:.2}", r.f_ghz),
                    r.family.clone(),
                ]
            })
            .collect();
        print_table(&["pol", "nu", "m", "k", "n", "x", "f_GHz", "family"], &cells);
        return Ok(());
    }
    emit(format, &rows)
}

fn parse_triple(s: &str, what: &str) -> Result<[f64; 3]> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        bail!("{what} needs three comma-separated numbers, got `{s}`");
    }
    let mut out = [0.0; 3];
    for (o, p) in out.iter_mut().zip(&parts) {
        *o = p.parse().with_context(|| format!("bad number `{p}` in {what}"))?;
    }
    Ok(out)
}

/// Builds a mode from `pol,nu,m,n`. Without a cone `nu - m` must be a
/// non-negative integer; with one, `nu` is matched to the nearest cone root.
fn build_mode(geometry: &Geometry, spec: &str, azimuth: AzimuthArg) -> Result<ModeSpec> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        bail!("--mode needs `pol,nu,m,n`, got `{spec}`");
    }
    let pol: Polarization = parts[0].parse()?;
    let nu: f64 = parts[1].parse().with_context(|| format!("bad nu `{}`", parts[1]))?;
    let m: f64 = parts[2].parse().with_context(|| format!("bad m `{}`", parts[2]))?;
    let n: u32 = parts[3].parse().with_context(|| format!("bad n `{}`", parts[3]))?;
    if n == 0 {
        bail!("radial index n starts at 1");
    }
    let config = geometry.config()?;
    let domain = config.angular_domain()?;
    let count = (m.max(0.0) * domain.azimuth_opening_rad / PI).ceil() as usize + 2;
    let m = azimuthal_indices(&domain, count)
        .into_iter()
        .min_by(|a, b| (a - m).abs().total_cmp(&(b - m).abs()))
        .filter(|a| (a - m).abs() <= 1e-3)
        .with_context(|| format!("m = {m} is not an admissible azimuthal index for this geometry"))?;

    let pair = if domain.has_cone() {
        let ctrl = SeriesControl::default();
        let mut scan = ConeScan::new(m, domain.cone_half_angle_rad, pol, ctrl)?;
        let mut branch = 0;
        loop {
            scan.extend_to(branch + 1)?;
            let root = scan.roots[branch];
            if (root - nu).abs() <= 1e-3 {
                break AngularEigenpair::coned(root, m)?;
            }
            if root > nu + 1e-3 {
                let residual = cone_condition(nu, m, domain.cone_half_angle_rad, pol, ctrl)?;
                bail!("nu = {nu} is not a cone eigenvalue for m = {m} (condition {residual:.3e})");
            }
            branch += 1;
        }
    } else {
        let k = (nu - m).round();
        if k < 0.0 || (nu - m - k).abs() > 1e-3 {
            bail!("without a cone nu - m must be a non-negative integer, got {}", nu - m);
        }
        AngularEigenpair::regular(m, k as u32)?
    };
    let root = radial_roots(pair.nu, n, RootKind::from(pol))?[n as usize - 1];
    let mut mode = ModeSpec::new(pol, pair, root, config.radius_m, domain)?;
    if !domain.has_wedge() {
        mode = mode.with_azimuth(azimuth.into());
    }
    Ok(mode)
}

#[derive(Serialize)]
struct ComponentRow {
    component: &'static str,
    re: f64,
    im: f64,
}

fn field(geometry: &Geometry, spec: &str, at: &str, azimuth: AzimuthArg, format: Format) -> Result<()> {
    let mode = build_mode(geometry, spec, azimuth)?;
    let [r_mm, t_deg, p_deg] = parse_triple(at, "--at")?;
    let s = evaluate(&mode, r_mm * 1e-3, t_deg.to_radians(), p_deg.to_radians())?;
    let names = ["E_r", "E_theta", "E_phi", "H_r", "H_theta", "H_phi"];
    let mut rows: Vec<ComponentRow> = names
        .iter()
        .zip(s.e.iter().chain(s.h.iter()))
        .map(|(n, c)| ComponentRow {
            component: n,
            re: c.re,
            im: c.im,
        })
        .collect();
    for (n, v) in ["S_r", "S_theta", "S_phi"].iter().zip(poynting(&s)) {
        rows.push(ComponentRow {
            component: n,
            re: v,
            im: 0.0,
        });
    }
    if format == Format::Table {
        println!(
            "{} nu={:.6} m={:.6} n={} f={:.4} GHz azimuth={:?}",
            mode.polarization,
            mode.eigenpair.nu,
            mode.eigenpair.m,
            mode.radial.n,
            mode.omega() / (2.0 * PI) * 1e-9,
            mode.azimuth
        );
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|r| vec![r.component.to_string(), format!("{:.6e}", r.re), format!("{:.6e}", r.im)])
            .collect();
        print_table(&["component", "re", "im"], &cells);
        return Ok(());
    }
    emit(format, &rows)
}

fn energy(geometry: &Geometry, spec: &str, azimuth: AzimuthArg, format: Format) -> Result<()> {
    let mode = build_mode(geometry, spec, azimuth)?;
    let report = mode_energy(&mode)?;
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(())
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Flat {
                radial_integrable: bool,
                angular_norm: f64,
                total_energy_j: f64,
                electric_energy_j: f64,
                magnetic_energy_j: f64,
                i_r: f64,
                i_theta: f64,
                i_phi: f64,
            }
            emit(
                format,
                &[Flat {
                    radial_integrable: report.radial_integrable,
                    angular_norm: report.angular_norm,
                    total_energy_j: report.total_energy,
                    electric_energy_j: report.electric_energy,
                    magnetic_energy_j: report.magnetic_energy,
                    i_r: report.factorization.i_r,
                    i_theta: report.factorization.i_theta,
                    i_phi: report.factorization.i_phi,
                }],
            )
        }
        Format::Table => {
            println!("radial integrable  {}", report.radial_integrable);
            println!("angular norm       {:.10e}", report.angular_norm);
            println!("total energy (J)   {:.10e}", report.total_energy);
            println!("electric (J)       {:.10e}", report.electric_energy);
            println!("magnetic (J)       {:.10e}", report.magnetic_energy);
            println!(
                "I_r, I_theta, I_phi  {:.6e}, {:.6e}, {:.6e}",
                report.factorization.i_r, report.factorization.i_theta, report.factorization.i_phi
            );
            Ok(())
        }
    }
}

fn print_report(r: &ValidationReport) {
    println!("{}: {}", r.name, if r.pass { "PASS" } else { "FAIL" });
    let cells: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|x| {
            vec![
                x.label.clone(),
                x.polarization.to_string(),
                format!("{:.4}", x.m_printed),
                format!("{:.4}", x.m),
                format!("{:.4}", x.nu),
                format!("{:.4}", x.x),
                format!("{:.2}", x.f_ghz),
                format!("{:.2}", x.f_theory_ghz),
                format!("{:+.2}", x.theory_dev_percent),
                x.reference_dev_percent.map(|d| format!("{d:+.2}")).unwrap_or_else(|| "-".into()),
                if x.pass() { "ok" } else { "FAIL" }.into(),
            ]
        })
        .collect();
    print_table(
        &["row", "pol", "m_printed", "m", "nu", "x", "f_GHz", "printed", "dev_%", "ref_dev_%", ""],
        &cells,
    );
    println!(
        "max |dev| {:.2}%, mean |dev| {:.2}%, max |ref dev| {}",
        r.max_theory_dev_percent,
        r.mean_theory_dev_percent,
        r.max_reference_dev_percent
            .map(|d| format!("{d:.2}%"))
            .unwrap_or_else(|| "-".into())
    );
}

/// Returns whether every requested fixture passed.
fn run_validate(fixture: Option<String>, format: Format) -> Result<bool> {
    let names: Vec<String> = match fixture {
        Some(n) => vec![n],
        None => fixture_names().into_iter().map(String::from).collect(),
    };
    let reports = names
        .iter()
        .map(|n| validate(n).with_context(|| format!("validating `{n}`")))
        .collect::<Result<Vec<_>>>()?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
        Format::Csv => {
            #[derive(Serialize)]
            struct Flat<'a> {
                fixture: &'a str,
                row: &'a str,
                pol: String,
                m: f64,
                nu: f64,
                x: f64,
                #[serde(rename = "f_GHz")]
                f_ghz: f64,
                f_theory_ghz: f64,
                theory_dev_percent: f64,
                reference_dev_percent: Option<f64>,
                pass: bool,
            }
            let rows: Vec<Flat> = reports
                .iter()
                .flat_map(|r| {
                    r.rows.iter().map(move |x| Flat {
                        fixture: &r.name,
                        row: &x.label,
                        pol: x.polarization.to_string(),
                        m: x.m,
                        nu: x.nu,
                        x: x.x,
                        f_ghz: x.f_ghz,
                        f_theory_ghz: x.f_theory_ghz,
                        theory_dev_percent: x.theory_dev_percent,
                        reference_dev_percent: x.reference_dev_percent,
                        pass: x.pass(),
                    })
                })
                .collect();
            emit(format, &rows)?;
        }
        Format::Table => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print_report(r);
            }
        }
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Modes {
            geometry,
            fmax_ghz,
            count,
            format,
        } => modes(&geometry, fmax_ghz, count, format)?,
        Command::Dispersion {
            nu_list,
            radius_mm,
            format,
        } => {
            let rows = dispersion_table(&nu_list, radius_mm * 1e-3)?;
            if format == Format::Table {
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        vec![
                            format!("{:.4}", r.nu),
                            format!("{:.4}", r.x_te),
                            format!("{:.2}", r.f_te_hz * 1e-9),
                            format!("{:.4}", r.x_tm),
                            format!("{:.2}", r.f_tm_hz * 1e-9),
                        ]
                    })
                    .collect();
                print_table(&["nu", "x_TE", "f_TE_GHz", "x_TM", "f_TM_GHz"], &cells);
            } else {
                emit(format, &rows)?;
            }
        }
        Command::ConeSweep {
            thetas,
            radius_mm,
            wedge_deg,
            format,
        } => {
            let template = CavityConfig::new(radius_mm * 1e-3, wedge_deg, 0.0)?;
            let rows = cone_sweep(&template, &thetas)?;
            if format == Format::Table {
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        vec![
                            format!("{:.2}", r.theta_c_deg),
                            format!("{:.4}", r.m),
                            format!("{:.4}", r.nu),
                            format!("{:.4}", r.x),
                            format!("{:.2}", r.frequency_hz * 1e-9),
                        ]
                    })
                    .collect();
                print_table(&["theta_c_deg", "m", "nu", "x", "f_GHz"], &cells);
            } else {
                emit(format, &rows)?;
            }
        }
        Command::WedgeSweep {
            openings,
            radius_mm,
            format,
        } => {
            let rows = wedge_sweep(&CavityConfig::full_sphere(radius_mm * 1e-3)?, &openings)?;
            if format == Format::Table {
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        vec![
                            format!("{:.1}", r.opening_deg),
                            format!("{:.4}", r.m),
                            format!("{:.4}", r.x),
                            format!("{:.2}", r.frequency_hz * 1e-9),
                        ]
                    })
                    .collect();
                print_table(&["opening_deg", "m", "x", "f_GHz"], &cells);
            } else {
                emit(format, &rows)?;
            }
        }
        Command::Field {
            geometry,
            mode,
            at,
            azimuth,
            format,
        } => field(&geometry, &mode, &at, azimuth, format)?,
        Command::Validate { fixture, format } => return run_validate(fixture, format),
        Command::Energy {
            geometry,
            mode,
            azimuth,
            format,
        } => energy(&geometry, &mode, azimuth, format)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
