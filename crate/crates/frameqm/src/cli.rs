//! Batch command-line front end: every computation and verification as a
//! subcommand with JSON/CSV reports.
//!
//! Exit codes: 0 all checks pass (or plain computation succeeded), 1 a
//! tolerance-gated check failed, 2 usage or input errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::curves::CurvatureProfile;
use crate::dirac;
use crate::error::Error;
use crate::input;
use crate::nets;
use crate::numerics::{self, Boundary};
use crate::potentials;
use crate::report::CheckReport;
use crate::spectral::{self, BoundaryCondition, Potential};
use crate::surfaces::{self, LoopRect};
use crate::verify::{self, Preset};

#[derive(Debug, Parser)]
#[command(
    name = "frameqm",
    about = "Moving-frame geometry of constrained quantum motion: potentials, spectra, Dirac identities, holonomy",
    version
)]
struct Cli {
    /// Directory for report files.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    /// Report format where both are meaningful.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Grid preset: desk (fast) or fine (one refinement level up).
    #[arg(long, global = true, value_enum, default_value_t = PresetArg::Desk)]
    preset: PresetArg,
    /// JSON file with default values for the subcommand's numeric flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PresetArg {
    Desk,
    Fine,
}

impl From<PresetArg> for Preset {
    fn from(p: PresetArg) -> Self {
        match p {
            PresetArg::Desk => Preset::Desk,
            PresetArg::Fine => Preset::Fine,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Curvature profile and potentials of a curve (CSV: s, kappa, V_dC, V_plus, V_minus).
    Potential(PotentialArgs),
    /// Partner spectra and pairing report (JSON).
    #[command(name = "susy-spectrum")]
    SusySpectrum(SusyArgs),
    /// Parallel-transported ground state (CSV: s, psi..., residual).
    Transport(TransportArgs),
    /// Dirac constituent identities on a Fermi strip (JSON).
    #[command(name = "dirac-check")]
    DiracCheck(DiracArgs),
    /// Gauss compatibility residual of an orthogonal net (JSON).
    #[command(name = "gauss-check")]
    GaussCheck(GaussArgs),
    /// Transverse Riccati flow vs the closed form (CSV: rho, k1, closed, abs_err).
    Riccati(RiccatiArgs),
    /// Fundamental forms and potential of a surface (CSV: u, v, H, K, V_dC).
    Surface(SurfaceArgs),
    /// Loop holonomy against enclosed curvature (JSON).
    Holonomy(HolonomyArgs),
    /// Physical energy-scale estimate (JSON).
    Estimate(EstimateArgs),
    /// Run the complete verification suite.
    #[command(name = "verify-all")]
    VerifyAll,
}

#[derive(Debug, Args)]
struct PotentialArgs {
    /// Curve input file; defaults to the tanh-bump profile.
    #[arg(long)]
    curve: Option<PathBuf>,
    /// Sample count for the default profile.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, Args)]
struct SusyArgs {
    #[arg(long)]
    curve: Option<PathBuf>,
    /// Grid size of the default tanh profile.
    #[arg(long)]
    n: Option<usize>,
    /// Eigenvalues per partner side.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    e_floor: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct TransportArgs {
    #[arg(long)]
    curve: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    /// Constant curvature for matrix (Frenet) transport.
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<f64>,
    /// Constant torsion for matrix transport; enables the 3-component mode.
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<f64>,
    /// Arclength span for matrix transport.
    #[arg(long)]
    length: Option<f64>,
}

#[derive(Debug, Args)]
struct DiracArgs {
    #[arg(long)]
    n_s: Option<usize>,
    #[arg(long)]
    n_rho: Option<usize>,
    #[arg(long)]
    rho_max: Option<f64>,
}

#[derive(Debug, Args)]
struct GaussArgs {
    /// Net input file; defaults to the tanh Fermi strip.
    #[arg(long)]
    net: Option<PathBuf>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct RiccatiArgs {
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<f64>,
    #[arg(long)]
    rho_max: Option<f64>,
    #[arg(long)]
    step: Option<f64>,
}

#[derive(Debug, Args)]
struct SurfaceArgs {
    #[arg(long)]
    surface: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct HolonomyArgs {
    #[arg(long)]
    surface: Option<PathBuf>,
    #[arg(long)]
    j0: Option<usize>,
    #[arg(long)]
    j1: Option<usize>,
    /// With --i1: close the loop over an index rectangle instead of a full
    /// periodic strip.
    #[arg(long)]
    i0: Option<usize>,
    #[arg(long)]
    i1: Option<usize>,
}

#[derive(Debug, Args)]
struct EstimateArgs {
    /// Radius in meters.
    #[arg(long)]
    radius: Option<f64>,
    /// "electron" or a mass in kilograms.
    #[arg(long)]
    mass: Option<String>,
}

/// Flag < config file < built-in default.
struct Overrides(serde_json::Map<String, serde_json::Value>);

impl Overrides {
    fn load(path: Option<&Path>) -> Result<Self, Error> {
        let Some(path) = path else {
            return Ok(Self(serde_json::Map::new()));
        };
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            path: path.display().to_string(),
            detail: e.to_string(),
        })?;
        let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
            path: path.display().to_string(),
            detail: e.to_string(),
        })?;
        match value {
            serde_json::Value::Object(map) => Ok(Self(map)),
            _ => Err(Error::Schema {
                path: path.display().to_string(),
                detail: "config must be a JSON object".into(),
            }),
        }
    }

    fn f64(&self, flag: Option<f64>, key: &str, default: f64) -> f64 {
        flag.or_else(|| self.0.get(key).and_then(|v| v.as_f64()))
            .unwrap_or(default)
    }

    fn usize(&self, flag: Option<usize>, key: &str, default: usize) -> usize {
        flag.or_else(|| self.0.get(key).and_then(|v| v.as_u64()).map(|v| v as usize))
            .unwrap_or(default)
    }

    fn string(&self, flag: Option<String>, key: &str, default: &str) -> String {
        flag.or_else(|| self.0.get(key).and_then(|v| v.as_str()).map(str::to_string))
            .unwrap_or_else(|| default.to_string())
    }

    fn path(&self, flag: Option<PathBuf>, key: &str) -> Option<PathBuf> {
        flag.or_else(|| self.0.get(key).and_then(|v| v.as_str()).map(PathBuf::from))
    }
}

/// Parse argv and dispatch; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version land here too; keep clap's exit semantics
            // (0 for help, 2 for usage errors).
            return e.exit_code_and_print();
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

trait ClapExit {
    fn exit_code_and_print(self) -> i32;
}

impl ClapExit for clap::Error {
    fn exit_code_and_print(self) -> i32 {
        use clap::error::ErrorKind;
        let code = match self.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
            _ => 2,
        };
        let _ = self.print();
        code
    }
}

fn dispatch(cli: &Cli) -> Result<i32, Error> {
    std::fs::create_dir_all(&cli.out).map_err(|e| Error::Parse {
        path: cli.out.display().to_string(),
        detail: e.to_string(),
    })?;
    let cfg = Overrides::load(cli.config.as_deref())?;
    match &cli.command {
        Command::Potential(args) => cmd_potential(cli, &cfg, args),
        Command::SusySpectrum(args) => cmd_susy_spectrum(cli, &cfg, args),
        Command::Transport(args) => cmd_transport(cli, &cfg, args),
        Command::DiracCheck(args) => cmd_dirac_check(cli, &cfg, args),
        Command::GaussCheck(args) => cmd_gauss_check(cli, &cfg, args),
        Command::Riccati(args) => cmd_riccati(cli, &cfg, args),
        Command::Surface(args) => cmd_surface(cli, &cfg, args),
        Command::Holonomy(args) => cmd_holonomy(cli, &cfg, args),
        Command::Estimate(args) => cmd_estimate(cli, &cfg, args),
        Command::VerifyAll => cmd_verify_all(cli),
    }
}

fn write_atomic(dir: &Path, name: &str, content: &str) -> Result<PathBuf, Error> {
    let target = dir.join(name);
    let tmp = dir.join(format!(".tmp-{name}"));
    std::fs::write(&tmp, content).map_err(|e| Error::Parse {
        path: tmp.display().to_string(),
        detail: e.to_string(),
    })?;
    std::fs::rename(&tmp, &target).map_err(|e| Error::Parse {
        path: target.display().to_string(),
        detail: e.to_string(),
    })?;
    Ok(target)
}

fn default_tanh_profile(n: usize, s_max: f64) -> CurvatureProfile {
    let s = numerics::linspace(-s_max, s_max, n);
    let h = s[1] - s[0];
    CurvatureProfile::planar(
        s.iter().map(|x| 2.0 * x.tanh()).collect(),
        h,
        Boundary::Open,
    )
}

fn profile_from(path: Option<&Path>, n: usize, s_max: f64) -> Result<CurvatureProfile, Error> {
    match path {
        Some(p) => input::load_profile(p),
        None => Ok(default_tanh_profile(n, s_max)),
    }
}

fn cmd_potential(cli: &Cli, cfg: &Overrides, args: &PotentialArgs) -> Result<i32, Error> {
    let n = cfg.usize(args.n, "n", 513);
    let profile = profile_from(cfg.path(args.curve.clone(), "curve").as_deref(), n, 8.0)?;
    let dc = potentials::dacosta_curve(&profile);
    let sp = potentials::susy_partners(&profile);
    let s = profile.s_grid();
    let mut csv = String::from("s,kappa,V_dC,V_plus,V_minus\n");
    for i in 0..profile.len() {
        writeln!(
            csv,
            "{},{},{},{},{}",
            s[i], profile.kappa[i], dc.values[i], sp.plus.values[i], sp.minus.values[i]
        )
        .unwrap();
    }
    let path = write_atomic(&cli.out, "potential.csv", &csv)?;
    println!("wrote {}", path.display());
    Ok(0)
}

fn cmd_susy_spectrum(cli: &Cli, cfg: &Overrides, args: &SusyArgs) -> Result<i32, Error> {
    let n = cfg.usize(args.n, "n", 2048);
    let k = cfg.usize(args.k, "k", 2);
    let e_floor = cfg.f64(args.e_floor, "e_floor", 0.05);
    let tol = cfg.f64(args.tol, "tol", spectral::DEFAULT_PAIRING_TOL);
    let profile = profile_from(cfg.path(args.curve.clone(), "curve").as_deref(), n, 12.0)?;
    let sp = potentials::susy_partners(&profile);
    let boundary = match profile.boundary {
        Boundary::Periodic => BoundaryCondition::Periodic,
        Boundary::Open => BoundaryCondition::Dirichlet,
    };
    let op_p = spectral::discretize(Potential::Scalar(sp.plus.values), profile.h, boundary)?;
    let op_m = spectral::discretize(Potential::Scalar(sp.minus.values), profile.h, boundary)?;
    let spec_p = spectral::eigen(&op_p, k)?;
    let spec_m = spectral::eigen(&op_m, k)?;
    let pairing = spectral::susy_pairing(&spec_p, &spec_m, e_floor, tol);
    let out = json!({
        "grid": {"n": profile.len(), "h": profile.h, "boundary": format!("{boundary:?}").to_lowercase()},
        "V_plus_eigs": spec_p.eigenvalues,
        "V_minus_eigs": spec_m.eigenvalues,
        "pairs": pairing.pairs,
        "unpaired": pairing.unpaired,
        "e_floor": e_floor,
        "tol": tol,
    });
    let path = write_atomic(&cli.out, "susy_spectrum.json", &pretty(&out))?;
    println!("wrote {}", path.display());
    Ok(0)
}

fn cmd_transport(cli: &Cli, cfg: &Overrides, args: &TransportArgs) -> Result<i32, Error> {
    let n = cfg.usize(args.n, "n", 2048);
    let tau = args
        .tau
        .or_else(|| cfg.0.get("tau").and_then(|v| v.as_f64()));
    let mut csv = String::new();
    if let Some(tau) = tau {
        // Matrix transport along constant Frenet data.
        let kappa = cfg.f64(args.kappa, "kappa", 0.12);
        let length = cfg.f64(args.length, "length", 10.0 * std::f64::consts::PI);
        let h = length / (n as f64 - 1.0);
        let a = crate::curves::FrenetMatrix::new(kappa, tau).0;
        let connection = vec![a; n];
        let psi = spectral::transport_matrix(&connection, h, nalgebra::Vector3::x());
        csv.push_str("s,psi_1,psi_2,psi_3,norm_drift\n");
        for (i, p) in psi.iter().enumerate() {
            writeln!(
                csv,
                "{},{},{},{},{}",
                h * i as f64,
                p.x,
                p.y,
                p.z,
                (p.norm() - 1.0).abs()
            )
            .unwrap();
        }
    } else {
        let profile = profile_from(cfg.path(args.curve.clone(), "curve").as_deref(), n, 12.0)?;
        let psi = spectral::transport_scalar(&profile.kappa, profile.h, 1.0);
        let scale = psi.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let dpsi = numerics::derivative(&psi, profile.h, Boundary::Open);
        let s = profile.s_grid();
        csv.push_str("s,psi,annihilation_residual\n");
        for i in 0..psi.len() {
            let res = (dpsi[i] + 0.5 * profile.kappa[i] * psi[i]).abs() / scale;
            writeln!(csv, "{},{},{}", s[i], psi[i], res).unwrap();
        }
    }
    let path = write_atomic(&cli.out, "transport.csv", &csv)?;
    println!("wrote {}", path.display());
    Ok(0)
}

fn cmd_dirac_check(cli: &Cli, cfg: &Overrides, args: &DiracArgs) -> Result<i32, Error> {
    let preset: Preset = cli.preset.into();
    let base_s = cfg.usize(args.n_s, "n_s", 256);
    let base_rho = cfg.usize(args.n_rho, "n_rho", 64);
    let (n_s, n_rho) = match preset {
        Preset::Desk => (base_s, base_rho),
        Preset::Fine => (2 * base_s - 1, 2 * base_rho - 1),
    };
    let rho_max = cfg.f64(args.rho_max, "rho_max", 0.125);

    let profile = default_tanh_profile(n_s, 8.0);
    let net = nets::fermi_net(&profile, rho_max, n_rho)?;
    let fine_profile = default_tanh_profile(2 * n_s - 1, 8.0);
    let fine_net = nets::fermi_net(&fine_profile, rho_max, 2 * n_rho - 1)?;

    let mut identity = Vec::new();
    let mut commutator = Vec::new();
    let mut all_pass = true;
    for (name, f) in dirac::standard_test_functions() {
        let rc = dirac::scalar_identity_residual(&net, &net.grid_fn_centered(f));
        let rf = dirac::scalar_identity_residual(&fine_net, &fine_net.grid_fn_centered(f));
        let order = numerics::convergence_order(rc, rf);
        all_pass &= rc < 5e-3 && order > 1.8;
        identity.push(json!({
            "function": name,
            "grid": [n_s, n_rho],
            "value": rc,
            "order": order,
        }));
        let cc = dirac::commutator_ab_residual(&net, &net.grid_fn_centered(f));
        let cf = dirac::commutator_ab_residual(&fine_net, &fine_net.grid_fn_centered(f));
        let c_order = numerics::convergence_order(cc, cf);
        all_pass &= c_order > 1.8;
        commutator.push(json!({
            "function": name,
            "grid": [n_s, n_rho],
            "value": cc,
            "order": c_order,
        }));
    }
    let cancellation = dirac::fermi_cancellation_report(&profile).max_abs_sum();
    all_pass &= cancellation < 1e-15;
    let out = json!({
        "identity_residuals": identity,
        "commutator_residuals": commutator,
        "cancellation": {"max_abs_sum": cancellation},
        "passed": all_pass,
    });
    let path = write_atomic(&cli.out, "dirac_check.json", &pretty(&out))?;
    println!("wrote {}", path.display());
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_gauss_check(cli: &Cli, cfg: &Overrides, args: &GaussArgs) -> Result<i32, Error> {
    let tol = cfg.f64(args.tol, "tol", 5e-3);
    let report = match cfg.path(args.net.clone(), "net") {
        Some(path) => {
            let net = input::load_net(&path)?;
            let residual = nets::gauss_residual(&net);
            json!({
                "check": "gauss_compatibility",
                "grid": [net.u.len(), net.v.len()],
                "residual": residual,
                "order": serde_json::Value::Null,
                "passed": residual <= tol,
            })
        }
        None => {
            let preset: Preset = cli.preset.into();
            let (n_s, n_rho) = match preset {
                Preset::Desk => (256, 64),
                Preset::Fine => (511, 127),
            };
            let coarse = nets::gauss_residual(&nets::fermi_net(
                &default_tanh_profile(n_s, 8.0),
                0.125,
                n_rho,
            )?);
            let fine = nets::gauss_residual(&nets::fermi_net(
                &default_tanh_profile(2 * n_s - 1, 8.0),
                0.125,
                2 * n_rho - 1,
            )?);
            json!({
                "check": "gauss_compatibility",
                "grid": [n_s, n_rho],
                "residual": coarse,
                "order": numerics::convergence_order(coarse, fine),
                "passed": coarse <= tol && numerics::convergence_order(coarse, fine) > 1.8,
            })
        }
    };
    let passed = report["passed"].as_bool().unwrap_or(false);
    let path = write_atomic(&cli.out, "gauss_check.json", &pretty(&report))?;
    println!("wrote {}", path.display());
    Ok(if passed { 0 } else { 1 })
}

fn cmd_riccati(cli: &Cli, cfg: &Overrides, args: &RiccatiArgs) -> Result<i32, Error> {
    let kappa = cfg.f64(args.kappa, "kappa", 1.0);
    let rho_max = cfg.f64(args.rho_max, "rho_max", 0.5);
    let step = cfg.f64(args.step, "step", 1e-3);
    let flow = dirac::riccati_flow(kappa, rho_max, step)?;
    let closed = flow.closed_form(kappa);
    let mut csv = String::from("rho,k1_numeric,k1_closed_form,abs_err\n");
    for i in 0..flow.k1.len() {
        writeln!(
            csv,
            "{},{},{},{}",
            flow.rho[i],
            flow.k1[i],
            closed[i],
            (flow.k1[i] - closed[i]).abs()
        )
        .unwrap();
    }
    let path = write_atomic(&cli.out, "riccati.csv", &csv)?;
    println!("wrote {}", path.display());
    Ok(0)
}

fn cmd_surface(cli: &Cli, cfg: &Overrides, args: &SurfaceArgs) -> Result<i32, Error> {
    let patch = match cfg.path(args.surface.clone(), "surface") {
        Some(path) => input::load_surface(&path)?,
        None => surfaces::cylinder_patch(1.0, 2.0, 256, 33),
    };
    let forms = surfaces::fundamental_forms(&patch)?;
    let v_dc = potentials::dacosta_surface(&forms.mean, &forms.gauss);
    let mut csv = String::from("u,v,H,K,V_dC\n");
    for (i, &ui) in patch.u.iter().enumerate() {
        for (j, &vj) in patch.v.iter().enumerate() {
            writeln!(
                csv,
                "{},{},{},{},{}",
                ui,
                vj,
                forms.mean[[i, j]],
                forms.gauss[[i, j]],
                v_dc[[i, j]]
            )
            .unwrap();
        }
    }
    let path = write_atomic(&cli.out, "surface.csv", &csv)?;
    println!("wrote {}", path.display());
    Ok(0)
}

fn cmd_holonomy(cli: &Cli, cfg: &Overrides, args: &HolonomyArgs) -> Result<i32, Error> {
    let patch = match cfg.path(args.surface.clone(), "surface") {
        Some(path) => input::load_surface(&path)?,
        None => {
            let nv = 129;
            let step = std::f64::consts::PI / 384.0;
            surfaces::sphere_patch(1.0, step, step * nv as f64, 256, nv)
        }
    };
    let j0 = cfg.usize(args.j0, "j0", 1);
    let j1 = cfg.usize(args.j1, "j1", patch.dims().1.saturating_sub(2));
    let rect = match (args.i0, args.i1) {
        (Some(i0), Some(i1)) => LoopRect::Rect { i0, i1, j0, j1 },
        _ => LoopRect::FullU { j0, j1 },
    };
    let rec = surfaces::holonomy_check(&patch, rect)?;
    let out = json!({
        "rect": rect,
        "loop_integral": rec.loop_integral,
        "area_integral": rec.area_integral,
        "mismatch": rec.mismatch,
        "half_holonomy_factor": rec.half_holonomy_factor,
    });
    let path = write_atomic(&cli.out, "holonomy.json", &pretty(&out))?;
    println!("wrote {}", path.display());
    println!(
        "loop {:+.6e}  area {:+.6e}  mismatch {:.3e}",
        rec.loop_integral, rec.area_integral, rec.mismatch
    );
    Ok(0)
}

fn cmd_estimate(cli: &Cli, cfg: &Overrides, args: &EstimateArgs) -> Result<i32, Error> {
    let radius = cfg.f64(args.radius, "radius", 1e-8);
    let mass_text = cfg.string(args.mass.clone(), "mass", "electron");
    let mass = if mass_text == "electron" {
        potentials::ELECTRON_MASS
    } else {
        mass_text.parse::<f64>().map_err(|e| Error::Schema {
            path: "--mass".into(),
            detail: format!("expected \"electron\" or kilograms: {e}"),
        })?
    };
    if radius <= 0.0 || mass <= 0.0 {
        return Err(Error::Constraint {
            path: "--radius/--mass".into(),
            detail: "radius and mass must be positive".into(),
        });
    }
    let estimate = potentials::energy_scale(radius, mass);
    let text = pretty(&serde_json::to_value(estimate).unwrap());
    let path = write_atomic(&cli.out, "estimate.json", &text)?;
    println!("{text}");
    println!("wrote {}", path.display());
    Ok(0)
}

fn cmd_verify_all(cli: &Cli) -> Result<i32, Error> {
    let t0 = Instant::now();
    let preset: Preset = cli.preset.into();
    let reports = verify::run_all(preset);
    let mapping: serde_json::Map<String, serde_json::Value> = verify::criterion_mapping()
        .into_iter()
        .map(|(id, n)| (id.to_string(), json!(n)))
        .collect();
    for r in &reports {
        println!("{}", r.summary_line());
    }
    let all_passed = reports.iter().all(|r| r.passed);
    let total_ms = t0.elapsed().as_secs_f64() * 1e3;
    println!(
        "{} {} checks in {:.1} s",
        if all_passed { "PASS" } else { "FAIL" },
        reports.len(),
        total_ms / 1e3
    );
    let out = json!({
        "criterion_mapping": mapping,
        "preset": format!("{preset:?}").to_lowercase(),
        "reports": reports,
        "total_wall_ms": total_ms,
        "all_passed": all_passed,
    });
    let path = write_atomic(&cli.out, "verify_all.json", &pretty(&out))?;
    println!("wrote {}", path.display());
    Ok(if all_passed { 0 } else { 1 })
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

/// Re-export for the report format (used by integration tests).
pub fn summary_of(report: &CheckReport) -> String {
    report.summary_line()
}
