//! The end-to-end verification suite: every identity and frozen value the
//! library promises, as machine-checkable reports.
//!
//! Each check pins its tolerances in code and reports the worst
//! sub-residual/tolerance ratio (so `residual <= 1.0` means pass), with the
//! raw numbers itemized in `details`.

use std::time::Instant;

use nalgebra::Vector3;
use serde_json::json;

use crate::curves::{self, CurvatureProfile, RawCurve};
use crate::dirac;
use crate::nets;
use crate::numerics::{self, Boundary};
use crate::potentials;
use crate::report::{worst_ratio, CheckReport};
use crate::spectral::{self, BoundaryCondition, Potential};
use crate::surfaces::{self, LoopRect};

/// Grid sizing for the suite: `Desk` finishes in well under a minute;
/// `Fine` starts one refinement level up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Desk,
    Fine,
}

impl Preset {
    /// Refine an open-grid sample count `level` times (n -> 2n - 1).
    fn open_n(&self, base: usize) -> usize {
        match self {
            Preset::Desk => base,
            Preset::Fine => 2 * base - 1,
        }
    }

    /// Refine a periodic sample count (n -> 2n).
    fn periodic_n(&self, base: usize) -> usize {
        match self {
            Preset::Desk => base,
            Preset::Fine => 2 * base,
        }
    }
}

fn refine_open(n: usize) -> usize {
    2 * n - 1
}

fn tanh_profile(n: usize, s_max: f64) -> CurvatureProfile {
    let s = numerics::linspace(-s_max, s_max, n);
    let h = s[1] - s[0];
    CurvatureProfile::planar(
        s.iter().map(|x| 2.0 * x.tanh()).collect(),
        h,
        Boundary::Open,
    )
}

const ORDER_TARGET_FACTOR: f64 = 3.482_202; // 2^1.8

/// Criterion 1: curvature-induced surface potentials on the cylinder and
/// the sphere.
pub fn check_dacosta_values(preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    let cyl = surfaces::cylinder_patch(1.0, 2.0, preset.periodic_n(256), preset.open_n(33));
    let cyl_forms = surfaces::fundamental_forms(&cyl).unwrap();
    let v_cyl = potentials::dacosta_surface(&cyl_forms.mean, &cyl_forms.gauss);
    let cyl_err = cyl.masked_max(&v_cyl.mapv(|v| v + 0.25));

    let sphere = surfaces::sphere_patch(
        1.0,
        0.05,
        std::f64::consts::PI - 0.05,
        preset.periodic_n(128),
        preset.open_n(129),
    );
    let sph_forms = surfaces::fundamental_forms(&sphere).unwrap();
    let v_sph = potentials::dacosta_surface(&sph_forms.mean, &sph_forms.gauss);
    let sph_err = sphere.masked_max(&v_sph);

    let (residual, details) = worst_ratio(&[
        ("cylinder |V + 1/4|", cyl_err, 1e-4),
        ("sphere |V|", sph_err, 1e-4),
    ]);
    CheckReport::new(
        "dacosta_values",
        "Surface potential -(H^2-K): cylinder -1/(4R^2), sphere 0",
        json!({"cylinder_grid": [256, 33], "sphere_grid": [128, 129]}),
        residual,
        1.0,
    )
    .with_details(details)
    .with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Criterion 2: Gauss compatibility on the tanh Fermi strip, with the
/// refinement factor.
pub fn check_gauss_compatibility(preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    let n_s = preset.open_n(256);
    let n_rho = preset.open_n(64);
    let coarse =
        nets::gauss_residual(&nets::fermi_net(&tanh_profile(n_s, 8.0), 0.125, n_rho).unwrap());
    let fine = nets::gauss_residual(
        &nets::fermi_net(
            &tanh_profile(refine_open(n_s), 8.0),
            0.125,
            refine_open(n_rho),
        )
        .unwrap(),
    );
    let factor = coarse / fine;
    let (residual, details) = worst_ratio(&[
        ("gauss residual", coarse, 5e-3),
        ("refinement factor >= 3.5", 3.5 / factor, 1.0),
    ]);
    CheckReport::new(
        "gauss_compatibility",
        "e1 k2 - e2 k1 = k1^2 + k2^2 on the Fermi strip of kappa = 2 tanh(s)",
        json!({"grid": [n_s, n_rho], "rho_max": 0.125}),
        residual,
        1.0,
    )
    .with_order(numerics::convergence_order(coarse, fine))
    .with_details(details)
    .with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Criterion 3: the Dirac scalar identity across the full test-function
/// suite on the same net.
pub fn check_dirac_scalar_identity(preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    let n_s = preset.open_n(256);
    let n_rho = preset.open_n(64);
    let coarse_net = nets::fermi_net(&tanh_profile(n_s, 8.0), 0.125, n_rho).unwrap();
    let fine_net = nets::fermi_net(
        &tanh_profile(refine_open(n_s), 8.0),
        0.125,
        refine_open(n_rho),
    )
    .unwrap();

    let mut parts: Vec<(String, f64, f64)> = Vec::new();
    let mut worst_coarse = 0.0f64;
    let mut worst_fine = 0.0f64;
    for (name, f) in dirac::standard_test_functions() {
        let rc = dirac::scalar_identity_residual(&coarse_net, &coarse_net.grid_fn_centered(f));
        let rf = dirac::scalar_identity_residual(&fine_net, &fine_net.grid_fn_centered(f));
        worst_coarse = worst_coarse.max(rc);
        worst_fine = worst_fine.max(rf);
        parts.push((format!("identity[{name}]"), rc, 5e-3));
    }
    parts.push((
        "order >= 1.8".into(),
        ORDER_TARGET_FACTOR * worst_fine / worst_coarse,
        1.0,
    ));
    let borrowed: Vec<(&str, f64, f64)> =
        parts.iter().map(|(n, r, t)| (n.as_str(), *r, *t)).collect();
    let (residual, details) = worst_ratio(&borrowed);
    CheckReport::new(
        "dirac_scalar_identity",
        "-(A^2+B^2) = -Lap + (k1^2+k2^2)/4 across the test-function suite",
        json!({"grid": [n_s, n_rho], "rho_max": 0.125, "functions": dirac::standard_test_functions().len()}),
        residual,
        1.0,
    )
    .with_order(numerics::convergence_order(worst_coarse, worst_fine))
    .with_details(details)
    .with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Criterion 4: the thin-strip cancellation is an exact zero, and the
/// non-geodesic control keeps its residual.
pub fn check_fermi_cancellation(_preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    let circle_curve = {
        let f = |t: f64| Vector3::new(2.0 * t.cos(), 2.0 * t.sin(), 0.0);
        curves::resample_arclength(
            RawCurve::Parametric {
                f: &f,
                t0: 0.0,
                t1: 2.0 * std::f64::consts::PI,
            },
            256,
            true,
        )
        .unwrap()
    };
    let profiles: Vec<(&str, CurvatureProfile)> = vec![
        ("tanh", tanh_profile(257, 8.0)),
        (
            "constant",
            CurvatureProfile::constant(0.7, None, 64, 0.1, Boundary::Open),
        ),
        ("circle", curves::curvature_planar(&circle_curve).unwrap()),
    ];
    let mut parts: Vec<(String, f64, f64)> = Vec::new();
    for (name, p) in &profiles {
        let sum = dirac::fermi_cancellation_report(p).max_abs_sum();
        parts.push((format!("cancellation[{name}]"), sum, 1e-15));
    }
    let control = potentials::transverse_residual(&[0.4; 32], 0.1);
    let control_err = control
        .values
        .iter()
        .map(|v| (v - 0.04).abs())
        .fold(0.0f64, f64::max);
    parts.push((
        "k2 = 0.4 control: |residual - 0.04|".into(),
        control_err,
        1e-12,
    ));
    let borrowed: Vec<(&str, f64, f64)> =
        parts.iter().map(|(n, r, t)| (n.as_str(), *r, *t)).collect();
    let (residual, details) = worst_ratio(&borrowed);
    CheckReport::new(
        "fermi_cancellation",
        "-kappa^2/4 + kappa^2/4 = 0 exactly; k2^2/4 survives otherwise",
        json!({"profiles": ["tanh", "constant", "circle"]}),
        residual,
        1.0,
    )
    .with_details(details)
    .with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Criterion 5: Riccati flow against the parallel-curve closed form.
pub fn check_riccati_flow(_preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    let flow = dirac::riccati_flow(1.0, 0.5, 1e-3).unwrap();
    let endpoint_err = (flow.k1.last().unwrap() - 2.0 / 3.0).abs();
    let ode_residual = flow.residual();
    let (residual, details) = worst_ratio(&[
        ("|k1(0.5) - 2/3|", endpoint_err, 1e-8),
        ("ODE residual |dk1/drho + k1^2|", ode_residual, 1e-6),
    ]);
    CheckReport::new(
        "riccati_flow",
        "dk1/drho = -k1^2 integrates to kappa/(1 + rho kappa)",
        json!({"kappa": 1.0, "rho_max": 0.5, "step": 1e-3}),
        residual,
        1.0,
    )
    .with_details(details)
    .with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Criterion 6: SUSY partner pairing in the Dirichlet box.
pub fn check_susy_pairing(_preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    let n = 2048;
    let p = tanh_profile(n, 12.0);
    let sp = potentials::susy_partners(&p);
    let op_p = spectral::discretize(
        Potential::Scalar(sp.plus.values),
        p.h,
        BoundaryCondition::Dirichlet,
    )
    .unwrap();
    let op_m = spectral::discretize(
        Potential::Scalar(sp.minus.values),
        p.h,
        BoundaryCondition::Dirichlet,
    )
    .unwrap();
    // Two levels per side: the Dirichlet walls break the SUSY map for
    // higher scattering states, so the stated tolerance holds for the
    // ground + first-excited window.
    let spec_p = spectral::eigen(&op_p, 2).unwrap();
    let spec_m = spectral::eigen(&op_m, 2).unwrap();
    let report = spectral::susy_pairing(&spec_p, &spec_m, 0.05, 5e-3);

    let ground = spec_m.eigenvalues[0].abs();
    let worst_pair = report.pairs.iter().map(|p| p.delta).fold(0.0f64, f64::max);
    let unmatched_minus_above_floor = report
        .unpaired
        .iter()
        .filter(|u| u.side == spectral::Side::Minus && u.value >= 0.05)
        .count();
    let zero_modes = report.near_zero_modes().len();
    let (residual, details) = worst_ratio(&[
        ("|E0^-|", ground, 2e-3),
        ("worst pair delta", worst_pair, 5e-3),
        (
            "unpaired E^- above floor",
            unmatched_minus_above_floor as f64,
            0.5,
        ),
        (
            "near-zero modes minus one",
            (zero_modes as f64 - 1.0).abs(),
            0.5,
        ),
    ]);
    CheckReport::new(
        "susy_pairing",
        "H+/H- partner spectra pair above the floor; one unpaired zero mode",
        json!({"n": n, "box": [-12.0, 12.0], "boundary": "dirichlet", "eigen_per_side": 2}),
        residual,
        1.0,
    )
    .with_details(details)
    .with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Criterion 7: orientation reversal exchanges the partner potentials
/// sample-wise.
pub fn check_orientation_exchange(_preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    let p = tanh_profile(257, 8.0);
    let sp = potentials::susy_partners(&p);
    let sp_rev = potentials::susy_partners(&potentials::orientation_reverse(&p));
    let n = p.len();
    let mut worst = 0.0f64;
    for i in 1..n - 1 {
        worst = worst.max((sp_rev.plus.values[i] - sp.minus.values[n - 1 - i]).abs());
        worst = worst.max((sp_rev.minus.values[i] - sp.plus.values[n - 1 - i]).abs());
    }
    CheckReport::new(
        "orientation_exchange",
        "V+ of the reversed profile equals the reversed V- exactly",
        json!({"profile": "tanh", "n": n}),
        worst,
        1e-12,
    )
    .with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Criterion 8: parallel-transported ground state and helix transport.
pub fn check_ground_state_transport(_preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    let n = 2048;
    let s = numerics::linspace(-12.0, 12.0, n);
    let h = s[1] - s[0];
    let a: Vec<f64> = s.iter().map(|x| 2.0 * x.tanh()).collect();
    let psi = spectral::transport_scalar(&a, h, 1.0);

    let p = CurvatureProfile::planar(a.clone(), h, Boundary::Open);
    let sp = potentials::susy_partners(&p);
    let op = spectral::discretize(
        Potential::Scalar(sp.minus.values),
        h,
        BoundaryCondition::Dirichlet,
    )
    .unwrap();
    let spec = spectral::eigen(&op, 1).unwrap();
    let ground = &spec.eigenvectors.as_ref().unwrap()[0];
    let psi_int = &psi[1..n - 1];
    let dot: f64 = psi_int.iter().zip(ground).map(|(a, b)| a * b).sum();
    let na = psi_int.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = ground.iter().map(|x| x * x).sum::<f64>().sqrt();
    let cos_deficit = 1.0 - dot.abs() / (na * nb);

    let res_coarse = {
        let nc = 1025;
        let sc = numerics::linspace(-12.0, 12.0, nc);
        let hc = sc[1] - sc[0];
        let ac: Vec<f64> = sc.iter().map(|x| 2.0 * x.tanh()).collect();
        spectral::annihilation_residual(&spectral::transport_scalar(&ac, hc, 1.0), &ac, hc)
    };
    let res_fine = {
        let ac: Vec<f64> = numerics::linspace(-12.0, 12.0, 2049)
            .iter()
            .map(|x| 2.0 * x.tanh())
            .collect();
        let hc = 24.0 / 2048.0;
        spectral::annihilation_residual(&spectral::transport_scalar(&ac, hc, 1.0), &ac, hc)
    };

    let frenet = curves::FrenetMatrix::new(0.12, 0.16).0;
    let helix_steps = 4096;
    let helix_h = 10.0 * std::f64::consts::PI / (helix_steps as f64 - 1.0);
    let r = spectral::transport_matrix_operator(&vec![frenet; helix_steps], helix_h);
    let ortho_defect = (r * r.transpose() - nalgebra::Matrix3::identity()).norm();

    let (residual, details) = worst_ratio(&[
        ("1 - cosine similarity", cos_deficit, 1e-4),
        ("annihilation residual", res_fine, 1e-4),
        (
            "annihilation order >= 1.8",
            ORDER_TARGET_FACTOR * res_fine / res_coarse,
            1.0,
        ),
        ("helix transport orthogonality", ortho_defect, 1e-8),
    ]);
    CheckReport::new(
        "ground_state_transport",
        "psi = exp(-1/2 int A) matches the H- ground state; matrix transport is a rotation",
        json!({"n": n, "box": [-12.0, 12.0], "helix_steps": helix_steps}),
        residual,
        1.0,
    )
    .with_order(numerics::convergence_order(res_coarse, res_fine))
    .with_details(details)
    .with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Criterion 9: matrix superpotential of the helix.
pub fn check_matrix_partners(_preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    // Constant Frenet data kappa = 0.12, tau = 0.16 over one helix period.
    let n = 256;
    let length = 10.0 * std::f64::consts::PI;
    let h = length / n as f64;
    let p = CurvatureProfile::constant(0.12, Some(0.16), n, h, Boundary::Periodic);
    let m = potentials::matrix_superpotential(&p).unwrap();
    let to_dmatrix = |blocks: &[nalgebra::Matrix3<f64>]| -> Vec<nalgebra::DMatrix<f64>> {
        blocks
            .iter()
            .map(|b| nalgebra::DMatrix::from_fn(3, 3, |i, j| b[(i, j)]))
            .collect()
    };
    let op_p = spectral::discretize(
        Potential::Matrix(to_dmatrix(&m.plus)),
        h,
        BoundaryCondition::Periodic,
    )
    .unwrap();
    let op_m = spectral::discretize(
        Potential::Matrix(to_dmatrix(&m.minus)),
        h,
        BoundaryCondition::Periodic,
    )
    .unwrap();
    let spec_p = spectral::eigen(&op_p, 8).unwrap();
    let spec_m = spectral::eigen(&op_m, 8).unwrap();
    let spec_diff = spec_p
        .eigenvalues
        .iter()
        .zip(&spec_m.eigenvalues)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);

    let trace_err =
        m.w.iter()
            .map(|w| ((w * w).trace() + 0.02).abs())
            .fold(0.0f64, f64::max);

    // Quadratic invariant from numerically-derived Frenet data.
    let f = |t: f64| Vector3::new(3.0 * t.cos(), 3.0 * t.sin(), 4.0 * t);
    let helix = curves::resample_arclength(
        RawCurve::Parametric {
            f: &f,
            t0: 0.0,
            t1: 2.0 * std::f64::consts::PI,
        },
        1024,
        false,
    )
    .unwrap();
    let data = curves::frenet_apparatus(&helix, curves::DEFAULT_KAPPA_MIN).unwrap();
    let inv = curves::quadratic_invariant(&data.profile);
    let inv_err = inv[4..inv.len() - 4]
        .iter()
        .map(|v| (v - 0.04).abs())
        .fold(0.0f64, f64::max);

    let (residual, details) = worst_ratio(&[
        ("H+/H- spectral difference", spec_diff, 1e-6),
        ("|trace(W^2) + 0.02|", trace_err, 1e-12),
        ("numeric |Omega|^2 - 0.04", inv_err, 1e-4),
    ]);
    CheckReport::new(
        "matrix_partners",
        "Constant Frenet superpotential: identical partners, trace(W^2) = -(k^2+t^2)/2",
        json!({"n": n, "kappa": 0.12, "tau": 0.16, "boundary": "periodic"}),
        residual,
        1.0,
    )
    .with_details(details)
    .with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Criterion 10: curvature obstruction and loop holonomy.
pub fn check_obstruction_holonomy(preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    let n = preset.periodic_n(128);
    let sphere = surfaces::sphere_patch(1.0, 1e-3, std::f64::consts::PI / 2.0, n, n);
    let coarse = surfaces::obstruction_residual(&sphere).unwrap();
    let fine_patch =
        surfaces::sphere_patch(1.0, 1e-3, std::f64::consts::PI / 2.0, 2 * n, 2 * n - 1);
    let fine = surfaces::obstruction_residual(&fine_patch).unwrap();
    // Order >= 1.8, or the residual already sits at the rounding floor
    // (trigonometric patches cancel the truncation terms entirely).
    let at_floor = fine < 1e-9;
    let order_part = if at_floor {
        0.0
    } else {
        ORDER_TARGET_FACTOR * fine / coarse
    };

    // Polar cap bounded by colatitude pi/3: enclosed area 2pi(1-cos) = pi.
    let nv = 129;
    let step = std::f64::consts::PI / 384.0;
    let cap = surfaces::sphere_patch(1.0, step, step * nv as f64, 512, nv);
    let rec = surfaces::holonomy_check(&cap, LoopRect::FullU { j0: 1, j1: 127 }).unwrap();
    let loop_err = (rec.loop_integral + std::f64::consts::PI).abs();
    let area_err = (-rec.area_integral - std::f64::consts::PI).abs();

    let cyl = surfaces::cylinder_patch(1.0, 2.0, 128, 49);
    let cyl_rec = surfaces::holonomy_check(&cyl, LoopRect::FullU { j0: 4, j1: 44 }).unwrap();

    let (residual, details) = worst_ratio(&[
        ("sphere obstruction residual", coarse, 1e-3),
        ("obstruction order (or rounding floor)", order_part, 1.0),
        ("|loop + pi|", loop_err, 2e-3),
        ("|area - pi|", area_err, 2e-3),
        ("Stokes mismatch", rec.mismatch, 2e-3),
        ("cylinder loop", cyl_rec.loop_integral.abs(), 1e-6),
        ("cylinder area", cyl_rec.area_integral.abs(), 1e-6),
    ]);
    let report = CheckReport::new(
        "obstruction_holonomy",
        "d omega12 = -K theta1^theta2; cap loop integral matches -area; flat loops vanish",
        json!({"sphere_grid": [n, n], "cap_grid": [512, nv], "theta0": "pi/3"}),
        residual,
        1.0,
    )
    .with_details(details);
    let report = if at_floor {
        report
    } else {
        report.with_order(numerics::convergence_order(coarse, fine))
    };
    report.with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Criterion 11: physical energy estimator.
pub fn check_energy_estimator(_preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    let e = potentials::energy_scale(1e-8, potentials::ELECTRON_MASS);
    let rel_err = (e.e_mev - 9.5e-2).abs() / 9.5e-2;
    let base = potentials::energy_scale(1e-8, potentials::ELECTRON_MASS);
    let mut homo = 0.0f64;
    for a in [2.0, 3.0, 10.0, 0.5] {
        let scaled = potentials::energy_scale(a * 1e-8, potentials::ELECTRON_MASS);
        homo = homo.max((scaled.e_j * a * a - base.e_j).abs() / base.e_j);
    }
    let (residual, details) = worst_ratio(&[
        ("|E - 0.095 meV| / 0.095", rel_err, 0.01),
        ("1/R^2 homogeneity", homo, 1e-12),
    ]);
    CheckReport::new(
        "energy_estimator",
        "hbar^2/(8 m R^2) for R = 10 nm, electron mass",
        json!({"R_m": 1e-8, "E_meV": e.e_mev}),
        residual,
        1.0,
    )
    .with_details(details)
    .with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Criterion 12: reduced Dirac operator structure.
pub fn check_reduced_dirac(_preset: Preset) -> CheckReport {
    let t0 = Instant::now();
    let n = 256;
    let p = CurvatureProfile::constant(0.7, None, n, 0.05, Boundary::Open);
    let op = dirac::reduced_dirac(&p, BoundaryCondition::Dirichlet).unwrap();
    let spec = op.spectrum(8).unwrap();
    let free = spectral::discretize(
        Potential::Scalar(vec![0.0; n]),
        0.05,
        BoundaryCondition::Dirichlet,
    )
    .unwrap();
    let free_spec = spectral::eigen(&free, 4).unwrap();
    let mut worst = 0.0f64;
    for (i, pair) in spec.chunks(2).enumerate() {
        worst = worst.max((pair[0] - pair[1]).abs());
        worst = worst.max((pair[0] - free_spec.eigenvalues[i]).abs());
    }

    let tanh = tanh_profile(257, 8.0);
    let flipped = CurvatureProfile::planar(
        tanh.kappa.iter().map(|k| -k).collect(),
        tanh.h,
        tanh.boundary,
    );
    let a = dirac::reduced_dirac(&tanh, BoundaryCondition::Dirichlet).unwrap();
    let b = dirac::reduced_dirac(&flipped, BoundaryCondition::Dirichlet).unwrap();
    let swap_exact = a.plus.dense() == b.minus.dense() && a.minus.dense() == b.plus.dense();

    let (residual, details) = worst_ratio(&[
        ("degeneracy / free-spectrum deviation", worst, 1e-10),
        ("block swap exact", if swap_exact { 0.0 } else { 1.0 }, 0.5),
    ]);
    CheckReport::new(
        "reduced_dirac",
        "Constant kappa: doubly degenerate free spectrum; kappa -> -kappa swaps blocks",
        json!({"n": n, "kappa": 0.7}),
        residual,
        1.0,
    )
    .with_details(details)
    .with_wall_ms(t0.elapsed().as_secs_f64() * 1e3)
}

/// Acceptance-criterion mapping: report id -> criterion number.
pub fn criterion_mapping() -> Vec<(&'static str, u32)> {
    vec![
        ("dacosta_values", 1),
        ("gauss_compatibility", 2),
        ("dirac_scalar_identity", 3),
        ("fermi_cancellation", 4),
        ("riccati_flow", 5),
        ("susy_pairing", 6),
        ("orientation_exchange", 7),
        ("ground_state_transport", 8),
        ("matrix_partners", 9),
        ("obstruction_holonomy", 10),
        ("energy_estimator", 11),
        ("reduced_dirac", 12),
    ]
}

/// Run the whole suite in a fixed order.
pub fn run_all(preset: Preset) -> Vec<CheckReport> {
    vec![
        check_dacosta_values(preset),
        check_gauss_compatibility(preset),
        check_dirac_scalar_identity(preset),
        check_fermi_cancellation(preset),
        check_riccati_flow(preset),
        check_susy_pairing(preset),
        check_orientation_exchange(preset),
        check_ground_state_transport(preset),
        check_matrix_partners(preset),
        check_obstruction_holonomy(preset),
        check_energy_estimator(preset),
        check_reduced_dirac(preset),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mapping_matches_suite_order() {
        let mapping = criterion_mapping();
        assert_eq!(mapping.len(), 12);
        let mut numbers: Vec<u32> = mapping.iter().map(|(_, n)| *n).collect();
        numbers.dedup();
        assert_eq!(numbers, (1..=12).collect::<Vec<_>>());
    }

    #[test]
    fn cheap_checks_pass() {
        assert!(check_riccati_flow(Preset::Desk).passed);
        assert!(check_energy_estimator(Preset::Desk).passed);
        assert!(check_orientation_exchange(Preset::Desk).passed);
    }
}
