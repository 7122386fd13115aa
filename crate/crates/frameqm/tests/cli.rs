//! CLI contract: exit codes, output file schemas, config-file precedence,
//! and byte-deterministic reports.

use std::path::Path;
use std::process::Command;

fn frameqm(args: &[&str], out: &Path) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_frameqm"))
        .args(["--out", out.to_str().unwrap()])
        .args(args)
        .output()
        .expect("failed to launch frameqm")
}

#[test]
fn potential_emits_expected_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = frameqm(&["potential", "--n", "257"], dir.path());
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("potential.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "s,kappa,V_dC,V_plus,V_minus");
    assert_eq!(lines.count(), 257);
    // Poschl-Teller sanity on the middle row: kappa ~ 0, V_dC ~ 0.
    let middle = csv.lines().nth(129).unwrap();
    let fields: Vec<f64> = middle.split(',').map(|x| x.parse().unwrap()).collect();
    assert!(fields[1].abs() < 1e-10 && fields[2].abs() < 1e-12);
}

#[test]
fn potential_reads_curve_files() {
    let dir = tempfile::tempdir().unwrap();
    let curve = dir.path().join("circle.json");
    std::fs::write(
        &curve,
        r#"{"named": {"kind": "circle", "params": {"radius": 2.0}}, "n": 256}"#,
    )
    .unwrap();
    let out = frameqm(
        &["potential", "--curve", curve.to_str().unwrap()],
        dir.path(),
    );
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("potential.csv")).unwrap();
    let row = csv.lines().nth(10).unwrap();
    let fields: Vec<f64> = row.split(',').map(|x| x.parse().unwrap()).collect();
    assert!((fields[1] - 0.5).abs() < 1e-4, "kappa = {}", fields[1]);
    assert!((fields[2] + 0.0625).abs() < 1e-4, "V_dC = {}", fields[2]);
}

#[test]
fn susy_spectrum_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = frameqm(&["susy-spectrum", "--n", "1024", "--k", "2"], dir.path());
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("susy_spectrum.json")).unwrap(),
    )
    .unwrap();
    for key in ["grid", "V_plus_eigs", "V_minus_eigs", "pairs", "unpaired"] {
        assert!(v.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(v["V_minus_eigs"].as_array().unwrap().len(), 2);
    let ground = v["V_minus_eigs"][0].as_f64().unwrap();
    assert!(ground.abs() < 5e-3, "ground = {ground}");
}

#[test]
fn transport_scalar_and_matrix_modes() {
    let dir = tempfile::tempdir().unwrap();
    assert!(frameqm(&["transport", "--n", "1025"], dir.path())
        .status
        .success());
    let csv = std::fs::read_to_string(dir.path().join("transport.csv")).unwrap();
    assert!(csv.starts_with("s,psi,annihilation_residual\n"));

    assert!(frameqm(
        &[
            "transport",
            "--kappa",
            "0.12",
            "--tau",
            "0.16",
            "--n",
            "2048"
        ],
        dir.path()
    )
    .status
    .success());
    let csv = std::fs::read_to_string(dir.path().join("transport.csv")).unwrap();
    assert!(csv.starts_with("s,psi_1,psi_2,psi_3,norm_drift\n"));
    let worst_drift = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').last().unwrap().parse::<f64>().unwrap())
        .fold(0.0f64, f64::max);
    assert!(worst_drift < 1e-8, "norm drift {worst_drift}");
}

#[test]
fn dirac_check_passes_on_default_grid() {
    let dir = tempfile::tempdir().unwrap();
    let out = frameqm(&["dirac-check"], dir.path());
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("dirac_check.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(v["passed"], serde_json::json!(true));
    assert_eq!(v["identity_residuals"].as_array().unwrap().len(), 5);
    assert!(v["cancellation"]["max_abs_sum"].as_f64().unwrap() < 1e-15);
}

#[test]
fn gauss_check_default_and_curved_net() {
    let dir = tempfile::tempdir().unwrap();
    assert!(frameqm(&["gauss-check"], dir.path()).status.success());
    let v: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("gauss_check.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(v["check"], serde_json::json!("gauss_compatibility"));
    assert!(v["order"].as_f64().unwrap() > 1.8);

    // A curved metric fails the flatness check: exit code 1.
    let net = dir.path().join("curved.json");
    std::fs::write(
        &net,
        r#"{"lame": {"h1": "1 + 0.3*exp(-u^2 - v^2)", "h2": 1.0,
             "u": {"min": -4.0, "max": 4.0, "n": 128},
             "v": {"min": -1.0, "max": 1.0, "n": 64}}}"#,
    )
    .unwrap();
    let out = frameqm(&["gauss-check", "--net", net.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn riccati_focal_point_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = frameqm(
        &["riccati", "--kappa", "-1", "--rho-max", "1.0"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("blow-up"), "stderr: {stderr}");
}

#[test]
fn surface_csv_from_named_file() {
    let dir = tempfile::tempdir().unwrap();
    let surf = dir.path().join("sphere.json");
    std::fs::write(
        &surf,
        r#"{"named": {"kind": "sphere", "params":
             {"radius": 1.0, "colat_min": 0.3, "colat_max": 1.2, "nu": 48, "nv": 25}}}"#,
    )
    .unwrap();
    let out = frameqm(
        &["surface", "--surface", surf.to_str().unwrap()],
        dir.path(),
    );
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("surface.csv")).unwrap();
    assert!(csv.starts_with("u,v,H,K,V_dC\n"));
    // Grid point (8, 12): interior, away from the one-sided edge stencils.
    let row = csv.lines().nth(8 * 25 + 12 + 1).unwrap();
    let fields: Vec<f64> = row.split(',').map(|x| x.parse().unwrap()).collect();
    assert!((fields[3] - 1.0).abs() < 1e-3, "K = {}", fields[3]); // unit sphere
    assert!(fields[4].abs() < 1e-3, "V_dC = {}", fields[4]);
}

#[test]
fn holonomy_default_is_the_pi_third_cap() {
    let dir = tempfile::tempdir().unwrap();
    let out = frameqm(&["holonomy", "--j0", "1", "--j1", "127"], dir.path());
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("holonomy.json")).unwrap())
            .unwrap();
    let loop_integral = v["loop_integral"].as_f64().unwrap();
    assert!((loop_integral + std::f64::consts::PI).abs() < 2e-3);
    assert!(v["mismatch"].as_f64().unwrap() < 2e-3);
    assert!(v.get("half_holonomy_factor").is_some());
}

#[test]
fn estimate_schema_and_config_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"radius": 1e-7}"#).unwrap();

    // Config value applies when the flag is absent...
    let out = Command::new(env!("CARGO_BIN_EXE_frameqm"))
        .args([
            "--out",
            dir.path().to_str().unwrap(),
            "--config",
            cfg.to_str().unwrap(),
            "estimate",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("estimate.json")).unwrap())
            .unwrap();
    assert_eq!(v["R_m"].as_f64().unwrap(), 1e-7);
    assert!((v["E_meV"].as_f64().unwrap() - 9.5e-4).abs() < 1e-5);

    // ...and the explicit flag wins over the config.
    let out = Command::new(env!("CARGO_BIN_EXE_frameqm"))
        .args([
            "--out",
            dir.path().to_str().unwrap(),
            "--config",
            cfg.to_str().unwrap(),
            "estimate",
            "--radius",
            "1e-8",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("estimate.json")).unwrap())
            .unwrap();
    assert_eq!(v["R_m"].as_f64().unwrap(), 1e-8);
    for key in ["R_m", "mass_kg", "E_J", "E_meV"] {
        assert!(v.get(key).is_some(), "missing key {key}");
    }
}

#[test]
fn verify_all_reports_are_deterministic() {
    fn normalized(dir: &Path) -> String {
        let mut v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.join("verify_all.json")).unwrap())
                .unwrap();
        fn scrub(value: &mut serde_json::Value) {
            match value {
                serde_json::Value::Object(map) => {
                    for (k, v) in map.iter_mut() {
                        if k == "wall_ms" || k == "total_wall_ms" {
                            *v = serde_json::json!(0.0);
                        } else {
                            scrub(v);
                        }
                    }
                }
                serde_json::Value::Array(items) => items.iter_mut().for_each(scrub),
                _ => {}
            }
        }
        scrub(&mut v);
        serde_json::to_string(&v).unwrap()
    }
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    assert!(frameqm(&["verify-all"], a.path()).status.success());
    assert!(frameqm(&["verify-all"], b.path()).status.success());
    assert_eq!(
        normalized(a.path()),
        normalized(b.path()),
        "reports differ between identical runs"
    );
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = frameqm(&["potential", "--curve", bad.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(2));

    let gap = dir.path().join("gap.json");
    std::fs::write(
        &gap,
        r#"{"points": [[0,0],[1,0],[1,1],[0,0.5]], "closed": true, "n": 32}"#,
    )
    .unwrap();
    let out = frameqm(&["potential", "--curve", gap.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("endpoints differ"));
}
