//! Ground states as parallel transport: ψ(s) = exp(−½∫A) reproduces the
//! eigensolver's zero mode for a scalar connection, and the path-ordered
//! product of rotations for the Frenet connection of a helix.
//!
//!     cargo run -p frameqm --example transport_ground_state

use frameqm::curves::{CurvatureProfile, FrenetMatrix};
use frameqm::numerics::{linspace, Boundary};
use frameqm::potentials;
use frameqm::spectral::{self, BoundaryCondition, Potential};
use nalgebra::{Matrix3, Vector3};

fn main() {
    // Scalar transport along A = kappa = 2 tanh(s).
    let n = 2048;
    let s = linspace(-12.0, 12.0, n);
    let h = s[1] - s[0];
    let connection: Vec<f64> = s.iter().map(|x| 2.0 * x.tanh()).collect();
    let psi = spectral::transport_scalar(&connection, h, 1.0);
    println!(
        "annihilation residual |psi' + A psi / 2| = {:.2e}",
        spectral::annihilation_residual(&psi, &connection, h)
    );

    // Compare with the eigensolver's H- ground state.
    let profile = CurvatureProfile::planar(connection.clone(), h, Boundary::Open);
    let partners = potentials::susy_partners(&profile);
    let op = spectral::discretize(
        Potential::Scalar(partners.minus.values),
        h,
        BoundaryCondition::Dirichlet,
    )
    .unwrap();
    let spec = spectral::eigen(&op, 1).unwrap();
    let ground = &spec.eigenvectors.as_ref().unwrap()[0];
    let psi_interior = &psi[1..n - 1];
    let dot: f64 = psi_interior.iter().zip(ground).map(|(a, b)| a * b).sum();
    let na: f64 = psi_interior.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb: f64 = ground.iter().map(|x| x * x).sum::<f64>().sqrt();
    println!(
        "E0 = {:.3e}; cosine similarity with exp(-int W) = {:.12}",
        spec.eigenvalues[0],
        dot.abs() / (na * nb)
    );

    // Matrix transport: one helix period of constant Frenet data.
    let a = FrenetMatrix::new(0.12, 0.16).0;
    let steps = 4096;
    let length = 10.0 * std::f64::consts::PI;
    let hh = length / (steps as f64 - 1.0);
    let rotation = spectral::transport_matrix_operator(&vec![a; steps], hh);
    let defect = (rotation * rotation.transpose() - Matrix3::identity()).norm();
    println!("\nhelix monodromy psi(L) = R psi(0):");
    for r in 0..3 {
        println!(
            "   [{:+.6} {:+.6} {:+.6}]",
            rotation[(r, 0)],
            rotation[(r, 1)],
            rotation[(r, 2)]
        );
    }
    println!("orthogonality defect |R R^T - I| = {defect:.2e}");

    let states = spectral::transport_matrix(&vec![a; steps], hh, Vector3::x());
    let drift = states
        .iter()
        .map(|p| (p.norm() - 1.0).abs())
        .fold(0.0f64, f64::max);
    println!("norm drift along the transport = {drift:.2e}");
}
