//! Moving-frame geometry of constrained quantum motion.
//!
//! This crate computes the geometric quantities that govern a quantum
//! particle confined to a curve or surface, and numerically verifies the
//! operator identities relating them:
//!
//! - curvature-induced potentials (−κ²/4 on curves, −(H²−K) on surfaces)
//!   and superpotentials W = κ/2 with their SUSY partners V± = W² ± W′;
//! - connection coefficients k₁, k₂ of planar orthogonal nets, the Gauss
//!   compatibility relation, and the moving-frame Laplacian;
//! - the first-order constituents A = e₁ − k₂/2, B = e₂ + k₁/2 of the
//!   two-dimensional Dirac operator, the scalar identity
//!   −(A² + B²) = −Δ + ¼(k₁² + k₂²), the thin-strip cancellation, and the
//!   transverse Riccati flow k₁′ = −k₁²;
//! - discretized Schrödinger operators for scalar, spinor, and 3×3 matrix
//!   potentials, partner-spectrum pairing, and parallel-transported ground
//!   states ψ = P exp(−½∫A);
//! - surface fundamental forms, the connection form ω¹₂, the curvature
//!   obstruction dω¹₂ = −K θ¹∧θ², and loop holonomy.
//!
//! Start with the runnable demos in `examples/`; each one exercises a
//! capability end to end. The `frameqm` binary exposes the same operations
//! as batch subcommands with JSON/CSV reports.

pub mod cli;
pub mod curves;
pub mod dirac;
pub mod eigen;
pub mod error;
pub mod input;
pub mod nets;
pub mod numerics;
pub mod potentials;
pub mod report;
pub mod spectral;
pub mod surfaces;
pub mod verify;

pub use error::{Error, Result};
