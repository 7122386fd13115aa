use thiserror::Error;

/// Errors produced by geometric constructions and operator assembly.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate curve: cumulative length {length:.3e} below threshold")]
    DegenerateCurve { length: f64 },

    #[error("vanishing curvature at s = {s:.6} (kappa = {kappa:.3e} < {min:.3e}); Frenet frame undefined")]
    VanishingCurvature { s: f64, kappa: f64, min: f64 },

    #[error("curvature profile carries no torsion data")]
    MissingTorsion,

    #[error("focal point inside Fermi strip: 1 + rho*kappa = {value:.3e} at (s = {s:.6}, rho = {rho:.6})")]
    FocalPointInStrip { s: f64, rho: f64, value: f64 },

    #[error("Riccati flow blow-up near rho = {rho:.6} (|k1| = {k1:.3e} exceeds 1/h_rho)")]
    FocalPoint { rho: f64, k1: f64 },

    #[error("grid too small: n = {n}, need at least {min}")]
    GridTooSmall { n: usize, min: usize },

    #[error("eigensolver failed to converge for eigenvalue {index} after {iterations} iterations")]
    ConvergenceFailure { index: usize, iterations: usize },

    #[error("degenerate surface patch: |r_u x r_v| = {norm:.3e} at grid point ({i}, {j})")]
    DegeneratePatch { i: usize, j: usize, norm: f64 },

    #[error("patch is not orthogonal: max |F|/sqrt(EG) = {skew:.3e} exceeds {tol:.1e}")]
    NonOrthogonalPatch { skew: f64, tol: f64 },

    #[error(
        "matrix potential block at sample {index} is not symmetric (asymmetry {asymmetry:.3e})"
    )]
    AsymmetricPotential { index: usize, asymmetry: f64 },

    #[error("failed to parse {path}: {detail}")]
    Parse { path: String, detail: String },

    #[error("schema error in {path}: {detail}")]
    Schema { path: String, detail: String },

    #[error("constraint violation in {path}: {detail}")]
    Constraint { path: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
