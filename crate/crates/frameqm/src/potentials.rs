//! Effective geometric potentials and superpotentials.
//!
//! Everything here is pointwise arithmetic on sampled curvature data:
//! the curvature-induced potential −κ²/4 (curves) and −(H² − K)
//! (surfaces), the superpotential W = κ/2 with SUSY partners
//! V± = W² ± W′, the transverse congruence residual k₂²/4, the
//! matrix-valued superpotential W = 𝒜/2 of a spatial curve, and the
//! physical energy-scale estimator ħ²/(8mR²).

use nalgebra::Matrix3;
use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::curves::{CurvatureProfile, FrenetMatrix};
use crate::error::{Error, Result};
use crate::numerics;

/// Which formula produced a potential grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialLabel {
    DacostaCurve,
    DacostaSurface,
    SusyPlus,
    SusyMinus,
    TransverseResidual,
    MatrixPartner,
}

/// A sampled scalar potential (units 1/length² in geometric mode).
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialGrid {
    pub values: Vec<f64>,
    pub h: f64,
    pub label: PotentialLabel,
}

impl PotentialGrid {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Curvature-induced potential of a planar curve: V = −κ²/4.
pub fn dacosta_curve(profile: &CurvatureProfile) -> PotentialGrid {
    PotentialGrid {
        values: profile.kappa.iter().map(|k| -0.25 * k * k).collect(),
        h: profile.h,
        label: PotentialLabel::DacostaCurve,
    }
}

/// Curvature-induced potential of an embedded surface: V = −(H² − K).
pub fn dacosta_surface(mean: &Array2<f64>, gauss: &Array2<f64>) -> Array2<f64> {
    assert_eq!(mean.dim(), gauss.dim());
    let mut out = mean.clone();
    out.zip_mut_with(gauss, |h, &k| *h = -(*h * *h - k));
    out
}

/// SUSY partner potentials of a planar profile.
#[derive(Debug, Clone)]
pub struct SusyPartners {
    pub plus: PotentialGrid,
    pub minus: PotentialGrid,
    /// Superpotential samples W = κ/2.
    pub w: Vec<f64>,
}

/// V± = W² ± W′ with W = κ/2 and W′ by the profile's derivative stencils.
///
/// Both partners are assembled from one shared W² array and one shared W′
/// array, so the orientation-exchange identity V₊ ∘ reverse = reverse ∘ V₋
/// holds bitwise, not merely to rounding.
pub fn susy_partners(profile: &CurvatureProfile) -> SusyPartners {
    let w: Vec<f64> = profile.kappa.iter().map(|k| 0.5 * k).collect();
    let w_sq: Vec<f64> = w.iter().map(|x| x * x).collect();
    let w_prime: Vec<f64> = profile.kappa_derivative().iter().map(|d| 0.5 * d).collect();
    let plus = w_sq.iter().zip(&w_prime).map(|(q, d)| q + d).collect();
    let minus = w_sq.iter().zip(&w_prime).map(|(q, d)| q - d).collect();
    SusyPartners {
        plus: PotentialGrid {
            values: plus,
            h: profile.h,
            label: PotentialLabel::SusyPlus,
        },
        minus: PotentialGrid {
            values: minus,
            h: profile.h,
            label: PotentialLabel::SusyMinus,
        },
        w,
    }
}

/// The s → −s profile: plain index reversal of κ (and τ when present).
pub fn orientation_reverse(profile: &CurvatureProfile) -> CurvatureProfile {
    CurvatureProfile {
        kappa: profile.kappa.iter().rev().copied().collect(),
        tau: profile
            .tau
            .as_ref()
            .map(|t| t.iter().rev().copied().collect()),
        h: profile.h,
        boundary: profile.boundary,
    }
}

/// Residual potential of a non-geodesic transverse congruence: k₂²/4.
pub fn transverse_residual(k2_on_curve: &[f64], h: f64) -> PotentialGrid {
    PotentialGrid {
        values: k2_on_curve.iter().map(|k| 0.25 * k * k).collect(),
        h,
        label: PotentialLabel::TransverseResidual,
    }
}

/// Matrix superpotential of a spatial profile and its partner terms.
#[derive(Debug, Clone)]
pub struct MatrixSuperpotential {
    /// W(s) = 𝒜(s)/2, antisymmetric per sample.
    pub w: Vec<Matrix3<f64>>,
    /// W′ by central differences (entrywise, equivalently from κ′, τ′).
    pub w_prime: Vec<Matrix3<f64>>,
    /// W² + W′ per sample.
    pub plus: Vec<Matrix3<f64>>,
    /// W² − W′ per sample.
    pub minus: Vec<Matrix3<f64>>,
}

pub fn matrix_superpotential(profile: &CurvatureProfile) -> Result<MatrixSuperpotential> {
    let tau = profile.tau.as_ref().ok_or(Error::MissingTorsion)?;
    let n = profile.len();
    let kappa_prime = profile.kappa_derivative();
    let tau_prime = numerics::derivative(tau, profile.h, profile.boundary);
    let mut w = Vec::with_capacity(n);
    let mut w_prime = Vec::with_capacity(n);
    let mut plus = Vec::with_capacity(n);
    let mut minus = Vec::with_capacity(n);
    for i in 0..n {
        let wi = FrenetMatrix::new(profile.kappa[i], tau[i]).0 * 0.5;
        let wpi = FrenetMatrix::new(kappa_prime[i], tau_prime[i]).0 * 0.5;
        let w_sq = wi * wi;
        w.push(wi);
        w_prime.push(wpi);
        plus.push(w_sq + wpi);
        minus.push(w_sq - wpi);
    }
    Ok(MatrixSuperpotential {
        w,
        w_prime,
        plus,
        minus,
    })
}

/// Reduced Planck constant, J·s (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Electron rest mass, kg (CODATA 2018).
pub const ELECTRON_MASS: f64 = 9.109_383_7015e-31;
/// Elementary charge / electron-volt, J (CODATA 2018, exact).
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;

/// Order-of-magnitude estimate of the confinement energy scale.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct EnergyEstimate {
    #[serde(rename = "R_m")]
    pub r_m: f64,
    pub mass_kg: f64,
    #[serde(rename = "E_J")]
    pub e_j: f64,
    #[serde(rename = "E_meV")]
    pub e_mev: f64,
}

/// |V| ~ ħ²/(8 m R²) for a curve of characteristic radius R.
pub fn energy_scale(r_m: f64, mass_kg: f64) -> EnergyEstimate {
    assert!(r_m > 0.0 && mass_kg > 0.0);
    let e_j = HBAR * HBAR / (8.0 * mass_kg * r_m * r_m);
    EnergyEstimate {
        r_m,
        mass_kg,
        e_j,
        e_mev: e_j / ELECTRON_VOLT * 1e3,
    }
}
