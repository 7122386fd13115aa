//! Finite-difference and quadrature helpers shared across the crate.
//!
//! All derivative stencils are second-order: central differences in the
//! interior, one-sided three-point stencils at open ends, wrapped stencils
//! on periodic grids. Residual checks exclude boundary layers, so the
//! one-sided stencils only matter for plotting and profile round-trips.

use ndarray::Array2;
use serde::{Deserialize, Serialize};

/// Boundary treatment of a sampled axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    /// Samples wrap around; index arithmetic is modular.
    Periodic,
    /// Samples end; one-sided stencils at the first and last point.
    Open,
}

/// First derivative of uniformly sampled data.
///
/// The stencils are chosen so that reversing the input and negating the
/// output commute exactly in IEEE arithmetic; the orientation-exchange
/// identities rely on this.
pub fn derivative(values: &[f64], h: f64, boundary: Boundary) -> Vec<f64> {
    let n = values.len();
    assert!(n >= 3, "need at least 3 samples to differentiate");
    let mut out = vec![0.0; n];
    let two_h = 2.0 * h;
    for i in 1..n - 1 {
        out[i] = (values[i + 1] - values[i - 1]) / two_h;
    }
    match boundary {
        Boundary::Periodic => {
            out[0] = (values[1] - values[n - 1]) / two_h;
            out[n - 1] = (values[0] - values[n - 2]) / two_h;
        }
        Boundary::Open => {
            out[0] = (-3.0 * values[0] + 4.0 * values[1] - values[2]) / two_h;
            out[n - 1] = (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / two_h;
        }
    }
    out
}

/// Derivative along axis 0 (the `u` direction) of a 2D grid.
pub fn derivative_u(grid: &Array2<f64>, h: f64, boundary: Boundary) -> Array2<f64> {
    let (nu, nv) = grid.dim();
    assert!(nu >= 3);
    let mut out = Array2::zeros((nu, nv));
    let two_h = 2.0 * h;
    for j in 0..nv {
        for i in 1..nu - 1 {
            out[[i, j]] = (grid[[i + 1, j]] - grid[[i - 1, j]]) / two_h;
        }
        match boundary {
            Boundary::Periodic => {
                out[[0, j]] = (grid[[1, j]] - grid[[nu - 1, j]]) / two_h;
                out[[nu - 1, j]] = (grid[[0, j]] - grid[[nu - 2, j]]) / two_h;
            }
            Boundary::Open => {
                out[[0, j]] = (-3.0 * grid[[0, j]] + 4.0 * grid[[1, j]] - grid[[2, j]]) / two_h;
                out[[nu - 1, j]] =
                    (3.0 * grid[[nu - 1, j]] - 4.0 * grid[[nu - 2, j]] + grid[[nu - 3, j]]) / two_h;
            }
        }
    }
    out
}

/// Derivative along axis 1 (the `v` direction) of a 2D grid.
pub fn derivative_v(grid: &Array2<f64>, h: f64, boundary: Boundary) -> Array2<f64> {
    let (nu, nv) = grid.dim();
    assert!(nv >= 3);
    let mut out = Array2::zeros((nu, nv));
    let two_h = 2.0 * h;
    for i in 0..nu {
        for j in 1..nv - 1 {
            out[[i, j]] = (grid[[i, j + 1]] - grid[[i, j - 1]]) / two_h;
        }
        match boundary {
            Boundary::Periodic => {
                out[[i, 0]] = (grid[[i, 1]] - grid[[i, nv - 1]]) / two_h;
                out[[i, nv - 1]] = (grid[[i, 0]] - grid[[i, nv - 2]]) / two_h;
            }
            Boundary::Open => {
                out[[i, 0]] = (-3.0 * grid[[i, 0]] + 4.0 * grid[[i, 1]] - grid[[i, 2]]) / two_h;
                out[[i, nv - 1]] =
                    (3.0 * grid[[i, nv - 1]] - 4.0 * grid[[i, nv - 2]] + grid[[i, nv - 3]]) / two_h;
            }
        }
    }
    out
}

/// Trapezoidal integral of uniformly sampled data.
pub fn trapezoid(values: &[f64], h: f64) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    let mut sum = 0.5 * (values[0] + values[n - 1]);
    for v in &values[1..n - 1] {
        sum += v;
    }
    sum * h
}

/// Cumulative trapezoidal integral; `out[0] = 0`.
pub fn cumulative_trapezoid(values: &[f64], h: f64) -> Vec<f64> {
    let mut out = vec![0.0; values.len()];
    for i in 1..values.len() {
        out[i] = out[i - 1] + 0.5 * h * (values[i - 1] + values[i]);
    }
    out
}

/// Max-norm over the interior of a grid, excluding `margin` cells on open
/// edges. Periodic axes have no boundary layer to exclude.
pub fn interior_max(
    grid: &Array2<f64>,
    margin: usize,
    boundary_u: Boundary,
    boundary_v: Boundary,
) -> f64 {
    let (nu, nv) = grid.dim();
    let (i0, i1) = match boundary_u {
        Boundary::Periodic => (0, nu),
        Boundary::Open => (margin, nu.saturating_sub(margin)),
    };
    let (j0, j1) = match boundary_v {
        Boundary::Periodic => (0, nv),
        Boundary::Open => (margin, nv.saturating_sub(margin)),
    };
    let mut max = 0.0f64;
    for i in i0..i1 {
        for j in j0..j1 {
            max = max.max(grid[[i, j]].abs());
        }
    }
    max
}

/// Measured convergence order between residuals on a coarse grid and on a
/// grid with both spacings halved.
pub fn convergence_order(coarse: f64, fine: f64) -> f64 {
    (coarse / fine).log2()
}

/// Adaptive Simpson quadrature. Used by arclength measurement and by test
/// oracles that need an integral independent of the grid machinery.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, fa, m, fm, left, lm, flm, 0.5 * tol, depth - 1)
                + recurse(f, m, fm, b, fb, right, rm, frm, 0.5 * tol, depth - 1)
        }
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, whole, m, fm, tol, 48)
}

/// Uniformly spaced samples over `[a, b]`, inclusive of both endpoints.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    let h = (b - a) / (n - 1) as f64;
    (0..n).map(|i| a + h * i as f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn derivative_is_second_order() {
        let errs: Vec<f64> = [64usize, 128]
            .iter()
            .map(|&n| {
                let xs = linspace(0.0, 1.0, n);
                let h = xs[1] - xs[0];
                let f: Vec<f64> = xs.iter().map(|x| (3.0 * x).sin()).collect();
                let d = derivative(&f, h, Boundary::Open);
                xs.iter()
                    .zip(&d)
                    .map(|(x, di)| (di - 3.0 * (3.0 * x).cos()).abs())
                    .fold(0.0f64, f64::max)
            })
            .collect();
        assert!(convergence_order(errs[0], errs[1]) > 1.8);
    }

    #[test]
    fn derivative_reversal_is_exact_negation() {
        // d/ds and index reversal must anticommute bitwise; the SUSY
        // orientation-exchange identity depends on it.
        let xs = linspace(-2.0, 2.0, 41);
        let f: Vec<f64> = xs.iter().map(|x| (x * 1.3).tanh() + 0.2 * x * x).collect();
        let d = derivative(&f, 0.1, Boundary::Open);
        let rev: Vec<f64> = f.iter().rev().copied().collect();
        let d_rev = derivative(&rev, 0.1, Boundary::Open);
        for i in 0..f.len() {
            assert_eq!(d_rev[i], -d[f.len() - 1 - i]);
        }
    }

    #[test]
    fn periodic_derivative_wraps() {
        let n = 128;
        let h = 2.0 * std::f64::consts::PI / n as f64;
        let f: Vec<f64> = (0..n).map(|i| (i as f64 * h).sin()).collect();
        let d = derivative(&f, h, Boundary::Periodic);
        for (i, di) in d.iter().enumerate() {
            assert_relative_eq!(*di, (i as f64 * h).cos(), epsilon = 1e-3);
        }
    }

    #[test]
    fn simpson_matches_closed_forms() {
        let v = adaptive_simpson(&|x: f64| x.exp(), 0.0, 1.0, 1e-12);
        assert_relative_eq!(v, 1.0f64.exp() - 1.0, epsilon = 1e-11);
    }

    #[test]
    fn cumulative_trapezoid_endpoint_matches_total() {
        let xs = linspace(0.0, 3.0, 301);
        let f: Vec<f64> = xs.iter().map(|x| x.cos()).collect();
        let c = cumulative_trapezoid(&f, 0.01);
        assert_relative_eq!(c[300], trapezoid(&f, 0.01), epsilon = 1e-14);
    }
}
