//! Surface patches: fundamental forms, curvatures, the orthonormal-coframe
//! connection form, the curvature obstruction to nilpotency, and loop
//! holonomy.
//!
//! Patches are parametrization samples r(uᵢ, vⱼ) on a uniform grid, with
//! either axis optionally periodic. Derivatives are central differences;
//! coordinate-singular rows (sphere poles, cone apex) are kept out of the
//! patch and residual norms additionally mask `mask_margin` rows at open
//! edges.
//!
//! The connection form is returned in the sign convention in which the
//! structure equation reads dω¹₂ = −K θ¹∧θ², so the loop integral of ω¹₂
//! equals −∬K dA. This is opposite to the planar-net orientation of
//! [`crate::nets`], which is pinned by the Gauss/Riccati signs instead;
//! each module states its convention.

use nalgebra::Vector3;
use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{self, Boundary};

/// Sampled surface parametrization.
#[derive(Debug, Clone)]
pub struct SurfacePatch {
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    xs: Array2<f64>,
    ys: Array2<f64>,
    zs: Array2<f64>,
    pub periodic_u: bool,
    pub periodic_v: bool,
    /// Rows/columns excluded from residual max-norms at open edges.
    pub mask_margin: usize,
}

impl SurfacePatch {
    pub fn from_fn<F: Fn(f64, f64) -> Vector3<f64>>(
        u: Vec<f64>,
        v: Vec<f64>,
        periodic_u: bool,
        periodic_v: bool,
        r: F,
    ) -> Self {
        let (nu, nv) = (u.len(), v.len());
        let mut xs = Array2::zeros((nu, nv));
        let mut ys = Array2::zeros((nu, nv));
        let mut zs = Array2::zeros((nu, nv));
        for (i, &ui) in u.iter().enumerate() {
            for (j, &vj) in v.iter().enumerate() {
                let p = r(ui, vj);
                xs[[i, j]] = p.x;
                ys[[i, j]] = p.y;
                zs[[i, j]] = p.z;
            }
        }
        Self {
            u,
            v,
            xs,
            ys,
            zs,
            periodic_u,
            periodic_v,
            mask_margin: 3,
        }
    }

    pub fn from_points(
        u: Vec<f64>,
        v: Vec<f64>,
        points: &[Vec<Vector3<f64>>],
        periodic_u: bool,
        periodic_v: bool,
    ) -> Self {
        let (nu, nv) = (u.len(), v.len());
        assert_eq!(points.len(), nu);
        let mut xs = Array2::zeros((nu, nv));
        let mut ys = Array2::zeros((nu, nv));
        let mut zs = Array2::zeros((nu, nv));
        for (i, row) in points.iter().enumerate() {
            assert_eq!(row.len(), nv);
            for (j, p) in row.iter().enumerate() {
                xs[[i, j]] = p.x;
                ys[[i, j]] = p.y;
                zs[[i, j]] = p.z;
            }
        }
        Self {
            u,
            v,
            xs,
            ys,
            zs,
            periodic_u,
            periodic_v,
            mask_margin: 3,
        }
    }

    pub fn point(&self, i: usize, j: usize) -> Vector3<f64> {
        Vector3::new(self.xs[[i, j]], self.ys[[i, j]], self.zs[[i, j]])
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.u.len(), self.v.len())
    }

    fn boundary_u(&self) -> Boundary {
        if self.periodic_u {
            Boundary::Periodic
        } else {
            Boundary::Open
        }
    }

    fn boundary_v(&self) -> Boundary {
        if self.periodic_v {
            Boundary::Periodic
        } else {
            Boundary::Open
        }
    }

    fn du(&self) -> f64 {
        self.u[1] - self.u[0]
    }

    fn dv(&self) -> f64 {
        self.v[1] - self.v[0]
    }

    fn deriv_u(&self, f: &Array2<f64>) -> Array2<f64> {
        numerics::derivative_u(f, self.du(), self.boundary_u())
    }

    fn deriv_v(&self, f: &Array2<f64>) -> Array2<f64> {
        numerics::derivative_v(f, self.dv(), self.boundary_v())
    }

    /// Interior max-norm with the patch's singular-row mask.
    pub fn masked_max(&self, grid: &Array2<f64>) -> f64 {
        numerics::interior_max(grid, self.mask_margin, self.boundary_u(), self.boundary_v())
    }
}

/// First and second fundamental forms with mean and Gaussian curvature.
#[derive(Debug, Clone)]
pub struct FundamentalForms {
    pub e: Array2<f64>,
    pub f: Array2<f64>,
    pub g: Array2<f64>,
    pub l: Array2<f64>,
    pub m: Array2<f64>,
    pub n: Array2<f64>,
    pub mean: Array2<f64>,
    pub gauss: Array2<f64>,
}

impl FundamentalForms {
    /// Orthogonality defect max|F|/√(EG).
    pub fn skew(&self) -> f64 {
        let mut worst = 0.0f64;
        for ((i, j), &f) in self.f.indexed_iter() {
            worst = worst.max(f.abs() / (self.e[[i, j]] * self.g[[i, j]]).sqrt());
        }
        worst
    }
}

/// E, F, G, L, M, N, H, K by central differences of the parametrization.
pub fn fundamental_forms(patch: &SurfacePatch) -> Result<FundamentalForms> {
    let (nu, nv) = patch.dims();
    let ru = [
        patch.deriv_u(&patch.xs),
        patch.deriv_u(&patch.ys),
        patch.deriv_u(&patch.zs),
    ];
    let rv = [
        patch.deriv_v(&patch.xs),
        patch.deriv_v(&patch.ys),
        patch.deriv_v(&patch.zs),
    ];
    let ruu = [
        patch.deriv_u(&ru[0]),
        patch.deriv_u(&ru[1]),
        patch.deriv_u(&ru[2]),
    ];
    let rvv = [
        patch.deriv_v(&rv[0]),
        patch.deriv_v(&rv[1]),
        patch.deriv_v(&rv[2]),
    ];
    let ruv = [
        patch.deriv_v(&ru[0]),
        patch.deriv_v(&ru[1]),
        patch.deriv_v(&ru[2]),
    ];

    let mut out = FundamentalForms {
        e: Array2::zeros((nu, nv)),
        f: Array2::zeros((nu, nv)),
        g: Array2::zeros((nu, nv)),
        l: Array2::zeros((nu, nv)),
        m: Array2::zeros((nu, nv)),
        n: Array2::zeros((nu, nv)),
        mean: Array2::zeros((nu, nv)),
        gauss: Array2::zeros((nu, nv)),
    };
    for i in 0..nu {
        for j in 0..nv {
            let a = Vector3::new(ru[0][[i, j]], ru[1][[i, j]], ru[2][[i, j]]);
            let b = Vector3::new(rv[0][[i, j]], rv[1][[i, j]], rv[2][[i, j]]);
            let normal = a.cross(&b);
            let norm = normal.norm();
            if norm <= 1e-10 {
                return Err(Error::DegeneratePatch { i, j, norm });
            }
            let normal = normal / norm;
            let e = a.dot(&a);
            let f = a.dot(&b);
            let g = b.dot(&b);
            let l = Vector3::new(ruu[0][[i, j]], ruu[1][[i, j]], ruu[2][[i, j]]).dot(&normal);
            let m = Vector3::new(ruv[0][[i, j]], ruv[1][[i, j]], ruv[2][[i, j]]).dot(&normal);
            let n = Vector3::new(rvv[0][[i, j]], rvv[1][[i, j]], rvv[2][[i, j]]).dot(&normal);
            let det = e * g - f * f;
            out.e[[i, j]] = e;
            out.f[[i, j]] = f;
            out.g[[i, j]] = g;
            out.l[[i, j]] = l;
            out.m[[i, j]] = m;
            out.n[[i, j]] = n;
            out.mean[[i, j]] = (e * n - 2.0 * f * m + g * l) / (2.0 * det);
            out.gauss[[i, j]] = (l * n - m * m) / det;
        }
    }
    Ok(out)
}

/// Coefficients of ω¹₂ = p du + q dv on an orthogonal patch, in the
/// convention dω¹₂ = −K θ¹∧θ².
#[derive(Debug, Clone)]
pub struct ConnectionForm {
    pub p: Array2<f64>,
    pub q: Array2<f64>,
}

const ORTHOGONALITY_TOL: f64 = 1e-6;

/// Connection form from the Lamé factors h₁ = √E, h₂ = √G.
/// Rejects parametrizations with max|F|/√(EG) above 1e−6.
pub fn connection_form(patch: &SurfacePatch, forms: &FundamentalForms) -> Result<ConnectionForm> {
    let skew = forms.skew();
    if skew > ORTHOGONALITY_TOL {
        return Err(Error::NonOrthogonalPatch {
            skew,
            tol: ORTHOGONALITY_TOL,
        });
    }
    let h1 = forms.e.mapv(f64::sqrt);
    let h2 = forms.g.mapv(f64::sqrt);
    let dv_h1 = patch.deriv_v(&h1);
    let du_h2 = patch.deriv_u(&h2);
    let mut p = dv_h1;
    let mut q = du_h2;
    for ((i, j), x) in p.indexed_iter_mut() {
        *x = -*x / h2[[i, j]];
    }
    for ((i, j), x) in q.indexed_iter_mut() {
        *x /= h1[[i, j]];
    }
    Ok(ConnectionForm { p, q })
}

/// Max-norm residual of the structure equation dω¹₂ + K θ¹∧θ² = 0,
/// i.e. |∂_u q − ∂_v p + K h₁h₂| over masked interior points.
pub fn obstruction_residual(patch: &SurfacePatch) -> Result<f64> {
    let forms = fundamental_forms(patch)?;
    let omega = connection_form(patch, &forms)?;
    let du_q = patch.deriv_u(&omega.q);
    let dv_p = patch.deriv_v(&omega.p);
    let mut res = du_q;
    for ((i, j), x) in res.indexed_iter_mut() {
        let area = (forms.e[[i, j]] * forms.g[[i, j]]).sqrt();
        *x -= dv_p[[i, j]];
        *x += forms.gauss[[i, j]] * area;
    }
    Ok(patch.masked_max(&res))
}

/// Index rectangle for a holonomy loop. `FullU` wraps the whole periodic
/// u-axis (the side edges coincide and cancel).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub enum LoopRect {
    FullU {
        j0: usize,
        j1: usize,
    },
    Rect {
        i0: usize,
        i1: usize,
        j0: usize,
        j1: usize,
    },
}

/// Loop integral of ω¹₂ against the enclosed curvature.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct HolonomyRecord {
    /// ∮ ω¹₂ around the rectangle boundary (trapezoidal).
    pub loop_integral: f64,
    /// −∬ K dA over the enclosed rectangle.
    pub area_integral: f64,
    /// |loop_integral − area_integral| (Stokes consistency).
    pub mismatch: f64,
    /// exp(−½ ∮ ω¹₂), the half-connection holonomy factor.
    pub half_holonomy_factor: f64,
}

/// Evaluate the holonomy record for a rectangle strictly inside the patch.
pub fn holonomy_check(patch: &SurfacePatch, rect: LoopRect) -> Result<HolonomyRecord> {
    let forms = fundamental_forms(patch)?;
    let omega = connection_form(patch, &forms)?;
    let (nu, _nv) = patch.dims();
    let du = patch.du();
    let dv = patch.dv();

    let (loop_integral, area_integral) = match rect {
        LoopRect::FullU { j0, j1 } => {
            assert!(j0 < j1);
            assert!(patch.periodic_u, "FullU loop requires a periodic u-axis");
            // Bottom edge (v = v[j0], u increasing) plus top edge reversed;
            // the full-period quadrature has no endpoint weights.
            let mut bottom = 0.0;
            let mut top = 0.0;
            for i in 0..nu {
                bottom += omega.p[[i, j0]];
                top += omega.p[[i, j1]];
            }
            let loop_integral = (bottom - top) * du;
            let mut area = 0.0;
            for i in 0..nu {
                for j in j0..=j1 {
                    let w = if j == j0 || j == j1 { 0.5 } else { 1.0 };
                    area += w * forms.gauss[[i, j]] * (forms.e[[i, j]] * forms.g[[i, j]]).sqrt();
                }
            }
            (loop_integral, -area * du * dv)
        }
        LoopRect::Rect { i0, i1, j0, j1 } => {
            assert!(i0 < i1 && j0 < j1);
            let edge_u = |j: usize| -> f64 {
                let mut s = 0.0;
                for i in i0..=i1 {
                    let w = if i == i0 || i == i1 { 0.5 } else { 1.0 };
                    s += w * omega.p[[i, j]];
                }
                s * du
            };
            let edge_v = |i: usize| -> f64 {
                let mut s = 0.0;
                for j in j0..=j1 {
                    let w = if j == j0 || j == j1 { 0.5 } else { 1.0 };
                    s += w * omega.q[[i, j]];
                }
                s * dv
            };
            let loop_integral = edge_u(j0) + edge_v(i1) - edge_u(j1) - edge_v(i0);
            let mut area = 0.0;
            for i in i0..=i1 {
                for j in j0..=j1 {
                    let wi = if i == i0 || i == i1 { 0.5 } else { 1.0 };
                    let wj = if j == j0 || j == j1 { 0.5 } else { 1.0 };
                    area +=
                        wi * wj * forms.gauss[[i, j]] * (forms.e[[i, j]] * forms.g[[i, j]]).sqrt();
                }
            }
            (loop_integral, -area * du * dv)
        }
    };

    Ok(HolonomyRecord {
        loop_integral,
        area_integral,
        mismatch: (loop_integral - area_integral).abs(),
        half_holonomy_factor: (-0.5 * loop_integral).exp(),
    })
}

/// Developability verdict with the accompanying potential grid.
#[derive(Debug, Clone)]
pub struct DevelopableReport {
    pub is_developable: bool,
    pub max_abs_gauss: f64,
    pub tol: f64,
    /// −(H² − K); recomputed with K ≡ 0 when the patch is developable, so
    /// the identity V = −H² holds exactly in the report.
    pub v_dc: Array2<f64>,
}

/// Check K ≡ 0 within `tol` (default 1e−6·max|H|², floor-guarded).
pub fn developable_check(
    patch: &SurfacePatch,
    forms: &FundamentalForms,
    tol: Option<f64>,
) -> DevelopableReport {
    let max_h2 = {
        let mut m = 0.0f64;
        for &h in forms.mean.iter() {
            m = m.max(h * h);
        }
        m
    };
    let tol = tol.unwrap_or(1e-6 * max_h2.max(1e-6));
    let mut max_abs_gauss = 0.0f64;
    let masked = |grid: &Array2<f64>| patch.masked_max(grid);
    max_abs_gauss = max_abs_gauss.max(masked(&forms.gauss));
    let is_developable = max_abs_gauss < tol;
    let v_dc = if is_developable {
        forms.mean.mapv(|h| -(h * h))
    } else {
        crate::potentials::dacosta_surface(&forms.mean, &forms.gauss)
    };
    DevelopableReport {
        is_developable,
        max_abs_gauss,
        tol,
        v_dc,
    }
}

/// Plane patch z = 0 over [0, lx] × [0, ly].
pub fn plane_patch(lx: f64, ly: f64, nu: usize, nv: usize) -> SurfacePatch {
    SurfacePatch::from_fn(
        numerics::linspace(0.0, lx, nu),
        numerics::linspace(0.0, ly, nv),
        false,
        false,
        |x, y| Vector3::new(x, y, 0.0),
    )
}

/// Cylinder of the given radius, periodic around the axis.
pub fn cylinder_patch(radius: f64, height: f64, nu: usize, nv: usize) -> SurfacePatch {
    let u: Vec<f64> = (0..nu)
        .map(|i| 2.0 * std::f64::consts::PI * i as f64 / nu as f64)
        .collect();
    SurfacePatch::from_fn(
        u,
        numerics::linspace(0.0, height, nv),
        true,
        false,
        move |theta, z| Vector3::new(radius * theta.cos(), radius * theta.sin(), z),
    )
}

/// Sphere in longitude/colatitude coordinates, away from the poles.
pub fn sphere_patch(
    radius: f64,
    colat_min: f64,
    colat_max: f64,
    nu: usize,
    nv: usize,
) -> SurfacePatch {
    assert!(colat_min > 0.0 && colat_max < std::f64::consts::PI);
    let u: Vec<f64> = (0..nu)
        .map(|i| 2.0 * std::f64::consts::PI * i as f64 / nu as f64)
        .collect();
    SurfacePatch::from_fn(
        u,
        numerics::linspace(colat_min, colat_max, nv),
        true,
        false,
        move |phi, theta| {
            Vector3::new(
                radius * theta.sin() * phi.cos(),
                radius * theta.sin() * phi.sin(),
                radius * theta.cos(),
            )
        },
    )
}

/// Cone r(u, v) = v·(sin α cos u, sin α sin u, cos α), v in [v0, v1] > 0.
pub fn cone_patch(half_angle: f64, v0: f64, v1: f64, nu: usize, nv: usize) -> SurfacePatch {
    assert!(v0 > 0.0 && v1 > v0);
    let u: Vec<f64> = (0..nu)
        .map(|i| 2.0 * std::f64::consts::PI * i as f64 / nu as f64)
        .collect();
    let (sa, ca) = half_angle.sin_cos();
    SurfacePatch::from_fn(
        u,
        numerics::linspace(v0, v1, nv),
        true,
        false,
        move |theta, v| Vector3::new(v * sa * theta.cos(), v * sa * theta.sin(), v * ca),
    )
}

/// Ellipsoid of revolution (equatorial radius `a`, polar radius `c`) in
/// longitude/colatitude coordinates; orthogonal with non-constant K.
pub fn ellipsoid_patch(
    a: f64,
    c: f64,
    colat_min: f64,
    colat_max: f64,
    nu: usize,
    nv: usize,
) -> SurfacePatch {
    assert!(colat_min > 0.0 && colat_max < std::f64::consts::PI);
    let u: Vec<f64> = (0..nu)
        .map(|i| 2.0 * std::f64::consts::PI * i as f64 / nu as f64)
        .collect();
    SurfacePatch::from_fn(
        u,
        numerics::linspace(colat_min, colat_max, nv),
        true,
        false,
        move |phi, theta| {
            Vector3::new(
                a * theta.sin() * phi.cos(),
                a * theta.sin() * phi.sin(),
                c * theta.cos(),
            )
        },
    )
}

/// Torus with major radius `major` and minor radius `minor`.
pub fn torus_patch(major: f64, minor: f64, nu: usize, nv: usize) -> SurfacePatch {
    assert!(major > minor && minor > 0.0);
    let circle = |n: usize| -> Vec<f64> {
        (0..n)
            .map(|i| 2.0 * std::f64::consts::PI * i as f64 / n as f64)
            .collect()
    };
    SurfacePatch::from_fn(circle(nu), circle(nv), true, true, move |phi, psi| {
        let w = major + minor * psi.cos();
        Vector3::new(w * phi.cos(), w * phi.sin(), minor * psi.sin())
    })
}

/// Graph patch z = f(x, y).
pub fn graph_patch<F: Fn(f64, f64) -> f64>(
    f: F,
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    nu: usize,
    nv: usize,
) -> SurfacePatch {
    SurfacePatch::from_fn(
        numerics::linspace(x0, x1, nu),
        numerics::linspace(y0, y1, nv),
        false,
        false,
        move |x, y| Vector3::new(x, y, f(x, y)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn cylinder_forms_match_closed_values() {
        let patch = cylinder_patch(1.0, 2.0, 256, 33);
        let forms = fundamental_forms(&patch).unwrap();
        assert!(patch.masked_max(&forms.gauss) < 1e-6);
        let mut h_err = 0.0f64;
        for &h in forms.mean.iter() {
            h_err = h_err.max((h.abs() - 0.5).abs());
        }
        assert!(h_err < 1e-4, "mean curvature error {h_err}");
    }

    #[test]
    fn sphere_forms_match_closed_values() {
        // Closed forms for radius 2: K = 1/4, |H| = 1/2.
        let patch = sphere_patch(2.0, 0.3, PI - 0.3, 128, 129);
        let forms = fundamental_forms(&patch).unwrap();
        for ((_, _), &k) in forms.gauss.indexed_iter() {
            assert!((k - 0.25).abs() < 1e-4, "K = {k}");
        }
        for &h in forms.mean.iter() {
            assert!((h.abs() - 0.5).abs() < 1e-4, "H = {h}");
        }
    }

    #[test]
    fn plane_is_flat() {
        let patch = plane_patch(2.0, 1.0, 64, 33);
        let forms = fundamental_forms(&patch).unwrap();
        assert!(forms.mean.iter().all(|h| h.abs() < 1e-12));
        assert!(forms.gauss.iter().all(|k| k.abs() < 1e-12));
        let omega = connection_form(&patch, &forms).unwrap();
        assert!(omega.p.iter().all(|x| x.abs() < 1e-12));
        assert!(omega.q.iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn principal_curvature_discriminant_is_nonnegative() {
        let patch = torus_patch(2.0, 0.7, 96, 64);
        let forms = fundamental_forms(&patch).unwrap();
        for ((i, j), &k) in forms.gauss.indexed_iter() {
            let h = forms.mean[[i, j]];
            assert!(h * h - k >= -1e-9, "H² - K = {}", h * h - k);
        }
    }

    #[test]
    fn degenerate_patch_is_rejected() {
        // r_v vanishes identically.
        let patch = SurfacePatch::from_fn(
            numerics::linspace(0.0, 1.0, 16),
            numerics::linspace(0.0, 1.0, 16),
            false,
            false,
            |x, _| Vector3::new(x, 0.0, 0.0),
        );
        assert!(matches!(
            fundamental_forms(&patch),
            Err(Error::DegeneratePatch { .. })
        ));
    }

    #[test]
    fn sheared_patch_is_not_orthogonal() {
        let patch = SurfacePatch::from_fn(
            numerics::linspace(0.0, 1.0, 32),
            numerics::linspace(0.0, 1.0, 32),
            false,
            false,
            |x, y| Vector3::new(x, y + 0.5 * x, 0.0),
        );
        let forms = fundamental_forms(&patch).unwrap();
        assert!(matches!(
            connection_form(&patch, &forms),
            Err(Error::NonOrthogonalPatch { .. })
        ));
    }

    #[test]
    fn sphere_connection_form_coefficient() {
        // Symbolic oracle for the round metric in longitude/colatitude:
        // omega = -cos(theta) d(phi), and the dv-coefficient vanishes.
        let patch = sphere_patch(1.0, 0.2, PI / 2.0, 96, 97);
        let forms = fundamental_forms(&patch).unwrap();
        let omega = connection_form(&patch, &forms).unwrap();
        for (i, _) in patch.u.iter().enumerate() {
            for (j, &theta) in patch.v.iter().enumerate() {
                if j < 2 || j > 94 {
                    continue;
                }
                assert!(
                    (omega.p[[i, j]] + theta.cos()).abs() < 1e-3,
                    "p = {} vs {}",
                    omega.p[[i, j]],
                    -theta.cos()
                );
                assert!(omega.q[[i, j]].abs() < 1e-9);
            }
        }
    }

    #[test]
    fn cylinder_connection_form_vanishes() {
        // E and G are grid constants, so the Lamé derivatives vanish
        // identically (flat metric).
        let patch = cylinder_patch(1.0, 2.0, 128, 33);
        let forms = fundamental_forms(&patch).unwrap();
        let omega = connection_form(&patch, &forms).unwrap();
        assert!(omega.p.iter().all(|x| x.abs() < 1e-12));
        assert!(omega.q.iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn sphere_obstruction_residual_converges() {
        let res_at = |n: usize| {
            let patch = sphere_patch(1.0, 1e-3, PI / 2.0, n, n);
            obstruction_residual(&patch).unwrap()
        };
        let coarse = res_at(128);
        let fine = res_at(255);
        assert!(coarse < 1e-3, "obstruction residual {coarse}");
        assert!(
            numerics::convergence_order(coarse, fine) > 1.8
                // The sphere residual can sit at rounding level already.
                || fine < 1e-9,
            "order {}",
            numerics::convergence_order(coarse, fine)
        );
    }

    #[test]
    fn torus_obstruction_residual_is_rounding_level() {
        // Trigonometric patches keep the discrete residual at the rounding
        // floor; the identity holds far better than O(h²) here.
        let patch = torus_patch(2.0, 0.7, 96, 64);
        assert!(obstruction_residual(&patch).unwrap() < 1e-9);
    }

    #[test]
    fn ellipsoid_obstruction_residual_converges() {
        // Non-constant curvature in orthogonal coordinates: the residual
        // shows its genuine second-order decay here.
        let res_at = |n: usize| {
            let patch = ellipsoid_patch(1.0, 1.6, 0.3, PI / 2.0, n, n + 1);
            obstruction_residual(&patch).unwrap()
        };
        let coarse = res_at(96);
        let fine = res_at(192);
        assert!(coarse < 1e-3, "residual {coarse}");
        assert!(
            numerics::convergence_order(coarse, fine) > 1.8,
            "{coarse} -> {fine}"
        );
    }

    #[test]
    fn plane_and_cylinder_restore_nilpotency() {
        let plane = plane_patch(2.0, 1.0, 48, 33);
        assert!(obstruction_residual(&plane).unwrap() < 1e-12);
        let cyl = cylinder_patch(1.0, 2.0, 128, 33);
        assert!(obstruction_residual(&cyl).unwrap() < 1e-12);
        // Intrinsic flatness despite H ≠ 0: same derived quantities as the
        // plane strip to rounding.
        let forms = fundamental_forms(&cyl).unwrap();
        assert!(cyl.masked_max(&forms.gauss) < 1e-12);
    }

    #[test]
    fn sphere_cap_holonomy_matches_area() {
        // Colatitude grid with spacing pi/384 so theta = pi/3 is exactly
        // the row j = 127; the enclosed cap area is 2π(1 − cos θ₀) = π.
        let nv = 129;
        let step = PI / 384.0;
        let patch = sphere_patch(1.0, step, step * nv as f64, 256, nv);
        let rec = holonomy_check(&patch, LoopRect::FullU { j0: 1, j1: 127 }).unwrap();
        assert!(
            (rec.loop_integral + PI).abs() < 2e-3,
            "loop {}",
            rec.loop_integral
        );
        assert!(
            (rec.area_integral + PI).abs() < 2e-3,
            "area {}",
            rec.area_integral
        );
        assert!(rec.mismatch < 2e-3, "mismatch {}", rec.mismatch);
        assert!((rec.half_holonomy_factor - (0.5 * PI).exp()).abs() < 1e-2);
    }

    #[test]
    fn plane_and_cylinder_holonomy_vanish() {
        let plane = plane_patch(2.0, 1.0, 64, 49);
        let rec = holonomy_check(
            &plane,
            LoopRect::Rect {
                i0: 8,
                i1: 56,
                j0: 8,
                j1: 40,
            },
        )
        .unwrap();
        assert!(rec.loop_integral.abs() < 1e-12);
        assert!(rec.area_integral.abs() < 1e-12);

        let cyl = cylinder_patch(1.0, 2.0, 128, 49);
        let rec = holonomy_check(&cyl, LoopRect::FullU { j0: 4, j1: 44 }).unwrap();
        assert!(
            rec.loop_integral.abs() < 1e-6,
            "cylinder loop {}",
            rec.loop_integral
        );
        assert!(
            rec.area_integral.abs() < 1e-6,
            "cylinder area {}",
            rec.area_integral
        );
        assert!((rec.half_holonomy_factor - 1.0).abs() < 1e-6);
    }

    #[test]
    fn holonomy_mismatch_converges_at_second_order() {
        // Stokes consistency on a patch with genuinely varying curvature.
        let mismatch_at = |n: usize| {
            let patch = ellipsoid_patch(1.0, 1.6, 0.3, PI / 2.0, n, n + 1);
            let rec = holonomy_check(
                &patch,
                LoopRect::Rect {
                    i0: n / 8,
                    i1: n / 2,
                    j0: n / 8,
                    j1: n / 2,
                },
            )
            .unwrap();
            rec.mismatch
        };
        let coarse = mismatch_at(64);
        let fine = mismatch_at(128);
        assert!(
            numerics::convergence_order(coarse, fine) > 1.8,
            "{coarse} -> {fine}"
        );
    }

    #[test]
    fn developable_verdicts() {
        let cyl = cylinder_patch(1.0, 2.0, 128, 33);
        let forms = fundamental_forms(&cyl).unwrap();
        let rep = developable_check(&cyl, &forms, None);
        assert!(rep.is_developable);
        for &v in rep.v_dc.iter() {
            assert!((v + 0.25).abs() < 1e-4, "cylinder V = {v}");
        }

        // Cone: developable with V = -H² varying along the rulings.
        let cone = cone_patch(0.6, 0.5, 2.0, 128, 65);
        let forms = fundamental_forms(&cone).unwrap();
        let rep = developable_check(&cone, &forms, None);
        assert!(rep.is_developable, "max |K| = {}", rep.max_abs_gauss);
        let inner_v = rep.v_dc[[5, 5]];
        let outer_v = rep.v_dc[[5, 60]];
        assert!(inner_v < outer_v && outer_v < 0.0, "{inner_v} vs {outer_v}");
        for ((i, j), &v) in rep.v_dc.indexed_iter() {
            let h = forms.mean[[i, j]];
            assert_eq!(v, -(h * h));
        }

        let sphere = sphere_patch(1.0, 0.3, PI / 2.0, 64, 65);
        let forms = fundamental_forms(&sphere).unwrap();
        assert!(!developable_check(&sphere, &forms, None).is_developable);
    }
}
