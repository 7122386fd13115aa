//! Arclength curves, curvature/torsion profiles, and Frenet data.
//!
//! Curves are resampled to a uniform arclength grid before anything else
//! happens; every downstream construction (potentials, Fermi strips,
//! Schrödinger grids) assumes uniform spacing.

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::numerics::{self, Boundary};

/// Curvature threshold below which the Frenet frame is considered undefined.
pub const DEFAULT_KAPPA_MIN: f64 = 1e-8;

/// A curve sampled uniformly in arclength.
///
/// Closed curves carry a duplicated endpoint (`points[n-1] == points[0]`),
/// so `h = length / (n - 1)` for both open and closed curves.
#[derive(Debug, Clone)]
pub struct ArclengthCurve {
    pub points: Vec<Vector3<f64>>,
    /// Arclength spacing between consecutive samples.
    pub h: f64,
    /// Total arclength.
    pub length: f64,
    pub closed: bool,
    /// True when every sample lies in the z = 0 plane.
    pub planar: bool,
}

impl ArclengthCurve {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Arclength values of the samples.
    pub fn s_grid(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.h * i as f64).collect()
    }

    /// Number of distinct samples (closed curves exclude the duplicate).
    pub fn unique_len(&self) -> usize {
        if self.closed {
            self.len() - 1
        } else {
            self.len()
        }
    }

    fn boundary(&self) -> Boundary {
        if self.closed {
            Boundary::Periodic
        } else {
            Boundary::Open
        }
    }
}

/// Sampled curvature (and optional torsion) on a uniform arclength grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureProfile {
    pub kappa: Vec<f64>,
    pub tau: Option<Vec<f64>>,
    pub h: f64,
    pub boundary: Boundary,
}

impl CurvatureProfile {
    pub fn planar(kappa: Vec<f64>, h: f64, boundary: Boundary) -> Self {
        assert!(h > 0.0, "grid spacing must be positive");
        Self {
            kappa,
            tau: None,
            h,
            boundary,
        }
    }

    pub fn spatial(kappa: Vec<f64>, tau: Vec<f64>, h: f64, boundary: Boundary) -> Self {
        assert!(h > 0.0, "grid spacing must be positive");
        assert_eq!(kappa.len(), tau.len(), "kappa and tau lengths must agree");
        Self {
            kappa,
            tau: Some(tau),
            h,
            boundary,
        }
    }

    /// Constant-curvature profile, convenient for frozen-value tests.
    pub fn constant(kappa: f64, tau: Option<f64>, n: usize, h: f64, boundary: Boundary) -> Self {
        Self {
            kappa: vec![kappa; n],
            tau: tau.map(|t| vec![t; n]),
            h,
            boundary,
        }
    }

    pub fn len(&self) -> usize {
        self.kappa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kappa.is_empty()
    }

    pub fn s_grid(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.h * i as f64).collect()
    }

    /// dκ/ds with the profile's boundary stencils.
    pub fn kappa_derivative(&self) -> Vec<f64> {
        numerics::derivative(&self.kappa, self.h, self.boundary)
    }
}

/// Orthonormal frame at one curve sample.
#[derive(Debug, Clone, Copy)]
pub struct FrenetFrame {
    pub tangent: Vector3<f64>,
    pub normal: Vector3<f64>,
    pub binormal: Vector3<f64>,
}

/// Frenet frames together with the curvature/torsion profile they satisfy.
#[derive(Debug, Clone)]
pub struct FrenetData {
    pub frames: Vec<FrenetFrame>,
    pub profile: CurvatureProfile,
}

/// The antisymmetric coefficient matrix of the Frenet system
/// d/ds (T, N, B)ᵀ = A (T, N, B)ᵀ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetMatrix(pub Matrix3<f64>);

impl FrenetMatrix {
    pub fn new(kappa: f64, tau: f64) -> Self {
        FrenetMatrix(Matrix3::new(
            0.0, kappa, 0.0, //
            -kappa, 0.0, tau, //
            0.0, -tau, 0.0,
        ))
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }
}

/// Raw curve data accepted by the resampler.
pub enum RawCurve<'a> {
    /// Ordered position samples; duplicated closed-curve endpoints are fine.
    Points(Vec<Vector3<f64>>),
    /// Parametrization over `[t0, t1]`, sampled internally.
    Parametric {
        f: &'a dyn Fn(f64) -> Vector3<f64>,
        t0: f64,
        t1: f64,
    },
}

/// Resample a raw curve to `n` uniform arclength samples.
///
/// Cumulative chord length parametrizes a C¹ cubic interpolant through the
/// input points; arclength is measured on a dense subdivision of that
/// interpolant, then inverted monotonically to place the output samples.
pub fn resample_arclength(raw: RawCurve, n: usize, closed: bool) -> Result<ArclengthCurve> {
    if n < 8 {
        return Err(Error::GridTooSmall { n, min: 8 });
    }
    let mut pts = match raw {
        RawCurve::Points(p) => p,
        RawCurve::Parametric { f, t0, t1 } => {
            let m = (8 * n).max(4096);
            let span = if closed {
                // Skip the duplicate endpoint; the cyclic interpolant closes
                // the curve.
                (t1 - t0) * (m as f64 - 1.0) / m as f64
            } else {
                t1 - t0
            };
            (0..m)
                .map(|i| f(t0 + span * i as f64 / (m as f64 - 1.0)))
                .collect()
        }
    };
    // Drop exact consecutive duplicates (including a duplicated closed
    // endpoint) so every chord span has positive length.
    pts.dedup_by(|a, b| (*a - *b).norm() == 0.0);
    if closed && pts.len() > 1 && (pts[0] - pts[pts.len() - 1]).norm() < 1e-12 {
        pts.pop();
    }
    let m = pts.len();
    if m < 3 {
        return Err(Error::DegenerateCurve {
            length: if m == 2 {
                (pts[1] - pts[0]).norm()
            } else {
                0.0
            },
        });
    }

    let planar = pts.iter().all(|p| p.z == 0.0);

    // Chord parameter.
    let spans = if closed { m } else { m - 1 };
    let mut t = vec![0.0; m + if closed { 1 } else { 0 }];
    for k in 0..spans {
        let a = pts[k];
        let b = pts[(k + 1) % m];
        t[k + 1] = t[k] + (b - a).norm();
    }
    let total_chord = t[spans];
    if total_chord < 1e-12 {
        return Err(Error::DegenerateCurve {
            length: total_chord,
        });
    }

    // Centered slope estimates (one-sided at open ends).
    let span_len = |k: usize| t[k + 1] - t[k];
    let slope = |k: usize| -> Vector3<f64> {
        if closed {
            let prev = (k + m - 1) % m;
            let next = (k + 1) % m;
            centered_slope(pts[prev], pts[k], pts[next], span_len(prev), span_len(k))
        } else if k == 0 {
            one_sided_slope(pts[0], pts[1], pts[2], span_len(0), span_len(1))
        } else if k == m - 1 {
            one_sided_slope(
                pts[m - 1],
                pts[m - 2],
                pts[m - 3],
                -span_len(m - 2),
                -span_len(m - 3),
            )
        } else {
            centered_slope(pts[k - 1], pts[k], pts[k + 1], span_len(k - 1), span_len(k))
        }
    };
    let slopes: Vec<Vector3<f64>> = (0..m).map(slope).collect();

    // Dense arclength table on the interpolant.
    const SUB: usize = 16;
    let mut dense_t = Vec::with_capacity(spans * SUB + 1);
    let mut dense_s = Vec::with_capacity(spans * SUB + 1);
    let mut dense_p = Vec::with_capacity(spans * SUB + 1);
    dense_t.push(0.0);
    dense_s.push(0.0);
    dense_p.push(pts[0]);
    let mut acc = 0.0;
    let mut prev = pts[0];
    for k in 0..spans {
        let (p0, p1) = (pts[k], pts[(k + 1) % m]);
        let (m0, m1) = (slopes[k], slopes[(k + 1) % m]);
        let dt = t[k + 1] - t[k];
        for j in 1..=SUB {
            let x = j as f64 / SUB as f64;
            let p = hermite(p0, p1, m0, m1, dt, x);
            acc += (p - prev).norm();
            prev = p;
            dense_t.push(t[k] + x * dt);
            dense_s.push(acc);
            dense_p.push(p);
        }
    }
    let length = acc;
    if length < 1e-12 {
        return Err(Error::DegenerateCurve { length });
    }

    // Place output samples at s = k * h by monotone inversion of the dense
    // table, then evaluate the interpolant there.
    let h = length / (n - 1) as f64;
    let mut out = Vec::with_capacity(n);
    let mut cursor = 0usize;
    for k in 0..n {
        let target = if k == n - 1 { length } else { h * k as f64 };
        while cursor + 1 < dense_s.len() - 1 && dense_s[cursor + 1] < target {
            cursor += 1;
        }
        let (s0, s1) = (dense_s[cursor], dense_s[cursor + 1]);
        let frac = if s1 > s0 {
            (target - s0) / (s1 - s0)
        } else {
            0.0
        };
        let tt = dense_t[cursor] + frac * (dense_t[cursor + 1] - dense_t[cursor]);
        // Locate the owning span of tt and evaluate the cubic there.
        let span_idx = t[..spans].partition_point(|&tk| tk <= tt).saturating_sub(1);
        let dt = t[span_idx + 1] - t[span_idx];
        let x = ((tt - t[span_idx]) / dt).clamp(0.0, 1.0);
        out.push(hermite(
            pts[span_idx],
            pts[(span_idx + 1) % m],
            slopes[span_idx],
            slopes[(span_idx + 1) % m],
            dt,
            x,
        ));
    }
    if closed {
        let first = out[0];
        *out.last_mut().unwrap() = first;
    }

    Ok(ArclengthCurve {
        points: out,
        h,
        length,
        closed,
        planar,
    })
}

/// Derivative at the middle of the quadratic through three points with
/// (possibly unequal) parameter spacings `d_prev`, `d_next`.
fn centered_slope(
    p_prev: Vector3<f64>,
    p: Vector3<f64>,
    p_next: Vector3<f64>,
    d_prev: f64,
    d_next: f64,
) -> Vector3<f64> {
    (p - p_prev) * (d_next / (d_prev * (d_prev + d_next)))
        + (p_next - p) * (d_prev / (d_next * (d_prev + d_next)))
}

fn one_sided_slope(
    p0: Vector3<f64>,
    p1: Vector3<f64>,
    p2: Vector3<f64>,
    d0: f64,
    d1: f64,
) -> Vector3<f64> {
    // Derivative at p0 of the quadratic through (0, p0), (d0, p1),
    // (d0 + d1, p2); signed spacings handle the right endpoint.
    let t1 = d0;
    let t2 = d0 + d1;
    p0 * (-(t1 + t2) / (t1 * t2)) + p1 * (t2 / (t1 * (t2 - t1))) - p2 * (t1 / (t2 * (t2 - t1)))
}

fn hermite(
    p0: Vector3<f64>,
    p1: Vector3<f64>,
    m0: Vector3<f64>,
    m1: Vector3<f64>,
    dt: f64,
    x: f64,
) -> Vector3<f64> {
    let x2 = x * x;
    let x3 = x2 * x;
    p0 * (2.0 * x3 - 3.0 * x2 + 1.0)
        + m0 * (dt * (x3 - 2.0 * x2 + x))
        + p1 * (-2.0 * x3 + 3.0 * x2)
        + m1 * (dt * (x3 - x2))
}

/// Signed planar curvature from central differences of the unit tangent.
///
/// The sign convention takes the normal as the counter-clockwise rotation
/// of the tangent, so a counter-clockwise circle has κ = +1/R.
pub fn curvature_planar(curve: &ArclengthCurve) -> Result<CurvatureProfile> {
    assert!(curve.planar, "curvature_planar requires a planar curve");
    let boundary = curve.boundary();
    let tangents = unit_tangents(curve);
    let m = tangents.len();
    let tx: Vec<f64> = tangents.iter().map(|t| t.x).collect();
    let ty: Vec<f64> = tangents.iter().map(|t| t.y).collect();
    let dtx = numerics::derivative(&tx, curve.h, boundary);
    let dty = numerics::derivative(&ty, curve.h, boundary);
    let kappa = (0..m)
        .map(|i| {
            // κ = <dT/ds, N> with N = rot90(T).
            let (nx, ny) = (-ty[i], tx[i]);
            dtx[i] * nx + dty[i] * ny
        })
        .collect();
    Ok(CurvatureProfile::planar(kappa, curve.h, boundary))
}

/// Frenet frames, curvature, and torsion of a spatial curve.
///
/// Fails with `VanishingCurvature` wherever κ drops below `kappa_min`;
/// the principal normal is undefined there.
pub fn frenet_apparatus(curve: &ArclengthCurve, kappa_min: f64) -> Result<FrenetData> {
    let boundary = curve.boundary();
    let tangents = unit_tangents(curve);
    let m = tangents.len();
    let dt = vector_derivative(&tangents, curve.h, boundary);

    let mut kappa = Vec::with_capacity(m);
    let mut frames = Vec::with_capacity(m);
    for i in 0..m {
        let k = dt[i].norm();
        if k < kappa_min {
            return Err(Error::VanishingCurvature {
                s: curve.h * i as f64,
                kappa: k,
                min: kappa_min,
            });
        }
        let normal = dt[i] / k;
        let binormal = tangents[i].cross(&normal);
        kappa.push(k);
        frames.push(FrenetFrame {
            tangent: tangents[i],
            normal,
            binormal,
        });
    }

    let normals: Vec<Vector3<f64>> = frames.iter().map(|f| f.normal).collect();
    let dn = vector_derivative(&normals, curve.h, boundary);
    let tau: Vec<f64> = (0..m).map(|i| dn[i].dot(&frames[i].binormal)).collect();

    Ok(FrenetData {
        frames,
        profile: CurvatureProfile::spatial(kappa, tau, curve.h, boundary),
    })
}

/// Frenet coefficient matrix at sample `i` of a spatial profile.
pub fn frenet_matrix(profile: &CurvatureProfile, i: usize) -> Result<FrenetMatrix> {
    let tau = profile.tau.as_ref().ok_or(Error::MissingTorsion)?;
    Ok(FrenetMatrix::new(profile.kappa[i], tau[i]))
}

/// Per-sample quadratic connection invariant: κ² for planar profiles,
/// κ² + τ² when torsion is present.
pub fn quadratic_invariant(profile: &CurvatureProfile) -> Vec<f64> {
    match &profile.tau {
        Some(tau) => profile
            .kappa
            .iter()
            .zip(tau)
            .map(|(k, t)| k * k + t * t)
            .collect(),
        None => profile.kappa.iter().map(|k| k * k).collect(),
    }
}

/// Synthesize the planar curve with prescribed curvature by integrating the
/// frame equation θ' = κ, starting from `origin` with heading `theta0`.
///
/// The output is always an open curve; round-tripping through
/// `curvature_planar` recovers the profile to O(h²).
pub fn curve_from_curvature(
    profile: &CurvatureProfile,
    origin: Vector3<f64>,
    theta0: f64,
) -> ArclengthCurve {
    // Periodic profiles describe closed shapes; integrate over one full
    // period including the endpoint sample.
    let (kappa, _n) = match profile.boundary {
        Boundary::Periodic => {
            let mut k = profile.kappa.clone();
            k.push(profile.kappa[0]);
            let n = k.len();
            (k, n)
        }
        Boundary::Open => (profile.kappa.clone(), profile.len()),
    };
    let theta: Vec<f64> = numerics::cumulative_trapezoid(&kappa, profile.h)
        .iter()
        .map(|t| t + theta0)
        .collect();
    let tx: Vec<f64> = theta.iter().map(|t| t.cos()).collect();
    let ty: Vec<f64> = theta.iter().map(|t| t.sin()).collect();
    let x = numerics::cumulative_trapezoid(&tx, profile.h);
    let y = numerics::cumulative_trapezoid(&ty, profile.h);
    let points: Vec<Vector3<f64>> = x
        .iter()
        .zip(&y)
        .map(|(xi, yi)| Vector3::new(origin.x + xi, origin.y + yi, 0.0))
        .collect();
    let length = profile.h * (points.len() - 1) as f64;
    ArclengthCurve {
        points,
        h: profile.h,
        length,
        closed: false,
        planar: true,
    }
}

/// Unit tangents at the distinct samples of a curve.
fn unit_tangents(curve: &ArclengthCurve) -> Vec<Vector3<f64>> {
    let m = curve.unique_len();
    let pts = &curve.points[..m];
    vector_derivative(pts, curve.h, curve.boundary())
        .into_iter()
        .map(|d| {
            let n = d.norm();
            d / n
        })
        .collect()
}

fn vector_derivative(v: &[Vector3<f64>], h: f64, boundary: Boundary) -> Vec<Vector3<f64>> {
    let xs: Vec<f64> = v.iter().map(|p| p.x).collect();
    let ys: Vec<f64> = v.iter().map(|p| p.y).collect();
    let zs: Vec<f64> = v.iter().map(|p| p.z).collect();
    let dx = numerics::derivative(&xs, h, boundary);
    let dy = numerics::derivative(&ys, h, boundary);
    let dz = numerics::derivative(&zs, h, boundary);
    (0..v.len())
        .map(|i| Vector3::new(dx[i], dy[i], dz[i]))
        .collect()
}
