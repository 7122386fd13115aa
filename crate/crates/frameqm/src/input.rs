//! JSON input schemas for curves, nets, and surfaces, plus a small
//! arithmetic expression parser for Lamé factors and graph heights.
//!
//! Curve files:
//! `{"named": {"kind": "circle", "params": {"radius": 1.0, "n": 512}}}` or
//! `{"points": [[x, y], ...], "closed": true}`.
//!
//! Net files:
//! `{"fermi": {"curve": "curve.json", "rho_max": 0.125, "n_rho": 64}}` or
//! `{"lame": {"h1": "1 + v*sin(u)", "h2": 1.0, "u": {...}, "v": {...}}}`.
//!
//! Surface files:
//! `{"named": {"kind": "sphere", "params": {...}}}` or sampled
//! `{"grid": {"u": {...}, "v": {...}}, "points": [[[x,y,z], ...], ...]}`.

use std::path::Path;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::curves::{self, ArclengthCurve, CurvatureProfile, RawCurve};
use crate::error::{Error, Result};
use crate::nets::{self, OrthogonalNet};
use crate::numerics::{self, Boundary};
use crate::surfaces::{self, SurfacePatch};

// ---------------------------------------------------------------------------
// Expressions

/// Parsed arithmetic expression in the grid variables.
///
/// Supported: `+ - * / ^`, parentheses, unary minus, the constants `pi` and
/// `e`, the variables `u`/`s` and `v`/`rho`, and one-argument functions
/// sin, cos, tan, sinh, cosh, tanh, exp, ln, sqrt, abs.
#[derive(Debug, Clone)]
pub enum Expr {
    Constant(f64),
    U,
    V,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(&'static str, Box<Expr>),
}

impl Expr {
    pub fn eval(&self, u: f64, v: f64) -> f64 {
        match self {
            Expr::Constant(c) => *c,
            Expr::U => u,
            Expr::V => v,
            Expr::Neg(a) => -a.eval(u, v),
            Expr::Add(a, b) => a.eval(u, v) + b.eval(u, v),
            Expr::Sub(a, b) => a.eval(u, v) - b.eval(u, v),
            Expr::Mul(a, b) => a.eval(u, v) * b.eval(u, v),
            Expr::Div(a, b) => a.eval(u, v) / b.eval(u, v),
            Expr::Pow(a, b) => a.eval(u, v).powf(b.eval(u, v)),
            Expr::Call(name, a) => {
                let x = a.eval(u, v);
                match *name {
                    "sin" => x.sin(),
                    "cos" => x.cos(),
                    "tan" => x.tan(),
                    "sinh" => x.sinh(),
                    "cosh" => x.cosh(),
                    "tanh" => x.tanh(),
                    "exp" => x.exp(),
                    "ln" => x.ln(),
                    "sqrt" => x.sqrt(),
                    "abs" => x.abs(),
                    _ => unreachable!(),
                }
            }
        }
    }
}

const FUNCTIONS: [&str; 10] = [
    "sin", "cos", "tan", "sinh", "cosh", "tanh", "exp", "ln", "sqrt", "abs",
];

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

/// Parse an expression string; errors carry the byte offset.
pub fn parse_expr(src: &str) -> std::result::Result<Expr, String> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let e = p.expression()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(format!("unexpected trailing input at byte {}", p.pos));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expression(&mut self) -> std::result::Result<Expr, String> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> std::result::Result<Expr, String> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    // Exponentiation binds tighter than unary minus: -x^2 = -(x^2).
    fn unary(&mut self) -> std::result::Result<Expr, String> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> std::result::Result<Expr, String> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            // Right-associative; the exponent may carry its own sign.
            let exp = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> std::result::Result<Expr, String> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expression()?;
                if self.peek() != Some(b')') {
                    return Err(format!("expected ')' at byte {}", self.pos));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.identifier(),
            other => Err(format!(
                "unexpected {:?} at byte {}",
                other.map(char::from),
                self.pos
            )),
        }
    }

    fn number(&mut self) -> std::result::Result<Expr, String> {
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c.is_ascii_digit() || c == b'.' {
                self.pos += 1;
            } else if (c == b'e' || c == b'E')
                && self.pos > start
                && self
                    .src
                    .get(self.pos + 1)
                    .is_some_and(|n| n.is_ascii_digit() || *n == b'+' || *n == b'-')
            {
                self.pos += 2;
            } else {
                break;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<f64>()
            .map(Expr::Constant)
            .map_err(|e| format!("bad number {text:?}: {e}"))
    }

    fn identifier(&mut self) -> std::result::Result<Expr, String> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match name {
            "u" | "s" | "x" => Ok(Expr::U),
            "v" | "rho" | "y" => Ok(Expr::V),
            "pi" => Ok(Expr::Constant(std::f64::consts::PI)),
            "e" => Ok(Expr::Constant(std::f64::consts::E)),
            _ => {
                if let Some(f) = FUNCTIONS.iter().find(|f| **f == name) {
                    if self.peek() != Some(b'(') {
                        return Err(format!("function {name} needs parentheses"));
                    }
                    self.pos += 1;
                    let arg = self.expression()?;
                    if self.peek() != Some(b')') {
                        return Err(format!("expected ')' after {name} argument"));
                    }
                    self.pos += 1;
                    Ok(Expr::Call(f, Box::new(arg)))
                } else {
                    Err(format!("unknown identifier {name:?}"))
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Schemas

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<NamedCurve>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    pub closed: bool,
    /// Sample count for the resampled curve.
    #[serde(default = "default_curve_n")]
    pub n: usize,
}

fn default_curve_n() -> usize {
    512
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum NamedCurve {
    Circle { radius: f64 },
    Ellipse { a: f64, b: f64 },
    Helix { a: f64, b: f64, turns: f64 },
    TanhBump { amplitude: f64, s_max: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisSpec {
    pub min: f64,
    pub max: f64,
    pub n: usize,
    #[serde(default)]
    pub periodic: bool,
}

impl AxisSpec {
    fn grid(&self) -> Vec<f64> {
        numerics::linspace(self.min, self.max, self.n)
    }

    fn boundary(&self) -> Boundary {
        if self.periodic {
            Boundary::Periodic
        } else {
            Boundary::Open
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExprOrGrid {
    Constant(f64),
    Expression(String),
    Grid(Vec<Vec<f64>>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fermi: Option<FermiSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lame: Option<LameSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FermiSpec {
    /// Path to a curve file, resolved relative to the net file.
    pub curve: String,
    pub rho_max: f64,
    pub n_rho: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LameSpec {
    pub h1: ExprOrGrid,
    pub h2: ExprOrGrid,
    pub u: AxisSpec,
    pub v: AxisSpec,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<NamedSurface>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<SampledGrid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<Vec<f64>>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampledGrid {
    pub u: AxisSpec,
    pub v: AxisSpec,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum NamedSurface {
    Plane {
        lx: f64,
        ly: f64,
        nu: usize,
        nv: usize,
    },
    Cylinder {
        radius: f64,
        height: f64,
        nu: usize,
        nv: usize,
    },
    Cone {
        half_angle: f64,
        v0: f64,
        v1: f64,
        nu: usize,
        nv: usize,
    },
    Sphere {
        radius: f64,
        colat_min: f64,
        colat_max: f64,
        nu: usize,
        nv: usize,
    },
    Ellipsoid {
        a: f64,
        c: f64,
        colat_min: f64,
        colat_max: f64,
        nu: usize,
        nv: usize,
    },
    Torus {
        major: f64,
        minor: f64,
        nu: usize,
        nv: usize,
    },
    Graph {
        z: String,
        x0: f64,
        x1: f64,
        y0: f64,
        y1: f64,
        nu: usize,
        nv: usize,
    },
}

// ---------------------------------------------------------------------------
// Loaders

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Schema {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}

/// Load and validate a curve file.
pub fn load_curve(path: &Path) -> Result<ArclengthCurve> {
    let file: CurveFile = read_json(path)?;
    build_curve(&file, &path.display().to_string())
}

/// Construct the curve described by an already-parsed file.
pub fn build_curve(file: &CurveFile, origin: &str) -> Result<ArclengthCurve> {
    match (&file.named, &file.points) {
        (Some(named), None) => named_curve(named, file.n),
        (None, Some(points)) => {
            let mut pts = Vec::with_capacity(points.len());
            for (i, row) in points.iter().enumerate() {
                match row.len() {
                    2 => pts.push(Vector3::new(row[0], row[1], 0.0)),
                    3 => pts.push(Vector3::new(row[0], row[1], row[2])),
                    d => {
                        return Err(Error::Schema {
                            path: origin.into(),
                            detail: format!("point {i} has {d} coordinates; expected 2 or 3"),
                        })
                    }
                }
            }
            if file.closed {
                let gap = (pts[0] - pts[pts.len() - 1]).norm();
                let scale: f64 = pts.windows(2).map(|w| (w[1] - w[0]).norm()).sum();
                if gap > 1e-6 * scale.max(1e-12) && gap > 1e-9 {
                    return Err(Error::Constraint {
                        path: origin.into(),
                        detail: format!(
                            "closed curve endpoints differ by {gap:.3e} (limit 1e-6 of length {scale:.3e})"
                        ),
                    });
                }
            }
            curves::resample_arclength(RawCurve::Points(pts), file.n, file.closed)
        }
        _ => Err(Error::Schema {
            path: origin.into(),
            detail: "curve file needs exactly one of \"named\" or \"points\"".into(),
        }),
    }
}

fn named_curve(named: &NamedCurve, n: usize) -> Result<ArclengthCurve> {
    use std::f64::consts::PI;
    match *named {
        NamedCurve::Circle { radius } => {
            let f = move |t: f64| Vector3::new(radius * t.cos(), radius * t.sin(), 0.0);
            curves::resample_arclength(
                RawCurve::Parametric {
                    f: &f,
                    t0: 0.0,
                    t1: 2.0 * PI,
                },
                n,
                true,
            )
        }
        NamedCurve::Ellipse { a, b } => {
            let f = move |t: f64| Vector3::new(a * t.cos(), b * t.sin(), 0.0);
            curves::resample_arclength(
                RawCurve::Parametric {
                    f: &f,
                    t0: 0.0,
                    t1: 2.0 * PI,
                },
                n,
                true,
            )
        }
        NamedCurve::Helix { a, b, turns } => {
            let f = move |t: f64| Vector3::new(a * t.cos(), a * t.sin(), b * t);
            curves::resample_arclength(
                RawCurve::Parametric {
                    f: &f,
                    t0: 0.0,
                    t1: 2.0 * PI * turns,
                },
                n,
                false,
            )
        }
        NamedCurve::TanhBump { amplitude, s_max } => {
            let s = numerics::linspace(-s_max, s_max, n);
            let h = s[1] - s[0];
            let profile = CurvatureProfile::planar(
                s.iter().map(|x| amplitude * x.tanh()).collect(),
                h,
                Boundary::Open,
            );
            Ok(curves::curve_from_curvature(
                &profile,
                Vector3::zeros(),
                0.0,
            ))
        }
    }
}

/// The curvature profile a curve file describes. Synthesized profiles
/// (tanh bump) are returned analytically; everything else is measured from
/// the resampled curve.
pub fn load_profile(path: &Path) -> Result<CurvatureProfile> {
    let file: CurveFile = read_json(path)?;
    build_profile(&file, &path.display().to_string())
}

pub fn build_profile(file: &CurveFile, origin: &str) -> Result<CurvatureProfile> {
    if let Some(NamedCurve::TanhBump { amplitude, s_max }) = &file.named {
        let s = numerics::linspace(-s_max, *s_max, file.n);
        let h = s[1] - s[0];
        return Ok(CurvatureProfile::planar(
            s.iter().map(|x| amplitude * x.tanh()).collect(),
            h,
            Boundary::Open,
        ));
    }
    let curve = build_curve(file, origin)?;
    if curve.planar {
        curves::curvature_planar(&curve)
    } else {
        Ok(curves::frenet_apparatus(&curve, curves::DEFAULT_KAPPA_MIN)?.profile)
    }
}

/// Load a net file; Fermi curve paths resolve relative to the net file.
pub fn load_net(path: &Path) -> Result<OrthogonalNet> {
    let file: NetFile = read_json(path)?;
    let origin = path.display().to_string();
    match (&file.fermi, &file.lame) {
        (Some(fermi), None) => {
            let curve_path = path
                .parent()
                .map(|d| d.join(&fermi.curve))
                .unwrap_or_else(|| fermi.curve.clone().into());
            let profile = load_profile(&curve_path)?;
            nets::fermi_net(&profile, fermi.rho_max, fermi.n_rho)
        }
        (None, Some(lame)) => build_lame_net(lame, &origin),
        _ => Err(Error::Schema {
            path: origin,
            detail: "net file needs exactly one of \"fermi\" or \"lame\"".into(),
        }),
    }
}

fn build_lame_net(spec: &LameSpec, origin: &str) -> Result<OrthogonalNet> {
    let u = spec.u.grid();
    let v = spec.v.grid();
    let h1 = eval_expr_or_grid(&spec.h1, &u, &v, origin, "h1")?;
    let h2 = eval_expr_or_grid(&spec.h2, &u, &v, origin, "h2")?;
    let net = OrthogonalNet {
        u,
        v,
        h1,
        h2,
        boundary_u: spec.u.boundary(),
        boundary_v: spec.v.boundary(),
    };
    // Positivity is a constraint of the schema, not an assertion.
    for ((i, j), &h) in net.h1.indexed_iter() {
        if h <= 0.0 || net.h2[[i, j]] <= 0.0 {
            return Err(Error::Constraint {
                path: origin.into(),
                detail: format!(
                    "Lamé coefficient not positive at (u, v) = ({}, {}): h1 = {}, h2 = {}",
                    net.u[i],
                    net.v[j],
                    h,
                    net.h2[[i, j]]
                ),
            });
        }
    }
    Ok(net)
}

fn eval_expr_or_grid(
    spec: &ExprOrGrid,
    u: &[f64],
    v: &[f64],
    origin: &str,
    field: &str,
) -> Result<ndarray::Array2<f64>> {
    match spec {
        ExprOrGrid::Constant(c) => Ok(ndarray::Array2::from_elem((u.len(), v.len()), *c)),
        ExprOrGrid::Expression(text) => {
            let expr = parse_expr(text).map_err(|detail| Error::Schema {
                path: origin.into(),
                detail: format!("{field}: {detail}"),
            })?;
            let mut out = ndarray::Array2::zeros((u.len(), v.len()));
            for (i, &ui) in u.iter().enumerate() {
                for (j, &vj) in v.iter().enumerate() {
                    out[[i, j]] = expr.eval(ui, vj);
                }
            }
            Ok(out)
        }
        ExprOrGrid::Grid(rows) => {
            if rows.len() != u.len() || rows.iter().any(|r| r.len() != v.len()) {
                return Err(Error::Schema {
                    path: origin.into(),
                    detail: format!(
                        "{field}: grid shape does not match axes {}x{}",
                        u.len(),
                        v.len()
                    ),
                });
            }
            let mut out = ndarray::Array2::zeros((u.len(), v.len()));
            for (i, row) in rows.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    out[[i, j]] = x;
                }
            }
            Ok(out)
        }
    }
}

/// Load a surface file.
pub fn load_surface(path: &Path) -> Result<SurfacePatch> {
    let file: SurfaceFile = read_json(path)?;
    let origin = path.display().to_string();
    match (&file.named, &file.grid, &file.points) {
        (Some(named), None, None) => named_surface(named, &origin),
        (None, Some(grid), Some(points)) => {
            let u = grid.u.grid();
            let v = grid.v.grid();
            if points.len() != u.len() || points.iter().any(|row| row.len() != v.len()) {
                return Err(Error::Schema {
                    path: origin,
                    detail: format!("points shape does not match axes {}x{}", u.len(), v.len()),
                });
            }
            let rows: Vec<Vec<Vector3<f64>>> = points
                .iter()
                .map(|row| row.iter().map(|p| Vector3::new(p[0], p[1], p[2])).collect())
                .collect();
            Ok(SurfacePatch::from_points(
                u,
                v,
                &rows,
                grid.u.periodic,
                grid.v.periodic,
            ))
        }
        _ => Err(Error::Schema {
            path: origin,
            detail: "surface file needs either \"named\" or both \"grid\" and \"points\"".into(),
        }),
    }
}

fn named_surface(named: &NamedSurface, origin: &str) -> Result<SurfacePatch> {
    match named {
        NamedSurface::Plane { lx, ly, nu, nv } => Ok(surfaces::plane_patch(*lx, *ly, *nu, *nv)),
        NamedSurface::Cylinder {
            radius,
            height,
            nu,
            nv,
        } => Ok(surfaces::cylinder_patch(*radius, *height, *nu, *nv)),
        NamedSurface::Cone {
            half_angle,
            v0,
            v1,
            nu,
            nv,
        } => Ok(surfaces::cone_patch(*half_angle, *v0, *v1, *nu, *nv)),
        NamedSurface::Sphere {
            radius,
            colat_min,
            colat_max,
            nu,
            nv,
        } => Ok(surfaces::sphere_patch(
            *radius, *colat_min, *colat_max, *nu, *nv,
        )),
        NamedSurface::Ellipsoid {
            a,
            c,
            colat_min,
            colat_max,
            nu,
            nv,
        } => Ok(surfaces::ellipsoid_patch(
            *a, *c, *colat_min, *colat_max, *nu, *nv,
        )),
        NamedSurface::Torus {
            major,
            minor,
            nu,
            nv,
        } => Ok(surfaces::torus_patch(*major, *minor, *nu, *nv)),
        NamedSurface::Graph {
            z,
            x0,
            x1,
            y0,
            y1,
            nu,
            nv,
        } => {
            let expr = parse_expr(z).map_err(|detail| Error::Schema {
                path: origin.into(),
                detail: format!("z: {detail}"),
            })?;
            Ok(surfaces::graph_patch(
                move |x, y| expr.eval(x, y),
                *x0,
                *x1,
                *y0,
                *y1,
                *nu,
                *nv,
            ))
        }
    }
}
