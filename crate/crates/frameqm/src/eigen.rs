//! Symmetric eigensolvers: implicit-shift QL for tridiagonal matrices with
//! inverse-iteration eigenvectors, and a dense fallback for block operators.
//!
//! The tridiagonal path is deterministic and allocation-light; it handles
//! the large scalar Dirichlet grids. Periodic and block-tridiagonal
//! operators go through the dense symmetric solver at desk scale.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

const MAX_QL_ITERATIONS: usize = 64;

/// All eigenvalues of the symmetric tridiagonal matrix with diagonal `diag`
/// and off-diagonal `off` (`off.len() == diag.len() - 1`), ascending.
///
/// Implicit-shift QL; eigenvalues only, O(n) per eigenvalue.
pub fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    assert_eq!(off.len(), n.saturating_sub(1));
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut d = diag.to_vec();
    let mut e = Vec::with_capacity(n);
    e.extend_from_slice(off);
    e.push(0.0);

    for l in 0..n {
        let mut iter = 0;
        loop {
            // Look for a negligible subdiagonal element to split at.
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_ITERATIONS {
                return Err(Error::ConvergenceFailure {
                    index: l,
                    iterations: iter,
                });
            }

            // Implicit shift from the 2x2 block at l.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Eigenvector of the symmetric tridiagonal matrix for a computed
/// eigenvalue, by inverse iteration. `previous` holds already-computed
/// eigenvectors paired with their eigenvalues; vectors belonging to nearby
/// eigenvalues are orthogonalized against.
pub fn tridiagonal_eigenvector(
    diag: &[f64],
    off: &[f64],
    lambda: f64,
    previous: &[(f64, Vec<f64>)],
) -> Result<Vec<f64>> {
    let n = diag.len();
    let scale = diag
        .iter()
        .map(|x| x.abs())
        .chain(off.iter().map(|x| 2.0 * x.abs()))
        .fold(0.0f64, f64::max)
        .max(1.0);
    let cluster_tol = 1e-8 * scale;

    // LU factors of (T - lambda I) with partial pivoting.
    let lu = factor_shifted(diag, off, lambda, scale);

    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut converged = false;
    for _ in 0..8 {
        solve_factored(&lu, &mut x);
        for (ev, v) in previous {
            if (ev - lambda).abs() < cluster_tol {
                let dot: f64 = x.iter().zip(v).map(|(a, b)| a * b).sum();
                for (xi, vi) in x.iter_mut().zip(v) {
                    *xi -= dot * vi;
                }
            }
        }
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            // Degenerate start vector; perturb and retry.
            x = (0..n)
                .map(|i| ((i * 2654435761) % 1013) as f64 / 1013.0 - 0.5)
                .collect();
            continue;
        }
        for xi in x.iter_mut() {
            *xi /= norm;
        }
        if tridiagonal_residual(diag, off, lambda, &x) <= 1e-10 * scale {
            converged = true;
            break;
        }
    }
    if !converged && tridiagonal_residual(diag, off, lambda, &x) > 1e-8 * scale {
        return Err(Error::ConvergenceFailure {
            index: 0,
            iterations: 8,
        });
    }
    // Fix an overall sign: largest-magnitude entry positive.
    let imax = x
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
        .map(|(i, _)| i)
        .unwrap_or(0);
    if x[imax] < 0.0 {
        for xi in x.iter_mut() {
            *xi = -*xi;
        }
    }
    Ok(x)
}

fn tridiagonal_residual(diag: &[f64], off: &[f64], lambda: f64, x: &[f64]) -> f64 {
    let n = diag.len();
    let mut res = 0.0f64;
    for i in 0..n {
        let mut y = (diag[i] - lambda) * x[i];
        if i > 0 {
            y += off[i - 1] * x[i - 1];
        }
        if i + 1 < n {
            y += off[i] * x[i + 1];
        }
        res += y * y;
    }
    res.sqrt()
}

struct TriLu {
    lower: Vec<f64>,
    diag: Vec<f64>,
    upper1: Vec<f64>,
    upper2: Vec<f64>,
    swapped: Vec<bool>,
}

/// LU factorization of (T − λI) with partial pivoting, dgttrf-style.
/// Near-zero pivots are bumped to ±ε·scale so inverse iteration can divide.
fn factor_shifted(diag: &[f64], off: &[f64], lambda: f64, scale: f64) -> TriLu {
    let n = diag.len();
    let tiny = f64::EPSILON * scale;
    let bump = |x: &mut f64| {
        if x.abs() < tiny {
            *x = tiny.copysign(if *x == 0.0 { 1.0 } else { *x });
        }
    };
    let mut d: Vec<f64> = diag.iter().map(|x| x - lambda).collect();
    let mut du: Vec<f64> = off.to_vec();
    let mut dl: Vec<f64> = off.to_vec();
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    let mut swapped = vec![false; n.saturating_sub(1)];

    for i in 0..n.saturating_sub(1) {
        if d[i].abs() >= dl[i].abs() {
            bump(&mut d[i]);
            let fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            let temp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = temp - fact * d[i + 1];
            if i + 1 < n - 1 {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
            swapped[i] = true;
        }
    }
    bump(&mut d[n - 1]);
    TriLu {
        lower: dl,
        diag: d,
        upper1: du,
        upper2: du2,
        swapped,
    }
}

fn solve_factored(lu: &TriLu, b: &mut [f64]) {
    let n = lu.diag.len();
    for i in 0..n - 1 {
        if lu.swapped[i] {
            let temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - lu.lower[i] * b[i];
        } else {
            b[i + 1] -= lu.lower[i] * b[i];
        }
    }
    b[n - 1] /= lu.diag[n - 1];
    if n >= 2 {
        b[n - 2] = (b[n - 2] - lu.upper1[n - 2] * b[n - 1]) / lu.diag[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        b[i] = (b[i] - lu.upper1[i] * b[i + 1] - lu.upper2[i] * b[i + 2]) / lu.diag[i];
    }
}

/// Lowest `k` eigenpairs of a dense symmetric matrix, ascending.
pub fn dense_symmetric_eigen(matrix: &DMatrix<f64>, k: usize) -> (Vec<f64>, Vec<Vec<f64>>) {
    let eig = matrix.clone().symmetric_eigen();
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let take = k.min(n);
    let mut values = Vec::with_capacity(take);
    let mut vectors = Vec::with_capacity(take);
    for &idx in order.iter().take(take) {
        values.push(eig.eigenvalues[idx]);
        vectors.push(eig.eigenvectors.column(idx).iter().copied().collect());
    }
    (values, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ql_matches_free_laplacian_closed_form() {
        // Dirichlet -d²/dx² on n interior points has eigenvalues
        // (2/h²)(1 - cos(k π/(n+1))).
        let n = 64;
        let h = 1.0 / (n as f64 + 1.0);
        let diag = vec![2.0 / (h * h); n];
        let off = vec![-1.0 / (h * h); n - 1];
        let eigs = tridiagonal_eigenvalues(&diag, &off).unwrap();
        for (k, e) in eigs.iter().enumerate() {
            let exact = 2.0 / (h * h)
                * (1.0 - (std::f64::consts::PI * (k as f64 + 1.0) / (n as f64 + 1.0)).cos());
            assert_relative_eq!(*e, exact, max_relative = 1e-12);
        }
    }

    #[test]
    fn inverse_iteration_recovers_sine_modes() {
        let n = 200;
        let h = 1.0 / (n as f64 + 1.0);
        let diag = vec![2.0 / (h * h); n];
        let off = vec![-1.0 / (h * h); n - 1];
        let eigs = tridiagonal_eigenvalues(&diag, &off).unwrap();
        let mut previous: Vec<(f64, Vec<f64>)> = Vec::new();
        for k in 0..3 {
            let v = tridiagonal_eigenvector(&diag, &off, eigs[k], &previous).unwrap();
            let res = tridiagonal_residual(&diag, &off, eigs[k], &v);
            assert!(res <= 1e-10 * 4.0 / (h * h), "residual {res}");
            // Mode shape: sin((k+1) pi x).
            let mut dot = 0.0;
            let mut norm = 0.0;
            for (i, vi) in v.iter().enumerate() {
                let x = (i as f64 + 1.0) * h;
                let s = ((k as f64 + 1.0) * std::f64::consts::PI * x).sin();
                dot += vi * s;
                norm += s * s;
            }
            assert!(dot.abs() / (norm.sqrt()) > 1.0 - 1e-8);
            previous.push((eigs[k], v));
        }
    }

    #[test]
    fn degenerate_pair_vectors_are_orthogonal() {
        // Periodic free operator has doubly degenerate modes; emulate the
        // degeneracy with a symmetric tridiagonal that has a tight cluster.
        let diag = vec![2.0, 2.0, 2.0, 2.0];
        let off = vec![1e-14, -1.0, 1e-14];
        let eigs = tridiagonal_eigenvalues(&diag, &off).unwrap();
        let v0 = tridiagonal_eigenvector(&diag, &off, eigs[0], &[]).unwrap();
        let v1 = tridiagonal_eigenvector(&diag, &off, eigs[1], &[(eigs[0], v0.clone())]).unwrap();
        let dot: f64 = v0.iter().zip(&v1).map(|(a, b)| a * b).sum();
        assert!(dot.abs() < 1e-8, "cluster vectors not orthogonal: {dot}");
    }

    #[test]
    fn dense_solver_sorts_ascending() {
        let m = DMatrix::from_row_slice(3, 3, &[2.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 2.0]);
        let (vals, vecs) = dense_symmetric_eigen(&m, 3);
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
        assert_relative_eq!(vals[0], 2.0 - 2.0f64.sqrt(), epsilon = 1e-12);
        assert_eq!(vecs.len(), 3);
    }
}
