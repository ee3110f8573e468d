//! Laplacian spectra via the cyclic Jacobi rotation method.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// Sweeps are stopped once the off-diagonal Frobenius norm drops below this.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e}, residual {residual:e})")]
    NoConvergence { sweeps: usize, off_norm: f64, residual: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    /// All eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// `max |L v - λ v|` over the computed eigenpairs.
    pub residual: f64,
    pub sweeps: usize,
}

impl Spectrum {
    /// Second-smallest eigenvalue, or 0 for a single vertex.
    pub fn second_smallest(&self) -> f64 {
        self.eigenvalues.get(1).copied().unwrap_or(0.0)
    }
}

/// Dense `L = D - A`, row-major.
pub fn laplacian_matrix(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut l = vec![0.0; n * n];
    for u in 0..n {
        l[u * n + u] = g.degree(u) as f64;
        for v in g.neighbors(u) {
            l[u * n + v] = -1.0;
        }
    }
    l
}

/// Dense Laplacian of an edge list on `n` vertices, for orders beyond what
/// [`Graph`] stores (the solver itself handles any `n`).
pub fn laplacian_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<f64> {
    let mut l = vec![0.0; n * n];
    for &(u, v) in edges {
        l[u * n + u] += 1.0;
        l[v * n + v] += 1.0;
        l[u * n + v] -= 1.0;
        l[v * n + u] -= 1.0;
    }
    l
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum, SpectrumError> {
    symmetric_spectrum(&laplacian_matrix(g), g.order())
}

/// Eigenvalues of a dense symmetric `n x n` row-major matrix.
pub fn symmetric_spectrum(matrix: &[f64], n: usize) -> Result<Spectrum, SpectrumError> {
    let mut vecs = vec![0.0; n * n];
    for i in 0..n {
        vecs[i * n + i] = 1.0;
    }
    let (diag, sweeps, off) = jacobi(matrix, n, Some(&mut vecs));
    let residual = residual(matrix, &diag, &vecs, n);
    if off >= OFF_DIAGONAL_TOLERANCE {
        return Err(SpectrumError::NoConvergence { sweeps, off_norm: off, residual });
    }
    Ok(Spectrum { eigenvalues: sorted(diag), residual, sweeps })
}

/// Ascending Laplacian eigenvalues without eigenvectors. Bit-identical to
/// [`laplacian_spectrum`]'s eigenvalues: the rotations applied to the matrix
/// do not depend on the accumulated vectors.
pub fn laplacian_eigenvalues(g: &Graph) -> Result<Vec<f64>, SpectrumError> {
    let n = g.order();
    let matrix = laplacian_matrix(g);
    let (diag, sweeps, off) = jacobi(&matrix, n, None);
    if off >= OFF_DIAGONAL_TOLERANCE {
        return Err(SpectrumError::NoConvergence { sweeps, off_norm: off, residual: f64::NAN });
    }
    Ok(sorted(diag))
}

/// Cyclic-by-row Jacobi sweeps. Returns the (unsorted) diagonal, the number
/// of sweeps and the final off-diagonal norm.
fn jacobi(matrix: &[f64], n: usize, mut vecs: Option<&mut [f64]>) -> (Vec<f64>, usize, f64) {
    assert_eq!(matrix.len(), n * n, "matrix is not n x n");
    let mut a = matrix.to_vec();
    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a, n);
    while off >= OFF_DIAGONAL_TOLERANCE && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, vecs.as_deref_mut(), n, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a, n);
    }
    ((0..n).map(|i| a[i * n + i]).collect(), sweeps, off)
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

/// Second-smallest Laplacian eigenvalue; 0 (within solver accuracy) iff `g`
/// is disconnected.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64, SpectrumError> {
    laplacian_spectrum(g).map(|s| s.second_smallest())
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * sum).sqrt()
}

/// Annihilates `a[p][q]` with a plane rotation, accumulating it into `vecs`
/// (columns are eigenvectors).
fn rotate(a: &mut [f64], vecs: Option<&mut [f64]>, n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
    }
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    if let Some(vecs) = vecs {
        for k in 0..n {
            let vkp = vecs[k * n + p];
            let vkq = vecs[k * n + q];
            vecs[k * n + p] = c * vkp - s * vkq;
            vecs[k * n + q] = s * vkp + c * vkq;
        }
    }
}

fn residual(original: &[f64], diag: &[f64], vecs: &[f64], n: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, &lambda) in diag.iter().enumerate() {
        for r in 0..n {
            let lv: f64 = (0..n).map(|k| original[r * n + k] * vecs[k * n + i]).sum();
            worst = worst.max((lv - lambda * vecs[r * n + i]).abs());
        }
    }
    worst
}
