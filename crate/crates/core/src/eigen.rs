//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.
//!
//! Each rotation is a phase change that makes the pivot `a[p][q]` real,
//! followed by a real plane rotation that annihilates it, so the combined
//! step is unitary:
//!
//! ```text
//! G = diag(1, e^{-iφ}) · [[c, s], [-s, c]]      (on rows/cols p, q)
//! A ← G† A G,   V ← V G
//! ```
//!
//! Sweeps repeat over all `p < q` until the off-diagonal Frobenius norm
//! falls below `JACOBI_OFF_DIAGONAL · max(1, ‖A‖_F)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::HermitianMatrix;
use crate::tolerance;

const MAX_SWEEPS: usize = 64;

/// Eigenvalues in ascending order with matching unit eigenvectors.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Column `k` (row-major, `n × n`) is the eigenvector for `values[k]`.
    pub vectors: Vec<Complex64>,
}

impl HermitianEigen {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// `V Λ V†`, row-major.
    pub fn reconstruct(&self) -> Vec<Complex64> {
        let n = self.dim();
        let v = &self.vectors;
        let mut out = vec![Complex64::default(); n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (0..n)
                    .map(|k| v[i * n + k] * self.values[k] * v[j * n + k].conj())
                    .sum();
            }
        }
        out
    }

    /// `‖m − V Λ V†‖_max`.
    pub fn residual(&self, m: &HermitianMatrix) -> f64 {
        self.reconstruct()
            .iter()
            .zip(m.data())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Full eigendecomposition.
pub fn eigh(m: &HermitianMatrix) -> Result<HermitianEigen> {
    let n = m.dim();
    let src = m.data();
    // Work on the exactly Hermitian part; the input is Hermitian to tolerance only.
    let mut a: Vec<Complex64> = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            (src[i * n + j] + src[j * n + i].conj()) * 0.5
        })
        .collect();
    let mut v = vec![Complex64::default(); n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }

    let scale = frobenius(&a).max(1.0);
    let target = tolerance::JACOBI_OFF_DIAGONAL * scale;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off < target {
            break;
        }
        if sweeps == MAX_SWEEPS || !off.is_finite() {
            return Err(Error::NoConvergence {
                sweeps,
                off_diagonal: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[x * n + x].re.total_cmp(&a[y * n + y].re));
    let values = order.iter().map(|&k| a[k * n + k].re).collect();
    let mut vectors = vec![Complex64::default(); n * n];
    for (col, &k) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + col] = v[row * n + k];
        }
    }
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues only, ascending.
pub fn eig_hermitian(m: &HermitianMatrix) -> Result<Vec<f64>> {
    eigh(m).map(|e| e.values)
}

fn rotate(a: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let (app, aqq) = (a[p * n + p].re, a[q * n + q].re);
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let g_pp = Complex64::new(c, 0.0);
    let g_pq = Complex64::new(s, 0.0);
    let g_qp = -phase.conj() * s;
    let g_qq = phase.conj() * c;

    // A ← A G (columns p, q)
    for k in 0..n {
        let (akp, akq) = (a[k * n + p], a[k * n + q]);
        a[k * n + p] = akp * g_pp + akq * g_qp;
        a[k * n + q] = akp * g_pq + akq * g_qq;
    }
    // A ← G† A (rows p, q)
    for k in 0..n {
        let (apk, aqk) = (a[p * n + k], a[q * n + k]);
        a[p * n + k] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[q * n + k] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[p * n + q] = Complex64::default();
    a[q * n + p] = Complex64::default();
    a[p * n + p].im = 0.0;
    a[q * n + q].im = 0.0;

    for k in 0..n {
        let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
        v[k * n + p] = vkp * g_pp + vkq * g_qp;
        v[k * n + q] = vkp * g_pq + vkq * g_qq;
    }
}

fn frobenius(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn off_diagonal_norm(a: &[Complex64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j].norm_sqr();
            }
        }
    }
    sum.sqrt()
}
