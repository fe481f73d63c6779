//! Dense Hermitian matrices over labeled tensor-product spaces.
//!
//! Basis order is big-endian: the leftmost subsystem varies slowest, so for
//! dims `[2, 2, 2]` index `4a + 2b + c` is `|a⟩|b⟩|c⟩`.

use num_complex::Complex64;

use crate::eigen::eig_hermitian;
use crate::error::{Error, Result};
use crate::tolerance;

/// A Hermitian matrix on the space `dims[0] ⊗ dims[1] ⊗ …`, stored row-major.
///
/// No trace or positivity constraint; partial transposes live here.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dims: Vec<usize>,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn new(dims: Vec<usize>, data: Vec<Complex64>) -> Result<Self> {
        check_shape(&dims, data.len(), true)?;
        let m = Self { dims, data };
        let deviation = m.hermiticity_defect();
        if deviation.is_nan() || deviation > tolerance::HERMITIAN {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(m)
    }

    /// Single-subsystem matrix from real rows.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DataLength {
                    dims: vec![n],
                    expected: n,
                    actual: row.len(),
                });
            }
            data.extend(row.iter().map(|&x| Complex64::new(x, 0.0)));
        }
        Self::new(vec![n], data)
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let n = values.len();
        let mut data = vec![Complex64::default(); n * n];
        for (i, &v) in values.iter().enumerate() {
            data[i * n + i] = Complex64::new(v, 0.0);
        }
        Self {
            dims: vec![n],
            data,
        }
    }

    pub fn identity(dims: Vec<usize>) -> Self {
        let n = dims.iter().product::<usize>();
        let mut m = Self::diagonal(&vec![1.0; n]);
        m.dims = dims;
        m
    }

    pub(crate) fn from_parts_unchecked(dims: Vec<usize>, data: Vec<Complex64>) -> Self {
        debug_assert_eq!(data.len(), dims.iter().product::<usize>().pow(2));
        Self { dims, data }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total dimension `∏ dims`.
    pub fn dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim() + col]
    }

    pub fn trace(&self) -> f64 {
        let n = self.dim();
        (0..n).map(|i| self.data[i * n + i].re).sum()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            dims: self.dims.clone(),
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Relabels the subsystem structure without touching the entries.
    pub fn with_dims(self, dims: Vec<usize>) -> Result<Self> {
        check_shape(&dims, self.data.len(), true)?;
        Ok(Self {
            dims,
            data: self.data,
        })
    }

    /// Largest `|m[i][j] - conj(m[j][i])|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                let d = (self.data[i * n + j] - self.data[j * n + i].conj()).norm();
                if d.is_nan() {
                    return f64::NAN;
                }
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.data.len(), other.data.len(), "matrix sizes differ");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        eig_hermitian(self)
    }
}

/// A Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(HermitianMatrix);

impl DensityMatrix {
    pub fn new(dims: Vec<usize>, data: Vec<Complex64>) -> Result<Self> {
        if dims.iter().any(|&d| d < 2) {
            return Err(Error::InvalidDims {
                dims,
                reason: "every subsystem must have dimension at least 2",
            });
        }
        Self::from_hermitian(HermitianMatrix::new(dims, data)?)
    }

    pub fn from_hermitian(m: HermitianMatrix) -> Result<Self> {
        if m.dims.is_empty() || m.dims.iter().any(|&d| d < 2) {
            return Err(Error::InvalidDims {
                dims: m.dims,
                reason: "every subsystem must have dimension at least 2",
            });
        }
        let trace = m.trace();
        if trace.is_nan() || (trace - 1.0).abs() > tolerance::UNIT_TRACE {
            return Err(Error::NotUnitTrace { trace });
        }
        let min_eigenvalue = eig_hermitian(&m)?[0];
        if min_eigenvalue < tolerance::PSD_FLOOR {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(Self(m))
    }

    /// Caller guarantees the invariants, e.g. because `m` is the image of a
    /// valid state under a trace-preserving completely positive map.
    pub(crate) fn from_hermitian_unchecked(m: HermitianMatrix) -> Self {
        Self(m)
    }

    pub fn maximally_mixed(dims: Vec<usize>) -> Self {
        let n = dims.iter().product::<usize>();
        Self(HermitianMatrix::identity(dims).scale(1.0 / n as f64))
    }

    /// The projector `|ψ⟩⟨ψ|`; `amplitudes` must be normalized.
    pub fn pure(dims: Vec<usize>, amplitudes: &[Complex64]) -> Result<Self> {
        check_shape(&dims, amplitudes.len(), false)?;
        let n = amplitudes.len();
        let mut data = Vec::with_capacity(n * n);
        for a in amplitudes {
            for b in amplitudes {
                data.push(a * b.conj());
            }
        }
        Self::new(dims, data)
    }

    pub fn as_hermitian(&self) -> &HermitianMatrix {
        &self.0
    }

    pub fn into_hermitian(self) -> HermitianMatrix {
        self.0
    }

    pub fn dims(&self) -> &[usize] {
        self.0.dims()
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0.get(row, col)
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    /// `trace(ρ²)`.
    pub fn purity(&self) -> f64 {
        // ρ is Hermitian, so trace(ρ²) = Σ |ρ_ij|².
        self.0.data.iter().map(|z| z.norm_sqr()).sum()
    }
}

impl AsRef<HermitianMatrix> for DensityMatrix {
    fn as_ref(&self) -> &HermitianMatrix {
        &self.0
    }
}

/// Checks `len` against `∏dims` (a vector) or `(∏dims)²` (a square matrix).
fn check_shape(dims: &[usize], len: usize, square: bool) -> Result<()> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidDims {
            dims: dims.to_vec(),
            reason: "need at least one subsystem, each of nonzero dimension",
        });
    }
    let n: usize = dims.iter().product();
    let expected = if square { n * n } else { n };
    if len != expected {
        return Err(Error::DataLength {
            dims: dims.to_vec(),
            expected,
            actual: len,
        });
    }
    Ok(())
}

fn check_subsystem(dims: &[usize], subsystem: usize) -> Result<()> {
    if subsystem >= dims.len() {
        return Err(Error::SubsystemOutOfRange {
            index: subsystem,
            count: dims.len(),
        });
    }
    Ok(())
}

/// Product of the dimensions to the right of `subsystem`.
fn stride(dims: &[usize], subsystem: usize) -> usize {
    dims[subsystem + 1..].iter().product()
}

/// `(a ⊗ b)[i·db + k][j·db + l] = a[i][j] · b[k][l]`; subsystem labels concatenate.
pub fn kron(a: &HermitianMatrix, b: &HermitianMatrix) -> HermitianMatrix {
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let mut data = vec![Complex64::default(); n * n];
    for i in 0..da {
        for j in 0..da {
            let aij = a.data[i * da + j];
            for k in 0..db {
                let row = (i * db + k) * n + j * db;
                for l in 0..db {
                    data[row + l] = aij * b.data[k * db + l];
                }
            }
        }
    }
    let dims = a.dims.iter().chain(&b.dims).copied().collect();
    HermitianMatrix { dims, data }
}

/// Traces out one subsystem of a Hermitian matrix.
pub fn partial_trace_hermitian(m: &HermitianMatrix, subsystem: usize) -> Result<HermitianMatrix> {
    check_subsystem(&m.dims, subsystem)?;
    if m.dims.len() == 1 {
        return Err(Error::InvalidDims {
            dims: m.dims.clone(),
            reason: "cannot trace out the only subsystem",
        });
    }
    let n = m.dim();
    let d = m.dims[subsystem];
    let low = stride(&m.dims, subsystem);
    let out_n = n / d;
    let lift = |r: usize, k: usize| (r / low) * d * low + k * low + r % low;

    let mut data = vec![Complex64::default(); out_n * out_n];
    for r in 0..out_n {
        for c in 0..out_n {
            data[r * out_n + c] = (0..d).map(|k| m.data[lift(r, k) * n + lift(c, k)]).sum();
        }
    }
    let mut dims = m.dims.clone();
    dims.remove(subsystem);
    Ok(HermitianMatrix { dims, data })
}

/// Traces out one subsystem. Trace, Hermiticity and positivity carry over.
pub fn partial_trace(rho: &DensityMatrix, subsystem: usize) -> Result<DensityMatrix> {
    if rho.dims().len() == 1 {
        check_subsystem(rho.dims(), subsystem)?;
    }
    partial_trace_hermitian(&rho.0, subsystem).map(DensityMatrix)
}

/// Transposes the indices of one subsystem, leaving the others alone.
pub fn partial_transpose_hermitian(
    m: &HermitianMatrix,
    subsystem: usize,
) -> Result<HermitianMatrix> {
    check_subsystem(&m.dims, subsystem)?;
    let n = m.dim();
    let d = m.dims[subsystem];
    let low = stride(&m.dims, subsystem);
    let digit = |i: usize| (i / low) % d;
    let replace = |i: usize, k: usize| i - digit(i) * low + k * low;

    let mut data = vec![Complex64::default(); n * n];
    for i in 0..n {
        for j in 0..n {
            let (di, dj) = (digit(i), digit(j));
            data[replace(i, dj) * n + replace(j, di)] = m.data[i * n + j];
        }
    }
    Ok(HermitianMatrix {
        dims: m.dims.clone(),
        data,
    })
}

pub fn partial_transpose(rho: &DensityMatrix, subsystem: usize) -> Result<HermitianMatrix> {
    partial_transpose_hermitian(&rho.0, subsystem)
}

/// Schatten 1-norm `Σ|λᵢ|`.
pub fn trace_norm(m: &HermitianMatrix) -> Result<f64> {
    Ok(eig_hermitian(m)?.iter().map(|l| l.abs()).sum())
}
