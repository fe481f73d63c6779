use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid subsystem dimensions {dims:?}: {reason}")]
    InvalidDims {
        dims: Vec<usize>,
        reason: &'static str,
    },

    #[error("expected {expected} matrix entries for dimensions {dims:?}, got {actual}")]
    DataLength {
        dims: Vec<usize>,
        expected: usize,
        actual: usize,
    },

    #[error("matrix is not Hermitian: max |m[i][j] - conj(m[j][i])| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("density matrix trace is {trace}, expected 1")]
    NotUnitTrace { trace: f64 },

    #[error("density matrix is not positive semidefinite: smallest eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("subsystem index {index} out of range for {count} subsystems")]
    SubsystemOutOfRange { index: usize, count: usize },

    #[error("dimension mismatch: expected {expected:?}, got {actual:?}")]
    DimensionMismatch {
        expected: Vec<usize>,
        actual: Vec<usize>,
    },

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("no sign change of the minimum partial-transpose eigenvalue on F in [0, 1]")]
    NoSignChange,

    #[error("discriminant is negative ({xi:e}); closed-form spectrum is inconsistent")]
    NegativeDiscriminant { xi: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by bad caller input, as opposed to numerical or I/O failure.
    pub fn is_invalid_input(&self) -> bool {
        !matches!(
            self,
            Error::NoConvergence { .. }
                | Error::NoSignChange
                | Error::NegativeDiscriminant { .. }
                | Error::Io(_)
        )
    }
}
