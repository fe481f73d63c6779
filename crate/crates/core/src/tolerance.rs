//! Fixed numerical tolerances.
//!
//! Every quantity in this crate has an exact algebraic value, so these only
//! absorb floating-point rounding.

/// Max allowed `|m[i][j] - conj(m[j][i])|` for a matrix to count as Hermitian.
pub const HERMITIAN: f64 = 1e-12;

/// Max allowed `|trace - 1|` for a density matrix.
pub const UNIT_TRACE: f64 = 1e-12;

/// Smallest eigenvalue a density matrix may have.
pub const PSD_FLOOR: f64 = -1e-10;

/// A partial-transpose eigenvalue below `-ENTANGLEMENT` certifies entanglement.
pub const ENTANGLEMENT: f64 = 1e-10;

/// Jacobi stops once the off-diagonal Frobenius norm drops below this
/// (scaled by `max(1, ||m||_F)`).
pub const JACOBI_OFF_DIAGONAL: f64 = 1e-14;

/// Negative discriminants down to `-NEGATIVE_DISCRIMINANT` are rounding and get clamped to zero.
pub const NEGATIVE_DISCRIMINANT: f64 = 1e-12;

/// Final bracket width of the threshold bisection.
pub const BISECTION_WIDTH: f64 = 1e-10;
