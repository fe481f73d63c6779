//! Partial-transpose spectra, logarithmic negativity and the distillability
//! threshold of Werner states after the Hawking channel.
//!
//! For two qubits a negative partial-transpose eigenvalue is both necessary
//! and sufficient for entanglement, and NPT states are distillable, so the
//! verdict here is exactly the distillability verdict.
//!
//! The traced state is X-shaped, so its partial transpose splits into two
//! 1×1 blocks and one 2×2 block; the closed forms below are the eigenvalues
//! of those blocks written in terms of `cos² r` and `sin² r`.

use crate::channel::{coefficients, hawking_channel, ChannelCoefficients, HawkingParams};
use crate::error::{Error, Result};
use crate::states::{check_weight, werner_state, WernerParams};
use crate::tensor::{partial_transpose, trace_norm, DensityMatrix};
use crate::tolerance;

/// Alice–Rob state outside the horizon: Werner state, Hawking channel on
/// Rob's mode, interior traced out.
pub fn alice_rob_state(w: &WernerParams, h: &HawkingParams) -> Result<DensityMatrix> {
    hawking_channel(&werner_state(w), h)
}

/// Spectrum of the partial transpose of a two-qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtSpectrum {
    /// Ascending.
    pub eigenvalues: [f64; 4],
    pub min_eigenvalue: f64,
    /// `min_eigenvalue < −ENTANGLEMENT`. Values in `[−ENTANGLEMENT, 0)`
    /// count as separable; the raw eigenvalue is still reported.
    pub entangled: bool,
    /// `log₂ Σ|λ|`, and exactly `0` when not `entangled`.
    pub log_negativity: f64,
}

impl PtSpectrum {
    pub fn from_eigenvalues(mut eigenvalues: [f64; 4]) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        let min_eigenvalue = eigenvalues[0];
        let entangled = min_eigenvalue < -tolerance::ENTANGLEMENT;
        let log_negativity = if entangled {
            eigenvalues.iter().map(|l| l.abs()).sum::<f64>().log2()
        } else {
            0.0
        };
        Self {
            eigenvalues,
            min_eigenvalue,
            entangled,
            log_negativity,
        }
    }

    /// `Σ_{λ<0} |λ|`.
    pub fn negative_mass(&self) -> f64 {
        self.eigenvalues
            .iter()
            .filter(|&&l| l < 0.0)
            .map(|l| -l)
            .sum()
    }
}

fn check_two_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.dims() != [2, 2] {
        return Err(Error::DimensionMismatch {
            expected: vec![2, 2],
            actual: rho.dims().to_vec(),
        });
    }
    Ok(())
}

/// Diagonalizes the partial transpose (over the second subsystem) numerically.
pub fn pt_spectrum_numeric(rho: &DensityMatrix) -> Result<PtSpectrum> {
    check_two_qubit(rho)?;
    let eig = partial_transpose(rho, 1)?.eigenvalues()?;
    Ok(PtSpectrum::from_eigenvalues([
        eig[0], eig[1], eig[2], eig[3],
    ]))
}

/// `log₂ ‖ρ^{T_B}‖₁`; zero on the PPT set (see [`PtSpectrum::entangled`]).
pub fn log_negativity(rho: &DensityMatrix) -> Result<f64> {
    check_two_qubit(rho)?;
    let pt = partial_transpose(rho, 1)?;
    let eig = pt.eigenvalues()?;
    if eig[0] < -tolerance::ENTANGLEMENT {
        Ok(trace_norm(&pt)?.log2())
    } else {
        Ok(0.0)
    }
}

/// Closed-form partial-transpose eigenvalues for the maximal Werner state.
///
/// Returned as `[λ₁, λ₂, λ₃, λ₄]`:
///
/// ```text
/// λ₁ = (1+2F)/6 · cos² r
/// λ₂ = (1+2F)/6 + (1−F)/3 · sin² r
/// λ₃,₄ = (1−F)/3 + (4F−1)/12 · sin² r ± ½·√((4F−1)²·cos² r/9 + sin⁴ r/4)
/// ```
///
/// The root is written with `(4F−1)²` pulled inside so that it stays regular
/// at `F = 1/4`; `λ₄` is always the smaller of the pair and is the only one
/// that can go negative.
pub fn pt_eigs_maximal(weight: f64, h: &HawkingParams) -> Result<[f64; 4]> {
    check_weight(weight)?;
    let c = coefficients(h);
    let (cos2, sin2) = (c.cos_sq(), c.sin_sq());
    let f = weight;
    let l1 = (1.0 + 2.0 * f) / 6.0 * cos2;
    let l2 = (1.0 + 2.0 * f) / 6.0 + (1.0 - f) / 3.0 * sin2;
    let mean = (1.0 - f) / 3.0 + (4.0 * f - 1.0) / 12.0 * sin2;
    let g = 4.0 * f - 1.0;
    let root = 0.5 * (g * g * cos2 / 9.0 + sin2 * sin2 / 4.0).sqrt();
    Ok([l1, l2, mean + root, mean - root])
}

/// Discriminant `ξ` of the generic closed form, with `B² = cos² r`, in
/// expanded polynomial form:
///
/// ```text
/// ξ = 9(α²−1)² − 2B²(α²−1)[(4F−1)(8F+1)α² − 6F − 3] + B⁴[1 + α² + F(2 − 4α²)]²
/// ```
///
/// Its O(1) terms cancel when the two middle eigenvalues nearly coincide,
/// so [`pt_eigs_generic`] evaluates the same quantity through
/// [`generic_discriminant_sq`] and uses this one only as a sign check.
pub fn generic_discriminant(weight: f64, alpha: f64, c: &ChannelCoefficients) -> f64 {
    let (f, a2, b2) = (weight, alpha * alpha, c.cos_sq());
    let tail = 1.0 + a2 + f * (2.0 - 4.0 * a2);
    9.0 * (a2 - 1.0).powi(2)
        - 2.0 * b2 * (a2 - 1.0) * ((4.0 * f - 1.0) * (8.0 * f + 1.0) * a2 - 6.0 * f - 3.0)
        + b2 * b2 * tail * tail
}

/// `ξ` as a sum of squares, equal to [`generic_discriminant`] identically:
///
/// ```text
/// ξ = [2α²(1−F)B² − (1−α²)(2(1−F) + (1+2F) sin² r)]² + 4α²(1−α²)(1−4F)²B²
/// ```
pub fn generic_discriminant_sq(weight: f64, alpha: f64, c: &ChannelCoefficients) -> f64 {
    let (f, a2, b2) = (weight, alpha * alpha, c.cos_sq());
    let partner2 = 1.0 - a2;
    let diff =
        2.0 * a2 * (1.0 - f) * b2 - partner2 * (2.0 * (1.0 - f) + (1.0 + 2.0 * f) * c.sin_sq());
    let coherence = 1.0 - 4.0 * f;
    diff * diff + 4.0 * a2 * partner2 * coherence * coherence * b2
}

/// Closed-form partial-transpose eigenvalues for a Werner state of generic `α`.
///
/// Returned as `[λ₁, λ₂, λ₃, λ₄]` with `B² = cos² r`:
///
/// ```text
/// λ₁ = (1+2F)α²/3 + 2α²(1−F)/3 · sin² r
/// λ₂ = (1−α²)(1+2F)/3 · B²
/// λ₃,₄ = [3 − 3α² + B²(3α² − 2F − 1) ± √ξ] / 6
/// ```
///
/// The labels differ from [`pt_eigs_maximal`]; compare the two as multisets.
pub fn pt_eigs_generic(w: &WernerParams, h: &HawkingParams) -> Result<[f64; 4]> {
    let c = coefficients(h);
    let (f, alpha) = (w.weight(), w.alpha());
    let a2 = alpha * alpha;
    let b2 = c.cos_sq();
    let xi = generic_discriminant(f, alpha, &c);
    if xi < -tolerance::NEGATIVE_DISCRIMINANT {
        return Err(Error::NegativeDiscriminant { xi });
    }
    let root = generic_discriminant_sq(f, alpha, &c).sqrt();
    let l1 = (1.0 + 2.0 * f) * a2 / 3.0 + 2.0 * a2 * (1.0 - f) / 3.0 * c.sin_sq();
    let l2 = (1.0 - a2) * (1.0 + 2.0 * f) / 3.0 * b2;
    let base = 3.0 - 3.0 * a2 + b2 * (3.0 * a2 - 2.0 * f - 1.0);
    Ok([l1, l2, (base + root) / 6.0, (base - root) / 6.0])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdMethod {
    ClosedForm,
    RootFind,
}

/// The Werner weight above which the post-channel state is entangled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdResult {
    pub tau: f64,
    pub method: ThresholdMethod,
    /// Closed form: `|λ₄(τ)|` of the maximal spectrum. Root find: final
    /// bracket width.
    pub residual: f64,
}

/// `τ = (3e^{ω/T} + 5)/(6e^{ω/T} + 8)`.
///
/// The same expression bounds both the maximal and the generic-`α`
/// preparations. Evaluated as `(3 + 5e^{−ω/T})/(6 + 8e^{−ω/T})`, which gives
/// exactly `1/2` at `T = 0` and tends to `4/7` as `ω/T → 0`.
pub fn threshold_closed_form(h: &HawkingParams) -> ThresholdResult {
    let decay = (-h.ratio()).exp();
    let tau = (3.0 + 5.0 * decay) / (6.0 + 8.0 * decay);
    let residual = pt_eigs_maximal(tau, h)
        .map(|l| l[3].abs())
        .expect("tau lies in [1/2, 4/7]");
    ThresholdResult {
        tau,
        method: ThresholdMethod::ClosedForm,
        residual,
    }
}

/// Bisects `F ∈ [0, 1]` for the sign change of the smallest numeric
/// partial-transpose eigenvalue of the full pipeline at fixed `α`.
pub fn threshold_root_find(alpha: f64, h: &HawkingParams) -> Result<ThresholdResult> {
    let min_eig = |f: f64| -> Result<f64> {
        let w = WernerParams::new(f, alpha)?;
        Ok(pt_spectrum_numeric(&alice_rob_state(&w, h)?)?.min_eigenvalue)
    };
    let (mut lo, mut hi) = (0.0, 1.0);
    if !(min_eig(lo)? > 0.0 && min_eig(hi)? < 0.0) {
        return Err(Error::NoSignChange);
    }
    while hi - lo >= tolerance::BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if min_eig(mid)? < 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(ThresholdResult {
        tau: 0.5 * (lo + hi),
        method: ThresholdMethod::RootFind,
        residual: hi - lo,
    })
}
