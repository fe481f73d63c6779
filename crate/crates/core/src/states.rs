//! Prepared two-mode states: Bell states with amplitude `α` and Werner mixtures.
//!
//! Basis order is `|0⟩_A|0⟩_R, |0⟩_A|1⟩_R, |1⟩_A|0⟩_R, |1⟩_A|1⟩_R`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::{DensityMatrix, HermitianMatrix};

/// `α` of the maximally entangled Bell states.
pub const MAXIMAL_ALPHA: f64 = std::f64::consts::FRAC_1_SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellKind {
    /// `α|00⟩ + √(1−α²)|11⟩`
    PhiPlus,
    /// `α|00⟩ − √(1−α²)|11⟩`
    PhiMinus,
    /// `α|01⟩ + √(1−α²)|10⟩`
    PsiPlus,
    /// `α|01⟩ − √(1−α²)|10⟩`
    PsiMinus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] = [
        BellKind::PhiPlus,
        BellKind::PhiMinus,
        BellKind::PsiPlus,
        BellKind::PsiMinus,
    ];
}

impl fmt::Display for BellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BellKind::PhiPlus => "phi+",
            BellKind::PhiMinus => "phi-",
            BellKind::PsiPlus => "psi+",
            BellKind::PsiMinus => "psi-",
        })
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter {
            name: "alpha",
            value: alpha,
            reason: "must lie strictly between 0 and 1",
        });
    }
    Ok(())
}

/// State vector of a Bell state with amplitude `alpha` on the `|0⟩_A` branch.
pub fn bell_vector(kind: BellKind, alpha: f64) -> Result<[f64; 4]> {
    check_alpha(alpha)?;
    let partner = (1.0 - alpha * alpha).sqrt();
    Ok(match kind {
        BellKind::PhiPlus => [alpha, 0.0, 0.0, partner],
        BellKind::PhiMinus => [alpha, 0.0, 0.0, -partner],
        BellKind::PsiPlus => [0.0, alpha, partner, 0.0],
        BellKind::PsiMinus => [0.0, alpha, -partner, 0.0],
    })
}

/// Rank-1 projector onto [`bell_vector`].
pub fn bell_state(kind: BellKind, alpha: f64) -> Result<DensityMatrix> {
    let v = bell_vector(kind, alpha)?;
    let amplitudes: Vec<Complex64> = v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    DensityMatrix::pure(vec![2, 2], &amplitudes)
}

/// Mixing weight `F` and Bell amplitude `α` of a Werner state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerParams {
    weight: f64,
    alpha: f64,
}

impl WernerParams {
    pub fn new(weight: f64, alpha: f64) -> Result<Self> {
        check_weight(weight)?;
        check_alpha(alpha)?;
        Ok(Self { weight, alpha })
    }

    /// Werner state built from the maximally entangled Bell states.
    pub fn maximal(weight: f64) -> Result<Self> {
        Self::new(weight, MAXIMAL_ALPHA)
    }

    /// `F`, the weight on `|ψ⁻⟩`.
    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

pub(crate) fn check_weight(weight: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&weight) {
        return Err(Error::InvalidParameter {
            name: "F",
            value: weight,
            reason: "must lie in [0, 1]",
        });
    }
    Ok(())
}

/// `F·|ψ⁻⟩⟨ψ⁻| + (1−F)/3 · (|φ⁺⟩⟨φ⁺| + |φ⁻⟩⟨φ⁻| + |ψ⁺⟩⟨ψ⁺|)`, all at the same `α`.
///
/// For `α ≠ 1/√2` the four Bell vectors are not mutually orthogonal; the
/// result is still the convex combination of the four projectors.
pub fn werner_state(p: &WernerParams) -> DensityMatrix {
    let others = (1.0 - p.weight) / 3.0;
    let mut data = vec![Complex64::default(); 16];
    for kind in BellKind::ALL {
        let w = if kind == BellKind::PsiMinus {
            p.weight
        } else {
            others
        };
        let v = bell_vector(kind, p.alpha).expect("alpha validated by WernerParams");
        for i in 0..4 {
            for j in 0..4 {
                data[i * 4 + j] += w * v[i] * v[j];
            }
        }
    }
    let m = HermitianMatrix::from_parts_unchecked(vec![2, 2], data);
    DensityMatrix::from_hermitian_unchecked(m)
}
