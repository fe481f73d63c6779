//! The Hawking channel on Rob's fermionic mode.
//!
//! Seen from the two Schwarzschild regions, Rob's Kruskal mode maps as
//!
//! ```text
//! |0⟩_R → cos r · |0⟩_I|0⟩_II + sin r · |1⟩_I|1⟩_II
//! |1⟩_R → |1⟩_I|0⟩_II
//! ```
//!
//! with `cos r = (e^{−ω/T} + 1)^{−1/2}` and `sin r = (e^{ω/T} + 1)^{−1/2}`.
//! Region II (the interior) is inaccessible to Rob and gets traced out.
//! The antiparticle label `|1_{−k}⟩_II` is carried as the plain interior
//! occupation `|1⟩_II`. Alice's mode is left untouched.
//!
//! Only a single detected frequency is modelled; superpositions of Kruskal
//! modes are not.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::{partial_trace, DensityMatrix, HermitianMatrix};

/// Mode frequency `ω` and Hawking temperature `T`, in units with `ħ = c = G = k_B = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HawkingParams {
    omega: f64,
    temperature: f64,
    mass: Option<f64>,
}

impl HawkingParams {
    /// `T = 0` is the inertial limit and makes the channel the identity.
    pub fn new(omega: f64, temperature: f64) -> Result<Self> {
        check_omega(omega)?;
        if !(temperature >= 0.0 && temperature.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "T",
                value: temperature,
                reason: "must be finite and non-negative",
            });
        }
        Ok(Self {
            omega,
            temperature,
            mass: None,
        })
    }

    /// Uses the Hawking temperature `T = 1/(8πM)` of a black hole of mass `M`.
    pub fn from_mass(omega: f64, mass: f64) -> Result<Self> {
        check_omega(omega)?;
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "M",
                value: mass,
                reason: "must be finite and positive",
            });
        }
        Ok(Self {
            omega,
            temperature: hawking_temperature(mass),
            mass: Some(mass),
        })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// The mass this was built from, if any.
    pub fn mass(&self) -> Option<f64> {
        self.mass
    }

    /// `ω/T`, infinite at `T = 0`.
    pub fn ratio(&self) -> f64 {
        if self.temperature == 0.0 {
            f64::INFINITY
        } else {
            self.omega / self.temperature
        }
    }
}

fn check_omega(omega: f64) -> Result<()> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "omega",
            value: omega,
            reason: "must be finite and positive",
        });
    }
    Ok(())
}

/// `T = 1/(8πM)`.
pub fn hawking_temperature(mass: f64) -> f64 {
    1.0 / (8.0 * std::f64::consts::PI * mass)
}

/// Bogoliubov weights of the vacuum branch, `cos² r + sin² r = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelCoefficients {
    pub cos_r: f64,
    pub sin_r: f64,
}

impl ChannelCoefficients {
    /// `cos² r = 1/(e^{−ω/T} + 1)`.
    pub fn cos_sq(&self) -> f64 {
        self.cos_r * self.cos_r
    }

    /// `sin² r = 1/(e^{ω/T} + 1)`.
    pub fn sin_sq(&self) -> f64 {
        self.sin_r * self.sin_r
    }
}

/// Above this `ω/T`, `e^{ω/T}` is close to overflowing.
const OVERFLOW_RATIO: f64 = 700.0;

pub fn coefficients(p: &HawkingParams) -> ChannelCoefficients {
    if p.temperature == 0.0 {
        return ChannelCoefficients {
            cos_r: 1.0,
            sin_r: 0.0,
        };
    }
    let x = p.ratio();
    let cos_r = (1.0 + (-x).exp()).powf(-0.5);
    let sin_r = if x > OVERFLOW_RATIO {
        (-0.5 * x).exp() * cos_r
    } else {
        (1.0 + x.exp()).powf(-0.5)
    };
    ChannelCoefficients { cos_r, sin_r }
}

/// The 4×2 isometry `V` taking Rob's mode into region I ⊗ region II.
///
/// Rows are `|00⟩, |01⟩, |10⟩, |11⟩` of (I, II); columns are `|0⟩_R, |1⟩_R`.
pub fn isometry(c: &ChannelCoefficients) -> [[f64; 2]; 4] {
    [[c.cos_r, 0.0], [0.0, 0.0], [0.0, 1.0], [c.sin_r, 0.0]]
}

/// `max |(V†V − I)ᵢⱼ|`.
pub fn isometry_defect(c: &ChannelCoefficients) -> f64 {
    let v = isometry(c);
    let mut worst = 0.0_f64;
    for i in 0..2 {
        for j in 0..2 {
            let vtv: f64 = v.iter().map(|row| row[i] * row[j]).sum();
            let id = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((vtv - id).abs());
        }
    }
    worst
}

/// Applies `(I_A ⊗ V)` to a state of (Alice, Rob), giving a state of
/// (Alice, region I, region II).
pub fn dilate_rob_mode(rho_ar: &DensityMatrix, p: &HawkingParams) -> Result<DensityMatrix> {
    if rho_ar.dims() != [2, 2] {
        return Err(Error::DimensionMismatch {
            expected: vec![2, 2],
            actual: rho_ar.dims().to_vec(),
        });
    }
    let v = isometry(&coefficients(p));
    // W = I_2 ⊗ V, 8×4.
    let w = |row: usize, col: usize| -> f64 {
        let (a_out, r_out) = (row / 4, row % 4);
        let (a_in, r_in) = (col / 2, col % 2);
        if a_out == a_in {
            v[r_out][r_in]
        } else {
            0.0
        }
    };

    // W ρ W†, exploiting that W is real.
    let mut half = [[Complex64::default(); 4]; 8];
    for (i, row) in half.iter_mut().enumerate() {
        for (k, out) in row.iter_mut().enumerate() {
            *out = (0..4)
                .map(|j| rho_ar.get(k, j) * w(i, j))
                .sum::<Complex64>();
        }
    }
    // half[i][k] = Σ_j ρ[k][j] W[i][j] = (ρ Wᵀ)[k][i]
    let mut data = vec![Complex64::default(); 64];
    for i in 0..8 {
        for j in 0..8 {
            data[i * 8 + j] = (0..4).map(|k| w(i, k) * half[j][k]).sum();
        }
    }
    let m = HermitianMatrix::from_parts_unchecked(vec![2, 2, 2], data);
    Ok(DensityMatrix::from_hermitian_unchecked(m))
}

/// Dilates Rob's mode and traces out region II, giving Alice and Rob's
/// shared state outside the horizon.
pub fn hawking_channel(rho_ar: &DensityMatrix, p: &HawkingParams) -> Result<DensityMatrix> {
    partial_trace(&dilate_rob_mode(rho_ar, p)?, 2)
}
