//! Entanglement distillability of Dirac-field Werner states seen by an
//! observer hovering outside a Schwarzschild black hole.
//!
//! The pipeline is
//!
//! 1. prepare a Werner state of Alice's and Rob's modes ([`states`]),
//! 2. push Rob's mode through the fermionic Hawking channel and trace out
//!    the black-hole interior ([`channel`]),
//! 3. decide entanglement from the partial-transpose spectrum and measure it
//!    with the logarithmic negativity ([`analysis`]).
//!
//! Closed-form spectra and the threshold `τ = (3e^{ω/T}+5)/(6e^{ω/T}+8)`
//! are exposed next to the numeric path so the two can be checked against
//! each other.
//!
//! ```
//! use hawking_distill::{analysis, HawkingParams, WernerParams};
//!
//! let w = WernerParams::maximal(0.9)?;
//! let h = HawkingParams::new(1.0, 1.0)?;
//! let rho = analysis::alice_rob_state(&w, &h)?;
//! let s = analysis::pt_spectrum_numeric(&rho)?;
//! assert!(s.entangled);
//! assert!(w.weight() > analysis::threshold_closed_form(&h).tau);
//! # Ok::<(), hawking_distill::Error>(())
//! ```

pub mod analysis;
pub mod channel;
pub mod cli;
pub mod eigen;
pub mod error;
pub mod states;
pub mod tensor;
pub mod tolerance;

pub use channel::{ChannelCoefficients, HawkingParams};
pub use error::{Error, Result};
pub use states::{BellKind, WernerParams};
pub use tensor::{DensityMatrix, HermitianMatrix};
