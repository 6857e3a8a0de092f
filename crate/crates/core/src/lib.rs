//! Quantitative toolkit for vacuum-polarization physics.
//!
//! * [`blackbody`]: Rayleigh–Jeans, Planck I and Planck II spectra and their
//!   cutoff integrals.
//! * [`running`]: one-loop running of the QED coupling, the Landau pole and
//!   the Zel'dovich form.
//! * [`vacuum`]: the harmonic-oscillator vacuum model (ε₀, μ₀, α⁻¹ and the
//!   inverse problem for Σ(q/e)²).
//! * [`critical`]: limiting field strengths and focal-volume pair statistics.
//!
//! Constants come from a versioned fixture ([`PhysicalConstants`]) and the
//! charged-particle content from particle tables ([`ParticleSet`]).

pub mod blackbody;
pub mod constants;
pub mod critical;
pub mod error;
pub mod particles;
pub mod quadrature;
pub mod roots;
pub mod running;
pub mod units;
pub mod vacuum;

pub use constants::PhysicalConstants;
pub use error::{Error, Result};
pub use particles::{ChargeRatio, Particle, ParticleKind, ParticleSet};
pub use running::{MomentumScale, RunningMode, RunningResult};
pub use vacuum::{VacuumModelResult, VolumeOption};
