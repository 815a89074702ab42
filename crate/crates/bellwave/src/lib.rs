//! Simulator for a Bell test with momentum-entangled atoms of two different
//! species (a light fermionic and a heavier bosonic helium isotope).
//!
//! The crate has two independent computational routes to the same physics:
//!
//! * [`oracle`] — an exact analytic model of the post-selected single-pair
//!   subspace: four joint momentum modes, beam-splitter unitaries, joint
//!   probabilities, the Bell correlator `E` and the CHSH parameter `S`.
//! * [`grid`] + [`sequence`] — a second-order split-step propagator for the
//!   full two-particle wavefunction `psi(x3, z3, x4, z4, t)` on a 2D⊗2D grid,
//!   driven through the experimental sequence: trap release, Bragg splitting,
//!   s-wave collision, mirror pulses, and phase-controlled mixing pulses.
//!
//! [`analysis`] extracts momentum densities, back-to-back correlation slices,
//! mode-region joint weights, `E` and `S` from wavefunction snapshots, so the
//! grid route can be checked against the analytic route end to end.
//!
//! See the `examples/` directory for runnable walk-throughs of each stage.

pub mod analysis;
pub mod cli;
pub mod grid;
pub mod oracle;
pub mod physics;
pub mod sequence;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
