//! Synthesis of time-optimal piecewise-constant control sequences realizing
//! quantum gates on Ising-coupled qubit networks.
//!
//! The crate is organized around five layers:
//!
//! - [`linalg`]: dense complex matrix kernel (tensor products, operator
//!   embedding, Hermitian matrix exponentials and their directional
//!   derivatives).
//! - [`spin`]: coupling topologies and the physical Hamiltonians (weak-coupling
//!   Ising drift, per-qubit x/y controls).
//! - [`gates`]: target unitaries (QFT, C^{n-1}NOT, SWAP, ...), their admissible
//!   global-phase families, and literature baseline times.
//! - [`grape`]: the gradient-flow optimizer over SU(N) and PSU(N) with exact
//!   spectral gradients.
//! - [`sweep`]: duration sweeps, minimal-time estimation, speed-up reports,
//!   and result-file I/O.
//!
//! All times are in units of `1/J_ref` where `J_ref` is the reference coupling
//! strength; control amplitudes are angular frequencies in the same units.
//! Qubit ordering is big-endian throughout: qubit 0 is the most significant
//! bit of a computational-basis index.

pub mod error;
pub mod gates;
// pub mod grape;
pub mod linalg;
// pub mod pulse;
pub mod spin;
// pub mod sweep;

pub use error::{Error, Result};
pub use linalg::{CMatrix, HermitianOp, Propagator};
