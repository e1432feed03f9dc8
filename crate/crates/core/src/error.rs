//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction, validation, and I/O paths.
///
/// Optimizer non-convergence is not an error; it is reported through the
/// `converged` flag of [`crate::grape::OptimizationResult`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not Hermitian: max |H - H^dag| = {deviation:.3e} exceeds tolerance {tolerance:.3e}")]
    NotHermitian { deviation: f64, tolerance: f64 },
    #[error("matrix is not unitary: max |U^dag U - 1| = {deviation:.3e} exceeds tolerance {tolerance:.3e}")]
    NotUnitary { deviation: f64, tolerance: f64 },
    #[error("qubit index {index} out of range for {n} qubits")]
    QubitIndexOutOfRange { index: usize, n: usize },
    #[error("duplicate qubit index {0}")]
    DuplicateQubitIndex(usize),
    #[error("invalid coupling graph: {0}")]
    InvalidGraph(String),
    #[error("coupling graph is disconnected: qubit {0} unreachable from qubit 0")]
    DisconnectedGraph(usize),
    #[error("no baseline for (family={family}, source={source_tag}, n={n})")]
    NoBaseline {
        family: String,
        source_tag: String,
        n: usize,
    },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error in {path} line {line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("sweep exhausted grid without reaching target: best fidelity {best_fidelity} at T = {best_time}")]
    SweepExhausted { best_fidelity: f64, best_time: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
