//! Dense complex matrix kernel: tensor products, operator embedding, Hermitian
//! matrix exponentials and their directional derivatives, trace inner
//! products, unitarity checks.
//!
//! Everything here is a pure function of its inputs; matrices are owned
//! [`nalgebra::DMatrix`] values over `Complex<f64>`. The target scale is
//! n <= 7 qubits (N <= 128), where dense eigendecomposition is cheap.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix, the working currency of the whole crate.
pub type CMatrix = DMatrix<Complex64>;

/// Relative tolerance for accepting a matrix as Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Absolute tolerance on `max |U^dag U - 1|` for accepting a propagator as unitary.
pub const UNITARITY_TOL: f64 = 1e-10;
/// Below `|lambda_a - lambda_b| * t` of this, the divided-difference kernel
/// switches to its first-order Taylor fallback.
pub const DEGENERACY_THRESHOLD: f64 = 1e-8;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// N x N identity.
pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// Largest entry magnitude, `max_ij |A_ij|`.
pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().fold(0.0, |m, z| m.max(z.norm()))
}

/// `max_ij |A_ij - B_ij|`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch in max_abs_diff");
    a.iter()
        .zip(b.iter())
        .fold(0.0, |m, (x, y)| m.max((x - y).norm()))
}

/// Deviation from hermiticity, `max |H - H^dag|`.
pub fn hermiticity_deviation(h: &CMatrix) -> f64 {
    let mut dev: f64 = 0.0;
    for i in 0..h.nrows() {
        for j in i..h.ncols() {
            dev = dev.max((h[(i, j)] - h[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Deviation from unitarity, `max |U^dag U - 1|`.
pub fn unitarity_deviation(u: &CMatrix) -> f64 {
    let gram = u.adjoint() * u;
    max_abs_diff(&gram, &identity(u.nrows()))
}

/// Kronecker product `A (x) B`; dimensions multiply.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Trace inner product `tr(A^dag B)`.
pub fn trace_inner(a: &CMatrix, b: &CMatrix) -> Result<Complex64> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch(format!(
            "trace_inner: {:?} vs {:?}",
            a.shape(),
            b.shape()
        )));
    }
    let mut acc = ZERO;
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x.conj() * y;
    }
    Ok(acc)
}

/// A validated Hermitian operator. Units are angular frequency in multiples
/// of the reference coupling `J_ref` (so `H*t` is dimensionless for `t` in
/// units of `1/J_ref`).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOp {
    matrix: CMatrix,
}

impl HermitianOp {
    /// Validate hermiticity (relative tolerance [`HERMITICITY_TOL`]) and wrap.
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::DimensionMismatch(format!(
                "HermitianOp must be square, got {:?}",
                matrix.shape()
            )));
        }
        let scale = max_abs(&matrix).max(1.0);
        let dev = hermiticity_deviation(&matrix);
        if dev > HERMITICITY_TOL * scale {
            return Err(Error::NotHermitian {
                deviation: dev,
                tolerance: HERMITICITY_TOL * scale,
            });
        }
        Ok(Self { matrix })
    }

    /// The zero operator on an N-dimensional space.
    pub fn zero(dim: usize) -> Self {
        Self {
            matrix: CMatrix::zeros(dim, dim),
        }
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }
}

/// A validated unitary propagator together with the evolution duration that
/// produced it (duration in units of `1/J_ref`).
#[derive(Debug, Clone)]
pub struct Propagator {
    matrix: CMatrix,
    duration: f64,
}

impl Propagator {
    /// Validate unitarity (absolute tolerance [`UNITARITY_TOL`]) and wrap.
    pub fn new(matrix: CMatrix, duration: f64) -> Result<Self> {
        let dev = unitarity_deviation(&matrix);
        if dev > UNITARITY_TOL {
            return Err(Error::NotUnitary {
                deviation: dev,
                tolerance: UNITARITY_TOL,
            });
        }
        Ok(Self { matrix, duration })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }
}

/// Embed `op` acting on the ordered qubits `qubits` into the full space of
/// `n` qubits, identity elsewhere.
///
/// Qubit ordering is big-endian: qubit 0 is the most significant bit of a
/// basis index, so `embed(sigma_z, &[0], 2)` is `diag(1, 1, -1, -1)`.
pub fn embed(op: &CMatrix, qubits: &[usize], n: usize) -> Result<CMatrix> {
    let k = qubits.len();
    for (i, &q) in qubits.iter().enumerate() {
        if q >= n {
            return Err(Error::QubitIndexOutOfRange { index: q, n });
        }
        if qubits[..i].contains(&q) {
            return Err(Error::DuplicateQubitIndex(q));
        }
    }
    let sub_dim = 1usize << k;
    if op.nrows() != sub_dim || op.ncols() != sub_dim {
        return Err(Error::DimensionMismatch(format!(
            "embed: operator is {:?} but {} qubits require {}x{}",
            op.shape(),
            k,
            sub_dim,
            sub_dim
        )));
    }
    let dim = 1usize << n;
    // Bit position (from the LSB) of qubit q in a big-endian basis index.
    let shift = |q: usize| n - 1 - q;
    let rest: Vec<usize> = (0..n).filter(|q| !qubits.contains(q)).collect();

    let mut out = CMatrix::zeros(dim, dim);
    for rest_bits in 0..(1usize << rest.len()) {
        let mut base = 0usize;
        for (i, &q) in rest.iter().enumerate() {
            if rest_bits >> (rest.len() - 1 - i) & 1 == 1 {
                base |= 1 << shift(q);
            }
        }
        for a in 0..sub_dim {
            let mut row = base;
            for (i, &q) in qubits.iter().enumerate() {
                if a >> (k - 1 - i) & 1 == 1 {
                    row |= 1 << shift(q);
                }
            }
            for b in 0..sub_dim {
                let v = op[(a, b)];
                if v == ZERO {
                    continue;
                }
                let mut col = base;
                for (i, &q) in qubits.iter().enumerate() {
                    if b >> (k - 1 - i) & 1 == 1 {
                        col |= 1 << shift(q);
                    }
                }
                out[(row, col)] = v;
            }
        }
    }
    Ok(out)
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues and a unitary
/// matrix of eigenvectors (columns), `H = V diag(w) V^dag`.
#[derive(Debug, Clone)]
pub struct EigH {
    pub eigenvalues: DVector<f64>,
    pub eigenvectors: CMatrix,
}

/// Hermitian eigendecomposition. The input is *assumed* Hermitian; callers
/// that accept external data should validate via [`HermitianOp`] first.
pub fn eigh(h: &CMatrix) -> EigH {
    let se = h.clone().symmetric_eigen();
    EigH {
        eigenvalues: se.eigenvalues,
        eigenvectors: se.eigenvectors,
    }
}

impl EigH {
    /// `exp(-i t H)` reassembled from the spectrum: `V exp(-i t w) V^dag`.
    pub fn expm_i(&self, t: f64) -> CMatrix {
        let n = self.eigenvalues.len();
        let mut scaled = self.eigenvectors.clone();
        for (j, mut col) in scaled.column_iter_mut().enumerate() {
            let phase = Complex64::from_polar(1.0, -self.eigenvalues[j] * t);
            for z in col.iter_mut() {
                *z *= phase;
            }
        }
        let mut out = CMatrix::zeros(n, n);
        scaled.mul_to(&self.eigenvectors.adjoint(), &mut out);
        out
    }

    /// Divided-difference kernel of `x -> exp(-i t x)` on the spectrum:
    /// `G_ab = (e^{-i w_a t} - e^{-i w_b t}) / (w_a - w_b)` off the diagonal,
    /// `G_aa = -i t e^{-i w_a t}`, with a first-order Taylor fallback when
    /// `|w_a - w_b| * t` is below [`DEGENERACY_THRESHOLD`].
    pub fn frechet_kernel(&self, t: f64) -> CMatrix {
        let n = self.eigenvalues.len();
        let phases: Vec<Complex64> = (0..n)
            .map(|a| Complex64::from_polar(1.0, -self.eigenvalues[a] * t))
            .collect();
        let mut gamma = CMatrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                let dl = self.eigenvalues[a] - self.eigenvalues[b];
                gamma[(a, b)] = if (dl * t).abs() < DEGENERACY_THRESHOLD {
                    Complex64::new(0.0, -t) * phases[a]
                } else {
                    (phases[a] - phases[b]) / Complex64::new(dl, 0.0)
                };
            }
        }
        gamma
    }

    /// Directional derivative of `u -> exp(-i t (H + u V))` at `u = 0`,
    /// assembled in the eigenbasis: `V_H (G o (V_H^dag V V_H)) V_H^dag`.
    pub fn dexpm_i(&self, v: &CMatrix, t: f64) -> CMatrix {
        let w = self.eigenvectors.adjoint() * v * &self.eigenvectors;
        let gamma = self.frechet_kernel(t);
        let inner = w.zip_map(&gamma, |x, g| x * g);
        &self.eigenvectors * inner * self.eigenvectors.adjoint()
    }
}

/// `exp(-i H t)` by Hermitian eigendecomposition; the result is unitary to
/// machine precision (validated at [`UNITARITY_TOL`]).
pub fn expm_i(h: &HermitianOp, t: f64) -> Result<Propagator> {
    let eig = eigh(h.matrix());
    Propagator::new(eig.expm_i(t), t)
}

/// Exact directional (Frechet) derivative `d/du exp(-i (H + u V) t) |_{u=0}`
/// via the spectral divided-difference formula.
pub fn dexpm_i(h: &HermitianOp, v: &HermitianOp, t: f64) -> Result<CMatrix> {
    if h.dim() != v.dim() {
        return Err(Error::DimensionMismatch(format!(
            "dexpm_i: H is {}x{} but V is {}x{}",
            h.dim(),
            h.dim(),
            v.dim(),
            v.dim()
        )));
    }
    Ok(eigh(h.matrix()).dexpm_i(v.matrix(), t))
}

/// Pauli matrices and friends, the 2x2 building blocks.
pub mod pauli {
    use super::{CMatrix, Complex64};

    pub fn sigma_x() -> CMatrix {
        CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
    }

    pub fn sigma_y() -> CMatrix {
        CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, 0.0),
            ],
        )
    }

    pub fn sigma_z() -> CMatrix {
        CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(-1.0, 0.0),
            ],
        )
    }

    pub fn hadamard() -> CMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(s, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(-s, 0.0),
            ],
        )
    }
}

/// Complex scalar `e^{i phi}`.
pub fn phase(phi: f64) -> Complex64 {
    Complex64::from_polar(1.0, phi)
}

/// Scale a matrix by `e^{i phi}`.
pub fn scale_by_phase(m: &CMatrix, phi: f64) -> CMatrix {
    m.map(|z| z * phase(phi))
}

/// Random Hermitian matrix with entries of order one (test support).
#[cfg(test)]
pub(crate) fn random_hermitian(rng: &mut impl rand::Rng, n: usize) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in (i + 1)..n {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}
