//! Target unitaries, their admissible global-phase families, and literature
//! baseline times for standard-gate decompositions.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, pauli, CMatrix};

/// Unitarity tolerance for target gates.
pub const TARGET_UNITARITY_TOL: f64 = 1e-12;

/// How the optimizer should treat the global phase of a target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseMode {
    /// Chase the special-unitary representative `e^{i phi} U_G`.
    Fixed(f64),
    /// Phase-blind: any `e^{i phi} U_G` is as good as `U_G`.
    Projective,
}

/// An N x N unitary target with a name that parses back via
/// [`TargetGate::parse`].
#[derive(Debug, Clone)]
pub struct TargetGate {
    name: String,
    n: usize,
    matrix: CMatrix,
    phase_mode: PhaseMode,
}

impl TargetGate {
    /// Wrap a unitary matrix as an optimization target. Fails if the matrix
    /// is not unitary within [`TARGET_UNITARITY_TOL`] or not `2^n`-dimensional.
    pub fn new(name: impl Into<String>, n: usize, matrix: CMatrix) -> Result<Self> {
        let dim = 1usize << n;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "gate on {n} qubits must be {dim}x{dim}, got {:?}",
                matrix.shape()
            )));
        }
        let dev = linalg::unitarity_deviation(&matrix);
        if dev > TARGET_UNITARITY_TOL {
            return Err(Error::NotUnitary {
                deviation: dev,
                tolerance: TARGET_UNITARITY_TOL,
            });
        }
        Ok(Self {
            name: name.into(),
            n,
            matrix,
            phase_mode: PhaseMode::Projective,
        })
    }

    pub fn with_phase_mode(mut self, mode: PhaseMode) -> Self {
        self.phase_mode = mode;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn phase_mode(&self) -> PhaseMode {
        self.phase_mode
    }

    /// Parse a gate specification as used by the CLI and result files:
    /// `qft`, `cnnot`, `swap:L,M`, `hadamard:L`, `cphase:THETA:L,M`,
    /// `cnot:L,M`, `zzz:JT`.
    pub fn parse(spec: &str, n: usize) -> Result<Self> {
        let bad = |msg: String| Error::InvalidConfig(msg);
        let parse_pair = |s: &str| -> Result<(usize, usize)> {
            let (a, b) = s
                .split_once(',')
                .ok_or_else(|| bad(format!("expected 'L,M' qubit pair, got '{s}'")))?;
            let l = a
                .trim()
                .parse::<usize>()
                .map_err(|e| bad(format!("bad qubit index '{a}': {e}")))?;
            let m = b
                .trim()
                .parse::<usize>()
                .map_err(|e| bad(format!("bad qubit index '{b}': {e}")))?;
            Ok((l, m))
        };
        match spec.split(':').collect::<Vec<_>>().as_slice() {
            ["qft"] => qft(n),
            ["cnnot"] | ["cn_not"] => cn_not(n),
            ["toffoli"] => {
                if n != 3 {
                    return Err(bad(format!("toffoli requires n = 3, got n = {n}")));
                }
                cn_not(3)
            }
            ["swap", pair] => {
                let (l, m) = parse_pair(pair)?;
                swap(l, m, n)
            }
            ["hadamard", q] => {
                let q = q
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| bad(format!("bad qubit index '{q}': {e}")))?;
                hadamard(q, n)
            }
            ["cphase", theta, pair] => {
                let t = theta
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| bad(format!("bad angle '{theta}': {e}")))?;
                let (l, m) = parse_pair(pair)?;
                controlled_phase(t, l, m, n)
            }
            ["cnot", pair] => {
                let (l, m) = parse_pair(pair)?;
                cnot(l, m, n)
            }
            ["zzz", jt] => {
                if n != 3 {
                    return Err(bad(format!("zzz requires n = 3, got n = {n}")));
                }
                let jt = jt
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| bad(format!("bad J*t value '{jt}': {e}")))?;
                trilinear_zzz(jt, 1.0)
            }
            _ => Err(bad(format!(
                "unknown gate spec '{spec}' (expected qft | cnnot | toffoli | swap:L,M | hadamard:L | cphase:THETA:L,M | cnot:L,M | zzz:JT)"
            ))),
        }
    }
}

/// Quantum Fourier transform on `n` qubits: the DFT matrix with kernel
/// `e^{-2 pi i jk / N} / sqrt(N)` over computational-basis indices, with no
/// output bit-reversal.
pub fn qft(n: usize) -> Result<TargetGate> {
    if n == 0 {
        return Err(Error::InvalidConfig("qft requires n >= 1".into()));
    }
    let dim = 1usize << n;
    let norm = 1.0 / (dim as f64).sqrt();
    let mut m = CMatrix::zeros(dim, dim);
    for j in 0..dim {
        for k in 0..dim {
            let angle = -2.0 * PI * ((j * k) % dim) as f64 / dim as f64;
            m[(j, k)] = Complex64::from_polar(norm, angle);
        }
    }
    TargetGate::new("qft", n, m)
}

/// `C^{n-1}NOT`: NOT on qubit `n-1` conditioned on qubits `0..n-2` all being
/// one. CNOT for n = 2, Toffoli for n = 3.
pub fn cn_not(n: usize) -> Result<TargetGate> {
    if n < 2 {
        return Err(Error::InvalidConfig(format!(
            "cnnot requires n >= 2, got n = {n}"
        )));
    }
    let dim = 1usize << n;
    let mut m = CMatrix::identity(dim, dim);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    m[(dim - 2, dim - 2)] = zero;
    m[(dim - 1, dim - 1)] = zero;
    m[(dim - 2, dim - 1)] = one;
    m[(dim - 1, dim - 2)] = one;
    TargetGate::new("cnnot", n, m)
}

/// SWAP of qubits `l` and `m` embedded in `n` qubits.
pub fn swap(l: usize, m: usize, n: usize) -> Result<TargetGate> {
    let mut p = CMatrix::identity(4, 4);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    p[(1, 1)] = zero;
    p[(2, 2)] = zero;
    p[(1, 2)] = one;
    p[(2, 1)] = one;
    let full = linalg::embed(&p, &[l, m], n)?;
    TargetGate::new(format!("swap:{l},{m}"), n, full)
}

/// Hadamard on qubit `l` embedded in `n` qubits.
pub fn hadamard(l: usize, n: usize) -> Result<TargetGate> {
    let full = linalg::embed(&pauli::hadamard(), &[l], n)?;
    TargetGate::new(format!("hadamard:{l}"), n, full)
}

/// Controlled phase `diag(1, 1, 1, e^{i theta})` with control `l`, target `m`.
pub fn controlled_phase(theta: f64, l: usize, m: usize, n: usize) -> Result<TargetGate> {
    let mut p = CMatrix::identity(4, 4);
    p[(3, 3)] = Complex64::from_polar(1.0, theta);
    let full = linalg::embed(&p, &[l, m], n)?;
    TargetGate::new(format!("cphase:{theta}:{l},{m}"), n, full)
}

/// CNOT with control `l` and target `m` embedded in `n` qubits.
pub fn cnot(l: usize, m: usize, n: usize) -> Result<TargetGate> {
    let mut p = CMatrix::identity(4, 4);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    p[(2, 2)] = zero;
    p[(3, 3)] = zero;
    p[(2, 3)] = one;
    p[(3, 2)] = one;
    let full = linalg::embed(&p, &[l, m], n)?;
    TargetGate::new(format!("cnot:{l},{m}"), n, full)
}

/// Trilinear coupling propagator `exp(-i pi J t (1/2) sz (x) sz (x) sz)`
/// on three qubits; diagonal with phases set by the parity of each basis
/// state.
pub fn trilinear_zzz(t: f64, j: f64) -> Result<TargetGate> {
    let mut m = CMatrix::zeros(8, 8);
    for b in 0..8usize {
        let parity = 1.0 - 2.0 * (b.count_ones() % 2) as f64;
        m[(b, b)] = Complex64::from_polar(1.0, -PI * j * t * 0.5 * parity);
    }
    TargetGate::new(format!("zzz:{}", j * t), 3, m)
}

/// The N global phases by which a special-unitary realization of a target
/// may differ from it: `phi_p = phi_0 + 2 pi p / N`.
#[derive(Debug, Clone)]
pub struct PhaseFamily {
    /// Smallest angle in `[0, pi]` with `det(e^{i phi_0} U_G) = +1`.
    pub phi0: f64,
    /// All N admissible phases, `phi_0 + 2 pi p / N` for `p = 0..N-1`.
    pub phases: Vec<f64>,
}

/// Compute the admissible global-phase family of a target from the argument
/// of its determinant.
pub fn phase_family(gate: &TargetGate) -> PhaseFamily {
    let dim = gate.dim() as f64;
    let det = gate.matrix().determinant();
    // det(e^{i phi} U) = e^{i N phi} det(U) = 1 at phi = (-arg det + 2 pi p)/N.
    let phi0 = (-det.arg()).rem_euclid(2.0 * PI) / dim;
    let phases = (0..gate.dim())
        .map(|p| phi0 + 2.0 * PI * p as f64 / dim)
        .collect();
    PhaseFamily { phi0, phases }
}

/// Gate families with published baseline decomposition times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateFamily {
    Qft,
    CnNot,
}

impl GateFamily {
    pub fn name(&self) -> &'static str {
        match self {
            GateFamily::Qft => "qft",
            GateFamily::CnNot => "cnnot",
        }
    }
}

impl std::fmt::Display for GateFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Provenance of a baseline time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaselineSource {
    /// Standard-gate QFT decomposition on chains (Saito et al.).
    SaitoLn,
    /// Optimised scalable QFT gate decomposition on chains (Blais).
    BlaisLn,
    /// Non-scalable special 5-qubit QFT decomposition (Blais).
    BlaisSpecial5,
    /// Standard C^{n-1}NOT decomposition on complete graphs (Barenco et al.).
    BarencoKn,
    /// Closed-form QFT time on complete graphs, tau(n) = (n+3)/4.
    FormulaKn,
}

impl BaselineSource {
    pub fn name(&self) -> &'static str {
        match self {
            BaselineSource::SaitoLn => "saito_Ln",
            BaselineSource::BlaisLn => "blais_Ln",
            BaselineSource::BlaisSpecial5 => "blais_special5",
            BaselineSource::BarencoKn => "barenco_Kn",
            BaselineSource::FormulaKn => "formula_Kn",
        }
    }

    pub fn all() -> [BaselineSource; 5] {
        [
            BaselineSource::SaitoLn,
            BaselineSource::BlaisLn,
            BaselineSource::BlaisSpecial5,
            BaselineSource::BarencoKn,
            BaselineSource::FormulaKn,
        ]
    }
}

impl std::fmt::Display for BaselineSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

const SAITO_LN: [(usize, f64); 5] = [(2, 1.75), (3, 8.13), (4, 17.56), (5, 30.03), (6, 45.52)];
const BLAIS_LN: [(usize, f64); 5] = [(2, 1.75), (3, 5.13), (4, 8.50), (5, 11.88), (6, 15.25)];
const BLAIS_SPECIAL5: [(usize, f64); 1] = [(5, 8.81)];
const BARENCO_KN: [(usize, f64); 5] = [(2, 0.5), (3, 3.0), (4, 7.0), (5, 15.0), (6, 31.0)];

/// Literature time (in 1/J) for implementing `family` on `n` qubits by the
/// decomposition tagged `source`. Values are stored verbatim; a missing key
/// is an error, never an extrapolation.
pub fn baseline_time(family: GateFamily, source: BaselineSource, n: usize) -> Result<f64> {
    let missing = || Error::NoBaseline {
        family: family.name().into(),
        source_tag: source.name().into(),
        n,
    };
    let lookup = |table: &[(usize, f64)]| {
        table
            .iter()
            .find(|&&(k, _)| k == n)
            .map(|&(_, v)| v)
            .ok_or_else(missing)
    };
    match (family, source) {
        (GateFamily::Qft, BaselineSource::SaitoLn) => lookup(&SAITO_LN),
        (GateFamily::Qft, BaselineSource::BlaisLn) => lookup(&BLAIS_LN),
        (GateFamily::Qft, BaselineSource::BlaisSpecial5) => lookup(&BLAIS_SPECIAL5),
        (GateFamily::Qft, BaselineSource::FormulaKn) => {
            if n >= 2 {
                Ok((n as f64 + 3.0) / 4.0)
            } else {
                Err(missing())
            }
        }
        (GateFamily::CnNot, BaselineSource::BarencoKn) => lookup(&BARENCO_KN),
        _ => Err(missing()),
    }
}

/// Baseline sources applicable to a (family, topology) pair.
pub fn baseline_sources(family: GateFamily, topology: crate::spin::TopologyKind) -> Vec<BaselineSource> {
    use crate::spin::TopologyKind;
    match (family, topology) {
        (GateFamily::Qft, TopologyKind::Chain) => vec![
            BaselineSource::SaitoLn,
            BaselineSource::BlaisLn,
            BaselineSource::BlaisSpecial5,
        ],
        (GateFamily::Qft, TopologyKind::Complete) => vec![BaselineSource::FormulaKn],
        (GateFamily::CnNot, TopologyKind::Complete) => vec![BaselineSource::BarencoKn],
        _ => vec![],
    }
}

/// Speed-up of an achieved minimal time over a baseline, rounded to two
/// decimals as reported.
pub fn speedup(baseline: f64, tau: f64) -> f64 {
    (baseline / tau * 100.0).round() / 100.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{identity, kron, max_abs_diff, scale_by_phase};
    use crate::spin::TopologyKind;
    use nalgebra::DVector;

    #[test]
    fn qft_single_qubit_is_hadamard() {
        let g = qft(1).unwrap();
        assert!(max_abs_diff(g.matrix(), &pauli::hadamard()) < 1e-15);
    }

    #[test]
    fn qft_maps_ground_state_to_uniform_superposition() {
        for n in 1..=4usize {
            let g = qft(n).unwrap();
            let dim = 1 << n;
            let amp = 1.0 / (dim as f64).sqrt();
            for j in 0..dim {
                assert!((g.matrix()[(j, 0)] - Complex64::new(amp, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn qft_squared_reverses_basis() {
        // F^2 |j> = |-j mod N>.
        let g = qft(2).unwrap();
        let sq = g.matrix() * g.matrix();
        for j in 0..4usize {
            let mut e = DVector::<Complex64>::zeros(4);
            e[j] = Complex64::new(1.0, 0.0);
            let out = &sq * e;
            let want = (4 - j) % 4;
            for i in 0..4 {
                let expect = if i == want { 1.0 } else { 0.0 };
                assert!((out[i].norm() - expect).abs() < 1e-12, "j={j} i={i}");
            }
        }
    }

    #[test]
    fn cn_not_small_cases() {
        let cnot2 = cn_not(2).unwrap();
        let direct = cnot(0, 1, 2).unwrap();
        assert!(max_abs_diff(cnot2.matrix(), direct.matrix()) < 1e-15);
        let toffoli = cn_not(3).unwrap();
        // Toffoli swaps |110> and |111>, identity elsewhere.
        for b in 0..6usize {
            assert!((toffoli.matrix()[(b, b)] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
        assert!((toffoli.matrix()[(6, 7)] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((toffoli.matrix()[(7, 6)] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(cn_not(1).is_err());
    }

    #[test]
    fn cn_not_is_involutory() {
        for n in 2..=4usize {
            let g = cn_not(n).unwrap();
            let sq = g.matrix() * g.matrix();
            assert!(max_abs_diff(&sq, &identity(1 << n)) < 1e-14);
        }
    }

    #[test]
    fn swap_permutes_middle_states() {
        let g = swap(0, 1, 2).unwrap();
        let m = g.matrix();
        assert!((m[(1, 2)] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((m[(2, 1)] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(m[(1, 1)].norm() < 1e-15);
    }

    #[test]
    fn controlled_phase_pi_is_cz() {
        let g = controlled_phase(PI, 0, 1, 2).unwrap();
        let want = CMatrix::from_diagonal(&DVector::from_vec(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ]));
        assert!(max_abs_diff(g.matrix(), &want) < 1e-12);
    }

    #[test]
    fn cnot_from_hadamard_cz_conjugation() {
        // CNOT(0,1) = (1 (x) H) CZ (1 (x) H).
        let h1 = kron(&identity(2), &pauli::hadamard());
        let cz = controlled_phase(PI, 0, 1, 2).unwrap();
        let want = &h1 * cz.matrix() * &h1;
        let got = cnot(0, 1, 2).unwrap();
        assert!(max_abs_diff(got.matrix(), &want) < 1e-12);
    }

    #[test]
    fn trilinear_zzz_zero_time_is_identity() {
        let g = trilinear_zzz(0.0, 1.0).unwrap();
        assert!(max_abs_diff(g.matrix(), &identity(8)) < 1e-15);
    }

    #[test]
    fn trilinear_zzz_parity_phases() {
        let t = 0.37;
        let g = trilinear_zzz(t, 1.0).unwrap();
        for b in 0..8usize {
            let parity = 1.0 - 2.0 * (b.count_ones() % 2) as f64;
            let want = Complex64::from_polar(1.0, -PI * t * 0.5 * parity);
            assert!((g.matrix()[(b, b)] - want).norm() < 1e-14);
        }
    }

    #[test]
    fn all_targets_pass_unitarity() {
        // TargetGate::new enforces 1e-12; constructing is the check.
        qft(4).unwrap();
        cn_not(4).unwrap();
        swap(1, 3, 4).unwrap();
        hadamard(2, 3).unwrap();
        controlled_phase(0.3, 0, 2, 3).unwrap();
        cnot(2, 0, 3).unwrap();
        trilinear_zzz(0.8, 1.5).unwrap();
    }

    #[test]
    fn phase_family_identity_gate() {
        let g = TargetGate::new("id", 2, identity(4)).unwrap();
        let fam = phase_family(&g);
        assert!(fam.phi0.abs() < 1e-12);
        assert_eq!(fam.phases.len(), 4);
    }

    #[test]
    fn phase_family_qft3_smallest_angle() {
        let g = qft(3).unwrap();
        let fam = phase_family(&g);
        assert!(
            (fam.phi0 - PI / 16.0).abs() < 1e-10,
            "phi0 = {} != pi/16",
            fam.phi0
        );
    }

    #[test]
    fn phase_family_cnot_quarter_turn() {
        // det(CNOT) = -1, so e^{i 4 phi} (-1) = 1 at phi = pi/4.
        let g = cn_not(2).unwrap();
        let fam = phase_family(&g);
        assert!((fam.phi0 - PI / 4.0).abs() < 1e-12);
    }

    #[test]
    fn phase_family_members_give_unit_determinant() {
        for gate in [qft(3).unwrap(), cn_not(3).unwrap(), swap(0, 2, 3).unwrap()] {
            let fam = phase_family(&gate);
            assert_eq!(fam.phases.len(), gate.dim());
            for &phi in &fam.phases {
                let shifted = scale_by_phase(gate.matrix(), phi);
                let det = shifted.determinant();
                assert!(
                    (det - Complex64::new(1.0, 0.0)).norm() < 1e-10,
                    "gate {} phi {phi}",
                    gate.name()
                );
            }
        }
    }

    #[test]
    fn phase_family_shifts_with_target_phase() {
        // Multiplying U_G by e^{i theta} shifts the family by -theta mod 2pi/N.
        let g = qft(2).unwrap();
        let fam = phase_family(&g);
        let theta = 0.4;
        let shifted = TargetGate::new("q", 2, scale_by_phase(g.matrix(), theta)).unwrap();
        let fam2 = phase_family(&shifted);
        let step = 2.0 * PI / 4.0;
        let expected = (fam.phi0 - theta).rem_euclid(step);
        assert!((fam2.phi0 - expected).abs() < 1e-10);
    }

    #[test]
    fn coupling_phase_identity() {
        // exp(-i pi/2 sz(x)sz) equals e^{i pi/2} exp(-i pi/2 (sz(x)1 + 1(x)sz)).
        let zz = kron(&pauli::sigma_z(), &pauli::sigma_z());
        let lhs = crate::linalg::eigh(&zz).expm_i(PI / 2.0);
        let local = kron(&pauli::sigma_z(), &identity(2)) + kron(&identity(2), &pauli::sigma_z());
        let rhs = scale_by_phase(&crate::linalg::eigh(&local).expm_i(PI / 2.0), PI / 2.0);
        assert!(max_abs_diff(&lhs, &rhs) < 1e-12);
    }

    #[test]
    fn baseline_qft_formula_and_tables() {
        assert_eq!(
            baseline_time(GateFamily::Qft, BaselineSource::FormulaKn, 5).unwrap(),
            2.0
        );
        assert_eq!(
            baseline_time(GateFamily::Qft, BaselineSource::SaitoLn, 6).unwrap(),
            45.52
        );
        assert_eq!(
            baseline_time(GateFamily::CnNot, BaselineSource::BarencoKn, 6).unwrap(),
            31.0
        );
        assert_eq!(
            baseline_time(GateFamily::Qft, BaselineSource::BlaisSpecial5, 5).unwrap(),
            8.81
        );
    }

    #[test]
    fn baseline_missing_keys_error() {
        assert!(baseline_time(GateFamily::Qft, BaselineSource::SaitoLn, 7).is_err());
        assert!(baseline_time(GateFamily::CnNot, BaselineSource::SaitoLn, 3).is_err());
        assert!(baseline_time(GateFamily::Qft, BaselineSource::BarencoKn, 3).is_err());
        assert!(baseline_time(GateFamily::Qft, BaselineSource::FormulaKn, 1).is_err());
    }

    #[test]
    fn speedup_rounding() {
        assert_eq!(speedup(45.52, 5.43), 8.38);
        assert_eq!(speedup(15.0, 3.37), 4.45);
        assert_eq!(speedup(1.0, 1.0), 1.00);
    }

    #[test]
    fn baseline_sources_per_topology() {
        assert_eq!(
            baseline_sources(GateFamily::Qft, TopologyKind::Chain).len(),
            3
        );
        assert_eq!(
            baseline_sources(GateFamily::Qft, TopologyKind::Complete),
            vec![BaselineSource::FormulaKn]
        );
        assert_eq!(
            baseline_sources(GateFamily::CnNot, TopologyKind::Complete),
            vec![BaselineSource::BarencoKn]
        );
        assert!(baseline_sources(GateFamily::CnNot, TopologyKind::Chain).is_empty());
    }

    #[test]
    fn parse_round_trips() {
        for (spec, n) in [
            ("qft", 3),
            ("cnnot", 3),
            ("swap:0,2", 3),
            ("hadamard:1", 2),
            ("cphase:1.5707963267948966:0,1", 2),
            ("cnot:1,0", 2),
            ("zzz:0.5", 3),
        ] {
            let g = TargetGate::parse(spec, n).unwrap();
            let again = TargetGate::parse(g.name(), n).unwrap();
            assert!(max_abs_diff(g.matrix(), again.matrix()) < 1e-15, "{spec}");
        }
        assert!(TargetGate::parse("nope", 2).is_err());
        assert!(TargetGate::parse("toffoli", 2).is_err());
    }
}
