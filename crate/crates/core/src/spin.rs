//! Coupling topologies and the physical Hamiltonians: weak-coupling Ising
//! drift and per-qubit x/y local control operators.
//!
//! Couplings are dimensionless multiples of a reference coupling `J_ref`;
//! all times in the crate are in units of `1/J_ref`. A uniform graph with
//! `J = 1` reproduces the usual "times in 1/J" convention.

use std::collections::VecDeque;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, pauli, CMatrix, HermitianOp};

/// Built-in coupling topologies plus free-form graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyKind {
    /// Nearest-neighbour chain `L_n`: edges (l, l+1).
    Chain,
    /// Complete graph `K_n`: all pairs coupled.
    Complete,
    /// Chain closed into a ring: chain plus (n-1, 0).
    Cycle,
    /// Qubit 0 coupled to every other qubit.
    Star,
    /// Explicit edge list.
    Custom,
}

impl TopologyKind {
    pub fn name(&self) -> &'static str {
        match self {
            TopologyKind::Chain => "chain",
            TopologyKind::Complete => "complete",
            TopologyKind::Cycle => "cycle",
            TopologyKind::Star => "star",
            TopologyKind::Custom => "custom",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "chain" => Ok(TopologyKind::Chain),
            "complete" => Ok(TopologyKind::Complete),
            "cycle" => Ok(TopologyKind::Cycle),
            "star" => Ok(TopologyKind::Star),
            "custom" => Ok(TopologyKind::Custom),
            other => Err(Error::InvalidConfig(format!(
                "unknown topology kind '{other}' (expected chain|complete|cycle|star|custom)"
            ))),
        }
    }
}

impl std::fmt::Display for TopologyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Coupling strengths for a built-in topology: one value for every edge or
/// one value per edge in the kind's canonical edge order.
#[derive(Debug, Clone)]
pub enum CouplingSpec {
    Uniform(f64),
    PerEdge(Vec<f64>),
}

/// Weighted undirected graph of qubit couplings `J_lm`, guaranteed connected,
/// with edges normalized to `l < m`.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingGraph {
    kind: TopologyKind,
    n: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl CouplingGraph {
    /// Build one of the named topologies on `n` qubits.
    pub fn build(kind: TopologyKind, n: usize, coupling: &CouplingSpec) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("need at least one qubit".into()));
        }
        let pairs: Vec<(usize, usize)> = match kind {
            TopologyKind::Chain => (0..n.saturating_sub(1)).map(|l| (l, l + 1)).collect(),
            TopologyKind::Complete => (0..n)
                .flat_map(|l| ((l + 1)..n).map(move |m| (l, m)))
                .collect(),
            TopologyKind::Cycle => {
                if n < 3 {
                    return Err(Error::InvalidGraph(format!(
                        "cycle requires n >= 3, got n = {n}"
                    )));
                }
                let mut p: Vec<_> = (0..n - 1).map(|l| (l, l + 1)).collect();
                p.push((0, n - 1));
                p
            }
            TopologyKind::Star => (1..n).map(|m| (0, m)).collect(),
            TopologyKind::Custom => {
                return Err(Error::InvalidGraph(
                    "custom topology requires an explicit edge list; use CouplingGraph::custom"
                        .into(),
                ))
            }
        };
        let edges: Vec<(usize, usize, f64)> = match coupling {
            CouplingSpec::Uniform(j) => pairs.iter().map(|&(l, m)| (l, m, *j)).collect(),
            CouplingSpec::PerEdge(js) => {
                if js.len() != pairs.len() {
                    return Err(Error::InvalidGraph(format!(
                        "{} edges but {} coupling values",
                        pairs.len(),
                        js.len()
                    )));
                }
                pairs
                    .iter()
                    .zip(js.iter())
                    .map(|(&(l, m), &j)| (l, m, j))
                    .collect()
            }
        };
        Self::validated(kind, n, edges)
    }

    /// Build from an explicit edge list; the graph must be connected.
    pub fn custom(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        Self::validated(TopologyKind::Custom, n, edges.to_vec())
    }

    fn validated(kind: TopologyKind, n: usize, raw: Vec<(usize, usize, f64)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("need at least one qubit".into()));
        }
        let mut edges = Vec::with_capacity(raw.len());
        for (l, m, j) in raw {
            if l >= n || m >= n {
                return Err(Error::QubitIndexOutOfRange { index: l.max(m), n });
            }
            if l == m {
                return Err(Error::InvalidGraph(format!("self-loop on qubit {l}")));
            }
            if j == 0.0 || !j.is_finite() {
                return Err(Error::InvalidGraph(format!(
                    "coupling J_{{{l},{m}}} = {j} must be finite and nonzero"
                )));
            }
            let (l, m) = if l < m { (l, m) } else { (m, l) };
            if edges.iter().any(|&(a, b, _)| (a, b) == (l, m)) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({l}, {m})")));
            }
            edges.push((l, m, j));
        }
        let graph = Self { kind, n, edges };
        if let Some(orphan) = graph.first_unreachable() {
            return Err(Error::DisconnectedGraph(orphan));
        }
        Ok(graph)
    }

    fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &(l, m, _) in &self.edges {
                let other = if l == v {
                    m
                } else if m == v {
                    l
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    queue.push_back(other);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub fn kind(&self) -> TopologyKind {
        self.kind
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    /// Hilbert-space dimension `N = 2^n`.
    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    /// True when all couplings share one value.
    pub fn is_uniform(&self) -> bool {
        match self.edges.first() {
            None => true,
            Some(&(_, _, j0)) => self.edges.iter().all(|&(_, _, j)| j == j0),
        }
    }
}

/// Weak-coupling Ising drift `H_d = pi sum_{l<m} J_lm (1/2) sigma_lz sigma_mz`,
/// diagonal in the computational basis.
pub fn drift_hamiltonian(graph: &CouplingGraph) -> HermitianOp {
    let n = graph.n_qubits();
    let dim = graph.dim();
    let mut h = CMatrix::zeros(dim, dim);
    for b in 0..dim {
        let mut e = 0.0;
        for &(l, m, j) in graph.edges() {
            // sigma_z eigenvalue of qubit q in basis state b (big-endian).
            let zl = 1.0 - 2.0 * ((b >> (n - 1 - l)) & 1) as f64;
            let zm = 1.0 - 2.0 * ((b >> (n - 1 - m)) & 1) as f64;
            e += PI * j * 0.5 * zl * zm;
        }
        h[(b, b)] = Complex64::new(e, 0.0);
    }
    HermitianOp::new(h).expect("diagonal real matrix is Hermitian")
}

/// Which local control axis an operator drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ControlAxis {
    X,
    Y,
}

impl ControlAxis {
    pub fn name(&self) -> &'static str {
        match self {
            ControlAxis::X => "x",
            ControlAxis::Y => "y",
        }
    }
}

/// One local control operator `(1/2) sigma_{l,axis}` embedded in the full space.
#[derive(Debug, Clone)]
pub struct ControlOp {
    pub qubit: usize,
    pub axis: ControlAxis,
    op: HermitianOp,
}

impl ControlOp {
    pub fn operator(&self) -> &HermitianOp {
        &self.op
    }

    pub fn matrix(&self) -> &CMatrix {
        self.op.matrix()
    }

    /// Nonzero entries `(row, col, value)`; control operators have exactly
    /// `N` of them, which the optimizer exploits.
    pub fn sparse_entries(&self) -> Vec<(usize, usize, Complex64)> {
        let m = self.op.matrix();
        let mut out = Vec::new();
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                if m[(r, c)] != Complex64::new(0.0, 0.0) {
                    out.push((r, c, m[(r, c)]));
                }
            }
        }
        out
    }
}

/// The 2n local control operators `(1/2) sigma_lx, (1/2) sigma_ly`, ordered
/// `(q0x, q0y, q1x, q1y, ...)`.
pub fn control_hamiltonians(n: usize) -> Result<Vec<ControlOp>> {
    if n == 0 {
        return Err(Error::InvalidGraph("need at least one qubit".into()));
    }
    let half = Complex64::new(0.5, 0.0);
    let mut out = Vec::with_capacity(2 * n);
    for q in 0..n {
        for axis in [ControlAxis::X, ControlAxis::Y] {
            let base = match axis {
                ControlAxis::X => pauli::sigma_x(),
                ControlAxis::Y => pauli::sigma_y(),
            };
            let embedded = linalg::embed(&base.map(|z| z * half), &[q], n)?;
            out.push(ControlOp {
                qubit: q,
                axis,
                op: HermitianOp::new(embedded)?,
            });
        }
    }
    Ok(out)
}

/// Default control-amplitude bound, `50 * 2 pi J_ref`: large enough that
/// local rotations cost negligible time next to coupling evolution (the
/// fast-local-controls limit), finite so the optimizer stays bounded.
pub const DEFAULT_AMPLITUDE_BOUND: f64 = 50.0 * 2.0 * PI;

/// A qubit network ready for optimal control: coupling graph, Ising drift,
/// local controls, and the control-amplitude box bound.
#[derive(Debug, Clone)]
pub struct SpinSystem {
    graph: CouplingGraph,
    drift: HermitianOp,
    controls: Vec<ControlOp>,
    amplitude_bound: f64,
}

impl SpinSystem {
    pub fn new(graph: CouplingGraph) -> Result<Self> {
        Self::with_amplitude_bound(graph, DEFAULT_AMPLITUDE_BOUND)
    }

    pub fn with_amplitude_bound(graph: CouplingGraph, amplitude_bound: f64) -> Result<Self> {
        if !(amplitude_bound > 0.0) || !amplitude_bound.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "amplitude bound must be positive and finite, got {amplitude_bound}"
            )));
        }
        let drift = drift_hamiltonian(&graph);
        let controls = control_hamiltonians(graph.n_qubits())?;
        Ok(Self {
            graph,
            drift,
            controls,
            amplitude_bound,
        })
    }

    pub fn graph(&self) -> &CouplingGraph {
        &self.graph
    }

    pub fn n_qubits(&self) -> usize {
        self.graph.n_qubits()
    }

    pub fn dim(&self) -> usize {
        self.graph.dim()
    }

    pub fn drift(&self) -> &HermitianOp {
        &self.drift
    }

    pub fn controls(&self) -> &[ControlOp] {
        &self.controls
    }

    pub fn n_controls(&self) -> usize {
        self.controls.len()
    }

    pub fn amplitude_bound(&self) -> f64 {
        self.amplitude_bound
    }

    /// Assemble the slice Hamiltonian `H = H_d + sum_j u_j H_j`.
    ///
    /// Control operators are N-sparse, so this is O(n N) on top of copying
    /// the drift.
    pub fn hamiltonian(&self, amplitudes: &[f64]) -> Result<CMatrix> {
        if amplitudes.len() != self.controls.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} amplitudes for {} controls",
                amplitudes.len(),
                self.controls.len()
            )));
        }
        let mut h = self.drift.matrix().clone();
        for (u, ctrl) in amplitudes.iter().zip(self.controls.iter()) {
            if *u == 0.0 {
                continue;
            }
            let m = ctrl.matrix();
            for r in 0..m.nrows() {
                for c in 0..m.ncols() {
                    let v = m[(r, c)];
                    if v != Complex64::new(0.0, 0.0) {
                        h[(r, c)] += v * Complex64::new(*u, 0.0);
                    }
                }
            }
        }
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{identity, kron, max_abs_diff};

    #[test]
    fn chain_topology_edges() {
        let g = CouplingGraph::build(TopologyKind::Chain, 4, &CouplingSpec::Uniform(1.0)).unwrap();
        let pairs: Vec<(usize, usize)> = g.edges().iter().map(|&(l, m, _)| (l, m)).collect();
        assert_eq!(pairs, vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn complete_topology_edge_count() {
        let g =
            CouplingGraph::build(TopologyKind::Complete, 4, &CouplingSpec::Uniform(1.0)).unwrap();
        assert_eq!(g.edges().len(), 6);
    }

    #[test]
    fn star_and_cycle_topologies() {
        let s = CouplingGraph::build(TopologyKind::Star, 4, &CouplingSpec::Uniform(1.0)).unwrap();
        assert!(s.edges().iter().all(|&(l, _, _)| l == 0));
        assert_eq!(s.edges().len(), 3);
        let c = CouplingGraph::build(TopologyKind::Cycle, 4, &CouplingSpec::Uniform(1.0)).unwrap();
        assert_eq!(c.edges().len(), 4);
        assert!(CouplingGraph::build(TopologyKind::Cycle, 2, &CouplingSpec::Uniform(1.0)).is_err());
    }

    #[test]
    fn custom_disconnected_rejected() {
        let err = CouplingGraph::custom(3, &[(0, 1, 1.0)]).unwrap_err();
        assert!(matches!(err, Error::DisconnectedGraph(2)));
    }

    #[test]
    fn duplicate_and_self_loop_rejected() {
        assert!(CouplingGraph::custom(2, &[(0, 1, 1.0), (1, 0, 2.0)]).is_err());
        assert!(CouplingGraph::custom(2, &[(0, 0, 1.0)]).is_err());
        assert!(CouplingGraph::custom(2, &[(0, 1, 0.0)]).is_err());
    }

    #[test]
    fn drift_l2_matches_hand_construction() {
        let g = CouplingGraph::build(TopologyKind::Chain, 2, &CouplingSpec::Uniform(1.0)).unwrap();
        let h = drift_hamiltonian(&g);
        let want = [0.5, -0.5, -0.5, 0.5].map(|x| x * PI);
        for (i, w) in want.iter().enumerate() {
            assert!((h.matrix()[(i, i)].re - w).abs() < 1e-15);
        }
    }

    #[test]
    fn drift_k3_diagonal_entries() {
        // Three pairwise ZZ terms: 3*pi/2 on |000> and |111>, -pi/2 elsewhere.
        let g =
            CouplingGraph::build(TopologyKind::Complete, 3, &CouplingSpec::Uniform(1.0)).unwrap();
        let h = drift_hamiltonian(&g);
        for b in 0..8usize {
            let want = if b == 0 || b == 7 {
                1.5 * PI
            } else {
                -0.5 * PI
            };
            assert!(
                (h.matrix()[(b, b)].re - want).abs() < 1e-14,
                "basis state {b}"
            );
        }
    }

    #[test]
    fn drift_single_qubit_is_zero() {
        let g = CouplingGraph::build(TopologyKind::Chain, 1, &CouplingSpec::Uniform(1.0)).unwrap();
        let h = drift_hamiltonian(&g);
        assert!(crate::linalg::max_abs(h.matrix()) == 0.0);
    }

    #[test]
    fn drift_is_diagonal_and_traceless() {
        for kind in [TopologyKind::Chain, TopologyKind::Complete, TopologyKind::Star] {
            let g = CouplingGraph::build(kind, 4, &CouplingSpec::Uniform(0.7)).unwrap();
            let h = drift_hamiltonian(&g);
            let m = h.matrix();
            let mut trace = 0.0;
            for r in 0..m.nrows() {
                trace += m[(r, r)].re;
                for c in 0..m.ncols() {
                    if r != c {
                        assert_eq!(m[(r, c)], Complex64::new(0.0, 0.0));
                    }
                }
            }
            assert!(trace.abs() < 1e-12);
        }
    }

    /// Permutation matrix on basis states induced by relabeling qubits:
    /// qubit q of the output takes the role of qubit perm[q] of the input.
    fn qubit_permutation_matrix(perm: &[usize]) -> CMatrix {
        let n = perm.len();
        let dim = 1usize << n;
        let mut p = CMatrix::zeros(dim, dim);
        for b in 0..dim {
            let mut target = 0usize;
            for q in 0..n {
                let bit = (b >> (n - 1 - perm[q])) & 1;
                target |= bit << (n - 1 - q);
            }
            p[(target, b)] = Complex64::new(1.0, 0.0);
        }
        p
    }

    #[test]
    fn drift_conjugates_under_vertex_relabeling() {
        let perm = [2usize, 0, 3, 1];
        let g = CouplingGraph::custom(4, &[(0, 1, 1.0), (1, 2, 0.5), (2, 3, 2.0), (0, 3, 0.25)])
            .unwrap();
        // Relabeled graph: edge (l, m) becomes (perm^-1 l, perm^-1 m).
        let mut inv = [0usize; 4];
        for (q, &p) in perm.iter().enumerate() {
            inv[p] = q;
        }
        let relabeled: Vec<(usize, usize, f64)> = g
            .edges()
            .iter()
            .map(|&(l, m, j)| (inv[l], inv[m], j))
            .collect();
        let g2 = CouplingGraph::custom(4, &relabeled).unwrap();
        let h1 = drift_hamiltonian(&g);
        let h2 = drift_hamiltonian(&g2);
        let p = qubit_permutation_matrix(&perm);
        let conj = &p * h1.matrix() * p.adjoint();
        assert!(max_abs_diff(&conj, h2.matrix()) < 1e-12);
    }

    #[test]
    fn control_order_and_normalization() {
        let ctrls = control_hamiltonians(2).unwrap();
        assert_eq!(ctrls.len(), 4);
        assert_eq!(
            ctrls.iter().map(|c| (c.qubit, c.axis)).collect::<Vec<_>>(),
            vec![
                (0, ControlAxis::X),
                (0, ControlAxis::Y),
                (1, ControlAxis::X),
                (1, ControlAxis::Y)
            ]
        );
        // Control for qubit 1, axis x is (1/2) 1 (x) sigma_x.
        let want = kron(&identity(2), &pauli::sigma_x()).map(|z| z * Complex64::new(0.5, 0.0));
        assert!(max_abs_diff(ctrls[2].matrix(), &want) < 1e-15);
    }

    #[test]
    fn single_qubit_controls() {
        let ctrls = control_hamiltonians(1).unwrap();
        let want_x = pauli::sigma_x().map(|z| z * Complex64::new(0.5, 0.0));
        let want_y = pauli::sigma_y().map(|z| z * Complex64::new(0.5, 0.0));
        assert!(max_abs_diff(ctrls[0].matrix(), &want_x) < 1e-15);
        assert!(max_abs_diff(ctrls[1].matrix(), &want_y) < 1e-15);
    }

    #[test]
    fn sparse_entries_match_dense() {
        for ctrl in control_hamiltonians(3).unwrap() {
            let entries = ctrl.sparse_entries();
            assert_eq!(entries.len(), 8);
            let mut rebuilt = CMatrix::zeros(8, 8);
            for (r, c, v) in entries {
                rebuilt[(r, c)] = v;
            }
            assert!(max_abs_diff(&rebuilt, ctrl.matrix()) == 0.0);
        }
    }

    #[test]
    fn hamiltonian_assembly_matches_dense_sum() {
        let g = CouplingGraph::build(TopologyKind::Chain, 2, &CouplingSpec::Uniform(1.0)).unwrap();
        let sys = SpinSystem::new(g).unwrap();
        let amps = [0.3, -1.2, 0.0, 2.5];
        let got = sys.hamiltonian(&amps).unwrap();
        let mut want = sys.drift().matrix().clone();
        for (u, c) in amps.iter().zip(sys.controls()) {
            want += c.matrix().map(|z| z * Complex64::new(*u, 0.0));
        }
        assert!(max_abs_diff(&got, &want) < 1e-15);
    }

    /// Real dimension of the Lie algebra generated by -i{H_d, H_j} under
    /// commutators, computed by Gram-Schmidt over vectorized matrices.
    fn lie_closure_rank(generators: &[CMatrix]) -> usize {
        let dim = generators[0].nrows();
        let ip = |a: &CMatrix, b: &CMatrix| -> f64 {
            a.iter()
                .zip(b.iter())
                .map(|(x, y)| (x.conj() * y).re)
                .sum()
        };
        let mut basis: Vec<CMatrix> = Vec::new();
        let add = |basis: &mut Vec<CMatrix>, m: &CMatrix| -> bool {
            let mut v = m.clone();
            for b in basis.iter() {
                let c = ip(b, &v);
                v -= b.map(|z| z * Complex64::new(c, 0.0));
            }
            let norm = ip(&v, &v).sqrt();
            if norm > 1e-9 {
                basis.push(v.map(|z| z / Complex64::new(norm, 0.0)));
                true
            } else {
                false
            }
        };
        for g in generators {
            add(&mut basis, &g.map(|z| z * Complex64::new(0.0, -1.0)));
        }
        loop {
            let mut grew = false;
            let snapshot = basis.clone();
            for i in 0..snapshot.len() {
                for j in (i + 1)..snapshot.len() {
                    let bracket = &snapshot[i] * &snapshot[j] - &snapshot[j] * &snapshot[i];
                    if add(&mut basis, &bracket) {
                        grew = true;
                    }
                }
            }
            if !grew || basis.len() >= dim * dim {
                break;
            }
        }
        basis.len()
    }

    #[test]
    fn l2_generators_span_su4() {
        let g = CouplingGraph::build(TopologyKind::Chain, 2, &CouplingSpec::Uniform(1.0)).unwrap();
        let sys = SpinSystem::new(g).unwrap();
        let mut gens = vec![sys.drift().matrix().clone()];
        gens.extend(sys.controls().iter().map(|c| c.matrix().clone()));
        assert_eq!(lie_closure_rank(&gens), 15);
    }

    #[test]
    fn l3_generators_span_su8() {
        let g = CouplingGraph::build(TopologyKind::Chain, 3, &CouplingSpec::Uniform(1.0)).unwrap();
        let sys = SpinSystem::new(g).unwrap();
        let mut gens = vec![sys.drift().matrix().clone()];
        gens.extend(sys.controls().iter().map(|c| c.matrix().clone()));
        assert_eq!(lie_closure_rank(&gens), 63);
    }
}
