//! Gradient-flow synthesis of piecewise-constant pulse sequences.
//!
//! One iteration follows the classic scheme: forward-propagate the
//! piecewise-constant dynamics, back-propagate the adjoint from
//! `lambda(T) = -U_G`, assemble per-slice gradients, and update the controls
//! along the gradient with a backtracking line search. Two fidelity
//! functionals are supported: the special-unitary overlap at a fixed global
//! phase, and the phase-blind projective functional whose gradient is built
//! from two single-system traces (the N^2-dimensional doubled system never
//! appears).
//!
//! Gradients are exact for finite slice durations: each slice contributes
//! through the spectral (divided-difference) derivative of its exponential
//! rather than the small-`dt` commutator approximation, which matters in the
//! fast-local-controls regime where `|u| dt` is not small.

use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gates::{PhaseMode, TargetGate};
use crate::linalg::{self, CMatrix, EigH};
use crate::pulse::PulseSequence;
use crate::spin::SpinSystem;

/// Which fidelity functional the optimizer climbs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Functional {
    /// `Re tr{(e^{i phase} U_G)^dag U} / N`: chases one special-unitary
    /// representative of the target.
    Su { phase: f64 },
    /// `|tr{U_G^dag U}|^2 / N^2`: blind to the global phase.
    Psu,
}

impl Functional {
    pub fn name(&self) -> String {
        match self {
            Functional::Su { phase } => format!("su:{phase}"),
            Functional::Psu => "psu".into(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s == "psu" {
            return Ok(Functional::Psu);
        }
        if let Some(rest) = s.strip_prefix("su:") {
            let phase = rest.parse::<f64>().map_err(|e| {
                Error::InvalidConfig(format!("bad su phase '{rest}': {e}"))
            })?;
            return Ok(Functional::Su { phase });
        }
        Err(Error::InvalidConfig(format!(
            "unknown functional '{s}' (expected psu or su:<phase>)"
        )))
    }

    /// Functional matching a gate's declared phase mode.
    pub fn from_phase_mode(mode: PhaseMode) -> Self {
        match mode {
            PhaseMode::Fixed(phase) => Functional::Su { phase },
            PhaseMode::Projective => Functional::Psu,
        }
    }
}

/// Stopping rules, step-size policy, and restart policy for one optimization.
#[derive(Debug, Clone)]
pub struct OptimizationConfig {
    pub functional: Functional,
    pub max_iterations: usize,
    /// Reported trace fidelity at which a run counts as converged.
    pub fidelity_target: f64,
    /// Initial gradient-ascent step; `None` scales the first step to move
    /// the largest amplitude by 5% of the amplitude bound.
    pub initial_step: Option<f64>,
    /// Step shrink factor on a failed line-search trial.
    pub backtrack_factor: f64,
    /// Step growth factor after an accepted trial.
    pub growth_factor: f64,
    pub max_line_search_trials: usize,
    /// Stop when the gradient 2-norm falls below this.
    pub gradient_tolerance: f64,
    /// Stop when the fidelity gained over this many iterations stays below
    /// `stagnation_tolerance` (plateau cutoff for infeasible durations).
    pub stagnation_window: usize,
    pub stagnation_tolerance: f64,
    /// Random initial amplitudes are drawn from
    /// `[-f u_max, f u_max]` with this fraction `f`.
    pub init_amplitude_fraction: f64,
    pub seed: u64,
    pub restarts: usize,
    /// Restarts are evaluated in deterministic batches of this size; after a
    /// batch containing a converged run, no further batches start.
    pub restart_batch: usize,
}

impl Default for OptimizationConfig {
    fn default() -> Self {
        Self {
            functional: Functional::Psu,
            max_iterations: 5000,
            fidelity_target: 0.99999,
            initial_step: None,
            backtrack_factor: 0.5,
            growth_factor: 2.0,
            max_line_search_trials: 40,
            gradient_tolerance: 1e-10,
            stagnation_window: 200,
            stagnation_tolerance: 1e-11,
            init_amplitude_fraction: 0.1,
            seed: 1,
            restarts: 20,
            restart_batch: 4,
        }
    }
}

impl OptimizationConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.fidelity_target > 0.0 && self.fidelity_target <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "fidelity target {} not in (0, 1]",
                self.fidelity_target
            )));
        }
        if let Some(a) = self.initial_step {
            if !(a > 0.0) {
                return Err(Error::InvalidConfig(format!("step size {a} must be > 0")));
            }
        }
        if !(self.backtrack_factor > 0.0 && self.backtrack_factor < 1.0) {
            return Err(Error::InvalidConfig(
                "backtrack factor must be in (0, 1)".into(),
            ));
        }
        if self.restarts == 0 || self.restart_batch == 0 {
            return Err(Error::InvalidConfig(
                "need at least one restart and a positive batch size".into(),
            ));
        }
        Ok(())
    }
}

/// Outcome of one optimization (best restart).
#[derive(Debug, Clone)]
pub struct OptimizationResult {
    pub pulse: PulseSequence,
    /// Reported trace fidelity of `pulse`.
    pub fidelity: f64,
    /// Iterations spent by the winning restart.
    pub iterations: usize,
    /// Reported fidelity after every iteration of the winning restart,
    /// starting with the initial guess.
    pub fidelity_trace: Vec<f64>,
    pub wall_time_s: f64,
    pub converged: bool,
    /// Seed of the winning restart.
    pub seed: u64,
    /// Restarts actually evaluated (early exit may skip the rest).
    pub restarts_used: usize,
}

/// Per-slice spectral cache: eigendecomposition of `H^(k)` and the slice
/// propagator `exp(-i dt_k H^(k))`.
struct SliceCache {
    eig: EigH,
    propagator: CMatrix,
}

/// Forward trajectory of a pulse sequence: per-slice caches plus cumulative
/// products `U(t_k) = U_k ... U_1` with `U(t_0) = 1`.
pub(crate) struct Trajectory {
    slices: Vec<SliceCache>,
    forward: Vec<CMatrix>,
}

impl Trajectory {
    fn build(sys: &SpinSystem, seq: &PulseSequence) -> Result<Self> {
        let dim = sys.dim();
        let m = seq.n_slices();
        let mut slices = Vec::with_capacity(m);
        let mut forward = Vec::with_capacity(m + 1);
        forward.push(linalg::identity(dim));
        for k in 0..m {
            let h = sys.hamiltonian(seq.amplitudes(k))?;
            let eig = linalg::eigh(&h);
            let u_k = eig.expm_i(seq.duration(k));
            let mut next = CMatrix::zeros(dim, dim);
            u_k.mul_to(&forward[k], &mut next);
            forward.push(next);
            slices.push(SliceCache {
                eig,
                propagator: u_k,
            });
        }
        Ok(Self { slices, forward })
    }

    fn final_propagator(&self) -> &CMatrix {
        self.forward.last().expect("forward is never empty")
    }

    /// Adjoint trajectory from the terminal condition `lambda(T) = -target`:
    /// `lambda(t_k) = U_{k+1}^dag ... U_M^dag lambda(T)`.
    fn adjoints(&self, target: &CMatrix) -> Vec<CMatrix> {
        let m = self.slices.len();
        let mut lambdas = vec![CMatrix::zeros(0, 0); m + 1];
        lambdas[m] = -target.clone();
        for k in (0..m).rev() {
            lambdas[k] = self.slices[k].propagator.adjoint() * &lambdas[k + 1];
        }
        lambdas
    }
}

/// Forward propagation: the list `U(t_0) = 1, U(t_1), ..., U(t_M)` of
/// cumulative propagators of the sequence.
pub fn forward_propagate(seq: &PulseSequence, sys: &SpinSystem) -> Result<Vec<CMatrix>> {
    Ok(Trajectory::build(sys, seq)?.forward)
}

/// Back-propagation of the adjoint from `lambda(T) = -target`; element `k`
/// is `lambda(t_k)`.
pub fn backward_propagate(
    seq: &PulseSequence,
    sys: &SpinSystem,
    target: &CMatrix,
) -> Result<Vec<CMatrix>> {
    Ok(Trajectory::build(sys, seq)?.adjoints(target))
}

fn check_gate(sys: &SpinSystem, gate: &TargetGate) -> Result<()> {
    if gate.dim() != sys.dim() {
        return Err(Error::DimensionMismatch(format!(
            "gate on {} qubits vs system of {}",
            gate.n_qubits(),
            sys.n_qubits()
        )));
    }
    Ok(())
}

/// `Re tr{(e^{i phi} U_G)^dag U} / N` where `phi` is the gate's fixed phase
/// (zero for projective-mode gates). Ranges over `[-1, 1]`.
pub fn fidelity_su(u: &CMatrix, gate: &TargetGate) -> f64 {
    let phi = match gate.phase_mode() {
        PhaseMode::Fixed(phi) => phi,
        PhaseMode::Projective => 0.0,
    };
    let tr = linalg::trace_inner(gate.matrix(), u).expect("dimension checked by caller");
    (Complex64::from_polar(1.0, -phi) * tr).re / gate.dim() as f64
}

/// `|tr{U_G^dag U}|^2 / N^2`, invariant under any global phase of `U`.
/// The reported trace fidelity is its square root.
pub fn fidelity_psu(u: &CMatrix, gate: &TargetGate) -> f64 {
    let tr = linalg::trace_inner(gate.matrix(), u).expect("dimension checked by caller");
    let n = gate.dim() as f64;
    (tr.norm() / n).powi(2)
}

/// The reported trace fidelity of a realized propagator under a functional:
/// `|tr|/N` for the projective functional, the phase-shifted real overlap
/// for the fixed-phase one.
pub fn trace_fidelity(functional: Functional, u: &CMatrix, gate: &TargetGate) -> f64 {
    let tr = linalg::trace_inner(gate.matrix(), u).expect("dimension checked by caller");
    let n = gate.dim() as f64;
    match functional {
        Functional::Su { phase } => (Complex64::from_polar(1.0, -phase) * tr).re / n,
        Functional::Psu => tr.norm() / n,
    }
}

/// Per-slice trace `tr{lambda(t_k)^dag D_kj U(t_{k-1})}` for every control j,
/// where `D_kj` is the exact derivative of the slice-k propagator in control
/// direction j.
///
/// In the slice eigenbasis this collapses to an N-sparse contraction per
/// control: with `A = V^dag (U(t_{k-1}) lambda^dag) V` and the
/// divided-difference kernel `G`, the trace is `sum_rs H_j[r,s] (conj(V)
/// (G o A^T) V^T)[r,s]`.
fn slice_control_traces(
    traj: &Trajectory,
    lambdas: &[CMatrix],
    sys: &SpinSystem,
    seq: &PulseSequence,
    sparse_controls: &[Vec<(usize, usize, Complex64)>],
) -> Vec<Vec<Complex64>> {
    let m = seq.n_slices();
    let dim = sys.dim();
    let mut traces = vec![vec![Complex64::new(0.0, 0.0); sparse_controls.len()]; m];
    let mut tmp = CMatrix::zeros(dim, dim);
    let mut kernel = CMatrix::zeros(dim, dim);
    for k in 0..m {
        let slice = &traj.slices[k];
        let vecs = &slice.eig.eigenvectors;
        // A = V^dag (U(t_{k-1}) lambda(t_k)^dag) V
        traj.forward[k].mul_to(&lambdas[k + 1].adjoint(), &mut tmp);
        let a = vecs.adjoint() * &tmp * vecs;
        let gamma = slice.eig.frechet_kernel(seq.duration(k));
        for r in 0..dim {
            for c in 0..dim {
                kernel[(r, c)] = gamma[(r, c)] * a[(c, r)];
            }
        }
        // G = conj(V) K V^T, so that the trace is an entrywise contraction
        // against the (sparse) control operator.
        let g = vecs.conjugate() * &kernel * vecs.transpose();
        for (j, entries) in sparse_controls.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for &(r, c, v) in entries {
                acc += v * g[(r, c)];
            }
            traces[k][j] = acc;
        }
    }
    traces
}

fn sparse_controls(sys: &SpinSystem) -> Vec<Vec<(usize, usize, Complex64)>> {
    sys.controls().iter().map(|c| c.sparse_entries()).collect()
}

/// Exact gradient of [`fidelity_su`] with respect to every `u_j^(k)`, using
/// the gate's fixed phase. Layout: `grad[k][j]`.
pub fn gradient_su(
    seq: &PulseSequence,
    sys: &SpinSystem,
    gate: &TargetGate,
) -> Result<Vec<Vec<f64>>> {
    check_gate(sys, gate)?;
    let phi = match gate.phase_mode() {
        PhaseMode::Fixed(phi) => phi,
        PhaseMode::Projective => 0.0,
    };
    let effective = linalg::scale_by_phase(gate.matrix(), phi);
    let traj = Trajectory::build(sys, seq)?;
    let lambdas = traj.adjoints(&effective);
    let ctrl = sparse_controls(sys);
    let traces = slice_control_traces(&traj, &lambdas, sys, seq, &ctrl);
    let n = gate.dim() as f64;
    Ok(traces
        .into_iter()
        .map(|row| row.into_iter().map(|t| -t.re / n).collect())
        .collect())
}

/// Exact gradient of [`fidelity_psu`], assembled from two single-system
/// traces per slice and control; the doubled system is never formed.
pub fn gradient_psu(
    seq: &PulseSequence,
    sys: &SpinSystem,
    gate: &TargetGate,
) -> Result<Vec<Vec<f64>>> {
    check_gate(sys, gate)?;
    let traj = Trajectory::build(sys, seq)?;
    let lambdas = traj.adjoints(gate.matrix());
    let ctrl = sparse_controls(sys);
    let traces = slice_control_traces(&traj, &lambdas, sys, seq, &ctrl);
    let overlap = linalg::trace_inner(gate.matrix(), traj.final_propagator())?;
    let n2 = (gate.dim() as f64).powi(2);
    Ok(traces
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|t| -2.0 * (overlap.conj() * t).re / n2)
                .collect()
        })
        .collect())
}

/// First-order gradient of the fixed-phase overlap,
/// `-dt_k Im tr{lambda^dag(t_k) H_j U(t_k)} / N`: the small-`dt` limit of
/// [`gradient_su`], kept as a cross-check.
pub fn gradient_su_first_order(
    seq: &PulseSequence,
    sys: &SpinSystem,
    gate: &TargetGate,
) -> Result<Vec<Vec<f64>>> {
    check_gate(sys, gate)?;
    let phi = match gate.phase_mode() {
        PhaseMode::Fixed(phi) => phi,
        PhaseMode::Projective => 0.0,
    };
    let effective = linalg::scale_by_phase(gate.matrix(), phi);
    let traj = Trajectory::build(sys, seq)?;
    let lambdas = traj.adjoints(&effective);
    let n = gate.dim() as f64;
    let m = seq.n_slices();
    let mut grad = vec![vec![0.0; sys.n_controls()]; m];
    for k in 0..m {
        let dt = seq.duration(k);
        for (j, ctrl) in sys.controls().iter().enumerate() {
            let hu = ctrl.matrix() * &traj.forward[k + 1];
            let tr = linalg::trace_inner(&lambdas[k + 1], &hu)?;
            grad[k][j] = -dt * tr.im / n;
        }
    }
    Ok(grad)
}

fn gradient_for(
    functional: Functional,
    traj: &Trajectory,
    seq: &PulseSequence,
    sys: &SpinSystem,
    effective_target: &CMatrix,
    sparse: &[Vec<(usize, usize, Complex64)>],
) -> Vec<Vec<f64>> {
    let lambdas = traj.adjoints(effective_target);
    let traces = slice_control_traces(traj, &lambdas, sys, seq, sparse);
    let n = effective_target.nrows() as f64;
    match functional {
        Functional::Su { .. } => traces
            .into_iter()
            .map(|row| row.into_iter().map(|t| -t.re / n).collect())
            .collect(),
        Functional::Psu => {
            let overlap = linalg::trace_inner(effective_target, traj.final_propagator())
                .expect("dimensions match by construction");
            traces
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|t| -2.0 * (overlap.conj() * t).re / (n * n))
                        .collect()
                })
                .collect()
        }
    }
}

fn grad_norm(grad: &[Vec<f64>]) -> f64 {
    grad.iter()
        .flat_map(|row| row.iter())
        .map(|g| g * g)
        .sum::<f64>()
        .sqrt()
}

fn grad_inf_norm(grad: &[Vec<f64>]) -> f64 {
    grad.iter()
        .flat_map(|row| row.iter())
        .fold(0.0f64, |m, g| m.max(g.abs()))
}

/// How a single run was started.
enum RunStart<'a> {
    Random { seed: u64 },
    Warm { seed: u64, pulse: &'a PulseSequence },
}

struct RunOutcome {
    pulse: PulseSequence,
    fidelity: f64,
    iterations: usize,
    trace: Vec<f64>,
    converged: bool,
    seed: u64,
}

fn random_pulse(
    rng: &mut ChaCha8Rng,
    t_total: f64,
    m: usize,
    n_controls: usize,
    amp: f64,
) -> PulseSequence {
    let durations = vec![t_total / m as f64; m];
    let amplitudes = (0..m)
        .map(|_| (0..n_controls).map(|_| rng.gen_range(-amp..=amp)).collect())
        .collect();
    PulseSequence::new(durations, amplitudes).expect("generated pulse is valid")
}

/// One gradient-ascent run from a fixed start. Monotone by construction:
/// a candidate is accepted only if it improves the reported fidelity.
fn single_run(
    sys: &SpinSystem,
    gate: &TargetGate,
    effective_target: &CMatrix,
    t_total: f64,
    m: usize,
    config: &OptimizationConfig,
    start: RunStart<'_>,
) -> Result<RunOutcome> {
    let sparse = sparse_controls(sys);
    let u_max = sys.amplitude_bound();
    let (seed, mut pulse) = match start {
        RunStart::Warm { seed, pulse } => {
            let mut p = pulse.rescaled(t_total)?;
            p.clamp_to_bound(u_max);
            (seed, p)
        }
        RunStart::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let amp = config.init_amplitude_fraction * u_max;
            (
                seed,
                random_pulse(&mut rng, t_total, m, sys.n_controls(), amp),
            )
        }
    };

    let mut traj = Trajectory::build(sys, &pulse)?;
    let mut fid = trace_fidelity(config.functional, traj.final_propagator(), gate);
    let mut trace = vec![fid];
    let mut alpha = config.initial_step.unwrap_or(0.0);
    let mut converged = fid >= config.fidelity_target;
    let mut iterations = 0;

    while !converged && iterations < config.max_iterations {
        let grad = gradient_for(
            config.functional,
            &traj,
            &pulse,
            sys,
            effective_target,
            &sparse,
        );
        let gn = grad_norm(&grad);
        if gn < config.gradient_tolerance {
            break;
        }
        if alpha == 0.0 {
            // Scale the first step to move the largest amplitude by 5% of
            // the bound.
            alpha = 0.05 * u_max / grad_inf_norm(&grad).max(1e-300);
        }

        let mut improved = false;
        let mut step = alpha;
        for _ in 0..config.max_line_search_trials {
            let mut candidate = pulse.clone();
            for k in 0..candidate.n_slices() {
                let row = candidate.amplitudes_mut(k);
                for (j, u) in row.iter_mut().enumerate() {
                    *u = (*u + step * grad[k][j]).clamp(-u_max, u_max);
                }
            }
            let cand_traj = Trajectory::build(sys, &candidate)?;
            let cand_fid = trace_fidelity(config.functional, cand_traj.final_propagator(), gate);
            if cand_fid > fid {
                pulse = candidate;
                traj = cand_traj;
                fid = cand_fid;
                alpha = step * config.growth_factor;
                improved = true;
                break;
            }
            step *= config.backtrack_factor;
        }
        if !improved {
            break; // stalled at a numerical critical point
        }

        iterations += 1;
        trace.push(fid);
        converged = fid >= config.fidelity_target;

        // Plateau cutoff: progress within the window below tolerance.
        if !converged && trace.len() > config.stagnation_window {
            let before = trace[trace.len() - 1 - config.stagnation_window];
            if fid - before < config.stagnation_tolerance {
                break;
            }
        }
    }

    Ok(RunOutcome {
        pulse,
        fidelity: fid,
        iterations,
        trace,
        converged,
        seed,
    })
}

/// Derived seed for restart `i`; splitmix-style mixing keeps streams apart.
fn restart_seed(base: u64, i: usize) -> u64 {
    let mut z = base ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Run the iterative scheme with random restarts and return the best run.
///
/// Restarts execute in deterministic batches (possibly in parallel); once a
/// batch produces a converged run, later batches are skipped. The best run
/// is the converged one with the highest fidelity, ties broken by restart
/// index, so the outcome is a pure function of seed and configuration.
pub fn optimize(
    sys: &SpinSystem,
    gate: &TargetGate,
    t_total: f64,
    m: usize,
    config: &OptimizationConfig,
) -> Result<OptimizationResult> {
    optimize_with_initial(sys, gate, t_total, m, config, None)
}

/// [`optimize`] with an optional warm-start sequence used (time-rescaled)
/// as restart 0 in place of a random initialization.
pub fn optimize_with_initial(
    sys: &SpinSystem,
    gate: &TargetGate,
    t_total: f64,
    m: usize,
    config: &OptimizationConfig,
    initial: Option<&PulseSequence>,
) -> Result<OptimizationResult> {
    check_gate(sys, gate)?;
    config.validate()?;
    if !(t_total > 0.0) || m == 0 {
        return Err(Error::InvalidConfig(format!(
            "need T > 0 and M >= 1, got T = {t_total}, M = {m}"
        )));
    }
    if let Some(p) = initial {
        if p.n_controls() != sys.n_controls() {
            return Err(Error::DimensionMismatch(format!(
                "warm start has {} controls, system has {}",
                p.n_controls(),
                sys.n_controls()
            )));
        }
    }

    let effective_target = match config.functional {
        Functional::Su { phase } => linalg::scale_by_phase(gate.matrix(), phase),
        Functional::Psu => gate.matrix().clone(),
    };
    // The gate the runs score against carries the functional's phase.
    let scoring_gate = match config.functional {
        Functional::Su { phase } => gate.clone().with_phase_mode(PhaseMode::Fixed(phase)),
        Functional::Psu => gate.clone().with_phase_mode(PhaseMode::Projective),
    };

    let start_time = Instant::now();
    let mut outcomes: Vec<RunOutcome> = Vec::new();
    let mut next = 0usize;
    while next < config.restarts {
        let batch_end = (next + config.restart_batch).min(config.restarts);
        let batch: Vec<Result<RunOutcome>> = (next..batch_end)
            .into_par_iter()
            .map(|i| {
                let seed = restart_seed(config.seed, i);
                let start = match (i, initial) {
                    (0, Some(p)) => RunStart::Warm { seed, pulse: p },
                    _ => RunStart::Random { seed },
                };
                single_run(
                    sys,
                    &scoring_gate,
                    &effective_target,
                    t_total,
                    m,
                    config,
                    start,
                )
            })
            .collect();
        for r in batch {
            outcomes.push(r?);
        }
        next = batch_end;
        if outcomes.iter().any(|o| o.converged) {
            break;
        }
    }

    let restarts_used = outcomes.len();
    let best = outcomes
        .into_iter()
        .enumerate()
        .max_by(|(ia, a), (ib, b)| {
            (a.converged, a.fidelity, std::cmp::Reverse(*ia))
                .partial_cmp(&(b.converged, b.fidelity, std::cmp::Reverse(*ib)))
                .expect("fidelities are finite")
        })
        .map(|(_, o)| o)
        .expect("at least one restart ran");

    Ok(OptimizationResult {
        pulse: best.pulse,
        fidelity: best.fidelity,
        iterations: best.iterations,
        fidelity_trace: best.trace,
        wall_time_s: start_time.elapsed().as_secs_f64(),
        converged: best.converged,
        seed: best.seed,
        restarts_used,
    })
}

/// Recompute the reported trace fidelity of a stored sequence by plain
/// re-propagation (the verification path used for result files).
pub fn resimulate_fidelity(
    seq: &PulseSequence,
    sys: &SpinSystem,
    gate: &TargetGate,
    functional: Functional,
) -> Result<f64> {
    check_gate(sys, gate)?;
    let traj = Trajectory::build(sys, seq)?;
    Ok(trace_fidelity(functional, traj.final_propagator(), gate))
}
