//! Piecewise-constant control sequences: the optimization variable.

use crate::error::{Error, Result};

/// `M` time slices, each with a duration (units `1/J_ref`) and one amplitude
/// per control operator (order fixed by [`crate::spin::SpinSystem`]).
///
/// The total duration is stored redundantly and revalidated on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PulseSequence {
    durations: Vec<f64>,
    amplitudes: Vec<Vec<f64>>,
    total: f64,
}

impl PulseSequence {
    pub fn new(durations: Vec<f64>, amplitudes: Vec<Vec<f64>>) -> Result<Self> {
        if durations.is_empty() {
            return Err(Error::InvalidConfig("pulse sequence needs M >= 1".into()));
        }
        if durations.len() != amplitudes.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} durations vs {} amplitude rows",
                durations.len(),
                amplitudes.len()
            )));
        }
        let width = amplitudes[0].len();
        for (k, (dt, row)) in durations.iter().zip(amplitudes.iter()).enumerate() {
            if !(*dt > 0.0) || !dt.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "slice {k}: duration {dt} must be positive and finite"
                )));
            }
            if row.len() != width {
                return Err(Error::DimensionMismatch(format!(
                    "slice {k}: {} amplitudes, expected {width}",
                    row.len()
                )));
            }
            if row.iter().any(|u| !u.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "slice {k}: non-finite amplitude"
                )));
            }
        }
        let total = durations.iter().sum();
        Ok(Self {
            durations,
            amplitudes,
            total,
        })
    }

    /// `M` equal slices of total duration `t_total`, all amplitudes zero.
    pub fn uniform(t_total: f64, m: usize, n_controls: usize) -> Result<Self> {
        if !(t_total > 0.0) || m == 0 {
            return Err(Error::InvalidConfig(format!(
                "need positive duration and M >= 1, got T = {t_total}, M = {m}"
            )));
        }
        Self::new(vec![t_total / m as f64; m], vec![vec![0.0; n_controls]; m])
    }

    pub fn n_slices(&self) -> usize {
        self.durations.len()
    }

    pub fn n_controls(&self) -> usize {
        self.amplitudes[0].len()
    }

    pub fn duration(&self, k: usize) -> f64 {
        self.durations[k]
    }

    pub fn durations(&self) -> &[f64] {
        &self.durations
    }

    pub fn amplitudes(&self, k: usize) -> &[f64] {
        &self.amplitudes[k]
    }

    pub fn amplitudes_mut(&mut self, k: usize) -> &mut [f64] {
        &mut self.amplitudes[k]
    }

    /// Total duration `T = sum dt_k`.
    pub fn total_duration(&self) -> f64 {
        self.total
    }

    /// Same amplitudes, durations scaled so the total becomes `new_total`
    /// (the warm-start transform between nearby sweep grid points).
    pub fn rescaled(&self, new_total: f64) -> Result<Self> {
        if !(new_total > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "rescale target {new_total} must be positive"
            )));
        }
        let factor = new_total / self.total;
        Self::new(
            self.durations.iter().map(|dt| dt * factor).collect(),
            self.amplitudes.clone(),
        )
    }

    pub fn max_abs_amplitude(&self) -> f64 {
        self.amplitudes
            .iter()
            .flat_map(|row| row.iter())
            .fold(0.0f64, |m, u| m.max(u.abs()))
    }

    /// Check the amplitude box constraint `|u| <= bound`.
    pub fn check_bound(&self, bound: f64) -> Result<()> {
        let worst = self.max_abs_amplitude();
        if worst > bound {
            return Err(Error::InvalidConfig(format!(
                "amplitude {worst} exceeds bound {bound}"
            )));
        }
        Ok(())
    }

    /// Clamp every amplitude into `[-bound, bound]` (projection onto the box).
    pub fn clamp_to_bound(&mut self, bound: f64) {
        for row in &mut self.amplitudes {
            for u in row.iter_mut() {
                *u = u.clamp(-bound, bound);
            }
        }
    }
}

/// Default slice count for a total duration `t`: `max(20, ceil(40 t J_ref))`,
/// about forty slices per coupling period.
pub fn default_slice_count(t_total: f64) -> usize {
    ((40.0 * t_total).ceil() as usize).max(20)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_construction() {
        let p = PulseSequence::uniform(2.0, 8, 4).unwrap();
        assert_eq!(p.n_slices(), 8);
        assert_eq!(p.n_controls(), 4);
        assert!((p.total_duration() - 2.0).abs() < 1e-15);
        assert!((p.duration(3) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(PulseSequence::new(vec![], vec![]).is_err());
        assert!(PulseSequence::new(vec![1.0, -0.5], vec![vec![0.0], vec![0.0]]).is_err());
        assert!(PulseSequence::new(vec![1.0], vec![vec![0.0], vec![0.0]]).is_err());
        assert!(PulseSequence::new(vec![1.0, 1.0], vec![vec![0.0], vec![0.0, 1.0]]).is_err());
        assert!(PulseSequence::uniform(0.0, 4, 2).is_err());
    }

    #[test]
    fn rescale_preserves_amplitudes() {
        let mut p = PulseSequence::uniform(1.0, 4, 2).unwrap();
        p.amplitudes_mut(2)[1] = 3.5;
        let q = p.rescaled(0.5).unwrap();
        assert!((q.total_duration() - 0.5).abs() < 1e-15);
        assert_eq!(q.amplitudes(2)[1], 3.5);
        assert!((q.duration(0) - 0.125).abs() < 1e-15);
    }

    #[test]
    fn bound_checks_and_clamping() {
        let mut p = PulseSequence::uniform(1.0, 2, 2).unwrap();
        p.amplitudes_mut(0)[0] = 10.0;
        p.amplitudes_mut(1)[1] = -7.0;
        assert!(p.check_bound(5.0).is_err());
        p.clamp_to_bound(5.0);
        assert_eq!(p.amplitudes(0)[0], 5.0);
        assert_eq!(p.amplitudes(1)[1], -5.0);
        assert!(p.check_bound(5.0).is_ok());
    }

    #[test]
    fn default_slices() {
        assert_eq!(default_slice_count(0.1), 20);
        assert_eq!(default_slice_count(2.05), 82);
        assert_eq!(default_slice_count(5.0), 200);
    }
}
