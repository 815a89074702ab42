use serde::{Deserialize, Serialize};

use super::constants::HBAR;
use super::species::{Species, SpeciesParams};
use crate::{Error, Result};

/// Temporal envelope of a Bragg pulse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Envelope {
    /// Constant amplitude over `duration`.
    Square,
    /// Gaussian with rms width `duration`/6, truncated to `duration`.
    Gaussian,
}

/// One Bragg pulse: the lattice V(t)·cos(k·z − δ·t − φ) applied to the
/// coordinates of a single species. SI units throughout.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PulseSpec {
    pub target: Species,
    /// Pulse area θ = ∫Ω(t)dt; π is a mirror, π/2 a beam splitter.
    pub theta: f64,
    /// Laser phase φ (rad), the Bell-test setting.
    pub phi: f64,
    pub envelope: Envelope,
    /// Total pulse window (s).
    pub duration_s: f64,
    /// Center of the pulse window (s).
    pub start_time_s: f64,
    /// Two-photon detuning δ (rad/s).
    pub detuning_rad_s: f64,
    /// Lattice spatial frequency |k₁−k₂| (rad/m).
    pub lattice_wavevector: f64,
}

impl PulseSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.duration_s > 0.0) {
            return Err(Error::Config(format!(
                "pulse on {}: duration must be positive, got {}",
                self.target, self.duration_s
            )));
        }
        if !(self.lattice_wavevector > 0.0) {
            return Err(Error::Config(format!(
                "pulse on {}: lattice wavevector must be positive",
                self.target
            )));
        }
        if !self.theta.is_finite() || !self.phi.is_finite() {
            return Err(Error::Config(format!(
                "pulse on {}: non-finite theta/phi",
                self.target
            )));
        }
        Ok(())
    }

    /// Integral of the unit-peak envelope over the pulse window (s).
    ///
    /// The peak Rabi frequency for a requested area is θ / this.
    pub fn effective_duration_s(&self) -> f64 {
        match self.envelope {
            Envelope::Square => self.duration_s,
            Envelope::Gaussian => {
                // ∫ exp(−t²/2σ²) dt over ±3σ with σ = duration/6.
                let sigma = self.duration_s / 6.0;
                let erf3 = erf(3.0 / std::f64::consts::SQRT_2);
                sigma * (2.0 * std::f64::consts::PI).sqrt() * erf3
            }
        }
    }

    /// Unit-peak envelope value at time offset `dt_from_center` (s).
    pub fn envelope_value(&self, dt_from_center: f64) -> f64 {
        let half = 0.5 * self.duration_s;
        if dt_from_center.abs() > half {
            return 0.0;
        }
        match self.envelope {
            Envelope::Square => 1.0,
            Envelope::Gaussian => {
                let sigma = self.duration_s / 6.0;
                (-0.5 * (dt_from_center / sigma).powi(2)).exp()
            }
        }
    }

    /// Peak Rabi frequency realizing the requested area (rad/s).
    pub fn peak_rabi_frequency(&self) -> f64 {
        self.theta / self.effective_duration_s()
    }
}

/// Error function via Abramowitz–Stegun 7.1.26 (|ε| < 1.5e-7), enough for
/// envelope-area bookkeeping.
fn erf(x: f64) -> f64 {
    let sign = x.signum();
    let x = x.abs();
    let t = 1.0 / (1.0 + 0.3275911 * x);
    let poly = t
        * (0.254829592 + t * (-0.284496736 + t * (1.421413741 + t * (-1.453152027 + t * 1.061405429))));
    sign * (1.0 - poly * (-x * x).exp())
}

/// Two-photon detuning that makes the lattice resonant for the transition
/// p_initial → p_final of the given species: δ = (p_f² − p_i²)/(2mħ).
///
/// Momenta are the z components (the lattice axis), SI. The momentum change
/// must match the lattice transfer `p_k` to within one `momentum_step`.
pub fn detuning_for_transition(
    species: &SpeciesParams,
    p_initial: f64,
    p_final: f64,
    p_k: f64,
    momentum_step: f64,
) -> Result<f64> {
    let transfer = (p_final - p_initial).abs();
    if (transfer - p_k).abs() > momentum_step {
        return Err(Error::Sequencing(format!(
            "species {}: requested transition changes momentum by {transfer:.6e} \
             but the lattice transfers {p_k:.6e} (tolerance one momentum step {momentum_step:.6e})",
            species.label
        )));
    }
    Ok((p_final * p_final - p_initial * p_initial) / (2.0 * species.mass_kg * HBAR))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_pair_is_degenerate() {
        let a = SpeciesParams::helium_3();
        let p_k = 1.2e-27;
        let delta = detuning_for_transition(&a, -0.5 * p_k, 0.5 * p_k, p_k, 1e-29).unwrap();
        assert_eq!(delta, 0.0);
    }

    #[test]
    fn rest_to_pk() {
        let b = SpeciesParams::helium_4();
        let p_k = 1.2e-27;
        let delta = detuning_for_transition(&b, 0.0, p_k, p_k, 1e-29).unwrap();
        let expected = p_k * p_k / (2.0 * b.mass_kg * HBAR);
        assert!((delta - expected).abs() / expected < 1e-14);
    }

    #[test]
    fn rejects_momentum_mismatch() {
        let a = SpeciesParams::helium_3();
        let p_k = 1.2e-27;
        assert!(detuning_for_transition(&a, 0.0, 0.4 * p_k, p_k, 0.01 * p_k).is_err());
    }

    #[test]
    fn halo_pair_detuning_from_geometry() {
        // Substituting the selected halo modes gives exactly zero detuning:
        // that degeneracy is what the symmetric mode choice buys.
        use crate::physics::geometry::derive_collision_geometry;
        let a = SpeciesParams::helium_3();
        let b = SpeciesParams::helium_4();
        let p_k = 2.0 * HBAR * 2.0 * std::f64::consts::PI / 1.0834e-6;
        let geom = derive_collision_geometry(&a, &b, p_k).unwrap();
        let modes = geom.selected_modes().unwrap();
        let delta =
            detuning_for_transition(&a, modes.a_down.z, modes.a_up.z, p_k, 1e-31).unwrap();
        assert_eq!(delta, 0.0);
        // Off-symmetric pairs are detuned by (p_f²−p_i²)/2mħ ≠ 0.
        let delta_blob = detuning_for_transition(&a, 0.0, p_k, p_k, 1e-31).unwrap();
        assert!(delta_blob > 0.0);
    }

    #[test]
    fn envelope_areas() {
        let mut p = PulseSpec {
            target: Species::A,
            theta: std::f64::consts::PI,
            phi: 0.0,
            envelope: Envelope::Square,
            duration_s: 10e-6,
            start_time_s: 0.0,
            detuning_rad_s: 0.0,
            lattice_wavevector: 1.16e7,
        };
        assert_eq!(p.effective_duration_s(), 10e-6);
        assert!((p.peak_rabi_frequency() - std::f64::consts::PI / 10e-6).abs() < 1e-6);

        p.envelope = Envelope::Gaussian;
        // Numerical check of the envelope integral against a fine Riemann sum.
        let n = 20_000;
        let dt = p.duration_s / n as f64;
        let sum: f64 = (0..n)
            .map(|i| {
                let t = (i as f64 + 0.5) * dt - 0.5 * p.duration_s;
                p.envelope_value(t) * dt
            })
            .sum();
        let eff = p.effective_duration_s();
        assert!(
            ((sum - eff) / eff).abs() < 1e-6,
            "envelope integral {sum} vs closed form {eff}"
        );
    }

    #[test]
    fn erf_reference_values() {
        // The rational approximation is good to ~1.5e-7 absolute.
        assert!((erf(0.0)).abs() < 1e-6);
        assert!((erf(1.0) - 0.8427007929).abs() < 1e-6);
        assert!((erf(-1.0) + 0.8427007929).abs() < 1e-6);
        assert!((erf(3.0) - 0.9999779095).abs() < 1e-6);
    }
}
