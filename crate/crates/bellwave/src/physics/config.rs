use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::constants::{self, HBAR, SPEED_OF_LIGHT};
use super::geometry::{derive_collision_geometry, CollisionGeometry};
use super::grid_spec::GridSpec;
use super::pulse::{Envelope, PulseSpec};
use super::species::SpeciesParams;
use super::units::UnitSystem;
use crate::{Error, Result};

/// How the initial momentum superposition of species B is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatePrepMode {
    /// Multiply by (e^{+ip_k z} + e^{−ip_k z})/√2 directly.
    Idealized,
    /// Drive a resonant standing-wave pulse with area tuned for depletion.
    Physical,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SpeciesPair {
    pub a: SpeciesParams,
    pub b: SpeciesParams,
}

/// Bragg-lattice geometry. With no override the two beams are assumed
/// counter-propagating at the wavelength of the mean transition frequency,
/// giving |k₁−k₂| = 2·(2π/λ).
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct LatticeConfig {
    /// Optional lattice period override (m), for beams crossing at an angle.
    pub period_m: Option<f64>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CollisionConfig {
    /// Interspecies s-wave scattering length (m); recorded physics input.
    pub scattering_length_a34_m: f64,
    /// Width σ of the Gaussian pseudopotential standing in for the contact
    /// interaction (m).
    pub interaction_width_m: f64,
    /// Peak strength g of the pseudopotential (J), calibrated so the
    /// scattered fraction stays perturbative.
    pub interaction_strength_j: f64,
    /// Beam intensity quoted for the experiment (mW/mm²); metadata only.
    pub intensity_mw_mm2: Option<f64>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct TrapConfig {
    /// Isotropic trap frequency for species A (rad/s).
    pub omega_a_rad_s: f64,
    /// Isotropic trap frequency for species B (rad/s).
    pub omega_b_rad_s: f64,
}

/// Mixing-pulse settings for one run: the Bell-test knobs.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct MixingSettings {
    pub theta_a_rad: f64,
    pub theta_b_rad: f64,
    pub phi_a_rad: f64,
    pub phi_b_rad: f64,
}

impl Default for MixingSettings {
    fn default() -> Self {
        Self {
            theta_a_rad: 0.0,
            theta_b_rad: 0.0,
            phi_a_rad: 0.0,
            phi_b_rad: 0.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SequenceConfig {
    /// Mirror-pulse time (s), measured from trap release.
    pub t1_s: f64,
    /// Mixing-pulse time (s); wavepackets re-overlap here when t₂ ≈ 2t₁.
    pub t2_s: f64,
    /// Window with the interaction potential active, starting at release (s).
    pub collision_window_s: f64,
    /// Free flight after the mixing pulse before analysis (s).
    pub expand_s: f64,
    pub state_prep_mode: StatePrepMode,
    /// Envelope used for the mirror and mixing pulses built by the scheduler.
    pub pulse_envelope: Envelope,
    #[serde(default)]
    pub settings: MixingSettings,
    /// Extra pulses appended to the built schedule.
    #[serde(default, rename = "pulse")]
    pub extra_pulses: Vec<PulseSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OutputConfig {
    pub dir: PathBuf,
    /// Extra snapshots every this many steps inside stages; 0 = stage
    /// boundaries only.
    pub checkpoint_interval: usize,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self {
            dir: PathBuf::from("runs"),
            checkpoint_interval: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LimitsConfig {
    /// Refuse to start a run whose wavefunction storage exceeds this.
    pub memory_cap_bytes: u64,
}

impl Default for LimitsConfig {
    fn default() -> Self {
        Self {
            memory_cap_bytes: 8_000_000_000,
        }
    }
}

/// Full description of one simulation run, SI units. Immutable once built;
/// every module consumes numbers from here instead of private literals.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub grid: GridSpec,
    pub species: SpeciesPair,
    #[serde(default)]
    pub lattice: LatticeConfig,
    pub collision: CollisionConfig,
    pub trap: TrapConfig,
    pub sequence: SequenceConfig,
    #[serde(default)]
    pub output: OutputConfig,
    #[serde(default)]
    pub limits: LimitsConfig,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        self.grid.validate()?;
        self.species.a.validate()?;
        self.species.b.validate()?;
        if !(self.collision.scattering_length_a34_m > 0.0) {
            return Err(Error::Config(
                "collision.scattering_length_a34_m must be positive".into(),
            ));
        }
        if !(self.collision.interaction_width_m > 0.0) {
            return Err(Error::Config(
                "collision.interaction_width_m must be positive".into(),
            ));
        }
        if self.collision.interaction_strength_j < 0.0 {
            return Err(Error::Config(
                "collision.interaction_strength_j must be non-negative".into(),
            ));
        }
        if !(self.trap.omega_a_rad_s > 0.0) || !(self.trap.omega_b_rad_s > 0.0) {
            return Err(Error::Config("trap frequencies must be positive".into()));
        }
        let t1 = self.sequence.t1_s;
        let t2 = self.sequence.t2_s;
        if !(t1 > 0.0 && t2 > t1 && self.total_duration_s() > t2) {
            return Err(Error::Config(format!(
                "sequence timings must satisfy 0 < t1 < t2 < total, got t1 = {t1}, t2 = {t2}, \
                 total = {}",
                self.total_duration_s()
            )));
        }
        if !(self.sequence.collision_window_s > 0.0) {
            return Err(Error::Config(
                "sequence.collision_window_s must be positive".into(),
            ));
        }
        for p in &self.sequence.extra_pulses {
            p.validate()?;
        }
        Ok(())
    }

    /// Laser wavelength used for the Bragg beams (m).
    pub fn bragg_wavelength_m(&self) -> f64 {
        let mean = 0.5
            * (self.species.a.transition_frequency_hz + self.species.b.transition_frequency_hz);
        SPEED_OF_LIGHT / mean
    }

    /// Lattice spatial frequency |k₁−k₂| (rad/m).
    pub fn lattice_wavevector(&self) -> f64 {
        match self.lattice.period_m {
            Some(d) => 2.0 * std::f64::consts::PI / d,
            None => 2.0 * (2.0 * std::f64::consts::PI / self.bragg_wavelength_m()),
        }
    }

    /// Bragg momentum transfer p_k = ħ|k₁−k₂| (kg·m/s).
    pub fn bragg_momentum(&self) -> f64 {
        HBAR * self.lattice_wavevector()
    }

    pub fn units(&self) -> UnitSystem {
        UnitSystem::new(self.lattice_wavevector(), self.species.b.mass_kg)
    }

    pub fn collision_geometry(&self) -> Result<CollisionGeometry> {
        derive_collision_geometry(&self.species.a, &self.species.b, self.bragg_momentum())
    }

    /// End of the simulated sequence (s): mixing pulse tail plus expansion.
    pub fn total_duration_s(&self) -> f64 {
        let mix_tail = 0.5 * self.species.a.pulse_duration_s.max(self.species.b.pulse_duration_s);
        self.sequence.t2_s + mix_tail + self.sequence.expand_s
    }

    /// Bytes needed to hold one wavefunction array.
    pub fn bytes_per_field(&self) -> u64 {
        let n = self.grid.points_per_dim as u64;
        n * n * n * n * 16
    }

    /// Peak wavefunction storage for a run: the field, one spectral copy for
    /// analysis, and transform scratch.
    pub fn estimated_memory_bytes(&self) -> u64 {
        2 * self.bytes_per_field() + self.bytes_per_field() / 8
    }

    pub fn check_memory_guard(&self) -> Result<()> {
        let required = self.estimated_memory_bytes();
        if required > self.limits.memory_cap_bytes {
            return Err(Error::MemoryGuard {
                required_bytes: required,
                cap_bytes: self.limits.memory_cap_bytes,
            });
        }
        Ok(())
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::Config(format!("cannot read config {}: {e}", path.display()))
        })?;
        Self::from_toml_str(&text)
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text)
            .map_err(|e| Error::Config(format!("config parse error: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Canonical serialized form: the basis for the reproducibility hash.
    pub fn to_canonical_string(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_canonical_string())?;
        Ok(())
    }

    /// Desk-scale profile: a 41-point grid sized so the lattice momentum
    /// transfer is exactly eight momentum cells, with the whole sequence
    /// lasting tens of microseconds. Runs in minutes on a laptop.
    pub fn desk() -> Self {
        Self::profile(41, 8, 1e-7, None, 5.0)
    }

    /// Desk profile at a different resolution, keeping the momentum transfer
    /// on a whole number of momentum cells (rounded from the 41-point ratio).
    pub fn desk_with_points(points: usize) -> Self {
        let cells = (points as f64 * 8.0 / 41.0).round().max(4.0) as usize;
        Self::profile(points, cells, 1e-7, None, 5.0)
    }

    /// Paper-scale profile: 121 points per dimension, 0.5 µm spatial step,
    /// 0.1 µs time step and a ~1.2 ms sequence. The 4 µm lattice period
    /// reproduces the quoted 0.066·ħk momentum resolution and is resolvable
    /// on the 0.5 µm grid. Needs ~3.4 GB per wavefunction array.
    pub fn paper_scale() -> Self {
        let mut cfg = Self::profile(121, 15, 1e-7, Some(4e-6), 4.0);
        cfg.species.a.pulse_duration_s = 50e-6;
        cfg.species.b.pulse_duration_s = 66e-6;
        cfg.species.a.rabi_frequency_rad_s = std::f64::consts::PI / 50e-6;
        cfg.species.b.rabi_frequency_rad_s = std::f64::consts::PI / 66e-6;
        cfg
    }

    /// Shared profile machinery: `momentum_cells` is the number of momentum
    /// cells per lattice transfer (p_k / Δp); it fixes the spatial step
    /// unless `lattice_period_m` also fixes the wavevector. `sigma_cells`
    /// sets the trap ground-state width in grid cells.
    pub fn profile(
        points: usize,
        momentum_cells: usize,
        time_step_s: f64,
        lattice_period_m: Option<f64>,
        sigma_cells: f64,
    ) -> Self {
        let species_a = SpeciesParams::helium_3();
        let species_b = SpeciesParams::helium_4();

        // Wavevector first (it only depends on species/lattice), then the
        // spatial step that puts p_k on `momentum_cells` grid cells.
        let mean = 0.5
            * (species_a.transition_frequency_hz + species_b.transition_frequency_hz);
        let k_lattice = match lattice_period_m {
            Some(d) => 2.0 * std::f64::consts::PI / d,
            None => 2.0 * 2.0 * std::f64::consts::PI / (SPEED_OF_LIGHT / mean),
        };
        let dx_internal = 2.0 * std::f64::consts::PI * momentum_cells as f64 / points as f64;
        let spatial_step_m = match lattice_period_m {
            // Paper profile pins dx = 0.5 µm; momentum_cells is then only
            // approximate and unused.
            Some(_) => 0.5e-6,
            None => dx_internal / k_lattice,
        };
        let units = UnitSystem::new(k_lattice, species_b.mass_kg);
        let t0 = units.time();
        let dx_int = spatial_step_m * k_lattice;

        // Trap sized for the requested ground-state width in grid cells.
        let sigma_int = sigma_cells * dx_int;
        let mass_a_int = species_a.mass_kg / species_b.mass_kg;
        let omega_a = 1.0 / (2.0 * mass_a_int * sigma_int * sigma_int) / t0;
        let omega_b = 1.0 / (2.0 * sigma_int * sigma_int) / t0;

        // Timeline in internal units: the collision window covers the full
        // passage of the B lobes (speed p_k/m_B = 1) through the A cloud,
        // the mirror waits for three widths of halo-lobe separation
        // (relative speed p_k/m_A), and t2 = 2·t1 refocuses.
        let collide = 4.5 * sigma_int;
        let t1 = collide + 3.0 * sigma_int * mass_a_int;
        let (t1, t2, expand) = (t1 * t0, 2.0 * t1 * t0, 0.1 * t1 * t0);

        let pulse_duration = 15.0 * t0;
        let mut species_a = species_a;
        let mut species_b = species_b;
        species_a.pulse_duration_s = pulse_duration;
        species_b.pulse_duration_s = pulse_duration;
        species_a.rabi_frequency_rad_s = std::f64::consts::PI / pulse_duration;
        species_b.rabi_frequency_rad_s = std::f64::consts::PI / pulse_duration;

        RunConfig {
            grid: GridSpec {
                points_per_dim: points,
                spatial_step_m,
                time_step_s,
            },
            species: SpeciesPair {
                a: species_a,
                b: species_b,
            },
            lattice: LatticeConfig {
                period_m: lattice_period_m,
            },
            collision: CollisionConfig {
                scattering_length_a34_m: constants::SCATTERING_LENGTH_A34,
                interaction_width_m: 2.0 * spatial_step_m,
                interaction_strength_j: 1.1 * units.energy(),
                intensity_mw_mm2: Some(0.1),
            },
            trap: TrapConfig {
                omega_a_rad_s: omega_a,
                omega_b_rad_s: omega_b,
            },
            sequence: SequenceConfig {
                t1_s: t1,
                t2_s: t2,
                collision_window_s: collide * t0,
                expand_s: expand,
                state_prep_mode: StatePrepMode::Idealized,
                pulse_envelope: Envelope::Gaussian,
                settings: MixingSettings::default(),
                extra_pulses: Vec::new(),
            },
            output: OutputConfig::default(),
            limits: LimitsConfig::default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn desk_profile_validates() {
        let cfg = RunConfig::desk();
        cfg.validate().unwrap();
        // p_k sits on exactly 8 momentum cells.
        let ratio = cfg.bragg_momentum() / cfg.grid.momentum_step();
        assert!((ratio - 8.0).abs() < 1e-9, "p_k/dp = {ratio}");
        // Lattice period resolvable: at least 4 spatial cells.
        let period = 2.0 * std::f64::consts::PI / cfg.lattice_wavevector();
        assert!(period / cfg.grid.spatial_step_m >= 4.0);
    }

    #[test]
    fn paper_profile_matches_quoted_figures() {
        let cfg = RunConfig::paper_scale();
        cfg.validate().unwrap();
        assert_eq!(cfg.grid.points_per_dim, 121);
        assert_eq!(cfg.grid.spatial_step_m, 0.5e-6);
        // Momentum resolution ≈ 0.066 ħk.
        let resolution = cfg.grid.momentum_step() / cfg.bragg_momentum();
        assert!((resolution - 0.066).abs() < 0.001, "Δp/p_k = {resolution}");
        // ~3.4 GB per field.
        let gb = cfg.bytes_per_field() as f64 / 1e9;
        assert!((gb - 3.43).abs() < 0.01, "field size {gb} GB");
        // Total sequence duration ~1.2 ms.
        assert!(cfg.total_duration_s() > 0.9e-3 && cfg.total_duration_s() < 1.5e-3);
    }

    #[test]
    fn toml_round_trip() {
        let cfg = RunConfig::desk();
        let text = cfg.to_canonical_string();
        let back = RunConfig::from_toml_str(&text).unwrap();
        assert_eq!(back.grid.points_per_dim, cfg.grid.points_per_dim);
        assert_eq!(back.grid.spatial_step_m, cfg.grid.spatial_step_m);
        assert_eq!(back.sequence.t1_s, cfg.sequence.t1_s);
        assert_eq!(
            back.collision.interaction_strength_j,
            cfg.collision.interaction_strength_j
        );
        // Canonical text is stable (hashable).
        assert_eq!(text, back.to_canonical_string());
    }

    #[test]
    fn rejects_bad_timings() {
        let mut cfg = RunConfig::desk();
        cfg.sequence.t2_s = 0.5 * cfg.sequence.t1_s;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn memory_guard_trips_on_paper_scale_cap() {
        let mut cfg = RunConfig::paper_scale();
        cfg.limits.memory_cap_bytes = 1_000_000_000;
        match cfg.check_memory_guard() {
            Err(Error::MemoryGuard { required_bytes, .. }) => {
                assert!(required_bytes > 6_000_000_000);
            }
            other => panic!("expected memory guard, got {other:?}"),
        }
        cfg.limits.memory_cap_bytes = 16_000_000_000;
        cfg.check_memory_guard().unwrap();
    }

    #[test]
    fn parse_error_reports_offending_key() {
        let text = "[grid]\npoints_per_dim = \"many\"\n";
        let err = RunConfig::from_toml_str(text).unwrap_err();
        let msg = format!("{err}");
        assert!(msg.contains("points_per_dim"), "{msg}");
    }
}
