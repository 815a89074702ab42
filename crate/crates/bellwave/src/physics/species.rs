use serde::{Deserialize, Serialize};

use super::constants;
use crate::{Error, Result};

/// Which of the two atomic species an operation addresses.
///
/// `A` is the light fermionic isotope (³He*), `B` the heavier bosonic one
/// (⁴He*). `B` is the species that receives the initial momentum splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Species {
    A,
    B,
}

impl Species {
    pub fn other(self) -> Species {
        match self {
            Species::A => Species::B,
            Species::B => Species::A,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Species::A => "A",
            Species::B => "B",
        }
    }
}

impl std::fmt::Display for Species {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Physical constants and laser parameters for one species, SI units.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SpeciesParams {
    pub label: Species,
    /// Atomic mass (kg).
    pub mass_kg: f64,
    /// Optical transition frequency addressed by this species' Bragg beams (Hz).
    pub transition_frequency_hz: f64,
    /// Two-photon Rabi frequency of a nominal pulse (rad/s).
    pub rabi_frequency_rad_s: f64,
    /// Nominal pulse duration (s); a π pulse at the nominal Rabi frequency.
    pub pulse_duration_s: f64,
}

impl SpeciesParams {
    pub fn new(
        label: Species,
        mass_kg: f64,
        transition_frequency_hz: f64,
        rabi_frequency_rad_s: f64,
        pulse_duration_s: f64,
    ) -> Result<Self> {
        let p = Self {
            label,
            mass_kg,
            transition_frequency_hz,
            rabi_frequency_rad_s,
            pulse_duration_s,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mass_kg > 0.0) {
            return Err(Error::Config(format!(
                "species {}: mass must be positive, got {}",
                self.label, self.mass_kg
            )));
        }
        if !(self.transition_frequency_hz > 0.0) {
            return Err(Error::Config(format!(
                "species {}: transition frequency must be positive, got {}",
                self.label, self.transition_frequency_hz
            )));
        }
        if !(self.pulse_duration_s > 0.0) {
            return Err(Error::Config(format!(
                "species {}: pulse duration must be positive, got {}",
                self.label, self.pulse_duration_s
            )));
        }
        Ok(())
    }

    /// The fermionic ³He* species with the pulse duration quoted for it (50 µs).
    pub fn helium_3() -> Self {
        let duration = 50e-6;
        Self {
            label: Species::A,
            mass_kg: constants::MASS_HE3_U * constants::ATOMIC_MASS_UNIT,
            transition_frequency_hz: constants::TRANSITION_FREQUENCY_HE3,
            rabi_frequency_rad_s: std::f64::consts::PI / duration,
            pulse_duration_s: duration,
        }
    }

    /// The bosonic ⁴He* species with the pulse duration quoted for it (66 µs).
    pub fn helium_4() -> Self {
        let duration = 66e-6;
        Self {
            label: Species::B,
            mass_kg: constants::MASS_HE4_U * constants::ATOMIC_MASS_UNIT,
            transition_frequency_hz: constants::TRANSITION_FREQUENCY_HE4,
            rabi_frequency_rad_s: std::f64::consts::PI / duration,
            pulse_duration_s: duration,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        SpeciesParams::helium_3().validate().unwrap();
        SpeciesParams::helium_4().validate().unwrap();
    }

    #[test]
    fn label_mapping() {
        // A is the fermion (lighter), B the boson.
        let a = SpeciesParams::helium_3();
        let b = SpeciesParams::helium_4();
        assert_eq!(a.label, Species::A);
        assert_eq!(b.label, Species::B);
        assert!(a.mass_kg < b.mass_kg);
    }

    #[test]
    fn rejects_nonpositive_mass() {
        let mut p = SpeciesParams::helium_3();
        p.mass_kg = -1.0;
        assert!(p.validate().is_err());
        p.mass_kg = 0.0;
        assert!(p.validate().is_err());
    }

    #[test]
    fn nominal_pulse_is_pi() {
        let p = SpeciesParams::helium_4();
        let area = p.rabi_frequency_rad_s * p.pulse_duration_s;
        assert!((area - std::f64::consts::PI).abs() < 1e-12);
    }
}
