use serde::{Deserialize, Serialize};

use super::constants::HBAR;

/// Nondimensionalization used by the propagator.
///
/// Internally ħ = 1, the reference mass (species B) is 1, and the Bragg
/// momentum transfer p_k = ħ·k is 1, where k = |k₁ − k₂| is the lattice
/// spatial frequency. Equivalently: lengths in units of 1/k, times in units
/// of m_B/(ħk²), momenta in units of ħk, energies in units of ħ²k²/m_B.
/// Config files carry SI values; conversion happens once at the boundary.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct UnitSystem {
    /// Lattice spatial frequency k = |k₁ − k₂| (1/m).
    pub lattice_wavevector: f64,
    /// Reference mass, species B (kg).
    pub reference_mass: f64,
}

impl UnitSystem {
    pub fn new(lattice_wavevector: f64, reference_mass: f64) -> Self {
        assert!(lattice_wavevector > 0.0 && reference_mass > 0.0);
        Self {
            lattice_wavevector,
            reference_mass,
        }
    }

    /// Length unit 1/k (m).
    pub fn length(&self) -> f64 {
        1.0 / self.lattice_wavevector
    }

    /// Momentum unit ħk = p_k (kg·m/s).
    pub fn momentum(&self) -> f64 {
        HBAR * self.lattice_wavevector
    }

    /// Time unit m_B/(ħk²) (s).
    pub fn time(&self) -> f64 {
        self.reference_mass / (HBAR * self.lattice_wavevector * self.lattice_wavevector)
    }

    /// Energy unit ħ²k²/m_B (J).
    pub fn energy(&self) -> f64 {
        HBAR / self.time()
    }

    pub fn length_to_internal(&self, meters: f64) -> f64 {
        meters / self.length()
    }

    pub fn time_to_internal(&self, seconds: f64) -> f64 {
        seconds / self.time()
    }

    pub fn time_to_si(&self, internal: f64) -> f64 {
        internal * self.time()
    }

    pub fn momentum_to_internal(&self, si: f64) -> f64 {
        si / self.momentum()
    }

    pub fn mass_to_internal(&self, kg: f64) -> f64 {
        kg / self.reference_mass
    }

    pub fn energy_to_internal(&self, joules: f64) -> f64 {
        joules / self.energy()
    }

    pub fn angular_frequency_to_internal(&self, rad_s: f64) -> f64 {
        rad_s * self.time()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_are_consistent() {
        let u = UnitSystem::new(1.16e7, 6.6465e-27);
        // Energy unit equals momentum²/mass.
        let e = u.momentum() * u.momentum() / u.reference_mass;
        assert!((e - u.energy()).abs() / e < 1e-14);
        // Momentum unit equals mass·length/time.
        let p = u.reference_mass * u.length() / u.time();
        assert!((p - u.momentum()).abs() / p < 1e-14);
        // In internal units p_k = 1.
        assert!((u.momentum_to_internal(HBAR * 1.16e7) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn round_trips() {
        let u = UnitSystem::new(1.16e7, 6.6465e-27);
        let t = 1e-7;
        assert!((u.time_to_si(u.time_to_internal(t)) - t).abs() < 1e-20);
    }
}
