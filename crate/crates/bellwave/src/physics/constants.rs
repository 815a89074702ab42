//! Physical constants in SI units (CODATA 2018).

/// Reduced Planck constant (J·s)
pub const HBAR: f64 = 1.054_571_817e-34;

/// Speed of light in vacuum (m/s)
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Atomic mass unit (kg)
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;

/// Mass of the helion-bearing isotope ³He (u)
pub const MASS_HE3_U: f64 = 3.016_029_3;

/// Mass of ⁴He (u)
pub const MASS_HE4_U: f64 = 4.002_603_2;

/// 2³S₁ → 2³P₀ transition frequency of ³He* (Hz)
pub const TRANSITION_FREQUENCY_HE3: f64 = 276.7322e12;

/// 2³S₁ → 2³P₀ transition frequency of ⁴He* (Hz)
pub const TRANSITION_FREQUENCY_HE4: f64 = 276.6986e12;

/// ³He–⁴He s-wave scattering length (m)
pub const SCATTERING_LENGTH_A34: f64 = 29e-9;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masses_physical() {
        assert!(MASS_HE3_U > 3.0 && MASS_HE3_U < 3.1);
        assert!(MASS_HE4_U > 4.0 && MASS_HE4_U < 4.1);
        assert!(MASS_HE3_U < MASS_HE4_U);
    }

    #[test]
    fn transition_frequencies_close_but_distinct() {
        // The isotope shift is what makes species-selective pulses possible.
        let shift = TRANSITION_FREQUENCY_HE3 - TRANSITION_FREQUENCY_HE4;
        assert!(shift > 30e9 && shift < 40e9);
    }

    #[test]
    fn bragg_wavelength_near_1083nm() {
        let mean = 0.5 * (TRANSITION_FREQUENCY_HE3 + TRANSITION_FREQUENCY_HE4);
        let lambda = SPEED_OF_LIGHT / mean;
        assert!((lambda - 1.083e-6).abs() < 2e-9);
    }
}
