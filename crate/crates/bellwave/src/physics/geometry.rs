use serde::{Deserialize, Serialize};

use super::species::SpeciesParams;
use crate::{Error, Result};

/// A 2D momentum vector in the (p_x, p_z) plane of one particle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Momentum2 {
    pub x: f64,
    pub z: f64,
}

impl Momentum2 {
    pub fn new(x: f64, z: f64) -> Self {
        Self { x, z }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.z)
    }
}

impl std::ops::Add for Momentum2 {
    type Output = Momentum2;
    fn add(self, rhs: Momentum2) -> Momentum2 {
        Momentum2::new(self.x + rhs.x, self.z + rhs.z)
    }
}

impl std::ops::Sub for Momentum2 {
    type Output = Momentum2;
    fn sub(self, rhs: Momentum2) -> Momentum2 {
        Momentum2::new(self.x - rhs.x, self.z - rhs.z)
    }
}

/// Momentum-space geometry of the scattering halos for an elastic collision
/// between a `B` atom carrying `p_k` and an `A` atom at rest.
///
/// Both halos are circles of the same radius m_A·p_k/(m_A+m_B): the A halo is
/// centered at that same value (so it passes through zero momentum), the B
/// halo at p_k minus it (so it passes through p_k). Centers are on the z axis;
/// all magnitudes are in whatever unit `p_k` was given in.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CollisionGeometry {
    /// Bragg momentum transfer magnitude ħ|k₂−k₁|.
    pub p_k: f64,
    /// z-offset of the A halo center.
    pub halo_center_a: f64,
    /// z-offset of the B halo center.
    pub halo_center_b: f64,
    /// Common halo radius.
    pub halo_radius: f64,
}

/// Which of the two halos a point is generated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Halo {
    A,
    B,
}

/// Solves the elastic two-body kinematics for (B at p_k) + (A at rest).
///
/// Momentum conservation fixes p_A + p_B = p_k per collision; energy
/// conservation then puts p_A on a circle through the origin.
pub fn derive_collision_geometry(
    species_a: &SpeciesParams,
    species_b: &SpeciesParams,
    p_k: f64,
) -> Result<CollisionGeometry> {
    if !(species_a.mass_kg > 0.0) || !(species_b.mass_kg > 0.0) {
        return Err(Error::Config(
            "collision geometry needs positive masses".into(),
        ));
    }
    if !(p_k > 0.0) {
        return Err(Error::Config(format!(
            "collision geometry needs positive momentum transfer, got {p_k}"
        )));
    }
    let mass_fraction = species_a.mass_kg / (species_a.mass_kg + species_b.mass_kg);
    let center_a = mass_fraction * p_k;
    Ok(CollisionGeometry {
        p_k,
        halo_center_a: center_a,
        halo_center_b: p_k - center_a,
        halo_radius: center_a,
    })
}

impl CollisionGeometry {
    /// Point on the chosen halo of the +p_k collision, parametrized by the
    /// angle from the +z axis. The −p_k halos are the z-mirror images.
    pub fn halo_point(&self, halo: Halo, angle: f64) -> Momentum2 {
        let center = match halo {
            Halo::A => self.halo_center_a,
            Halo::B => self.halo_center_b,
        };
        let sign = match halo {
            Halo::A => 1.0,
            // The B partner sits diametrically opposite the A atom on its own
            // halo: p_B = p_k − p_A.
            Halo::B => -1.0,
        };
        Momentum2::new(
            sign * self.halo_radius * angle.sin(),
            center + sign * self.halo_radius * angle.cos(),
        )
    }

    /// Centers of the four selected joint modes (A↖, A↙, B↗, B↘).
    ///
    /// The pair is chosen symmetric about p_z = 0 with a fixed separation of
    /// p_k along z within each species, so one lattice can couple both modes
    /// of a species with zero two-photon detuning. Requires m_A ≥ m_B/3 for
    /// the halo circles to reach |p_z| = p_k/2.
    pub fn selected_modes(&self) -> Result<SelectedModes> {
        let c = self.halo_center_a / self.p_k;
        let discriminant = c - 0.25;
        if discriminant <= 0.0 {
            return Err(Error::Geometry(format!(
                "mass ratio too small for the symmetric mode geometry \
                 (m_A/(m_A+m_B) = {c:.4} must exceed 1/4)"
            )));
        }
        let px = self.p_k * discriminant.sqrt();
        let pz = 0.5 * self.p_k;
        Ok(SelectedModes {
            a_up: Momentum2::new(-px, pz),
            a_down: Momentum2::new(-px, -pz),
            b_up: Momentum2::new(px, pz),
            b_down: Momentum2::new(px, -pz),
        })
    }

    /// Total kinetic energy carried by a scattered halo pair, for the energy
    /// conservation check. `angle` selects the A point; B is its partner.
    pub fn pair_energy(&self, species_a: &SpeciesParams, species_b: &SpeciesParams, angle: f64) -> f64 {
        let pa = self.halo_point(Halo::A, angle);
        let pb = self.halo_point(Halo::B, angle);
        pa.norm().powi(2) / (2.0 * species_a.mass_kg) + pb.norm().powi(2) / (2.0 * species_b.mass_kg)
    }
}

/// The four joint-mode momentum centers used for the Bell analysis: the A
/// modes from the upper/lower halos and their back-to-back B partners.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SelectedModes {
    pub a_up: Momentum2,
    pub a_down: Momentum2,
    pub b_up: Momentum2,
    pub b_down: Momentum2,
}
