use serde::{Deserialize, Serialize};

use super::constants::HBAR;
use crate::{Error, Result};

/// Discretization of one spatial dimension plus the time step, SI units.
///
/// The same number of points is used along every one of the four grid axes.
/// `points_per_dim` must be odd so that zero momentum is itself a grid point
/// after the spectral transform.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GridSpec {
    pub points_per_dim: usize,
    /// Spatial step (m).
    pub spatial_step_m: f64,
    /// Propagation time step (s).
    pub time_step_s: f64,
}

impl GridSpec {
    pub fn new(points_per_dim: usize, spatial_step_m: f64, time_step_s: f64) -> Result<Self> {
        let g = Self {
            points_per_dim,
            spatial_step_m,
            time_step_s,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.points_per_dim < 8 {
            return Err(Error::Config(format!(
                "points_per_dim must be >= 8, got {}",
                self.points_per_dim
            )));
        }
        if self.points_per_dim % 2 == 0 {
            return Err(Error::Config(format!(
                "points_per_dim must be odd so zero momentum lies on the grid, got {}",
                self.points_per_dim
            )));
        }
        if !(self.spatial_step_m > 0.0) {
            return Err(Error::Config(format!(
                "spatial_step must be positive, got {}",
                self.spatial_step_m
            )));
        }
        if !(self.time_step_s > 0.0) {
            return Err(Error::Config(format!(
                "time_step must be positive, got {}",
                self.time_step_s
            )));
        }
        Ok(())
    }

    /// Momentum-space step 2πħ/(N·dx) (kg·m/s).
    pub fn momentum_step(&self) -> f64 {
        2.0 * std::f64::consts::PI * HBAR / (self.points_per_dim as f64 * self.spatial_step_m)
    }

    /// Box length N·dx (m).
    pub fn box_length(&self) -> f64 {
        self.points_per_dim as f64 * self.spatial_step_m
    }
}
