//! Physical constants, species parameters, grid and run configuration, and
//! the collision kinematics every other module consumes.

pub mod constants;

mod config;
mod geometry;
mod grid_spec;
mod pulse;
mod species;
mod units;

pub use config::{
    CollisionConfig, LatticeConfig, LimitsConfig, MixingSettings, OutputConfig, RunConfig,
    SequenceConfig, SpeciesPair, StatePrepMode, TrapConfig,
};
pub use geometry::{derive_collision_geometry, CollisionGeometry, Halo, Momentum2, SelectedModes};
pub use grid_spec::GridSpec;
pub use pulse::{detuning_for_transition, Envelope, PulseSpec};
pub use species::{Species, SpeciesParams};
pub use units::UnitSystem;
