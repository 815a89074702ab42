use std::path::PathBuf;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid physical constants, grid parameters, or config file contents.
    #[error("configuration error: {0}")]
    Config(String),

    /// A pulse was requested for momenta the lattice cannot couple.
    #[error("sequencing error: {0}")]
    Sequencing(String),

    /// Wavepacket width incompatible with the grid resolution.
    #[error("resolution error: {0}")]
    Resolution(String),

    /// NaN/Inf appeared in the field during propagation.
    #[error(
        "numerical blowup at t = {time:.6}: {non_finite} non-finite samples \
         (max |V| dt / hbar = {max_phase:.3})"
    )]
    NumericalBlowup {
        time: f64,
        non_finite: usize,
        max_phase: f64,
    },

    /// Snapshot file is not a valid wavefunction dump.
    #[error("snapshot format error in {path}: {reason}")]
    SnapshotFormat { path: PathBuf, reason: String },

    /// A pulse calibration fell outside its tolerance.
    #[error("calibration error: {0}")]
    Calibration(String),

    /// Mode regions overlap or miss the grid.
    #[error("geometry error: {0}")]
    Geometry(String),

    /// Analysis ran on a state without usable signal.
    #[error("analysis error: {0}")]
    Analysis(String),

    /// A sequence stage aborted; the last good snapshot is reported.
    #[error("stage '{stage}' failed: {source}")]
    Stage {
        stage: String,
        last_snapshot: Option<PathBuf>,
        #[source]
        source: Box<Error>,
    },

    /// Estimated memory for the requested grid exceeds the configured cap.
    #[error(
        "memory guard: run needs ~{required_bytes} bytes for wavefunction storage, \
         cap is {cap_bytes} bytes; lower points_per_dim or raise the cap"
    )]
    MemoryGuard { required_bytes: u64, cap_bytes: u64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
