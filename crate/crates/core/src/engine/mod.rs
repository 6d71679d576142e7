//! Time-stepped trajectories, Monte Carlo averaging and parameter sweeps.
//!
//! Randomness is drawn from counter-based substreams keyed by
//! `(seed, stream group, iteration, slot, role)`. Scenarios in the same group
//! therefore see identical task sizes and channel draws (common random
//! numbers), and every reduction runs in iteration order so results do not
//! depend on the number of worker threads.

mod monte_carlo;
mod presets;
mod streams;
mod sweep;
mod trajectory;

pub use monte_carlo::{monte_carlo, monte_carlo_with_workers, AggregateResult, MeanBand, Z_95};
pub use presets::{Preset, PresetRun};
pub use streams::{derive_substream, StreamKey, StreamRole, SubStream};
pub use sweep::{ratio_sweep, RatioPoint};
pub use trajectory::{simulate_trajectory, Simulator, Trajectory};
