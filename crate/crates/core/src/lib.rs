//! Monte Carlo simulation of a battery-powered device riding in a vehicle
//! whose access point time-shares RF energy transfer with data, reflects its
//! signal off an intelligent reflecting surface, and hosts an edge server the
//! device can offload computation to.
//!
//! The crate is organised bottom-up:
//!
//! - [`model`]: configuration types, geometry and validation
//! - [`channel`]: pathloss, Rayleigh fading and the reflected cascade
//! - [`energy`]: harvesting, compute/offload/uplink costs, battery recursion
//! - [`offload`]: task sizes, offload splitting, the battery/deadline grid
//! - [`engine`]: trajectories, Monte Carlo averaging, sweeps and presets
//! - [`io`]: JSON configs, CSV/SVG artifacts and run manifests
//!
//! ```no_run
//! use irs_mec_wet::engine::{monte_carlo, Preset};
//!
//! let base = Preset::Fig4.base_config();
//! for run in Preset::Fig4.runs(&base) {
//!     let agg = monte_carlo(&run.config).unwrap();
//!     println!("{}: {:.3} mJ", run.label, agg.final_energy().mean * 1e3);
//! }
//! ```

pub mod channel;
pub mod energy;
pub mod engine;
pub mod error;
pub mod io;
pub mod model;
pub mod offload;

pub use error::{ConfigErrors, IoError, ModelError, Violation};
