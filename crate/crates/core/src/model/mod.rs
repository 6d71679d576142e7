//! Domain types shared by the channel, energy and simulation layers.
//!
//! All quantities are SI internally: joules, seconds, watts, bits, meters.
//! Millijoules and kilobits only appear at the IO boundary (see [`units`]).

mod config;
mod geometry;
mod validate;

pub use config::{
    time_split, AdaptiveOffload, ChannelParams, EnergyCostModel, HarvestModel, IrsPanel,
    ScenarioConfig, ScenarioKind, SlotSplit, Switches, TaskModel, TimeFrame, UplinkModel,
    CONFIG_SCHEMA,
};
pub use geometry::{link_distances, LinkDistances, Point3, VehicleGeometry};
pub use validate::{validate_config, ValidatedConfig};

pub mod units {
    pub fn joules_to_mj(j: f64) -> f64 {
        j * 1e3
    }

    pub fn mj_to_joules(mj: f64) -> f64 {
        mj * 1e-3
    }

    pub fn bits_to_kbits(bits: u64) -> f64 {
        bits as f64 / 1e3
    }
}
