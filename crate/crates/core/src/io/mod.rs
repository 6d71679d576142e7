//! File formats and the experiment runner: JSON configs, dotted-path
//! overrides, CSV artifacts (mJ / bits at this boundary), SVG charts and the
//! run manifest.

mod chart;
mod config_file;
mod csv_out;
mod experiment;
mod overrides;

pub use chart::{emit_chart, ChartSource, ChartSpec};
pub use config_file::{load_config, parse_config, save_config};
pub use csv_out::{fmt_num, write_ratio_csv, write_trajectory_csv, RATIO_COLUMNS, TRAJECTORY_COLUMNS};
pub use experiment::{
    load_manifest, replay_manifest, resolve_config, run_experiment, ExperimentRequest, RunManifest,
    Source, MANIFEST_FILE, MANIFEST_SCHEMA,
};
pub use overrides::{apply_overrides, Override};
