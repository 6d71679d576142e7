//! CSV artifacts. Numbers are written with 9 significant digits in scientific
//! notation so identical runs give identical bytes on every platform.

use std::fs::File;
use std::path::Path;

use crate::engine::{AggregateResult, RatioPoint};
use crate::error::IoError;
use crate::model::units::joules_to_mj;

pub const TRAJECTORY_COLUMNS: [&str; 8] = [
    "slot",
    "time_s",
    "mean_E_mJ",
    "ci_low_mJ",
    "ci_high_mJ",
    "mean_Ev_mJ",
    "mean_Eo_mJ",
    "mean_Ec_mJ",
];

pub const RATIO_COLUMNS: [&str; 5] = ["l_bits", "scenario", "ratio_mean", "ratio_ci_low", "ratio_ci_high"];

pub fn fmt_num(x: f64) -> String {
    format!("{x:.8e}")
}

fn create(path: &Path) -> Result<csv::Writer<File>, IoError> {
    let file = File::create(path).map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(csv::Writer::from_writer(file))
}

/// Row `t` holds the mean battery after `t` slots and the mean ledger of the
/// slot that produced it (zeros for `t = 0`).
pub fn write_trajectory_csv(path: &Path, agg: &AggregateResult, tti_seconds: f64) -> Result<(), IoError> {
    let mut w = create(path)?;
    w.write_record(TRAJECTORY_COLUMNS)?;
    for t in 0..agg.mean_series.len() {
        let (ev, eo, ec) = match t.checked_sub(1).map(|i| &agg.mean_ledger[i]) {
            Some(l) => (l.e_v, l.e_o, l.e_c),
            None => (0.0, 0.0, 0.0),
        };
        w.write_record([
            t.to_string(),
            fmt_num(t as f64 * tti_seconds),
            fmt_num(joules_to_mj(agg.mean_series[t])),
            fmt_num(joules_to_mj(agg.ci_low[t])),
            fmt_num(joules_to_mj(agg.ci_high[t])),
            fmt_num(joules_to_mj(ev)),
            fmt_num(joules_to_mj(eo)),
            fmt_num(joules_to_mj(ec)),
        ])?;
    }
    w.flush().map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })
}

/// One row per `(l, scenario)`, grouped by scenario in the given order.
pub fn write_ratio_csv(path: &Path, series: &[(String, Vec<RatioPoint>)]) -> Result<(), IoError> {
    let mut w = create(path)?;
    w.write_record(RATIO_COLUMNS)?;
    for (label, points) in series {
        for p in points {
            w.write_record([
                p.l_bits.to_string(),
                label.clone(),
                fmt_num(p.ratio.mean),
                fmt_num(p.ratio.ci_low),
                fmt_num(p.ratio.ci_high),
            ])?;
        }
    }
    w.flush().map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })
}
