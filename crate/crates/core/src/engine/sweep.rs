use rayon::prelude::*;

use crate::error::ModelError;
use crate::model::{ScenarioConfig, TaskModel};

use super::monte_carlo::MeanBand;
use super::trajectory::Simulator;

/// Gain-to-consumption ratio at one fixed data size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioPoint {
    pub l_bits: u64,
    pub ratio: MeanBand,
}

/// For every data size `l`, fix the task at `l` bits per slot and average the
/// per-iteration ratio `Σe_g / Σe_c` over all iterations.
///
/// Every sweep point reuses the same random streams, so differences between
/// points come from `l` alone.
pub fn ratio_sweep(config: &ScenarioConfig, data_sizes: &[u64]) -> Result<Vec<RatioPoint>, ModelError> {
    if data_sizes.is_empty() {
        return Err(ModelError::EmptySweep);
    }
    data_sizes
        .iter()
        .map(|&l| {
            let mut cfg = config.clone();
            cfg.task = TaskModel::fixed(l, config.task.offload_fraction);
            let sim = Simulator::new(&cfg)?;
            let ratios: Vec<f64> = (0..cfg.iterations as u64)
                .into_par_iter()
                .map(|i| {
                    let t = sim.simulate(i)?;
                    let consumed = t.total_consumption();
                    if consumed == 0.0 {
                        return Err(ModelError::IllPosedRatio);
                    }
                    Ok(t.total_gain() / consumed)
                })
                .collect::<Result<_, _>>()?;
            Ok(RatioPoint {
                l_bits: l,
                ratio: MeanBand::from_samples(&ratios),
            })
        })
        .collect()
}
