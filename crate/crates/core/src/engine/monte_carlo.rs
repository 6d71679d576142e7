use rayon::prelude::*;

use crate::energy::EnergyLedger;
use crate::error::ModelError;
use crate::model::ScenarioConfig;

use super::trajectory::{Simulator, Trajectory};

/// Two-sided 95% normal quantile.
pub const Z_95: f64 = 1.959_963_984_540_054;

/// Sample mean and 95% normal-approximation band of one quantity.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MeanBand {
    pub mean: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl MeanBand {
    pub fn half_width(&self) -> f64 {
        self.ci_high - self.mean
    }

    /// Sums are taken in slice order, so the result depends only on the
    /// values and not on how they were produced.
    pub fn from_samples(samples: &[f64]) -> MeanBand {
        let n = samples.len();
        if n == 0 {
            return MeanBand::default();
        }
        let mean = samples.iter().sum::<f64>() / n as f64;
        if n == 1 {
            return MeanBand { mean, ci_low: mean, ci_high: mean };
        }
        let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1) as f64;
        let half = Z_95 * (var / n as f64).sqrt();
        MeanBand {
            mean,
            ci_low: mean - half,
            ci_high: mean + half,
        }
    }
}

/// Per-slot averages over all iterations.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateResult {
    /// Mean battery level, `horizon + 1` entries.
    pub mean_series: Vec<f64>,
    pub ci_low: Vec<f64>,
    pub ci_high: Vec<f64>,
    /// Mean ledger per slot, `horizon` entries.
    pub mean_ledger: Vec<EnergyLedger>,
    /// Mean over iterations of each trajectory's average per-slot `e_g − e_c`.
    pub mean_net_per_slot: MeanBand,
    /// Share of iterations whose battery hit zero.
    pub depletion_rate: f64,
    pub iterations: usize,
    pub master_seed: u64,
}

impl AggregateResult {
    pub fn final_energy(&self) -> MeanBand {
        let last = self.mean_series.len() - 1;
        MeanBand {
            mean: self.mean_series[last],
            ci_low: self.ci_low[last],
            ci_high: self.ci_high[last],
        }
    }

    pub fn mean_harvest_per_slot(&self) -> f64 {
        if self.mean_ledger.is_empty() {
            return 0.0;
        }
        self.mean_ledger.iter().map(|l| l.e_v).sum::<f64>() / self.mean_ledger.len() as f64
    }
}

/// Run all iterations of `config` and average them.
///
/// Uses the ambient rayon pool. The output is bit-identical for any number of
/// worker threads.
pub fn monte_carlo(config: &ScenarioConfig) -> Result<AggregateResult, ModelError> {
    let sim = Simulator::new(config)?;
    let trajectories = run_all(&sim)?;
    Ok(aggregate(&trajectories, sim.config()))
}

/// [`monte_carlo`] on a dedicated pool of `workers` threads.
pub fn monte_carlo_with_workers(config: &ScenarioConfig, workers: usize) -> Result<AggregateResult, ModelError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| monte_carlo(config))
}

pub(crate) fn run_all(sim: &Simulator) -> Result<Vec<Trajectory>, ModelError> {
    (0..sim.config().iterations as u64)
        .into_par_iter()
        .map(|i| sim.simulate(i))
        .collect()
}

fn aggregate(trajectories: &[Trajectory], cfg: &ScenarioConfig) -> AggregateResult {
    let n = trajectories.len();
    let horizon = cfg.time.horizon_slots;
    let mut column = vec![0.0; n];

    let mut mean_series = Vec::with_capacity(horizon + 1);
    let mut ci_low = Vec::with_capacity(horizon + 1);
    let mut ci_high = Vec::with_capacity(horizon + 1);
    for t in 0..=horizon {
        for (c, tr) in column.iter_mut().zip(trajectories) {
            *c = tr.energy_series[t];
        }
        let band = MeanBand::from_samples(&column);
        mean_series.push(band.mean);
        ci_low.push(band.ci_low.min(band.mean));
        ci_high.push(band.ci_high.max(band.mean));
    }

    let inv = 1.0 / n as f64;
    let mean_ledger = (0..horizon)
        .map(|t| {
            let mut acc = EnergyLedger::default();
            for tr in trajectories {
                let l = &tr.ledger_series[t];
                acc.e_v += l.e_v;
                acc.e_o += l.e_o;
                acc.e_lc += l.e_lc;
                acc.e_tr += l.e_tr;
                acc.e_ckt += l.e_ckt;
                acc.e_g += l.e_g;
                acc.e_c += l.e_c;
            }
            EnergyLedger {
                e_v: acc.e_v * inv,
                e_o: acc.e_o * inv,
                e_lc: acc.e_lc * inv,
                e_tr: acc.e_tr * inv,
                e_ckt: acc.e_ckt * inv,
                e_g: acc.e_g * inv,
                e_c: acc.e_c * inv,
            }
        })
        .collect();

    let nets: Vec<f64> = trajectories
        .iter()
        .map(|tr| {
            if horizon == 0 {
                0.0
            } else {
                tr.ledger_series.iter().map(EnergyLedger::net).sum::<f64>() / horizon as f64
            }
        })
        .collect();

    AggregateResult {
        mean_series,
        ci_low,
        ci_high,
        mean_ledger,
        mean_net_per_slot: MeanBand::from_samples(&nets),
        depletion_rate: trajectories.iter().filter(|t| t.depletion_slot.is_some()).count() as f64 * inv,
        iterations: n,
        master_seed: cfg.master_seed,
    }
}
