use crate::channel::{
    direct_gain, effective_channel, received_power, uplink_rate, ChannelRealization, LinkBudget,
};
use crate::energy::{
    energy_step, harvested_energy, local_compute_energy, offload_saved_energy, slot_ledger,
    transmission_energy, EnergyLedger, SlotComponents,
};
use crate::error::ModelError;
use crate::model::{
    link_distances, validate_config, IrsPanel, ScenarioConfig, SlotSplit, UplinkModel,
    ValidatedConfig,
};
use crate::offload::{decision_grid_classify, draw_task_size, split_task, ComputeMode, GridThresholds};

use super::streams::{derive_substream, StreamKey, StreamRole};

/// Battery trajectory of one Monte Carlo iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    /// `horizon + 1` battery levels, starting at the initial energy.
    pub energy_series: Vec<f64>,
    /// One ledger per slot; `ledger_series[t]` moves `energy_series[t]` to
    /// `energy_series[t + 1]`.
    pub ledger_series: Vec<EnergyLedger>,
    /// Index into `energy_series` where the battery first hit zero.
    pub depletion_slot: Option<usize>,
}

impl Trajectory {
    pub fn final_energy(&self) -> f64 {
        *self.energy_series.last().expect("series holds the initial energy")
    }

    pub fn total_gain(&self) -> f64 {
        self.ledger_series.iter().map(|l| l.e_g).sum()
    }

    pub fn total_consumption(&self) -> f64 {
        self.ledger_series.iter().map(|l| l.e_c).sum()
    }
}

/// Validated scenario with its static link budget precomputed.
#[derive(Debug, Clone)]
pub struct Simulator {
    config: ValidatedConfig,
    budget: LinkBudget,
    split: SlotSplit,
    panel: IrsPanel,
}

impl Simulator {
    pub fn new(config: &ScenarioConfig) -> Result<Self, ModelError> {
        let config = validate_config(config)?;
        let distances = link_distances(&config.geometry)?;
        let budget = LinkBudget::new(&distances, &config.channel);
        let split = config.time.split();
        let panel = if config.switches().irs {
            config.irs.clone()
        } else {
            IrsPanel {
                element_count: 0,
                phase_profile_rad: None,
                ..config.irs.clone()
            }
        };
        Ok(Simulator {
            config,
            budget,
            split,
            panel,
        })
    }

    pub fn config(&self) -> &ScenarioConfig {
        &self.config
    }

    pub fn link_budget(&self) -> &LinkBudget {
        &self.budget
    }

    fn key(&self, iteration: u64, slot: u64) -> StreamKey {
        StreamKey {
            master_seed: self.config.master_seed,
            scenario_id: self.config.stream_group,
            iteration,
            slot,
        }
    }

    /// Effective channel gain of one slot. Deterministic in
    /// `(seed, group, iteration, slot)`.
    pub fn slot_gain(&self, iteration: u64, slot: u64, buf: &mut ChannelRealization) -> Result<f64, ModelError> {
        let key = self.key(iteration, slot);
        let mut direct = derive_substream(key, StreamRole::Direct);
        let mut ap_irs = derive_substream(key, StreamRole::ApIrs);
        let mut irs_dev = derive_substream(key, StreamRole::IrsDevice);
        buf.redraw(
            &mut direct,
            &mut ap_irs,
            &mut irs_dev,
            self.panel.element_count,
            self.config.channel.freeze_ap_irs_fading,
        );
        if self.panel.element_count == 0 {
            Ok(direct_gain(buf, &self.budget))
        } else {
            effective_channel(buf, &self.panel, &self.budget)
        }
    }

    pub fn simulate(&self, iteration: u64) -> Result<Trajectory, ModelError> {
        let cfg = &*self.config;
        let switches = cfg.switches();
        let horizon = cfg.time.horizon_slots;
        let costs = &cfg.costs;
        let thresholds = GridThresholds {
            battery_low_joules: cfg.adaptive.battery_low_joules,
            deadline_tight_seconds: cfg.adaptive.deadline_tight_seconds,
        };
        let needs_rate = switches.offload && costs.uplink_model == UplinkModel::RateBased;

        let mut energy = cfg.initial_energy_joules;
        let mut energy_series = Vec::with_capacity(horizon + 1);
        let mut ledger_series = Vec::with_capacity(horizon);
        let mut depletion_slot = None;
        let mut realization = ChannelRealization::default();
        energy_series.push(energy);

        for slot in 0..horizon as u64 {
            let mut task_rng = derive_substream(self.key(iteration, slot), StreamRole::Task);
            let total = draw_task_size(&cfg.task, &mut task_rng);

            let mu = if !switches.offload {
                0.0
            } else if cfg.adaptive.enabled {
                match decision_grid_classify(energy, cfg.adaptive.deadline_slack_seconds, &thresholds).compute_mode {
                    ComputeMode::Offload => cfg.task.offload_fraction,
                    ComputeMode::LocalCompute => 0.0,
                }
            } else {
                cfg.task.offload_fraction
            };
            let task = split_task(total, mu);

            let gain = if switches.harvest || needs_rate {
                self.slot_gain(iteration, slot, &mut realization)?
            } else {
                0.0
            };

            let harvested = if switches.harvest {
                harvested_energy(received_power(cfg.ap_tx_power_watts, gain), self.split.energy, &cfg.harvest)
            } else {
                0.0
            };
            let rate = needs_rate.then(|| {
                uplink_rate(costs.device_tx_power_watts, gain, costs.uplink_bandwidth_hz, costs.noise_power_watts)
            });

            let ledger = slot_ledger(SlotComponents {
                harvested,
                offload_saved: offload_saved_energy(task.offloaded, costs),
                local_compute: local_compute_energy(task.local, costs),
                transmission: transmission_energy(task.offloaded, costs, rate)?,
                circuit: costs.circuit_energy_joules,
            });
            let step = energy_step(energy, &ledger);
            if step.depleted && depletion_slot.is_none() {
                depletion_slot = Some(energy_series.len());
            }
            energy = step.energy;
            energy_series.push(energy);
            ledger_series.push(ledger);
        }

        Ok(Trajectory {
            energy_series,
            ledger_series,
            depletion_slot,
        })
    }
}

/// Simulate iteration `iteration_index` of `config`.
pub fn simulate_trajectory(config: &ScenarioConfig, iteration_index: u64) -> Result<Trajectory, ModelError> {
    Simulator::new(config)?.simulate(iteration_index)
}
