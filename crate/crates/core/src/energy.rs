//! Device energy bookkeeping for one slot and the battery recursion.

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::model::{EnergyCostModel, HarvestModel, UplinkModel};

/// Energy harvested during the energy sub-slot.
///
/// Zero below the sensitivity `p_th` (harvesting succeeds at equality),
/// otherwise `min(η·P_rx, P_max)·τ_v`.
pub fn harvested_energy(p_rx: f64, energy_slot: f64, model: &HarvestModel) -> f64 {
    if p_rx < model.p_th_watts {
        return 0.0;
    }
    (model.efficiency * p_rx).min(model.p_max_watts) * energy_slot
}

/// CPU energy `ξ·ψ³·l³` for processing `bits` locally.
pub fn local_compute_energy(bits: u64, costs: &EnergyCostModel) -> f64 {
    let cycles = costs.cycles_per_bit * bits as f64;
    costs.cpu_capacitance * cycles * cycles * cycles
}

/// CPU energy the device avoids by sending `bits` to the edge server.
pub fn offload_saved_energy(bits: u64, costs: &EnergyCostModel) -> f64 {
    local_compute_energy(bits, costs)
}

/// Uplink energy for offloading `bits`.
///
/// `uplink_rate` is only consulted by [`UplinkModel::RateBased`].
pub fn transmission_energy(
    bits: u64,
    costs: &EnergyCostModel,
    uplink_rate: Option<f64>,
) -> Result<f64, ModelError> {
    if bits == 0 {
        return Ok(0.0);
    }
    match costs.uplink_model {
        UplinkModel::PerBit => Ok(costs.uplink_energy_per_bit_joules * bits as f64),
        UplinkModel::RateBased => match uplink_rate {
            Some(rate) if rate > 0.0 => Ok(costs.device_tx_power_watts * bits as f64 / rate),
            _ => Err(ModelError::UplinkOutage(bits)),
        },
    }
}

/// Per-slot gain and consumption breakdown, in joules.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EnergyLedger {
    pub e_v: f64,
    pub e_o: f64,
    pub e_lc: f64,
    pub e_tr: f64,
    pub e_ckt: f64,
    pub e_g: f64,
    pub e_c: f64,
}

/// Component energies for one slot before summation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SlotComponents {
    pub harvested: f64,
    pub offload_saved: f64,
    pub local_compute: f64,
    pub transmission: f64,
    pub circuit: f64,
}

/// Assemble the ledger; gain and consumption totals are exact sums of their
/// components.
pub fn slot_ledger(c: SlotComponents) -> EnergyLedger {
    EnergyLedger {
        e_v: c.harvested,
        e_o: c.offload_saved,
        e_lc: c.local_compute,
        e_tr: c.transmission,
        e_ckt: c.circuit,
        e_g: c.harvested + c.offload_saved,
        e_c: c.circuit + c.local_compute + c.transmission,
    }
}

impl EnergyLedger {
    pub fn net(&self) -> f64 {
        self.e_g - self.e_c
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepOutcome {
    pub energy: f64,
    /// The zero floor was hit this step.
    pub depleted: bool,
}

/// `E[t+1] = max(0, E[t] + e_g − e_c)`.
pub fn energy_step(energy: f64, ledger: &EnergyLedger) -> StepOutcome {
    let next = energy + ledger.e_g - ledger.e_c;
    if next < 0.0 {
        StepOutcome {
            energy: 0.0,
            depleted: true,
        }
    } else {
        StepOutcome {
            energy: next,
            depleted: false,
        }
    }
}

/// Battery level and deadline slack, as seen by the scheduler.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviceState {
    pub battery_joules: f64,
    pub deadline_slack_seconds: f64,
}
