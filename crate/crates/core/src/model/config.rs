use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::geometry::VehicleGeometry;

/// Schema tag required at the top of every JSON config.
pub const CONFIG_SCHEMA: &str = "irs-mec-wet/config/v1";

/// Which energy mechanisms are active for the device.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ScenarioKind {
    /// No harvesting, no offloading.
    Baseline,
    /// Harvesting over the direct AP link only.
    WetOnly,
    /// Offloading only.
    MecOnly,
    /// Harvesting with the reflecting surface, no offloading.
    IrsWet,
    /// Harvesting with the reflecting surface plus offloading.
    IrsMecWet,
    /// Harvesting over the direct link plus offloading.
    MecWet,
}

/// The switches a scenario kind forces on the simulator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Switches {
    pub harvest: bool,
    pub offload: bool,
    pub irs: bool,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 6] = [
        ScenarioKind::Baseline,
        ScenarioKind::WetOnly,
        ScenarioKind::MecOnly,
        ScenarioKind::IrsWet,
        ScenarioKind::IrsMecWet,
        ScenarioKind::MecWet,
    ];

    pub fn switches(self) -> Switches {
        let (harvest, offload, irs) = match self {
            ScenarioKind::Baseline => (false, false, false),
            ScenarioKind::WetOnly => (true, false, false),
            ScenarioKind::MecOnly => (false, true, false),
            ScenarioKind::IrsWet => (true, false, true),
            ScenarioKind::IrsMecWet => (true, true, true),
            ScenarioKind::MecWet => (true, true, false),
        };
        Switches {
            harvest,
            offload,
            irs,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::Baseline => "Baseline",
            ScenarioKind::WetOnly => "WetOnly",
            ScenarioKind::MecOnly => "MecOnly",
            ScenarioKind::IrsWet => "IrsWet",
            ScenarioKind::IrsMecWet => "IrsMecWet",
            ScenarioKind::MecWet => "MecWet",
        }
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScenarioKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScenarioKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown scenario kind `{s}`"))
    }
}

/// Reflecting surface: element count, amplitude and phase setting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrsPanel {
    /// Zero means no surface.
    pub element_count: usize,
    pub amplitude: f64,
    /// Common phase shift applied by every element.
    pub phase_shift_rad: f64,
    /// Optional per-element phases overriding the common one; length must
    /// equal `element_count`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase_profile_rad: Option<Vec<f64>>,
}

impl Default for IrsPanel {
    fn default() -> Self {
        IrsPanel {
            element_count: 64,
            amplitude: 1.0,
            phase_shift_rad: FRAC_PI_2,
            phase_profile_rad: None,
        }
    }
}

impl IrsPanel {
    pub fn with_elements(mut self, n: usize) -> Self {
        self.element_count = n;
        self
    }

    pub fn element_phase(&self, n: usize) -> f64 {
        match &self.phase_profile_rad {
            Some(p) => p[n],
            None => self.phase_shift_rad,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    /// Pathloss exponent of the AP↔IRS line-of-sight link.
    pub alpha_los: f64,
    /// Pathloss exponent of the AP↔device and IRS↔device links.
    pub alpha_nlos: f64,
    pub reference_distance_m: f64,
    /// Fix the AP↔IRS small-scale coefficients to 1.
    #[serde(default)]
    pub freeze_ap_irs_fading: bool,
}

impl Default for ChannelParams {
    fn default() -> Self {
        ChannelParams {
            alpha_los: 2.4,
            alpha_nlos: 3.0,
            reference_distance_m: 1.0,
            freeze_ap_irs_fading: false,
        }
    }
}

/// One TTI split into an energy sub-slot and an information sub-slot.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeFrame {
    pub tti_seconds: f64,
    /// Share of the TTI spent on energy transfer.
    pub energy_fraction: f64,
    pub horizon_slots: usize,
}

impl Default for TimeFrame {
    fn default() -> Self {
        TimeFrame {
            tti_seconds: 1e-3,
            energy_fraction: 0.25,
            horizon_slots: 100,
        }
    }
}

/// Durations of the energy and information sub-slots, in seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlotSplit {
    pub energy: f64,
    pub information: f64,
}

impl TimeFrame {
    /// `(γτ, (1 − γ)τ)` with `energy + information == τ` exactly in floating
    /// point. When rounding makes that impossible for the nearest `γτ`, the
    /// energy part moves by one ulp.
    pub fn split(&self) -> SlotSplit {
        let tau = self.tti_seconds;
        let nearest = self.energy_fraction * tau;
        for energy in [nearest, nearest.next_down(), nearest.next_up()] {
            let info = tau - energy;
            for information in [info, info.next_up(), info.next_down()] {
                if energy + information == tau {
                    return SlotSplit { energy, information };
                }
            }
        }
        SlotSplit {
            energy: nearest,
            information: tau - nearest,
        }
    }
}

/// Free-function form of [`TimeFrame::split`].
pub fn time_split(time: &TimeFrame) -> SlotSplit {
    time.split()
}

/// Thresholded, saturating RF-to-DC harvester.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarvestModel {
    pub p_th_watts: f64,
    pub p_max_watts: f64,
    pub efficiency: f64,
}

impl Default for HarvestModel {
    fn default() -> Self {
        HarvestModel {
            p_th_watts: 1e-5,
            p_max_watts: 0.04,
            efficiency: 0.8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UplinkModel {
    /// Fixed energy per offloaded bit.
    PerBit,
    /// Transmit power times airtime at the Shannon rate of the slot's channel.
    RateBased,
}

/// Device-side energy constants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyCostModel {
    /// Effective switched capacitance, J/cycle³.
    pub cpu_capacitance: f64,
    pub cycles_per_bit: f64,
    pub circuit_energy_joules: f64,
    pub uplink_energy_per_bit_joules: f64,
    pub device_tx_power_watts: f64,
    pub uplink_bandwidth_hz: f64,
    pub noise_power_watts: f64,
    #[serde(default = "default_uplink_model")]
    pub uplink_model: UplinkModel,
}

fn default_uplink_model() -> UplinkModel {
    UplinkModel::PerBit
}

impl Default for EnergyCostModel {
    fn default() -> Self {
        EnergyCostModel {
            cpu_capacitance: 1e-28,
            cycles_per_bit: 1e3,
            circuit_energy_joules: 2e-6,
            uplink_energy_per_bit_joules: 5e-11,
            device_tx_power_watts: 0.01,
            uplink_bandwidth_hz: 1e6,
            noise_power_watts: 1e-12,
            uplink_model: UplinkModel::PerBit,
        }
    }
}

/// Per-TTI data generation and offload share.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskModel {
    pub l_min_bits: u64,
    pub l_max_bits: u64,
    pub offload_fraction: f64,
}

impl Default for TaskModel {
    fn default() -> Self {
        TaskModel {
            l_min_bits: 40_000,
            l_max_bits: 50_000,
            offload_fraction: 0.75,
        }
    }
}

impl TaskModel {
    pub fn fixed(l_bits: u64, offload_fraction: f64) -> Self {
        TaskModel {
            l_min_bits: l_bits,
            l_max_bits: l_bits,
            offload_fraction,
        }
    }
}

/// Battery/deadline grid used to pick μ per slot when enabled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdaptiveOffload {
    pub enabled: bool,
    pub battery_low_joules: f64,
    pub deadline_tight_seconds: f64,
    /// Deadline slack the device reports every slot.
    pub deadline_slack_seconds: f64,
}

impl Default for AdaptiveOffload {
    fn default() -> Self {
        AdaptiveOffload {
            enabled: false,
            battery_low_joules: 3e-4,
            deadline_tight_seconds: 10.0 * TimeFrame::default().tti_seconds,
            deadline_slack_seconds: 20.0 * TimeFrame::default().tti_seconds,
        }
    }
}

/// Everything needed to run one scenario.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioConfig {
    pub schema: String,
    pub scenario_kind: ScenarioKind,
    pub geometry: VehicleGeometry,
    pub irs: IrsPanel,
    pub channel: ChannelParams,
    pub time: TimeFrame,
    pub harvest: HarvestModel,
    pub costs: EnergyCostModel,
    pub task: TaskModel,
    #[serde(default)]
    pub adaptive: AdaptiveOffload,
    pub ap_tx_power_watts: f64,
    pub initial_energy_joules: f64,
    pub iterations: usize,
    pub master_seed: u64,
    /// Random-stream group. Scenarios sharing a group (and seed) see the same
    /// task sizes and channel draws.
    #[serde(default)]
    pub stream_group: u64,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            schema: CONFIG_SCHEMA.to_string(),
            scenario_kind: ScenarioKind::IrsMecWet,
            geometry: VehicleGeometry::default(),
            irs: IrsPanel::default(),
            channel: ChannelParams::default(),
            time: TimeFrame::default(),
            harvest: HarvestModel::default(),
            costs: EnergyCostModel::default(),
            task: TaskModel::default(),
            adaptive: AdaptiveOffload::default(),
            ap_tx_power_watts: 1.0,
            initial_energy_joules: 1e-3,
            iterations: 1000,
            master_seed: 0,
            stream_group: 0,
        }
    }
}

impl ScenarioConfig {
    pub fn with_kind(mut self, kind: ScenarioKind) -> Self {
        self.scenario_kind = kind;
        self
    }

    pub fn switches(&self) -> Switches {
        self.scenario_kind.switches()
    }

    /// Element count the channel actually uses: zero when the scenario
    /// does not involve the surface.
    pub fn active_elements(&self) -> usize {
        if self.switches().irs {
            self.irs.element_count
        } else {
            0
        }
    }

    /// Offload fraction after the scenario's forcing rules.
    pub fn effective_offload_fraction(&self) -> f64 {
        if self.switches().offload {
            self.task.offload_fraction
        } else {
            0.0
        }
    }
}
