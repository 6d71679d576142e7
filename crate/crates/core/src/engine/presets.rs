use std::fmt;
use std::str::FromStr;

use crate::model::{ScenarioConfig, ScenarioKind};

/// Trajectory presets run long enough for every non-harvesting-dominated
/// scenario to exhaust the initial budget.
pub const TRAJECTORY_HORIZON: usize = 120;

/// Canned experiment setups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Energy trajectories with a 4 mW harvester ceiling.
    Fig3,
    /// Energy trajectories with a 40 mW ceiling plus a 200-element variant.
    Fig4,
    /// Gain-to-consumption ratio versus data size.
    Fig6,
}

/// One labelled scenario of a preset.
#[derive(Debug, Clone, PartialEq)]
pub struct PresetRun {
    pub label: String,
    pub config: ScenarioConfig,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Fig3, Preset::Fig4, Preset::Fig6];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig3 => "fig3",
            Preset::Fig4 => "fig4",
            Preset::Fig6 => "fig6",
        }
    }

    /// Shared base configuration of the preset.
    pub fn base_config(self) -> ScenarioConfig {
        let mut c = ScenarioConfig::default();
        c.irs.element_count = 64;
        c.time.energy_fraction = 0.25;
        match self {
            Preset::Fig3 => {
                c.time.horizon_slots = TRAJECTORY_HORIZON;
                c.harvest.p_max_watts = 0.004;
                c.task.offload_fraction = 0.75;
            }
            Preset::Fig4 => {
                c.time.horizon_slots = TRAJECTORY_HORIZON;
                c.harvest.p_max_watts = 0.04;
                c.task.offload_fraction = 0.75;
            }
            Preset::Fig6 => {
                c.harvest.p_max_watts = 0.04;
                c.task.offload_fraction = 0.5;
            }
        }
        c
    }

    pub fn scenario_kinds(self) -> &'static [ScenarioKind] {
        use ScenarioKind::*;
        match self {
            Preset::Fig3 | Preset::Fig4 => &[Baseline, WetOnly, MecOnly, IrsMecWet],
            Preset::Fig6 => &[WetOnly, IrsWet, MecOnly, IrsMecWet],
        }
    }

    pub fn is_sweep(self) -> bool {
        self == Preset::Fig6
    }

    /// Data sizes swept by ratio presets: 20 to 50 kbit in 2 kbit steps.
    pub fn data_sizes(self) -> Vec<u64> {
        if self.is_sweep() {
            (20_000..=50_000).step_by(2_000).collect()
        } else {
            Vec::new()
        }
    }

    /// Expand `base` (usually [`Preset::base_config`] with overrides applied)
    /// into the preset's scenario list. All runs share one stream group.
    pub fn runs(self, base: &ScenarioConfig) -> Vec<PresetRun> {
        let mut runs: Vec<PresetRun> = self
            .scenario_kinds()
            .iter()
            .map(|&k| PresetRun {
                label: k.name().to_string(),
                config: base.clone().with_kind(k),
            })
            .collect();
        if self == Preset::Fig4 && base.irs.element_count != 200 {
            let mut c = base.clone().with_kind(ScenarioKind::IrsMecWet);
            c.irs = c.irs.with_elements(200);
            c.irs.phase_profile_rad = None;
            runs.push(PresetRun {
                label: "IrsMecWet-N200".to_string(),
                config: c,
            });
        }
        runs
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| s.to_string())
    }
}
