use std::ops::Deref;

use crate::error::{ConfigErrors, Violation};

use super::config::{ScenarioConfig, ScenarioKind, CONFIG_SCHEMA};
use super::geometry::link_distances;

/// A configuration that passed [`validate_config`]. Non-fatal findings are
/// kept in `warnings`.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidatedConfig {
    config: ScenarioConfig,
    warnings: Vec<Violation>,
}

impl ValidatedConfig {
    pub fn warnings(&self) -> &[Violation] {
        &self.warnings
    }

    pub fn into_inner(self) -> ScenarioConfig {
        self.config
    }
}

impl Deref for ValidatedConfig {
    type Target = ScenarioConfig;

    fn deref(&self) -> &ScenarioConfig {
        &self.config
    }
}

#[derive(Default)]
struct Collector {
    errors: Vec<Violation>,
    warnings: Vec<Violation>,
}

impl Collector {
    fn check(&mut self, ok: bool, path: &str, reason: impl Into<String>) {
        if !ok {
            self.errors.push(Violation {
                path: path.to_string(),
                reason: reason.into(),
            });
        }
    }

    fn warn(&mut self, ok: bool, path: &str, reason: impl Into<String>) {
        if !ok {
            self.warnings.push(Violation {
                path: path.to_string(),
                reason: reason.into(),
            });
        }
    }

    fn positive(&mut self, value: f64, path: &str) {
        self.check(value > 0.0 && value.is_finite(), path, format!("must be strictly positive (got {value})"));
    }
}

/// Check every invariant of the configuration and report all violations.
pub fn validate_config(config: &ScenarioConfig) -> Result<ValidatedConfig, ConfigErrors> {
    let mut c = Collector::default();

    c.check(
        config.schema == CONFIG_SCHEMA,
        "schema",
        format!("expected `{CONFIG_SCHEMA}`, got `{}`", config.schema),
    );

    let g = &config.geometry;
    for (i, b) in g.bounds.iter().enumerate() {
        c.positive(*b, &format!("geometry.vehicle_bounds_m[{i}]"));
    }
    for (path, p) in [
        ("geometry.ap_position_m", &g.ap_position),
        ("geometry.irs_center_m", &g.irs_center),
        ("geometry.device_position_m", &g.device_position),
    ] {
        c.check(p.is_finite() && g.contains(p), path, "position outside the vehicle bounding box");
    }
    if let Err(e) = link_distances(g) {
        c.check(false, "geometry", e.to_string());
    }

    let irs = &config.irs;
    c.check(
        (0.0..=1.0).contains(&irs.amplitude),
        "irs.amplitude",
        format!("amplitude out of [0,1] (got {})", irs.amplitude),
    );
    c.check(irs.phase_shift_rad.is_finite(), "irs.phase_shift_rad", "phase must be finite");
    if let Some(profile) = &irs.phase_profile_rad {
        c.check(
            profile.len() == irs.element_count,
            "irs.phase_profile_rad",
            format!("profile has {} entries for {} elements", profile.len(), irs.element_count),
        );
        c.check(profile.iter().all(|p| p.is_finite()), "irs.phase_profile_rad", "phases must be finite");
    }

    let ch = &config.channel;
    c.check(ch.alpha_los >= 2.0, "channel.alpha_los", format!("pathloss exponent below 2 (got {})", ch.alpha_los));
    c.check(ch.alpha_nlos >= 2.0, "channel.alpha_nlos", format!("pathloss exponent below 2 (got {})", ch.alpha_nlos));
    c.positive(ch.reference_distance_m, "channel.reference_distance_m");

    let t = &config.time;
    c.positive(t.tti_seconds, "time.tti_seconds");
    c.check(
        (0.0..=1.0).contains(&t.energy_fraction),
        "time.energy_fraction",
        format!("energy_fraction out of [0,1] (got {})", t.energy_fraction),
    );
    c.warn(
        t.energy_fraction < 0.5,
        "time.energy_fraction",
        "energy sub-slot is not shorter than the information sub-slot",
    );

    let h = &config.harvest;
    c.check(
        h.p_th_watts >= 0.0 && h.p_th_watts < h.p_max_watts,
        "harvest",
        format!("need 0 <= p_th < p_max (got p_th={}, p_max={})", h.p_th_watts, h.p_max_watts),
    );
    c.check(
        h.efficiency > 0.0 && h.efficiency <= 1.0,
        "harvest.efficiency",
        format!("efficiency out of (0,1] (got {})", h.efficiency),
    );

    let k = &config.costs;
    for (v, path) in [
        (k.cpu_capacitance, "costs.cpu_capacitance"),
        (k.cycles_per_bit, "costs.cycles_per_bit"),
        (k.circuit_energy_joules, "costs.circuit_energy_joules"),
        (k.uplink_energy_per_bit_joules, "costs.uplink_energy_per_bit_joules"),
        (k.device_tx_power_watts, "costs.device_tx_power_watts"),
        (k.uplink_bandwidth_hz, "costs.uplink_bandwidth_hz"),
        (k.noise_power_watts, "costs.noise_power_watts"),
    ] {
        c.positive(v, path);
    }

    let task = &config.task;
    c.check(task.l_min_bits > 0, "task.l_min_bits", "must be positive");
    c.check(
        task.l_min_bits <= task.l_max_bits,
        "task",
        format!("l_min_bits {} exceeds l_max_bits {}", task.l_min_bits, task.l_max_bits),
    );
    c.check(
        (0.0..=1.0).contains(&task.offload_fraction),
        "task.offload_fraction",
        format!("offload_fraction out of [0,1] (got {})", task.offload_fraction),
    );

    let a = &config.adaptive;
    if a.enabled {
        c.positive(a.battery_low_joules, "adaptive.battery_low_joules");
        c.positive(a.deadline_tight_seconds, "adaptive.deadline_tight_seconds");
        c.check(a.deadline_slack_seconds >= 0.0, "adaptive.deadline_slack_seconds", "must be non-negative");
    }

    c.positive(config.ap_tx_power_watts, "ap_tx_power_watts");
    c.check(
        config.initial_energy_joules >= 0.0 && config.initial_energy_joules.is_finite(),
        "initial_energy_joules",
        "must be non-negative",
    );
    c.check(config.iterations >= 1, "iterations", "must be at least 1");

    if matches!(config.scenario_kind, ScenarioKind::IrsWet | ScenarioKind::IrsMecWet) {
        c.check(
            config.irs.element_count > 0,
            "irs.element_count",
            "IRS scenario requires N > 0",
        );
    }

    if c.errors.is_empty() {
        for w in &c.warnings {
            log::warn!("config: {w}");
        }
        Ok(ValidatedConfig {
            config: config.clone(),
            warnings: c.warnings,
        })
    } else {
        Err(ConfigErrors(c.errors))
    }
}
