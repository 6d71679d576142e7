//! Task generation, offload splitting and the battery/deadline decision grid.

use rand::Rng;

use crate::model::TaskModel;

/// Bits generated in one TTI and how they are split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TaskDraw {
    pub total: u64,
    pub offloaded: u64,
    pub local: u64,
}

/// Uniform integer task size in `[l_min, l_max]` bits.
pub fn draw_task_size<R: Rng + ?Sized>(task: &TaskModel, rng: &mut R) -> u64 {
    if task.l_min_bits == task.l_max_bits {
        return task.l_min_bits;
    }
    rng.random_range(task.l_min_bits..=task.l_max_bits)
}

/// Offload `round(μ·l)` bits (half rounds up); the remainder stays local.
pub fn split_task(total: u64, offload_fraction: f64) -> TaskDraw {
    let mu = offload_fraction.clamp(0.0, 1.0);
    let offloaded = ((mu * total as f64 + 0.5).floor() as u64).min(total);
    TaskDraw {
        total,
        offloaded,
        local: total - offloaded,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComputeMode {
    LocalCompute,
    Offload,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WetPriority {
    None,
    Low,
    High,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResourceClass {
    pub compute_mode: ComputeMode,
    pub wet_priority: WetPriority,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridThresholds {
    pub battery_low_joules: f64,
    pub deadline_tight_seconds: f64,
}

/// Four-cell grid over battery level and deadline slack.
///
/// | battery  | slack    | compute | WET  |
/// |----------|----------|---------|------|
/// | high     | loose    | local   | none |
/// | high     | tight    | offload | low  |
/// | low      | loose    | local   | high |
/// | low      | tight    | offload | high |
///
/// "High" and "loose" include the threshold itself.
pub fn decision_grid_classify(battery: f64, deadline_slack: f64, t: &GridThresholds) -> ResourceClass {
    let high_battery = battery >= t.battery_low_joules;
    let loose = deadline_slack >= t.deadline_tight_seconds;
    let (compute_mode, wet_priority) = match (high_battery, loose) {
        (true, true) => (ComputeMode::LocalCompute, WetPriority::None),
        (true, false) => (ComputeMode::Offload, WetPriority::Low),
        (false, true) => (ComputeMode::LocalCompute, WetPriority::High),
        (false, false) => (ComputeMode::Offload, WetPriority::High),
    };
    ResourceClass {
        compute_mode,
        wet_priority,
    }
}
