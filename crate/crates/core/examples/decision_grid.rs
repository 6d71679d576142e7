// The battery/deadline decision grid, standalone and driving the simulator.

use irs_mec_wet::engine::monte_carlo;
use irs_mec_wet::model::{ScenarioConfig, ScenarioKind};
use irs_mec_wet::offload::{decision_grid_classify, GridThresholds};

pub fn run_example(iterations: usize) -> Result<(), Box<dyn std::error::Error>> {
    let t = GridThresholds {
        battery_low_joules: 3e-4,
        deadline_tight_seconds: 0.01,
    };
    for (e, z) in [(5e-4, 0.02), (5e-4, 0.005), (1e-4, 0.02), (1e-4, 0.005)] {
        let c = decision_grid_classify(e, z, &t);
        println!("E = {e:.0e} J, Z = {z} s -> {:?}, WET {:?}", c.compute_mode, c.wet_priority);
    }

    // With loose slack the grid computes locally until the battery is low, then
    // offloads until it recovers.
    let mut cfg = ScenarioConfig::default().with_kind(ScenarioKind::IrsMecWet);
    cfg.iterations = iterations;
    cfg.time.horizon_slots = 400;
    for (label, enabled, slack) in [("fixed split", false, 0.02), ("grid, loose", true, 0.02), ("grid, tight", true, 0.005)] {
        cfg.adaptive.enabled = enabled;
        cfg.adaptive.deadline_slack_seconds = slack;
        let agg = monte_carlo(&cfg)?;
        println!(
            "{label:<12} final {:.4} mJ, lowest mean {:.4} mJ",
            agg.final_energy().mean * 1e3,
            agg.mean_series.iter().cloned().fold(f64::INFINITY, f64::min) * 1e3
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example(500)
}
