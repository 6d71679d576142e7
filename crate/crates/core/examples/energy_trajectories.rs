// Battery trajectories of the four trajectory-preset scenarios under the low
// and high harvester ceilings.
//
// ```text
// cargo run --release --example energy_trajectories [iterations]
// ```

use irs_mec_wet::engine::{monte_carlo, Preset};
use irs_mec_wet::model::units::joules_to_mj;

pub fn run_example(iterations: usize) -> Result<(), Box<dyn std::error::Error>> {
    for preset in [Preset::Fig3, Preset::Fig4] {
        let mut base = preset.base_config();
        base.iterations = iterations;
        println!(
            "{preset}: P_max = {} W, offload fraction {}, {} slots, {iterations} iterations",
            base.harvest.p_max_watts, base.task.offload_fraction, base.time.horizon_slots
        );
        println!("  {:<16} {:>10} {:>10} {:>14} {:>9}", "scenario", "mid mJ", "final mJ", "net uJ/slot", "depleted");
        for run in preset.runs(&base) {
            let agg = monte_carlo(&run.config)?;
            let mid = agg.mean_series[agg.mean_series.len() / 2];
            println!(
                "  {:<16} {:>10.4} {:>10.4} {:>14.4} {:>8.0}%",
                run.label,
                joules_to_mj(mid),
                joules_to_mj(agg.final_energy().mean),
                agg.mean_net_per_slot.mean * 1e6,
                agg.depletion_rate * 100.0
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let iterations = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1000);
    run_example(iterations)
}
