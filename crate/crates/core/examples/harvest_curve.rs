// Harvester response: dead zone below the sensitivity, linear region, then
// the output-power ceiling.

use irs_mec_wet::energy::harvested_energy;
use irs_mec_wet::model::{HarvestModel, TimeFrame};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let split = TimeFrame::default().split();
    for p_max in [0.004, 0.04] {
        let model = HarvestModel {
            p_max_watts: p_max,
            ..HarvestModel::default()
        };
        println!("P_max = {p_max} W, energy sub-slot {} s", split.energy);
        for exp in -7..=0 {
            let p_rx = 10f64.powi(exp);
            println!("  P_rx = 1e{exp:<3} W -> {:.4e} J", harvested_energy(p_rx, split.energy, &model));
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
