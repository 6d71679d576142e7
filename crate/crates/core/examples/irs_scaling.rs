// How the reflecting surface's element count changes the mean channel gain
// and the energy harvested per slot.

use irs_mec_wet::channel::LinkBudget;
use irs_mec_wet::engine::monte_carlo;
use irs_mec_wet::model::{link_distances, ScenarioConfig, ScenarioKind};

pub fn run_example(iterations: usize) -> Result<(), Box<dyn std::error::Error>> {
    let base = ScenarioConfig::default();
    let d = link_distances(&base.geometry)?;
    let budget = LinkBudget::new(&d, &base.channel);
    println!(
        "distances: AP-device {:.3} m, AP-IRS {:.3} m, IRS-device {:.3} m",
        d.ap_device, d.ap_irs, d.irs_device
    );
    println!("{:>5} {:>12} {:>16} {:>16}", "N", "mean gain", "harvest uJ/slot", "final mJ");
    for n in [0usize, 16, 64, 128, 200] {
        let mut cfg = base.clone().with_kind(if n == 0 { ScenarioKind::MecWet } else { ScenarioKind::IrsMecWet });
        cfg.irs.element_count = n;
        cfg.iterations = iterations;
        let agg = monte_carlo(&cfg)?;
        println!(
            "{n:>5} {:>12.4e} {:>16.4} {:>16.4}",
            budget.mean_gain(n, cfg.irs.amplitude),
            agg.mean_harvest_per_slot() * 1e6,
            agg.final_energy().mean * 1e3
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example(1000)
}
