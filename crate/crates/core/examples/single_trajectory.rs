// One trajectory slot by slot, with its energy ledger.

use irs_mec_wet::engine::simulate_trajectory;
use irs_mec_wet::model::{ScenarioConfig, ScenarioKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut cfg = ScenarioConfig::default().with_kind(ScenarioKind::IrsMecWet);
    cfg.time.horizon_slots = 10;
    cfg.master_seed = 7;
    let t = simulate_trajectory(&cfg, 0)?;
    println!(
        "{:>4} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "slot", "E uJ", "e_v", "e_o", "e_lc", "e_tr", "e_ckt"
    );
    for (s, l) in t.ledger_series.iter().enumerate() {
        println!(
            "{s:>4} {:>10.3} {:>10.3} {:>10.3} {:>10.3} {:>10.3} {:>10.3}",
            t.energy_series[s] * 1e6,
            l.e_v * 1e6,
            l.e_o * 1e6,
            l.e_lc * 1e6,
            l.e_tr * 1e6,
            l.e_ckt * 1e6
        );
    }
    println!(
        "final {:.3} uJ, gained {:.3} uJ, consumed {:.3} uJ",
        t.final_energy() * 1e6,
        t.total_gain() * 1e6,
        t.total_consumption() * 1e6
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
