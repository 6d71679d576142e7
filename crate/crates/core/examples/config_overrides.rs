// Writing a scenario to JSON, loading it back, applying dotted-path
// overrides and reading validation errors.

use irs_mec_wet::io::{apply_overrides, load_config, save_config, Override};
use irs_mec_wet::model::{validate_config, ScenarioConfig, ScenarioKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("irs-mec-wet-config-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("scenario.json");

    let cfg = ScenarioConfig::default().with_kind(ScenarioKind::IrsWet);
    save_config(&cfg, &path)?;
    let loaded = load_config(&path)?;
    assert_eq!(loaded, cfg);
    println!("wrote and reloaded {}", path.display());

    let overrides: Vec<Override> = ["irs.element_count=200", "harvest.p_max_watts=0.004", "scenario_kind=MecWet"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let tuned = apply_overrides(&loaded, &overrides)?;
    println!(
        "after overrides: {} with N = {}, P_max = {} W",
        tuned.scenario_kind, tuned.irs.element_count, tuned.harvest.p_max_watts
    );

    let bad = apply_overrides(
        &tuned,
        &["irs.amplitude=1.5".parse()?, "time.energy_fraction=-0.1".parse()?],
    )?;
    match validate_config(&bad) {
        Ok(_) => println!("unexpectedly valid"),
        Err(errors) => println!("{errors}"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
