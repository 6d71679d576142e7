// Run a preset to CSV/SVG artifacts with a manifest, then replay the
// manifest and check the CSVs come out byte-identical.

use std::path::Path;

use irs_mec_wet::engine::Preset;
use irs_mec_wet::io::{load_manifest, replay_manifest, run_experiment, ExperimentRequest, MANIFEST_FILE};

fn csv_files(dir: &Path) -> std::io::Result<Vec<(String, Vec<u8>)>> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "csv") {
            out.push((path.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&path)?));
        }
    }
    out.sort();
    Ok(out)
}

pub fn run_example(iterations: usize) -> Result<(), Box<dyn std::error::Error>> {
    let root = std::env::temp_dir().join("irs-mec-wet-repro-example");
    let (first, second) = (root.join("run"), root.join("replay"));

    let mut req = ExperimentRequest::preset(Preset::Fig4, &first);
    req.seed = Some(42);
    req.iterations = Some(iterations);
    req.overrides = vec!["irs.element_count=128".parse()?];
    let manifest = run_experiment(&req)?;
    println!("wrote {} artifacts to {}", manifest.artifacts.len(), first.display());
    for a in &manifest.artifacts {
        println!("  {a}");
    }

    let recorded = load_manifest(&first.join(MANIFEST_FILE))?;
    replay_manifest(&recorded, &second)?;
    let same = csv_files(&first)? == csv_files(&second)?;
    println!("replay identical: {same}");
    if !same {
        return Err("replayed CSVs differ".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example(1000)
}
