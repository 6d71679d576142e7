// Energy gain-to-consumption ratio as the per-slot data size grows.

use irs_mec_wet::engine::{ratio_sweep, Preset};

pub fn run_example(iterations: usize) -> Result<(), Box<dyn std::error::Error>> {
    let preset = Preset::Fig6;
    let mut base = preset.base_config();
    base.iterations = iterations;
    let sizes = preset.data_sizes();
    let runs = preset.runs(&base);

    let mut curves = Vec::new();
    for run in &runs {
        curves.push(ratio_sweep(&run.config, &sizes)?);
    }
    print!("{:>8}", "kbit");
    for run in &runs {
        print!(" {:>10}", run.label);
    }
    println!();
    for (i, l) in sizes.iter().enumerate() {
        print!("{:>8}", l / 1000);
        for c in &curves {
            print!(" {:>10.3}", c[i].ratio.mean);
        }
        println!();
    }
    for (run, c) in runs.iter().zip(&curves) {
        match c.iter().find(|p| p.ratio.mean < 1.0) {
            Some(p) => println!("{} drops below 1 at {} kbit", run.label, p.l_bits / 1000),
            None => println!("{} stays above 1", run.label),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example(1000)
}
