use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use irs_mec_wet::io::{run_experiment, ExperimentRequest, Override, Source};

/// Run a figure preset or a JSON scenario config and write CSV/SVG artifacts.
#[derive(Parser, Debug)]
#[command(name = "ptv-sim", version)]
struct Args {
    /// fig3, fig4 or fig6.
    #[arg(long, conflicts_with = "config", required_unless_present = "config")]
    preset: Option<String>,
    /// Scenario config (JSON).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Dotted-path assignment, e.g. `irs.element_count=200`. Repeatable.
    #[arg(long = "override", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    iterations: Option<usize>,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    #[arg(long)]
    no_chart: bool,
    /// Worker threads (results do not depend on this).
    #[arg(long)]
    workers: Option<usize>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let args = Args::parse();

    let overrides: Result<Vec<Override>, _> = args.overrides.iter().map(|s| s.parse()).collect();
    let overrides = match overrides {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let source = match (args.preset, args.config) {
        (Some(p), _) => Source::Preset(p),
        (None, Some(c)) => Source::Config(c),
        (None, None) => unreachable!("clap requires one of --preset/--config"),
    };
    let req = ExperimentRequest {
        source,
        out_dir: args.out,
        overrides,
        seed: args.seed,
        iterations: args.iterations,
        chart: !args.no_chart,
        workers: args.workers,
    };

    match run_experiment(&req) {
        Ok(m) => {
            for a in &m.artifacts {
                println!("{}", req.out_dir.join(a).display());
            }
            println!("{}", req.out_dir.join(irs_mec_wet::io::MANIFEST_FILE).display());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
