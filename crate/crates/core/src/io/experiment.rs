use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::engine::{monte_carlo, ratio_sweep, Preset, PresetRun};
use crate::error::IoError;
use crate::model::{validate_config, ScenarioConfig};

use super::chart::{emit_chart, ChartSource, ChartSpec};
use super::config_file::load_config;
use super::csv_out::{write_ratio_csv, write_trajectory_csv};
use super::overrides::{apply_overrides, Override};

pub const MANIFEST_SCHEMA: &str = "irs-mec-wet/manifest/v1";
pub const MANIFEST_FILE: &str = "manifest.json";

/// Where the base configuration comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Preset(String),
    Config(PathBuf),
}

/// One experiment invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRequest {
    pub source: Source,
    pub out_dir: PathBuf,
    pub overrides: Vec<Override>,
    pub seed: Option<u64>,
    pub iterations: Option<usize>,
    pub chart: bool,
    /// Worker threads; `None` uses the ambient pool.
    pub workers: Option<usize>,
}

impl ExperimentRequest {
    pub fn preset(preset: Preset, out_dir: impl Into<PathBuf>) -> Self {
        ExperimentRequest {
            source: Source::Preset(preset.name().to_string()),
            out_dir: out_dir.into(),
            overrides: Vec::new(),
            seed: None,
            iterations: None,
            chart: true,
            workers: None,
        }
    }
}

/// Reproducibility record written next to the artifacts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: String,
    pub source: Source,
    pub preset: Option<String>,
    pub overrides: Vec<Override>,
    /// Base configuration after overrides, seed and iteration count.
    pub config: ScenarioConfig,
    pub master_seed: u64,
    pub iterations: usize,
    pub data_sizes_bits: Vec<u64>,
    pub artifacts: Vec<String>,
    pub wall_clock_seconds: f64,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> IoError + '_ {
    move |source| IoError::File {
        path: path.to_path_buf(),
        source,
    }
}

/// Resolve the base configuration the request describes.
pub fn resolve_config(req: &ExperimentRequest) -> Result<(Option<Preset>, ScenarioConfig), IoError> {
    let (preset, base) = match &req.source {
        Source::Preset(name) => {
            let p: Preset = name.parse().map_err(IoError::UnknownPreset)?;
            (Some(p), p.base_config())
        }
        Source::Config(path) => (None, load_config(path)?),
    };
    let mut cfg = apply_overrides(&base, &req.overrides)?;
    if let Some(seed) = req.seed {
        cfg.master_seed = seed;
    }
    if let Some(n) = req.iterations {
        cfg.iterations = n;
    }
    Ok((preset, cfg))
}

fn runs_for(preset: Option<Preset>, cfg: &ScenarioConfig) -> Vec<PresetRun> {
    match preset {
        Some(p) => p.runs(cfg),
        None => vec![PresetRun {
            label: cfg.scenario_kind.name().to_string(),
            config: cfg.clone(),
        }],
    }
}

/// Run a preset or a single config, write CSVs, an optional chart and a
/// manifest into `req.out_dir`.
pub fn run_experiment(req: &ExperimentRequest) -> Result<RunManifest, IoError> {
    match req.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| IoError::WorkerPool(e.to_string()))?
            .install(|| resolve_config(req).and_then(|(p, cfg)| execute(req, p, cfg))),
        None => resolve_config(req).and_then(|(p, cfg)| execute(req, p, cfg)),
    }
}

fn execute(req: &ExperimentRequest, preset: Option<Preset>, cfg: ScenarioConfig) -> Result<RunManifest, IoError> {
    let started = Instant::now();
    let runs = runs_for(preset, &cfg);
    for r in &runs {
        validate_config(&r.config).map_err(crate::error::ModelError::from)?;
    }
    fs::create_dir_all(&req.out_dir).map_err(io_err(&req.out_dir))?;
    let stem = preset.map(|p| p.name()).unwrap_or("run");

    let mut artifacts = Vec::new();
    let data_sizes = preset.map(|p| p.data_sizes()).unwrap_or_default();

    if data_sizes.is_empty() {
        let mut sources = Vec::new();
        for r in &runs {
            log::info!("simulating {} ({} iterations)", r.label, r.config.iterations);
            let agg = monte_carlo(&r.config)?;
            let name = format!("{stem}_{}_trajectory.csv", r.label);
            let path = req.out_dir.join(&name);
            write_trajectory_csv(&path, &agg, r.config.time.tti_seconds)?;
            artifacts.push(name);
            sources.push(ChartSource {
                label: r.label.clone(),
                path,
            });
        }
        if req.chart {
            let name = format!("{stem}.svg");
            let title = format!("{stem}: device energy vs time");
            emit_chart(&sources, &ChartSpec::trajectory(&title), &req.out_dir.join(&name))?;
            artifacts.push(name);
        }
    } else {
        let mut series = Vec::new();
        for r in &runs {
            log::info!("sweeping {} over {} data sizes", r.label, data_sizes.len());
            series.push((r.label.clone(), ratio_sweep(&r.config, &data_sizes)?));
        }
        let name = format!("{stem}_ratio.csv");
        let path = req.out_dir.join(&name);
        write_ratio_csv(&path, &series)?;
        artifacts.push(name);
        if req.chart {
            let chart = format!("{stem}.svg");
            let title = format!("{stem}: energy gain-to-consumption ratio");
            emit_chart(
                &[ChartSource {
                    label: stem.to_string(),
                    path,
                }],
                &ChartSpec::ratio(&title),
                &req.out_dir.join(&chart),
            )?;
            artifacts.push(chart);
        }
    }

    let manifest = RunManifest {
        schema_version: MANIFEST_SCHEMA.to_string(),
        source: req.source.clone(),
        preset: preset.map(|p| p.name().to_string()),
        overrides: req.overrides.clone(),
        master_seed: cfg.master_seed,
        iterations: cfg.iterations,
        config: cfg,
        data_sizes_bits: data_sizes,
        artifacts,
        wall_clock_seconds: started.elapsed().as_secs_f64(),
    };
    let mpath = req.out_dir.join(MANIFEST_FILE);
    fs::write(&mpath, serde_json::to_string_pretty(&manifest)? + "\n").map_err(io_err(&mpath))?;
    Ok(manifest)
}

pub fn load_manifest(path: &Path) -> Result<RunManifest, IoError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    serde_json::from_str(&text).map_err(|source| IoError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// Re-run the experiment a manifest describes into `out_dir`, using only the
/// manifest's recorded configuration.
pub fn replay_manifest(manifest: &RunManifest, out_dir: &Path) -> Result<RunManifest, IoError> {
    let preset = manifest
        .preset
        .as_deref()
        .map(str::parse::<Preset>)
        .transpose()
        .map_err(IoError::UnknownPreset)?;
    let req = ExperimentRequest {
        source: manifest.source.clone(),
        out_dir: out_dir.to_path_buf(),
        overrides: manifest.overrides.clone(),
        seed: Some(manifest.master_seed),
        iterations: Some(manifest.iterations),
        chart: manifest.artifacts.iter().any(|a| a.ends_with(".svg")),
        workers: None,
    };
    execute(&req, preset, manifest.config.clone())
}
