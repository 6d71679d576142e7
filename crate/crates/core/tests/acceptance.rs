//! End-to-end acceptance checks. Each test prints one `PASS`/`FAIL` line;
//! run with `--nocapture` to see them.

use std::path::Path;
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use irs_mec_wet::channel::{draw_small_scale, effective_channel, ChannelRealization, LinkBudget};
use irs_mec_wet::energy::{harvested_energy, local_compute_energy};
use irs_mec_wet::engine::{
    derive_substream, monte_carlo, ratio_sweep, simulate_trajectory, Preset, StreamKey, StreamRole,
};
use irs_mec_wet::model::{
    link_distances, EnergyCostModel, HarvestModel, IrsPanel, ScenarioConfig, ScenarioKind,
    VehicleGeometry,
};
use irs_mec_wet::offload::{decision_grid_classify, ComputeMode, GridThresholds, WetPriority};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Timed criteria must not share the CPU with each other.
static SERIAL: Mutex<()> = Mutex::new(());

fn serial() -> std::sync::MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

fn report(id: u32, name: &str, ok: bool, detail: &str) {
    println!("criterion {id:>2} [{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} ({name}) failed: {detail}");
}

fn within(elapsed: Duration, limit_s: f64) -> bool {
    elapsed.as_secs_f64() < limit_s
}

#[test]
fn c01_energy_balance() {
    let _g = serial();
    let mut rng = ChaCha8Rng::seed_from_u64(0xba1a);
    let start = Instant::now();
    let (mut checked, mut floored, mut worst) = (0usize, 0usize, 0.0f64);
    let mut ok = true;
    for i in 0..1000u64 {
        let kind = ScenarioKind::ALL[i as usize % 6];
        let mut cfg = ScenarioConfig::default().with_kind(kind);
        cfg.irs.element_count = rng.random_range(1..=200);
        cfg.harvest.p_max_watts = rng.random_range(1e-3..0.05);
        cfg.task.offload_fraction = rng.random_range(0.0..=1.0);
        cfg.task.l_min_bits = rng.random_range(10_000..40_000);
        cfg.task.l_max_bits = cfg.task.l_min_bits + rng.random_range(0..20_000);
        cfg.initial_energy_joules = rng.random_range(0.0..2e-3);
        cfg.adaptive.enabled = rng.random_bool(0.3);
        cfg.master_seed = rng.random();
        let t = simulate_trajectory(&cfg, i).expect("valid random config");
        for (s, l) in t.ledger_series.iter().enumerate() {
            let (e0, e1) = (t.energy_series[s], t.energy_series[s + 1]);
            if e0 + l.e_g - l.e_c < 0.0 {
                floored += 1;
                ok &= e1 == 0.0;
                continue;
            }
            let scale = e0.abs().max(e1.abs()).max(l.e_g).max(l.e_c);
            let err = ((e1 - e0) - (l.e_g - l.e_c)).abs();
            worst = worst.max(err / scale);
            ok &= err <= 4.0 * f64::EPSILON * scale;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ok &= within(elapsed, 5.0);
    report(
        1,
        "energy balance",
        ok,
        &format!(
            "{checked} unfloored slots, worst relative error {worst:.2e} (limit {:.2e}), {floored} floored slots at 0, {:.2} s",
            4.0 * f64::EPSILON,
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn c02_harvest_properties() {
    let _g = serial();
    let model = HarvestModel {
        p_max_watts: 0.004,
        ..HarvestModel::default()
    };
    let tau_v = 0.25e-3;
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a57);
    let start = Instant::now();
    let mut p: Vec<f64> = (0..1_000_000)
        .map(|i| match i % 100 {
            0 => model.p_th_watts,
            1 => model.p_max_watts / model.efficiency,
            _ => 10f64.powf(rng.random_range(-8.0..0.0)),
        })
        .collect();
    p.sort_by(f64::total_cmp);
    let cap = model.p_max_watts * tau_v;
    let (mut below_ok, mut cap_ok, mut mono_ok) = (true, true, true);
    let mut prev = 0.0;
    for &x in &p {
        let e = harvested_energy(x, tau_v, &model);
        if x < model.p_th_watts {
            below_ok &= e == 0.0;
        }
        cap_ok &= e <= cap;
        mono_ok &= e >= prev;
        prev = e;
    }
    let elapsed = start.elapsed();
    let ok = below_ok && cap_ok && mono_ok && within(elapsed, 5.0);
    report(
        2,
        "harvest model",
        ok,
        &format!(
            "1e6 inputs: zero below threshold {below_ok}, capped {cap_ok}, non-decreasing {mono_ok}, {:.2} s",
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn c03_fading_statistics() {
    let _g = serial();
    let key = StreamKey {
        master_seed: 3,
        scenario_id: 0,
        iteration: 0,
        slot: 0,
    };
    let mut rng = derive_substream(key, StreamRole::Direct);
    let n = 1_000_000;
    let (mut sum, mut tail) = (0.0, 0usize);
    for _ in 0..n {
        let g = draw_small_scale(&mut rng).norm_sqr();
        sum += g;
        tail += (g > 1.0) as usize;
    }
    let mean = sum / n as f64;
    let tail = tail as f64 / n as f64;
    let ok = (mean - 1.0).abs() <= 0.01 && (tail - 0.3679).abs() <= 0.005;
    report(
        3,
        "fading statistics",
        ok,
        &format!("mean |h|^2 = {mean:.5} (1 +/- 1%), P(|h|^2 > 1) = {tail:.5} (0.3679 +/- 0.005)"),
    );
}

#[test]
fn c04_irs_scaling() {
    let _g = serial();
    // Pathloss from the default cabin coordinates, evaluated by hand from
    // squared distances: 8.21, 22.66 and 7.25 m^2.
    let pl_d = 8.21f64.powf(-1.5);
    let pl_o = 22.66f64.powf(-1.2);
    let pl_r = 7.25f64.powf(-1.5);

    let cfg = ScenarioConfig::default();
    let budget = LinkBudget::new(&link_distances(&VehicleGeometry::default()).unwrap(), &cfg.channel);
    let split = cfg.time.split();
    let samples = 1_000_000;
    let mut lines = Vec::new();
    let mut ok = true;
    let mut harvest_prev = f64::NEG_INFINITY;
    for n in [0usize, 64, 200] {
        let irs = IrsPanel::default().with_elements(n);
        let mut a = ChaCha8Rng::seed_from_u64(41);
        let mut b = ChaCha8Rng::seed_from_u64(42);
        let mut c = ChaCha8Rng::seed_from_u64(43);
        let mut real = ChannelRealization::default();
        let (mut gain, mut harvest) = (0.0, 0.0);
        for _ in 0..samples {
            real.redraw(&mut a, &mut b, &mut c, n, false);
            let g = effective_channel(&real, &irs, &budget).unwrap();
            gain += g;
            harvest += harvested_energy(cfg.ap_tx_power_watts * g, split.energy, &cfg.harvest);
        }
        let gain = gain / samples as f64;
        let harvest = harvest / samples as f64;
        let oracle = pl_d + n as f64 * pl_o * pl_r;
        let rel = (gain - oracle).abs() / oracle;
        ok &= rel <= 0.02 && harvest >= harvest_prev;
        harvest_prev = harvest;
        lines.push(format!("N={n}: gain {gain:.5e} vs {oracle:.5e} ({:.2}%), harvest {harvest:.4e} J", rel * 100.0));
    }

    // Same ordering through the full simulator.
    let mut engine = Vec::new();
    for (kind, n) in [(ScenarioKind::WetOnly, 64), (ScenarioKind::IrsWet, 64), (ScenarioKind::IrsWet, 200)] {
        let mut c = ScenarioConfig::default().with_kind(kind);
        c.irs.element_count = n;
        c.iterations = 200;
        engine.push(monte_carlo(&c).unwrap().mean_harvest_per_slot());
    }
    ok &= engine.windows(2).all(|w| w[1] >= w[0]);
    lines.push(format!(
        "simulated harvest/slot N=0,64,200: {:.4e}, {:.4e}, {:.4e}",
        engine[0], engine[1], engine[2]
    ));
    report(4, "IRS scaling", ok, &lines.join("; "));
}

#[test]
fn c05_fig3_trend() {
    let _g = serial();
    let start = Instant::now();
    let p = Preset::Fig3;
    let base = p.base_config();
    assert_eq!(base.harvest.p_max_watts, 0.004);
    assert_eq!(base.task.offload_fraction, 0.75);
    assert_eq!(base.iterations, 1000);
    let mut out = std::collections::HashMap::new();
    for r in p.runs(&base) {
        out.insert(r.label.clone(), monte_carlo(&r.config).unwrap());
    }
    let elapsed = start.elapsed();
    let b = &out["Baseline"];
    let w = &out["WetOnly"];
    let m = &out["MecOnly"];
    let (fb, fw) = (b.final_energy().mean, w.final_energy().mean);
    let final_ok = (fw - fb).abs() <= 0.15 * fb.abs();
    let drain = -b.mean_net_per_slot.mean;
    let drift_ok = (w.mean_net_per_slot.mean - b.mean_net_per_slot.mean).abs() <= 0.15 * drain;
    let mec = m.mean_net_per_slot.mean.abs() / drain;
    let ok = final_ok && drift_ok && drain > 0.0 && mec < 0.05 && within(elapsed, 30.0);
    report(
        5,
        "low-ceiling trajectories",
        ok,
        &format!(
            "final E WetOnly {fw:.4e} vs Baseline {fb:.4e} J; net drift WetOnly {:.4e} vs Baseline {:.4e} J/slot ({:.1}%); MecOnly drift {:.2}% of Baseline drain; {:.1} s",
            w.mean_net_per_slot.mean,
            b.mean_net_per_slot.mean,
            100.0 * (w.mean_net_per_slot.mean - b.mean_net_per_slot.mean).abs() / drain,
            100.0 * mec,
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn c06_fig4_trend() {
    let _g = serial();
    let start = Instant::now();
    let p = Preset::Fig4;
    let base = p.base_config();
    assert_eq!(base.harvest.p_max_watts, 0.04);
    assert_eq!(base.task.offload_fraction, 0.75);
    let mut out = std::collections::HashMap::new();
    for r in p.runs(&base) {
        out.insert(r.label.clone(), monte_carlo(&r.config).unwrap());
    }
    let elapsed = start.elapsed();
    let b = out["Baseline"].final_energy();
    let w = out["WetOnly"].final_energy();
    let i = out["IrsMecWet"].final_energy();
    let hw = (w.half_width().powi(2) + b.half_width().powi(2)).sqrt();
    let margin = (w.mean - b.mean) / hw;
    let e0 = base.initial_energy_joules;
    let ok = margin > 3.0 && i.mean > e0 && within(elapsed, 30.0);
    report(
        6,
        "high-ceiling trajectories",
        ok,
        &format!(
            "WetOnly {:.4e} exceeds Baseline {:.4e} J by {margin:.0} CI half-widths; IrsMecWet final {:.4e} J vs start {e0:.1e} J; {:.1} s",
            w.mean,
            b.mean,
            i.mean,
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn c07_fig6_trends() {
    let _g = serial();
    let start = Instant::now();
    let p = Preset::Fig6;
    let base = p.base_config();
    assert_eq!(base.task.offload_fraction, 0.5);
    assert_eq!(base.irs.element_count, 64);
    assert_eq!(base.harvest.p_max_watts, 0.04);
    let sizes = p.data_sizes();
    let mut curves = std::collections::HashMap::new();
    for r in p.runs(&base) {
        let pts = ratio_sweep(&r.config, &sizes).unwrap();
        curves.insert(r.label.clone(), pts.iter().map(|x| x.ratio.mean).collect::<Vec<_>>());
    }
    let elapsed = start.elapsed();
    let dominates = |hi: &str, lo: &str| curves[hi].iter().zip(&curves[lo]).all(|(a, b)| a >= b);
    let monotone = |k: &str| curves[k].windows(2).all(|w| w[1] <= w[0]);
    let crossing = |k: &str| {
        curves[k]
            .iter()
            .position(|&r| r < 1.0)
            .map(|i| sizes[i])
    };
    let in_band = |l: Option<u64>| l.is_some_and(|l| (28_000..=40_000).contains(&l));
    let at24 = curves["IrsWet"][sizes.iter().position(|&l| l == 24_000).unwrap()];
    let (lw, li) = (crossing("WetOnly"), crossing("IrsWet"));
    let ok = dominates("IrsMecWet", "MecOnly")
        && dominates("IrsWet", "WetOnly")
        && monotone("WetOnly")
        && monotone("IrsWet")
        && in_band(lw)
        && in_band(li)
        && (1.5..=3.0).contains(&at24)
        && within(elapsed, 60.0);
    report(
        7,
        "ratio sweep",
        ok,
        &format!(
            "IrsMecWet>=MecOnly {}, IrsWet>=WetOnly {}, monotone {}/{}, first l below 1: WetOnly {lw:?}, IrsWet {li:?}; IrsWet at 24 kbit {at24:.3}; {:.1} s",
            dominates("IrsMecWet", "MecOnly"),
            dominates("IrsWet", "WetOnly"),
            monotone("WetOnly"),
            monotone("IrsWet"),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn c08_cubic_scaling() {
    let _g = serial();
    let costs = EnergyCostModel::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let exact = (0..100).all(|_| {
        let l: u64 = rng.random_range(1..1_000_000);
        local_compute_energy(2 * l, &costs) == 8.0 * local_compute_energy(l, &costs)
    });
    let spot = local_compute_energy(33_750, &costs);
    let ok = exact && (spot - 3.8443e-6).abs() <= 0.00005e-6;
    report(8, "cubic compute energy", ok, &format!("doubling exact for 100 sizes: {exact}; E(33750) = {spot:.5e} J"));
}

fn run_cli(out: &Path, extra: &[&str]) {
    let status = Command::new(env!("CARGO_BIN_EXE_ptv-sim"))
        .args(["--preset", "fig3", "--seed", "42", "--no-chart", "--out"])
        .arg(out)
        .args(extra)
        .status()
        .expect("spawn ptv-sim");
    assert!(status.success(), "ptv-sim exited with {status}");
}

fn csv_bytes(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "csv"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&p).unwrap()))
        .collect();
    files.sort();
    files
}

#[test]
fn c09_determinism() {
    let _g = serial();
    let tmp = tempfile::tempdir().unwrap();
    let dirs: Vec<_> = ["a", "b", "w1", "w8"].iter().map(|d| tmp.path().join(d)).collect();
    run_cli(&dirs[0], &[]);
    run_cli(&dirs[1], &[]);
    run_cli(&dirs[2], &["--workers", "1"]);
    run_cli(&dirs[3], &["--workers", "8"]);
    let sets: Vec<_> = dirs.iter().map(|d| csv_bytes(d)).collect();
    let n = sets[0].len();
    let repeat = sets[0] == sets[1];
    let workers = sets[2] == sets[3] && sets[0] == sets[2];
    let ok = n == 4 && repeat && workers;
    report(
        9,
        "determinism",
        ok,
        &format!("{n} CSVs per run; repeated run identical {repeat}; 1 vs 8 workers identical {workers}"),
    );
}

#[test]
fn c10_decision_grid() {
    let _g = serial();
    let t = GridThresholds {
        battery_low_joules: 3e-4,
        deadline_tight_seconds: 0.01,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut table_ok = true;
    for _ in 0..100_000 {
        let de: f64 = rng.random_range(-0.5..0.5);
        let dz: f64 = rng.random_range(-0.5..0.5);
        let (e, z) = (t.battery_low_joules * (1.0 + de), t.deadline_tight_seconds * (1.0 + dz));
        let expected = match (de >= 0.0, dz >= 0.0) {
            (true, true) => (ComputeMode::LocalCompute, WetPriority::None),
            (true, false) => (ComputeMode::Offload, WetPriority::Low),
            (false, true) => (ComputeMode::LocalCompute, WetPriority::High),
            (false, false) => (ComputeMode::Offload, WetPriority::High),
        };
        let c = decision_grid_classify(e, z, &t);
        table_ok &= (c.compute_mode, c.wet_priority) == expected;
    }
    for (e, z) in [
        (t.battery_low_joules, t.deadline_tight_seconds),
        (t.battery_low_joules.next_down(), t.deadline_tight_seconds.next_down()),
    ] {
        let c = decision_grid_classify(e, z, &t);
        let high = e >= t.battery_low_joules;
        table_ok &= (c.compute_mode == ComputeMode::LocalCompute) == high;
    }

    let mut mono_ok = true;
    for _ in 0..100_000 {
        let e = rng.random_range(0.0..1e-3);
        let z = rng.random_range(0.0..0.03);
        let c = decision_grid_classify(e, z, &t);
        let lower_e = decision_grid_classify(e * rng.random_range(0.0..1.0), z, &t);
        mono_ok &= lower_e.wet_priority >= c.wet_priority;
        let lower_z = decision_grid_classify(e, z * rng.random_range(0.0..1.0), &t);
        mono_ok &= !(c.compute_mode == ComputeMode::Offload && lower_z.compute_mode == ComputeMode::LocalCompute);
    }
    let ok = table_ok && mono_ok;
    report(
        10,
        "decision grid",
        ok,
        &format!("table over 1e5 straddling inputs {table_ok}; monotone over 1e5 pairs {mono_ok}"),
    );
}
