//! Line charts rendered to SVG from the CSV artifacts.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use plotters::prelude::*;

use crate::error::IoError;

/// What to plot and how to label it.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartSpec {
    pub title: String,
    pub x_column: String,
    pub y_column: String,
    pub x_label: String,
    pub y_label: String,
    /// Split each CSV into one series per distinct value of this column.
    pub group_column: Option<String>,
    pub width: u32,
    pub height: u32,
}

impl ChartSpec {
    pub fn trajectory(title: &str) -> Self {
        ChartSpec {
            title: title.to_string(),
            x_column: "slot".into(),
            y_column: "mean_E_mJ".into(),
            x_label: "time slot".into(),
            y_label: "device energy (mJ)".into(),
            group_column: None,
            width: 800,
            height: 500,
        }
    }

    pub fn ratio(title: &str) -> Self {
        ChartSpec {
            title: title.to_string(),
            x_column: "l_bits".into(),
            y_column: "ratio_mean".into(),
            x_label: "data size (bits)".into(),
            y_label: "gain / consumption".into(),
            group_column: Some("scenario".into()),
            width: 800,
            height: 500,
        }
    }
}

/// A CSV file and the label its series gets when not grouped.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartSource {
    pub label: String,
    pub path: PathBuf,
}

type Series = (String, Vec<(f64, f64)>);

fn read_series(source: &ChartSource, spec: &ChartSpec) -> Result<Vec<Series>, IoError> {
    let mut reader = csv::Reader::from_path(&source.path)?;
    let headers = reader.headers()?.clone();
    let col = |name: &str| {
        headers.iter().position(|h| h == name).ok_or_else(|| IoError::MalformedCsv {
            row: 0,
            column: name.to_string(),
            reason: "column missing from header".into(),
        })
    };
    let xi = col(&spec.x_column)?;
    let yi = col(&spec.y_column)?;
    let gi = spec.group_column.as_deref().map(col).transpose()?;

    // Preserve first-seen group order.
    let mut order: Vec<String> = Vec::new();
    let mut groups: BTreeMap<String, Vec<(f64, f64)>> = BTreeMap::new();
    for (i, record) in reader.records().enumerate() {
        let row = i + 1;
        let record = record?;
        let parse = |idx: usize, name: &str| -> Result<f64, IoError> {
            let raw = record.get(idx).ok_or_else(|| IoError::MalformedCsv {
                row,
                column: name.to_string(),
                reason: "missing field".into(),
            })?;
            raw.trim().parse::<f64>().map_err(|e| IoError::MalformedCsv {
                row,
                column: name.to_string(),
                reason: format!("`{raw}`: {e}"),
            })
        };
        let x = parse(xi, &spec.x_column)?;
        let y = parse(yi, &spec.y_column)?;
        let key = match gi {
            Some(g) => record.get(g).unwrap_or_default().to_string(),
            None => source.label.clone(),
        };
        if !groups.contains_key(&key) {
            order.push(key.clone());
        }
        groups.entry(key).or_default().push((x, y));
    }
    Ok(order
        .into_iter()
        .map(|k| {
            let pts = groups.remove(&k).unwrap_or_default();
            (k, pts)
        })
        .collect())
}

/// Render every series from `sources` into one SVG line chart at `out`.
/// Returns the number of series drawn.
pub fn emit_chart(sources: &[ChartSource], spec: &ChartSpec, out: &Path) -> Result<usize, IoError> {
    let mut series = Vec::new();
    for s in sources {
        series.extend(read_series(s, spec)?);
    }
    if series.is_empty() {
        return Err(IoError::EmptySeries("no input series".into()));
    }
    if let Some((label, _)) = series.iter().find(|(_, pts)| pts.is_empty()) {
        return Err(IoError::EmptySeries(format!("series `{label}` has no rows")));
    }

    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for (x, y) in series.iter().flat_map(|(_, p)| p.iter()) {
        x0 = x0.min(*x);
        x1 = x1.max(*x);
        y0 = y0.min(*y);
        y1 = y1.max(*y);
    }
    if x1 <= x0 {
        x1 = x0 + 1.0;
    }
    let pad = ((y1 - y0) * 0.05).max(1e-9);
    let (y0, y1) = (y0.min(0.0) - pad, y1 + pad);

    let chart_err = |e: &dyn std::fmt::Display| IoError::Chart(e.to_string());
    {
        let root = SVGBackend::new(out, (spec.width, spec.height)).into_drawing_area();
        root.fill(&WHITE).map_err(|e| chart_err(&e))?;
        let mut chart = ChartBuilder::on(&root)
            .caption(&spec.title, ("sans-serif", 20))
            .margin(12)
            .x_label_area_size(40)
            .y_label_area_size(60)
            .build_cartesian_2d(x0..x1, y0..y1)
            .map_err(|e| chart_err(&e))?;
        chart
            .configure_mesh()
            .x_desc(spec.x_label.as_str())
            .y_desc(spec.y_label.as_str())
            .draw()
            .map_err(|e| chart_err(&e))?;
        for (i, (label, pts)) in series.iter().enumerate() {
            let color = Palette99::pick(i).to_rgba();
            chart
                .draw_series(LineSeries::new(pts.iter().copied(), color.stroke_width(2)))
                .map_err(|e| chart_err(&e))?
                .label(label.as_str())
                .legend(move |(x, y)| PathElement::new(vec![(x, y), (x + 18, y)], color.stroke_width(2)));
        }
        chart
            .configure_series_labels()
            .background_style(WHITE.mix(0.8))
            .border_style(BLACK)
            .draw()
            .map_err(|e| chart_err(&e))?;
        root.present().map_err(|e| chart_err(&e))?;
    }
    Ok(series.len())
}
