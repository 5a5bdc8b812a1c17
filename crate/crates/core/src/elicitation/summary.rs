//! Box-plot style statistics over interval midpoints.

use std::collections::BTreeMap;
use std::io::Write;

use crate::elicitation::panel::ResponsePanel;
use crate::error::{Error, Result};
use crate::numeric::{fmt_fixed, round_dp};

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub factor: String,
    pub profession: String,
    pub count: usize,
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
    /// Most frequent midpoint after rounding to the nearest integer rating.
    pub mode: f64,
    pub mean_width: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PanelSummary {
    pub rows: Vec<SummaryRow>,
}

/// Linear-interpolation quantile of sorted data.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

/// Mode of midpoints rounded to whole ratings. Frequency ties go to the value
/// closest to `centre`, then to the smaller value.
pub fn rounded_mode(midpoints: &[f64], centre: f64) -> Option<f64> {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &m in midpoints {
        *counts.entry(round_dp(m, 0) as i64).or_default() += 1;
    }
    counts
        .into_iter()
        .max_by(|(va, ca), (vb, cb)| {
            let da = (*va as f64 - centre).abs();
            let db = (*vb as f64 - centre).abs();
            ca.cmp(cb).then(db.total_cmp(&da)).then(vb.cmp(va))
        })
        .map(|(v, _)| v as f64)
}

pub fn summarize(panel: &ResponsePanel) -> Result<PanelSummary> {
    let keys: Vec<(String, String)> = panel
        .keys()
        .map(|(f, p)| (f.to_string(), p.to_string()))
        .collect();
    if keys.is_empty() {
        return Err(Error::EmptyPanel);
    }
    let centre = panel.scale().midpoint();
    let mut rows = Vec::with_capacity(keys.len());
    for (factor, profession) in keys {
        let intervals = panel.panel_intervals(&factor, &profession)?;
        let mut mids: Vec<f64> = intervals.iter().map(|i| i.midpoint()).collect();
        mids.sort_by(f64::total_cmp);
        let n = mids.len();
        rows.push(SummaryRow {
            count: n,
            min: mids[0],
            q1: quantile(&mids, 0.25),
            median: quantile(&mids, 0.5),
            q3: quantile(&mids, 0.75),
            max: mids[n - 1],
            mode: rounded_mode(&mids, centre).expect("group is nonempty"),
            mean_width: intervals.iter().map(|i| i.width()).sum::<f64>() / n as f64,
            factor,
            profession,
        });
    }
    Ok(PanelSummary { rows })
}

impl PanelSummary {
    pub fn write_csv<W: Write>(&self, sink: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(sink);
        w.write_record([
            "factor_id",
            "profession",
            "count",
            "min",
            "q1",
            "median",
            "q3",
            "max",
            "mode",
            "mean_width",
        ])?;
        for r in &self.rows {
            let num = |v: f64| fmt_fixed(v, 4);
            w.write_record([
                r.factor.clone(),
                r.profession.clone(),
                r.count.to_string(),
                num(r.min),
                num(r.q1),
                num(r.median),
                num(r.q3),
                num(r.max),
                num(r.mode),
                num(r.mean_width),
            ])?;
        }
        w.flush().map_err(|e| Error::io("summary csv", e))?;
        Ok(())
    }
}
