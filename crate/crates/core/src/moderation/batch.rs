//! Batch moderation: `driver_id,base_score,cond_1;cond_2;...` in, one result row per driver out.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::moderation::{moderate, ImpactRegistry, ModerationConfig, ModerationResult};
use crate::numeric::fmt_fixed;

pub const RESULT_HEADER: [&str; 5] = [
    "driver_id",
    "base_score",
    "joint_effect",
    "multiplier",
    "moderated_score",
];

#[derive(Debug, Clone, PartialEq)]
pub struct DriverCase {
    pub line: u64,
    pub driver_id: String,
    pub base_score: f64,
    pub conditions: Vec<String>,
}

pub fn parse_batch<R: Read>(source: R) -> Result<Vec<DriverCase>> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(source);
    let header = reader.headers()?;
    if header.len() != 3 || &header[0] != "driver_id" || &header[1] != "base_score" {
        return Err(Error::parse(
            1,
            "expected header 'driver_id,base_score,conditions'",
        ));
    }
    let mut cases = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| match e.position() {
            Some(p) => Error::parse(p.line(), e.to_string()),
            None => Error::Csv(e),
        })?;
        let line = row.position().map_or(0, |p| p.line());
        if row[0].is_empty() {
            return Err(Error::parse(line, "driver_id is empty"));
        }
        let base_score: f64 = row[1]
            .parse()
            .map_err(|_| Error::parse(line, format!("base score '{}' is not a number", &row[1])))?;
        let conditions: Vec<String> = row[2]
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect();
        cases.push(DriverCase {
            line,
            driver_id: row[0].to_string(),
            base_score,
            conditions,
        });
    }
    Ok(cases)
}

/// Moderates every case; the first failing row aborts with its line number.
pub fn run_batch(
    cases: &[DriverCase],
    registry: &ImpactRegistry,
    cfg: &ModerationConfig,
) -> Result<Vec<ModerationResult>> {
    cases
        .iter()
        .map(|c| {
            moderate(c.base_score, &c.conditions, registry, cfg)
                .map_err(|e| Error::at_line(c.line, e))
        })
        .collect()
}

pub fn write_results<W: Write>(
    sink: W,
    cases: &[DriverCase],
    results: &[ModerationResult],
    cfg: &ModerationConfig,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(RESULT_HEADER)?;
    let sdp = cfg.round_score_dp as usize;
    for (c, r) in cases.iter().zip(results) {
        w.write_record([
            c.driver_id.clone(),
            fmt_fixed(r.base_score, sdp),
            fmt_fixed(r.joint_effect, 4),
            fmt_fixed(r.multiplier, cfg.round_multiplier_dp as usize),
            fmt_fixed(r.moderated_score, sdp),
        ])?;
    }
    w.flush().map_err(|e| Error::io("moderation results", e))?;
    Ok(())
}

pub fn write_audit<W: Write>(
    mut sink: W,
    cases: &[DriverCase],
    results: &[ModerationResult],
) -> Result<()> {
    let mut write = || -> std::io::Result<()> {
        for (c, r) in cases.iter().zip(results) {
            writeln!(sink, "driver {}", c.driver_id)?;
            for line in &r.audit {
                writeln!(sink, "  {line}")?;
            }
        }
        sink.flush()
    };
    write().map_err(|e| Error::io("audit trail", e))
}
