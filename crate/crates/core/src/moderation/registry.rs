use std::collections::BTreeMap;
use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::fuzzy::{ImpactScore, RatingScale};
use crate::numeric::fmt_fixed;

pub const REGISTRY_HEADER: [&str; 2] = ["condition_label", "impact_score"];

/// Crisp impact per contextual condition, e.g. `rainy -> 3.78`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImpactRegistry {
    scale: RatingScale,
    scores: BTreeMap<String, ImpactScore>,
}

impl ImpactRegistry {
    pub fn new(scale: RatingScale) -> Self {
        Self {
            scale,
            scores: BTreeMap::new(),
        }
    }

    pub fn from_pairs<I, S>(scale: RatingScale, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: Into<String>,
    {
        let mut reg = Self::new(scale);
        for (label, v) in pairs {
            reg.insert(label, v)?;
        }
        Ok(reg)
    }

    pub fn insert(&mut self, label: impl Into<String>, value: f64) -> Result<()> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::validation("condition label is empty"));
        }
        let score = ImpactScore::new(value, &self.scale)?;
        self.scores.insert(label, score);
        Ok(())
    }

    pub fn scale(&self) -> &RatingScale {
        &self.scale
    }

    pub fn get(&self, label: &str) -> Option<ImpactScore> {
        self.scores.get(label).copied()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.scores.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub(crate) fn lookup(&self, label: &str) -> Result<ImpactScore> {
        self.get(label).ok_or_else(|| Error::NotFound {
            what: format!("condition '{label}'"),
            available: self.scores.keys().cloned().collect(),
        })
    }

    /// Reads `condition_label,impact_score` rows.
    pub fn parse_csv<R: Read>(source: R, scale: RatingScale) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(source);
        if reader.headers()?.iter().collect::<Vec<_>>() != REGISTRY_HEADER {
            return Err(Error::parse(
                1,
                "expected header 'condition_label,impact_score'",
            ));
        }
        let mut reg = Self::new(scale);
        for row in reader.records() {
            let row = row.map_err(|e| match e.position() {
                Some(p) => Error::parse(p.line(), e.to_string()),
                None => Error::Csv(e),
            })?;
            let line = row.position().map_or(0, |p| p.line());
            let label = &row[0];
            let value: f64 = row[1].parse().map_err(|_| {
                Error::parse(line, format!("impact score '{}' is not a number", &row[1]))
            })?;
            if reg.scores.contains_key(label) {
                return Err(Error::parse(
                    line,
                    format!("condition '{label}' listed twice"),
                ));
            }
            reg.insert(label, value)
                .map_err(|e| Error::at_line(line, e))?;
        }
        Ok(reg)
    }

    /// Writes the registry with scores at `dp` decimal places, sorted by label.
    pub fn write_csv<W: Write>(&self, sink: W, dp: usize) -> Result<()> {
        let mut w = csv::Writer::from_writer(sink);
        w.write_record(REGISTRY_HEADER)?;
        for (label, s) in &self.scores {
            w.write_record([label.as_str(), &fmt_fixed(s.value(), dp)])?;
        }
        w.flush().map_err(|e| Error::io("impact registry", e))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_write() {
        let text = "condition_label,impact_score\nhigh_time_pressure,2.45\nrainy,3.78\n";
        let reg = ImpactRegistry::parse_csv(text.as_bytes(), RatingScale::default()).unwrap();
        assert_eq!(reg.get("rainy").unwrap().value(), 3.78);
        let mut out = Vec::new();
        reg.write_csv(&mut out, 2).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), text);
    }

    #[test]
    fn rejects_out_of_scale_and_duplicates() {
        let err = ImpactRegistry::parse_csv(
            "condition_label,impact_score\nx,12\n".as_bytes(),
            RatingScale::default(),
        )
        .unwrap_err();
        assert!(err.to_string().starts_with("line 2"), "{err}");
        assert!(ImpactRegistry::parse_csv(
            "condition_label,impact_score\nx,2\nx,3\n".as_bytes(),
            RatingScale::default()
        )
        .is_err());
        assert!(
            ImpactRegistry::parse_csv("label,score\n".as_bytes(), RatingScale::default()).is_err()
        );
    }
}
