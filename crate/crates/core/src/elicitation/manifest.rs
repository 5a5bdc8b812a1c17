//! Optional factor manifest: `factor_id,category,display_name`.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Read;
use std::str::FromStr;

use crate::elicitation::panel::ResponsePanel;
use crate::error::{Error, Result};

/// Contextual factor families used to group questionnaire items.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FactorCategory {
    Affective,
    WorkLife,
    InVehicleTech,
    Weather,
}

impl FromStr for FactorCategory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "affective" => Ok(Self::Affective),
            "work_life" => Ok(Self::WorkLife),
            "in_vehicle_tech" => Ok(Self::InVehicleTech),
            "weather" => Ok(Self::Weather),
            other => Err(Error::validation(format!(
                "unknown factor category '{other}' (expected affective, work_life, in_vehicle_tech or weather)"
            ))),
        }
    }
}

impl fmt::Display for FactorCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Affective => "affective",
            Self::WorkLife => "work_life",
            Self::InVehicleTech => "in_vehicle_tech",
            Self::Weather => "weather",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FactorInfo {
    pub category: FactorCategory,
    pub display_name: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct FactorManifest {
    factors: BTreeMap<String, FactorInfo>,
}

impl FactorManifest {
    pub fn parse<R: Read>(source: R) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(source);
        let header = reader.headers()?.clone();
        if header.iter().collect::<Vec<_>>() != ["factor_id", "category", "display_name"] {
            return Err(Error::parse(
                1,
                "expected header 'factor_id,category,display_name'",
            ));
        }
        let mut factors = BTreeMap::new();
        for row in reader.records() {
            let row = row?;
            let line = row.position().map_or(0, |p| p.line());
            let id = &row[0];
            if id.is_empty() {
                return Err(Error::parse(line, "factor_id is empty"));
            }
            let category = row[1]
                .parse()
                .map_err(|e: Error| Error::parse(line, e.to_string()))?;
            let info = FactorInfo {
                category,
                display_name: row[2].to_string(),
            };
            if factors.insert(id.to_string(), info).is_some() {
                return Err(Error::parse(line, format!("factor '{id}' listed twice")));
            }
        }
        Ok(Self { factors })
    }

    pub fn get(&self, factor: &str) -> Option<&FactorInfo> {
        self.factors.get(factor)
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Every factor in the panel must be declared.
    pub fn check_panel(&self, panel: &ResponsePanel) -> Result<()> {
        let missing: Vec<&str> = panel
            .factors()
            .into_iter()
            .filter(|f| !self.factors.contains_key(*f))
            .collect();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::validation(format!(
                "factors missing from manifest: {}",
                missing.join(", ")
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_categories() {
        let m = FactorManifest::parse(
            "factor_id,category,display_name\nrainy,weather,Rainy\nfeeling_sad,affective,Feeling sad\n".as_bytes(),
        )
        .unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.get("rainy").unwrap().category, FactorCategory::Weather);
    }

    #[test]
    fn rejects_unknown_category_with_line() {
        let err = FactorManifest::parse("factor_id,category,display_name\nx,mood,X\n".as_bytes())
            .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }
}
