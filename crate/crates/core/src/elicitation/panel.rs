use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::fuzzy::{build_iaa, AgreementT1, Interval, RatingScale, ZSliceSet};
use crate::numeric::fmt_fixed;

pub const RESPONSE_HEADER: [&str; 5] = ["expert_id", "profession", "factor_id", "lo", "hi"];
pub const EXPERIENCE_COLUMN: &str = "experience_years";

/// One expert's interval answer for one factor.
#[derive(Debug, Clone, PartialEq)]
pub struct ResponseRecord {
    pub expert_id: String,
    pub profession: String,
    pub factor_id: String,
    pub interval: Interval,
    pub experience_years: Option<f64>,
}

/// Validated responses indexed by `(factor, profession)`.
#[derive(Debug, Clone)]
pub struct ResponsePanel {
    scale: RatingScale,
    records: Vec<ResponseRecord>,
    index: BTreeMap<(String, String), Vec<usize>>,
}

/// IAA set for one profession's answers to one factor.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupFs {
    pub factor: String,
    pub profession: String,
    pub set: AgreementT1,
}

/// Pairwise Jaccard similarity between professions for a single factor.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityMatrix {
    pub factor: String,
    pub labels: Vec<String>,
    pub values: Vec<Vec<f64>>,
}

impl SimilarityMatrix {
    pub fn get(&self, a: &str, b: &str) -> Option<f64> {
        let i = self.labels.iter().position(|l| l == a)?;
        let j = self.labels.iter().position(|l| l == b)?;
        Some(self.values[i][j])
    }
}

fn parse_number(field: &str, what: &str, line: u64) -> Result<f64> {
    let v: f64 = field
        .parse()
        .map_err(|_| Error::parse(line, format!("{what} '{field}' is not a number")))?;
    if !v.is_finite() {
        return Err(Error::parse(
            line,
            format!("{what} '{field}' is not finite"),
        ));
    }
    Ok(v)
}

/// Reads the response CSV.
///
/// Header: `expert_id,profession,factor_id,lo,hi[,experience_years]`. Lines
/// starting with `#` are comments. An empty `hi` is a single-score answer.
pub fn parse_responses<R: Read>(source: R, scale: RatingScale) -> Result<ResponsePanel> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(source);

    let mut rows = reader.records();
    let header = match rows.next() {
        None => return Err(Error::EmptyPanel),
        Some(h) => h?,
    };
    let header_line = header.position().map_or(1, |p| p.line());
    let cols: Vec<&str> = header.iter().collect();
    let with_experience = match cols.as_slice() {
        c if c == RESPONSE_HEADER => false,
        [head @ .., last] if head == RESPONSE_HEADER && *last == EXPERIENCE_COLUMN => true,
        _ => {
            return Err(Error::parse(
                header_line,
                format!(
                    "expected header '{}[,{EXPERIENCE_COLUMN}]', found '{}'",
                    RESPONSE_HEADER.join(","),
                    cols.join(",")
                ),
            ))
        }
    };

    let mut records = Vec::new();
    for row in rows {
        let row = row?;
        let line = row.position().map_or(0, |p| p.line());
        if row.iter().all(str::is_empty) {
            continue;
        }
        let expected = if with_experience { 6 } else { 5 };
        if row.len() != expected && !(with_experience && row.len() == 5) {
            return Err(Error::parse(
                line,
                format!("expected {expected} fields, found {}", row.len()),
            ));
        }
        let field = |i: usize| row.get(i).unwrap_or("");
        for (i, name) in RESPONSE_HEADER.iter().enumerate().take(3) {
            if field(i).is_empty() {
                return Err(Error::parse(line, format!("{name} is empty")));
            }
        }
        let lo = parse_number(field(3), "lo", line)?;
        let hi = match field(4) {
            "" => lo,
            s => parse_number(s, "hi", line)?,
        };
        let interval = Interval::new(lo, hi, &scale).map_err(|e| Error::at_line(line, e))?;
        let experience_years = match field(5) {
            "" => None,
            s => {
                let v = parse_number(s, "experience_years", line)?;
                if v < 0.0 {
                    return Err(Error::at_line(
                        line,
                        Error::validation(format!("experience_years {v} is negative")),
                    ));
                }
                Some(v)
            }
        };
        records.push((
            line,
            ResponseRecord {
                expert_id: field(0).to_string(),
                profession: field(1).to_string(),
                factor_id: field(2).to_string(),
                interval,
                experience_years,
            },
        ));
    }
    ResponsePanel::build(records, scale)
}

impl ResponsePanel {
    /// Builds a panel from records already in memory.
    pub fn from_records(records: Vec<ResponseRecord>, scale: RatingScale) -> Result<Self> {
        let numbered = records
            .into_iter()
            .enumerate()
            .map(|(i, r)| (i as u64 + 1, r))
            .collect();
        Self::build(numbered, scale)
    }

    fn build(records: Vec<(u64, ResponseRecord)>, scale: RatingScale) -> Result<Self> {
        if records.is_empty() {
            return Err(Error::EmptyPanel);
        }
        let mut seen = HashSet::new();
        let mut index: BTreeMap<(String, String), Vec<usize>> = BTreeMap::new();
        let mut out = Vec::with_capacity(records.len());
        for (i, (line, r)) in records.into_iter().enumerate() {
            if r.expert_id.is_empty() || r.profession.is_empty() || r.factor_id.is_empty() {
                return Err(Error::validation(format!(
                    "record {line}: expert, profession and factor must be nonempty"
                )));
            }
            if !r.interval.fits(&scale) {
                return Err(Error::validation(format!(
                    "record {line}: interval {} lies outside the rating scale {scale}",
                    r.interval
                )));
            }
            if !seen.insert((r.expert_id.clone(), r.factor_id.clone())) {
                return Err(Error::validation(format!(
                    "line {line}: duplicate response from expert '{}' for factor '{}'",
                    r.expert_id, r.factor_id
                )));
            }
            index
                .entry((r.factor_id.clone(), r.profession.clone()))
                .or_default()
                .push(i);
            out.push(r);
        }
        Ok(Self {
            scale,
            records: out,
            index,
        })
    }

    pub fn scale(&self) -> &RatingScale {
        &self.scale
    }

    pub fn records(&self) -> &[ResponseRecord] {
        &self.records
    }

    /// `(factor, profession)` keys in sorted order.
    pub fn keys(&self) -> impl Iterator<Item = (&str, &str)> {
        self.index.keys().map(|(f, p)| (f.as_str(), p.as_str()))
    }

    pub fn factors(&self) -> Vec<&str> {
        let set: BTreeSet<&str> = self.index.keys().map(|(f, _)| f.as_str()).collect();
        set.into_iter().collect()
    }

    /// Professions answering `factor`, sorted.
    pub fn professions(&self, factor: &str) -> Vec<&str> {
        self.index
            .keys()
            .filter(|(f, _)| f == factor)
            .map(|(_, p)| p.as_str())
            .collect()
    }

    fn not_found(&self, what: String) -> Error {
        Error::NotFound {
            what,
            available: self.index.keys().map(|(f, p)| format!("{f}/{p}")).collect(),
        }
    }

    /// Intervals for one group in input order.
    pub fn panel_intervals(&self, factor: &str, profession: &str) -> Result<Vec<Interval>> {
        let idx = self
            .index
            .get(&(factor.to_string(), profession.to_string()))
            .ok_or_else(|| self.not_found(format!("factor/profession '{factor}/{profession}'")))?;
        Ok(idx.iter().map(|&i| self.records[i].interval).collect())
    }

    pub fn build_group_fs(&self, factor: &str, profession: &str) -> Result<GroupFs> {
        let intervals = self.panel_intervals(factor, profession)?;
        Ok(GroupFs {
            factor: factor.to_string(),
            profession: profession.to_string(),
            set: build_iaa(&intervals, self.scale)?,
        })
    }

    /// Every profession's IAA set for `factor`, sorted by profession.
    pub fn factor_groups(&self, factor: &str) -> Result<Vec<GroupFs>> {
        let profs = self.professions(factor);
        if profs.is_empty() {
            return Err(Error::NotFound {
                what: format!("factor '{factor}'"),
                available: self.factors().into_iter().map(String::from).collect(),
            });
        }
        profs
            .into_iter()
            .map(|p| self.build_group_fs(factor, p))
            .collect()
    }

    /// zSlice type-2 set across all professions answering `factor`.
    pub fn factor_zgt2(&self, factor: &str) -> Result<ZSliceSet> {
        let groups = self
            .factor_groups(factor)?
            .into_iter()
            .map(|g| (g.profession, g.set))
            .collect();
        ZSliceSet::new(groups)
    }

    pub fn similarity_matrix(&self, factor: &str) -> Result<SimilarityMatrix> {
        let groups = self.factor_groups(factor)?;
        if groups.len() < 2 {
            return Err(Error::validation(format!(
                "factor '{factor}' has {} profession(s); similarity needs at least 2",
                groups.len()
            )));
        }
        let n = groups.len();
        let mut values = vec![vec![1.0; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let s = groups[i].set.function().jaccard(groups[j].set.function())?;
                values[i][j] = s;
                values[j][i] = s;
            }
        }
        Ok(SimilarityMatrix {
            factor: factor.to_string(),
            labels: groups.into_iter().map(|g| g.profession).collect(),
            values,
        })
    }

    /// Writes the panel back out in the response CSV format.
    pub fn write_csv<W: Write>(&self, sink: W) -> Result<()> {
        let with_experience = self.records.iter().any(|r| r.experience_years.is_some());
        let mut w = csv::Writer::from_writer(sink);
        let mut header: Vec<&str> = RESPONSE_HEADER.to_vec();
        if with_experience {
            header.push(EXPERIENCE_COLUMN);
        }
        w.write_record(&header)?;
        for r in &self.records {
            let mut row = vec![
                r.expert_id.clone(),
                r.profession.clone(),
                r.factor_id.clone(),
                r.interval.lo().to_string(),
                r.interval.hi().to_string(),
            ];
            if with_experience {
                row.push(
                    r.experience_years
                        .map(|v| v.to_string())
                        .unwrap_or_default(),
                );
            }
            w.write_record(&row)?;
        }
        w.flush().map_err(|e| Error::io("response csv", e))?;
        Ok(())
    }
}

/// Formats a similarity value for CSV output.
pub(crate) fn fmt_similarity(v: f64) -> String {
    fmt_fixed(v, 6)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLES: &str = "\
expert_id,profession,factor_id,lo,hi
# Table I style
E1,A,q,1,2
E2,A,q,1,3
E3,A,q,2,4
E4,B,q,1,5
E5,B,q,1.5,4
E6,B,q,1,6
";

    fn parse(s: &str) -> Result<ResponsePanel> {
        parse_responses(s.as_bytes(), RatingScale::default())
    }

    #[test]
    fn rows_map_to_intervals() {
        let p = parse(
            "expert_id,profession,factor_id,lo,hi\nE1,HD,feeling_sad,1,5\nE2,FM,feeling_happy,9,\n",
        )
        .unwrap();
        assert_eq!(p.panel_intervals("feeling_sad", "HD").unwrap()[0].hi(), 5.0);
        let happy = p.panel_intervals("feeling_happy", "FM").unwrap();
        assert!(happy[0].is_degenerate());
        assert_eq!(happy[0].lo(), 9.0);
    }

    #[test]
    fn inverted_interval_is_a_validation_error() {
        let err = parse("expert_id,profession,factor_id,lo,hi\nE3,R,rainy,6,4\n").unwrap_err();
        assert_eq!(err.class(), crate::ErrorClass::Validation);
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn malformed_rows_report_line_numbers() {
        let err =
            parse("expert_id,profession,factor_id,lo,hi\nE1,A,q,1,2\nE2,A,q,x,3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = parse("expert_id,profession,factor_id,lo,hi\nE1,A,q,1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = parse("id,prof,factor,lo,hi\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err:?}");
        let err = parse("expert_id,profession,factor_id,lo,hi\nE1,A,q,1,12\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn duplicates_are_rejected() {
        let err =
            parse("expert_id,profession,factor_id,lo,hi\nE1,A,q,1,2\nE1,A,q,3,4\n").unwrap_err();
        assert!(err.to_string().contains("duplicate"), "{err}");
    }

    #[test]
    fn empty_inputs() {
        assert!(matches!(parse(""), Err(Error::EmptyPanel)));
        assert!(matches!(
            parse("expert_id,profession,factor_id,lo,hi\n"),
            Err(Error::EmptyPanel)
        ));
        assert!(matches!(
            parse("# only a comment\n"),
            Err(Error::EmptyPanel)
        ));
    }

    #[test]
    fn experience_column_is_optional() {
        let p = parse("expert_id,profession,factor_id,lo,hi,experience_years\nE1,A,q,1,2,12\nE2,A,q,2,3,\nE3,A,q,2,3\n")
            .unwrap();
        assert_eq!(p.records()[0].experience_years, Some(12.0));
        assert_eq!(p.records()[1].experience_years, None);
        assert!(
            parse("expert_id,profession,factor_id,lo,hi,experience_years\nE1,A,q,1,2,-1\n")
                .is_err()
        );
    }

    #[test]
    fn lookup_and_group_sets() {
        let p = parse(TABLES).unwrap();
        let a: Vec<(f64, f64)> = p
            .panel_intervals("q", "A")
            .unwrap()
            .iter()
            .map(|i| (i.lo(), i.hi()))
            .collect();
        assert_eq!(a, vec![(1.0, 2.0), (1.0, 3.0), (2.0, 4.0)]);
        let err = p.panel_intervals("nope", "A").unwrap_err();
        assert!(err.to_string().contains("q/A"), "{err}");
        let g = p.build_group_fs("q", "B").unwrap();
        assert_eq!(g.set.source_count(), 3);
        assert_eq!(p.professions("q"), vec!["A", "B"]);
    }

    #[test]
    fn similarity_needs_two_professions() {
        let p = parse("expert_id,profession,factor_id,lo,hi\nE1,A,q,1,2\n").unwrap();
        assert!(p.similarity_matrix("q").is_err());
        let p = parse(TABLES).unwrap();
        let m = p.similarity_matrix("q").unwrap();
        assert_eq!(m.values[0][0], 1.0);
        assert_eq!(m.get("A", "B"), m.get("B", "A"));
    }

    #[test]
    fn csv_round_trip() {
        let p = parse(TABLES).unwrap();
        let mut buf = Vec::new();
        p.write_csv(&mut buf).unwrap();
        let again = parse_responses(buf.as_slice(), RatingScale::default()).unwrap();
        assert_eq!(p.records(), again.records());
    }
}
