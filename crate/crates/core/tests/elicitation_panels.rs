mod common;

use std::fs::File;

use common::*;
use iaa_moderation::elicitation::{
    parse_responses, summarize, FactorManifest, ResponsePanel, ResponseRecord,
};
use iaa_moderation::fuzzy::Interval;
use proptest::prelude::*;

fn record(expert: &str, prof: &str, factor: &str, lo: f64, hi: f64) -> ResponseRecord {
    ResponseRecord {
        expert_id: expert.into(),
        profession: prof.into(),
        factor_id: factor.into(),
        interval: Interval::new(lo, hi, &scale()).unwrap(),
        experience_years: None,
    }
}

fn two_profession_panel(a: &[(f64, f64)], b: &[(f64, f64)]) -> ResponsePanel {
    let mut records = Vec::new();
    for (i, &(lo, hi)) in a.iter().enumerate() {
        records.push(record(&format!("a{i}"), "A", "q", lo, hi));
    }
    for (i, &(lo, hi)) in b.iter().enumerate() {
        records.push(record(&format!("b{i}"), "B", "q", lo, hi));
    }
    ResponsePanel::from_records(records, scale()).unwrap()
}

#[test]
fn table_fixture_similarity_matches_oracle() {
    let panel = parse_responses(File::open(data_path("table_i_ii.csv")).unwrap(), scale()).unwrap();
    let m = panel.similarity_matrix("q").unwrap();
    let oracle = riemann_jaccard(&table_i(), &table_ii());
    assert!((m.get("A", "B").unwrap() - oracle).abs() < 1e-4);
    assert_eq!(m.labels, vec!["A", "B"]);
}

#[test]
fn identical_and_disjoint_professions() {
    let same = two_profession_panel(&[(2.0, 4.0), (3.0, 5.0)], &[(2.0, 4.0), (3.0, 5.0)]);
    assert_eq!(
        same.similarity_matrix("q").unwrap().get("A", "B"),
        Some(1.0)
    );
    let apart = two_profession_panel(&[(1.0, 2.0)], &[(5.0, 6.0)]);
    assert_eq!(
        apart.similarity_matrix("q").unwrap().get("A", "B"),
        Some(0.0)
    );
}

#[test]
fn demo_panel_loads_with_manifest() {
    let panel = parse_responses(File::open(data_path("demo_panel.csv")).unwrap(), scale()).unwrap();
    assert_eq!(panel.factors().len(), 8);
    for f in panel.factors() {
        assert_eq!(panel.professions(f), vec!["FM", "HD", "R", "RS"]);
    }
    let manifest =
        FactorManifest::parse(File::open(data_path("factor_manifest.csv")).unwrap()).unwrap();
    manifest.check_panel(&panel).unwrap();
    let summary = summarize(&panel).unwrap();
    assert_eq!(summary.rows.len(), 32);
    for r in &summary.rows {
        assert!(r.count >= 1);
        assert!(r.min <= r.q1 && r.q1 <= r.median && r.median <= r.q3 && r.q3 <= r.max);
    }
}

#[test]
fn table_ii_summary_width() {
    let panel = two_profession_panel(
        &[(1.0, 2.0), (1.0, 3.0), (2.0, 4.0)],
        &[(1.0, 5.0), (1.5, 4.0), (1.0, 6.0)],
    );
    let s = summarize(&panel).unwrap();
    let b = s.rows.iter().find(|r| r.profession == "B").unwrap();
    assert!((b.mean_width - 3.833333).abs() < 1e-6);
}

fn random_records() -> impl Strategy<Value = Vec<ResponseRecord>> {
    let row = (0usize..4, 0usize..3, 0u32..=32, 0u32..=32);
    prop::collection::vec(row, 1..40).prop_map(|rows| {
        rows.into_iter()
            .enumerate()
            .map(|(i, (p, f, a, b))| {
                let (a, b) = (a.min(b), a.max(b));
                record(
                    &format!("E{i}"),
                    ["HD", "FM", "R", "RS"][p],
                    ["rainy", "snowy", "windy"][f],
                    1.0 + a as f64 * 0.25,
                    1.0 + b as f64 * 0.25,
                )
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn index_is_complete(records in random_records()) {
        let n = records.len();
        let panel = ResponsePanel::from_records(records, scale()).unwrap();
        let total: usize = panel
            .keys()
            .map(|(f, p)| panel.panel_intervals(f, p).unwrap().len())
            .sum();
        prop_assert_eq!(total, n);
    }

    #[test]
    fn similarity_matrices_are_symmetric_with_unit_diagonal(records in random_records()) {
        let panel = ResponsePanel::from_records(records, scale()).unwrap();
        for f in panel.factors() {
            if panel.professions(f).len() < 2 {
                prop_assert!(panel.similarity_matrix(f).is_err());
                continue;
            }
            let Ok(m) = panel.similarity_matrix(f) else {
                // Only possible when two groups consist solely of single-point answers.
                continue;
            };
            for i in 0..m.labels.len() {
                prop_assert_eq!(m.values[i][i], 1.0);
                for j in 0..m.labels.len() {
                    prop_assert_eq!(m.values[i][j], m.values[j][i]);
                    prop_assert!((0.0..=1.0).contains(&m.values[i][j]));
                }
            }
        }
    }

    #[test]
    fn record_order_does_not_matter(records in random_records(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut shuffled = records.clone();
        shuffled.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let a = ResponsePanel::from_records(records, scale()).unwrap();
        let b = ResponsePanel::from_records(shuffled, scale()).unwrap();
        prop_assert_eq!(summarize(&a).unwrap(), summarize(&b).unwrap());
        for (f, p) in a.keys() {
            prop_assert_eq!(a.build_group_fs(f, p).unwrap(), b.build_group_fs(f, p).unwrap());
        }
        for f in a.factors() {
            if let (Ok(x), Ok(y)) = (a.similarity_matrix(f), b.similarity_matrix(f)) {
                prop_assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn csv_round_trip(records in random_records()) {
        let panel = ResponsePanel::from_records(records, scale()).unwrap();
        let mut buf = Vec::new();
        panel.write_csv(&mut buf).unwrap();
        let again = parse_responses(buf.as_slice(), scale()).unwrap();
        prop_assert_eq!(panel.records(), again.records());
    }
}
