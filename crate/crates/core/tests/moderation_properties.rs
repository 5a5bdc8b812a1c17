mod common;

use common::*;
use iaa_moderation::fuzzy::{ImpactScore, RatingScale};
use iaa_moderation::moderation::{
    defuzzify_factor, merge_impacts, moderate, normalize_multiplier, Ensemble, ImpactRegistry,
    ModerationConfig,
};
use proptest::prelude::*;

fn registry(values: &[f64]) -> (ImpactRegistry, Vec<String>) {
    let labels: Vec<String> = (0..values.len()).map(|i| format!("c{i}")).collect();
    let reg = ImpactRegistry::from_pairs(
        RatingScale::default(),
        labels.iter().cloned().zip(values.iter().copied()),
    )
    .unwrap();
    (reg, labels)
}

fn impact() -> impl Strategy<Value = f64> {
    (100u32..=900).prop_map(|v| v as f64 / 100.0)
}

#[test]
fn defuzzify_rounds_the_collapsed_centroid() {
    let cfg = ModerationConfig::default();
    let single = zslice_of(&[RawPanel {
        intervals: vec![(7.0, 9.0)],
    }]);
    assert_eq!(defuzzify_factor(&single, &cfg).unwrap().value(), 8.0);

    let mirror = zslice_of(&[
        RawPanel {
            intervals: vec![(2.0, 4.0), (3.0, 6.0)],
        },
        RawPanel {
            intervals: vec![(6.0, 8.0), (4.0, 7.0)],
        },
    ]);
    assert_eq!(defuzzify_factor(&mirror, &cfg).unwrap().value(), 5.0);

    let four = zslice_of(&[
        table_i(),
        table_ii(),
        RawPanel {
            intervals: vec![(2.0, 3.0), (2.5, 5.0)],
        },
        RawPanel {
            intervals: vec![(1.0, 7.0)],
        },
    ]);
    let oracle = riemann_centroid(|x| {
        (table_i().grade(x)
            + table_ii().grade(x)
            + RawPanel {
                intervals: vec![(2.0, 3.0), (2.5, 5.0)],
            }
            .grade(x)
            + RawPanel {
                intervals: vec![(1.0, 7.0)],
            }
            .grade(x))
            / 4.0
    });
    let exact = four.centroid().unwrap().value();
    assert!((exact - oracle).abs() < 1e-9);
    let rounded = defuzzify_factor(&four, &cfg).unwrap().value();
    assert!((rounded - exact).abs() <= 0.005 + 1e-12);
}

#[test]
fn midpoint_joint_effect_is_neutral() {
    let (reg, labels) = registry(&[4.0, 6.0]);
    let r = moderate(67.31, &labels, &reg, &ModerationConfig::default()).unwrap();
    assert_eq!(r.joint_effect, 5.0);
    assert_eq!(r.multiplier, 1.0);
    assert_eq!(r.moderated_score, 67.31);
}

proptest! {
    #[test]
    fn larger_impact_never_lowers_the_score(
        values in prop::collection::vec(impact(), 1..5),
        which in any::<prop::sample::Index>(),
        bump in 0u32..=400,
        base in 0.0f64..=100.0,
        weighted in any::<bool>(),
    ) {
        let i = which.index(values.len());
        let mut larger = values.clone();
        larger[i] = (larger[i] + bump as f64 / 100.0).min(9.0);
        let ensemble = if weighted {
            Ensemble::WeightedMean((1..=values.len()).map(|w| w as f64).collect())
        } else {
            Ensemble::Mean
        };
        let cfg = ModerationConfig { ensemble, ..Default::default() };
        let (r1, l1) = registry(&values);
        let (r2, l2) = registry(&larger);
        let before = moderate(base, &l1, &r1, &cfg).unwrap();
        let after = moderate(base, &l2, &r2, &cfg).unwrap();
        prop_assert!(after.moderated_score >= before.moderated_score);
    }

    #[test]
    fn multiplier_and_score_stay_in_bounds(
        values in prop::collection::vec(impact(), 1..5),
        base in 0.0f64..=100.0,
        lo in 0u32..=100,
        span in 0u32..=200,
        use_min in any::<bool>(),
    ) {
        let cfg = ModerationConfig {
            norm_lo: lo as f64 / 100.0,
            norm_hi: (lo + span) as f64 / 100.0,
            ensemble: if use_min { Ensemble::Min } else { Ensemble::Mean },
            ..Default::default()
        };
        let (reg, labels) = registry(&values);
        let r = moderate(base, &labels, &reg, &cfg).unwrap();
        prop_assert!(r.multiplier >= cfg.norm_lo - 1e-12 && r.multiplier <= cfg.norm_hi + 1e-12);
        prop_assert!((0.0..=100.0).contains(&r.moderated_score));
        prop_assert!(!r.audit.is_empty());
    }

    #[test]
    fn condition_order_is_irrelevant(
        values in prop::collection::vec(impact(), 1..6),
        base in 0.0f64..=100.0,
        use_min in any::<bool>(),
    ) {
        let cfg = ModerationConfig {
            ensemble: if use_min { Ensemble::Min } else { Ensemble::Mean },
            ..Default::default()
        };
        let (reg, labels) = registry(&values);
        let mut reversed = labels.clone();
        reversed.reverse();
        let a = moderate(base, &labels, &reg, &cfg).unwrap();
        let b = moderate(base, &reversed, &reg, &cfg).unwrap();
        prop_assert!((a.joint_effect - b.joint_effect).abs() < 1e-12);
        prop_assert_eq!(a.multiplier, b.multiplier);
        prop_assert_eq!(a.moderated_score, b.moderated_score);
    }

    #[test]
    fn midpoint_maps_to_centre_of_bounds(lo in 0u32..=100, span in 0u32..=200) {
        let cfg = ModerationConfig {
            norm_lo: lo as f64 / 100.0,
            norm_hi: (lo + span) as f64 / 100.0,
            round_multiplier_dp: 6,
            ..Default::default()
        };
        let m = normalize_multiplier(5.0, &cfg).unwrap();
        prop_assert!((m - 0.5 * (cfg.norm_lo + cfg.norm_hi)).abs() < 1e-9);
    }
}

#[test]
fn weighted_mean_matches_hand_arithmetic() {
    let s = RatingScale::default();
    let cfg = ModerationConfig {
        ensemble: Ensemble::WeightedMean(vec![1.0, 2.0, 1.0]),
        ..Default::default()
    };
    let scores: Vec<_> = [2.0, 5.0, 8.0]
        .iter()
        .map(|&v| ImpactScore::new(v, &s).unwrap())
        .collect();
    assert_eq!(merge_impacts(&scores, &cfg).unwrap(), 5.0);
}
