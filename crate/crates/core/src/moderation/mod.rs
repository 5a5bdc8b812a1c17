//! Contextual moderation of base risk scores.
//!
//! Each contextual condition carries a crisp impact on the rating scale. The
//! impacts present for a driver are merged into a joint effect, the joint
//! effect is mapped linearly from the rating scale onto the multiplier range
//! `[norm_lo, norm_hi]`, and the base score is multiplied by it.

mod batch;
mod registry;

pub use batch::{parse_batch, run_batch, write_audit, write_results, DriverCase, RESULT_HEADER};
pub use registry::ImpactRegistry;

use crate::error::{Error, Result};
use crate::fuzzy::{ImpactScore, RatingScale, ZSliceSet};
use crate::numeric::{fmt_fixed, round_dp};

/// How per-condition impacts combine into one joint effect.
#[derive(Debug, Clone, PartialEq)]
pub enum Ensemble {
    Mean,
    /// Lets the most negative condition dominate.
    Min,
    /// Positional weights, one per condition.
    WeightedMean(Vec<f64>),
    /// Expert-authored combination rules. No rule base is defined yet.
    FuzzyRules,
    /// Prior-informed combination. No priors are defined yet.
    Bayes,
}

impl Ensemble {
    pub fn name(&self) -> &'static str {
        match self {
            Ensemble::Mean => "mean",
            Ensemble::Min => "min",
            Ensemble::WeightedMean(_) => "weighted",
            Ensemble::FuzzyRules => "fuzzy_rules",
            Ensemble::Bayes => "bayes",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModerationConfig {
    pub scale: RatingScale,
    pub ensemble: Ensemble,
    pub norm_lo: f64,
    pub norm_hi: f64,
    pub round_impacts_dp: u32,
    pub round_multiplier_dp: u32,
    pub round_score_dp: u32,
    pub clamp: (f64, f64),
}

impl Default for ModerationConfig {
    fn default() -> Self {
        Self {
            scale: RatingScale::default(),
            ensemble: Ensemble::Mean,
            norm_lo: 0.5,
            norm_hi: 1.5,
            round_impacts_dp: 2,
            round_multiplier_dp: 3,
            round_score_dp: 2,
            clamp: (0.0, 100.0),
        }
    }
}

impl ModerationConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.norm_lo.is_finite() || !self.norm_hi.is_finite() || self.norm_lo > self.norm_hi {
            return Err(Error::validation(format!(
                "multiplier bounds [{}, {}] must be finite with lo <= hi",
                self.norm_lo, self.norm_hi
            )));
        }
        let (lo, hi) = self.clamp;
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::validation(format!(
                "clamp range [{lo}, {hi}] must have lo < hi"
            )));
        }
        if let Ensemble::WeightedMean(w) = &self.ensemble {
            if w.iter().any(|x| !(x.is_finite() && *x >= 0.0)) {
                return Err(Error::validation(
                    "ensemble weights must be finite and nonnegative",
                ));
            }
        }
        Ok(())
    }
}

/// Outcome of moderating one driver.
#[derive(Debug, Clone, PartialEq)]
pub struct ModerationResult {
    pub base_score: f64,
    pub conditions: Vec<String>,
    pub impact_scores: Vec<f64>,
    pub joint_effect: f64,
    pub multiplier: f64,
    pub moderated_score: f64,
    pub audit: Vec<String>,
}

/// Centroid of a factor's zSlice set, rounded to the configured precision.
pub fn defuzzify_factor(z: &ZSliceSet, cfg: &ModerationConfig) -> Result<ImpactScore> {
    let c = z.centroid()?;
    ImpactScore::new(round_dp(c.value(), cfg.round_impacts_dp), z.scale())
}

/// Joint effect of several impacts; not rounded.
pub fn merge_impacts(scores: &[ImpactScore], cfg: &ModerationConfig) -> Result<f64> {
    if scores.is_empty() {
        return Err(Error::validation("no impact scores to merge"));
    }
    if let Some(s) = scores.iter().find(|s| !cfg.scale.contains(s.value())) {
        return Err(Error::domain(format!(
            "impact score {} lies outside the rating scale {}",
            s.value(),
            cfg.scale
        )));
    }
    let values = scores.iter().map(|s| s.value());
    match &cfg.ensemble {
        Ensemble::Mean => {
            // Summed in sorted order so the result does not depend on condition order.
            let mut v: Vec<f64> = values.collect();
            v.sort_by(f64::total_cmp);
            Ok(v.iter().sum::<f64>() / v.len() as f64)
        }
        Ensemble::Min => Ok(values.fold(f64::INFINITY, f64::min)),
        Ensemble::WeightedMean(weights) => {
            if weights.len() != scores.len() {
                return Err(Error::validation(format!(
                    "{} weights given for {} impact scores",
                    weights.len(),
                    scores.len()
                )));
            }
            if weights.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
                return Err(Error::validation(
                    "ensemble weights must be finite and nonnegative",
                ));
            }
            let total: f64 = weights.iter().sum();
            if total <= 0.0 {
                return Err(Error::validation("ensemble weights are all zero"));
            }
            Ok(values.zip(weights).map(|(s, w)| s * w).sum::<f64>() / total)
        }
        other => Err(Error::Unsupported(format!(
            "the {} ensemble has no combination rules configured",
            other.name()
        ))),
    }
}

/// Linear map from the rating scale onto `[norm_lo, norm_hi]`, rounded.
pub fn normalize_multiplier(joint: f64, cfg: &ModerationConfig) -> Result<f64> {
    cfg.validate()?;
    let s = cfg.scale;
    if !s.contains(joint) {
        return Err(Error::domain(format!(
            "joint effect {joint} lies outside the rating scale {s}"
        )));
    }
    let m = cfg.norm_lo + (joint - s.min()) * (cfg.norm_hi - cfg.norm_lo) / s.width();
    Ok(round_dp(m, cfg.round_multiplier_dp))
}

/// Moderates `base_score` by the joint effect of `conditions`.
pub fn moderate<S: AsRef<str>>(
    base_score: f64,
    conditions: &[S],
    registry: &ImpactRegistry,
    cfg: &ModerationConfig,
) -> Result<ModerationResult> {
    cfg.validate()?;
    if !(0.0..=100.0).contains(&base_score) {
        return Err(Error::validation(format!(
            "base score {base_score} outside [0, 100]"
        )));
    }
    if conditions.is_empty() {
        return Err(Error::validation(
            "no conditions given; nothing to moderate",
        ));
    }

    let mut audit = Vec::with_capacity(conditions.len() + 3);
    let mut impacts = Vec::with_capacity(conditions.len());
    for c in conditions {
        let label = c.as_ref();
        let raw = registry.lookup(label)?;
        let rounded = ImpactScore::new(round_dp(raw.value(), cfg.round_impacts_dp), &cfg.scale)?;
        audit.push(format!(
            "condition {label}: impact {}",
            fmt_fixed(rounded.value(), cfg.round_impacts_dp as usize)
        ));
        impacts.push(rounded);
    }

    let joint = merge_impacts(&impacts, cfg)?;
    audit.push(format!(
        "joint effect ({}): {}",
        cfg.ensemble.name(),
        fmt_fixed(joint, 4)
    ));

    let multiplier = normalize_multiplier(joint, cfg)?;
    let mdp = cfg.round_multiplier_dp as usize;
    audit.push(format!(
        "multiplier on [{}, {}]: {}",
        cfg.norm_lo,
        cfg.norm_hi,
        fmt_fixed(multiplier, mdp)
    ));

    let sdp = cfg.round_score_dp as usize;
    let product = round_dp(base_score * multiplier, cfg.round_score_dp);
    let (lo, hi) = cfg.clamp;
    let moderated = product.clamp(lo, hi);
    audit.push(format!(
        "moderated score: {} x {} = {}",
        fmt_fixed(base_score, sdp),
        fmt_fixed(multiplier, mdp),
        fmt_fixed(product, sdp)
    ));
    if moderated != product {
        audit.push(format!(
            "clamped to [{lo}, {hi}]: {}",
            fmt_fixed(moderated, sdp)
        ));
    }

    Ok(ModerationResult {
        base_score,
        conditions: conditions.iter().map(|c| c.as_ref().to_string()).collect(),
        impact_scores: impacts.iter().map(|s| s.value()).collect(),
        joint_effect: joint,
        multiplier,
        moderated_score: moderated,
        audit,
    })
}
