//! zSlice general type-2 sets aggregated from per-group IAA sets.
//!
//! With `M` groups the z-levels are `j / M`. The secondary grade of a point
//! `(x, y)` is the fraction of groups whose membership at `x` reaches `y`, so
//! slice `j` is the pointwise `j`-th largest group membership. Slices are
//! derived on demand from the stored group functions.

use crate::error::{Error, Result};
use crate::fuzzy::iaa::AgreementT1;
use crate::fuzzy::membership::MembershipFunction;
use crate::fuzzy::scale::RatingScale;
use crate::fuzzy::ImpactScore;

#[derive(Debug, Clone, PartialEq)]
pub struct ZSliceSet {
    groups: Vec<(String, AgreementT1)>,
}

/// Aggregates labelled group sets into a zSlice type-2 set.
pub fn aggregate_zgt2(groups: Vec<(String, AgreementT1)>) -> Result<ZSliceSet> {
    ZSliceSet::new(groups)
}

impl ZSliceSet {
    pub fn new(groups: Vec<(String, AgreementT1)>) -> Result<Self> {
        let Some((_, first)) = groups.first() else {
            return Err(Error::validation(
                "zSlice aggregation needs at least one group",
            ));
        };
        let scale = *first.scale();
        if let Some((label, g)) = groups.iter().find(|(_, g)| *g.scale() != scale) {
            return Err(Error::validation(format!(
                "group '{label}' is on scale {} but the first group is on {scale}",
                g.scale()
            )));
        }
        Ok(Self { groups })
    }

    pub fn groups(&self) -> &[(String, AgreementT1)] {
        &self.groups
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    pub fn scale(&self) -> &RatingScale {
        self.groups[0].1.scale()
    }

    /// `{1/M, 2/M, ..., 1}`.
    pub fn z_levels(&self) -> Vec<f64> {
        let m = self.group_count();
        (1..=m).map(|j| j as f64 / m as f64).collect()
    }

    fn functions(&self) -> Vec<&MembershipFunction> {
        self.groups.iter().map(|(_, g)| g.function()).collect()
    }

    pub(crate) fn secondary_unchecked(&self, x: f64, y: f64) -> f64 {
        if y <= 0.0 {
            return 1.0;
        }
        let supporting = self
            .groups
            .iter()
            .filter(|(_, g)| g.function().grade_at(x) >= y)
            .count();
        supporting as f64 / self.group_count() as f64
    }

    /// Fraction of groups with membership at least `y` at `x`; 1 at `y = 0`.
    pub fn secondary_grade(&self, x: f64, y: f64) -> Result<f64> {
        self.scale().check(x)?;
        if !(0.0..=1.0).contains(&y) {
            return Err(Error::domain(format!("primary grade {y} outside [0, 1]")));
        }
        Ok(self.secondary_unchecked(x, y))
    }

    /// Slice `j` in `1..=M`: the pointwise `j`-th largest group membership,
    /// i.e. the upper envelope of the region with secondary grade at least `j/M`.
    pub fn zslice(&self, j: usize) -> Result<MembershipFunction> {
        let m = self.group_count();
        if j == 0 || j > m {
            return Err(Error::domain(format!("slice index {j} outside 1..={m}")));
        }
        let mut sorted = vec![0.0; m];
        MembershipFunction::combine(&self.functions(), move |g| {
            sorted.copy_from_slice(g);
            sorted.sort_by(|a, b| b.total_cmp(a));
            sorted[j - 1]
        })
    }

    /// Type-1 reduction: the pointwise mean of the group memberships.
    pub fn mean_membership(&self) -> Result<MembershipFunction> {
        MembershipFunction::mean_of(&self.functions())
    }

    /// Centroid of the mean-membership reduction.
    pub fn centroid(&self) -> Result<ImpactScore> {
        if self.groups.iter().all(|(_, g)| g.function().area() <= 0.0) {
            return Err(Error::Undefined("degenerate set: centroid undefined"));
        }
        self.mean_membership()?.centroid()
    }
}

/// Centroid of a zSlice set via its mean-membership reduction.
pub fn centroid_zgt2(z: &ZSliceSet) -> Result<ImpactScore> {
    z.centroid()
}
