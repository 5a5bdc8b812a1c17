//! Interval and piecewise-constant membership-function algebra: IAA type-1
//! construction, zSlice type-2 aggregation, Jaccard similarity and centroid
//! defuzzification.

mod grid;
mod iaa;
mod membership;
mod scale;
mod zslice;

pub use grid::regular_grid;
pub use iaa::{build_iaa, AgreementT1};
pub use membership::{centroid_t1, jaccard, MembershipFunction};
pub use scale::{Interval, RatingScale};
pub use zslice::{aggregate_zgt2, centroid_zgt2, ZSliceSet};

use crate::error::{Error, Result};

/// Crisp impact of a factor on the rating scale.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ImpactScore(f64);

impl ImpactScore {
    pub fn new(value: f64, scale: &RatingScale) -> Result<Self> {
        if !scale.contains(value) {
            return Err(Error::validation(format!(
                "impact score {value} lies outside the rating scale {scale}"
            )));
        }
        Ok(Self(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}
