use std::fmt;

use crate::error::{Error, Result};

/// Closed rating domain shared by every response and fuzzy set in an analysis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatingScale {
    min: f64,
    max: f64,
}

impl RatingScale {
    pub fn new(min: f64, max: f64) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() {
            return Err(Error::validation(format!(
                "rating scale bounds must be finite, got [{min}, {max}]"
            )));
        }
        if min >= max {
            return Err(Error::validation(format!(
                "rating scale requires min < max, got [{min}, {max}]"
            )));
        }
        Ok(Self { min, max })
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn width(&self) -> f64 {
        self.max - self.min
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.min + self.max)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.min && x <= self.max
    }

    pub(crate) fn check(&self, x: f64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{x} lies outside the rating scale {self}"
            )))
        }
    }
}

/// The 1 (strong negative impact) to 9 (strong positive impact) questionnaire scale.
impl Default for RatingScale {
    fn default() -> Self {
        Self { min: 1.0, max: 9.0 }
    }
}

impl fmt::Display for RatingScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.min, self.max)
    }
}

/// One expert's closed response interval. `lo == hi` is a certain, single-score answer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64, scale: &RatingScale) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() {
            return Err(Error::validation("interval bounds must be numbers"));
        }
        if lo > hi {
            return Err(Error::validation(format!(
                "interval [{lo}, {hi}] has lo > hi"
            )));
        }
        if !scale.contains(lo) || !scale.contains(hi) {
            return Err(Error::validation(format!(
                "interval [{lo}, {hi}] lies outside the rating scale {scale}"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(v: f64, scale: &RatingScale) -> Result<Self> {
        Self::new(v, v, scale)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub(crate) fn fits(&self, scale: &RatingScale) -> bool {
        scale.contains(self.lo) && scale.contains(self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
