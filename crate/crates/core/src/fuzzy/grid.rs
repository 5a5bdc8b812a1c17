//! Regular-grid sampling for plot export.

use crate::error::{Error, Result};
use crate::fuzzy::membership::MembershipFunction;
use crate::fuzzy::zslice::ZSliceSet;

/// Points `lo, lo + step, ...` ending exactly at `hi`. When `step` does not
/// divide the range the last regular point is followed by `hi` itself.
pub fn regular_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !step.is_finite() || step <= 0.0 {
        return Err(Error::domain(format!(
            "sampling step must be positive, got {step}"
        )));
    }
    let span = hi - lo;
    let ratio = span / step;
    let n = ratio.round();
    if (ratio - n).abs() <= 1e-9 * ratio.max(1.0) {
        let n = n as usize;
        return Ok((0..=n)
            .map(|i| {
                if i == n {
                    hi
                } else {
                    lo + span * i as f64 / n as f64
                }
            })
            .collect());
    }
    let n = ratio.floor() as usize;
    let mut pts: Vec<f64> = (0..=n).map(|i| lo + step * i as f64).collect();
    pts.push(hi);
    Ok(pts)
}

impl MembershipFunction {
    /// `(x, grade)` rows on a grid covering the whole rating scale.
    pub fn sample(&self, step: f64) -> Result<Vec<(f64, f64)>> {
        let s = self.scale();
        Ok(regular_grid(s.min(), s.max(), step)?
            .into_iter()
            .map(|x| (x, self.grade_at(x)))
            .collect())
    }
}

impl ZSliceSet {
    /// `(x, y, z)` rows: secondary grade over an `x` grid on the scale and a
    /// `y` grid on `[0, 1]`.
    pub fn sample(&self, x_step: f64, y_step: f64) -> Result<Vec<(f64, f64, f64)>> {
        let s = self.scale();
        let xs = regular_grid(s.min(), s.max(), x_step)?;
        let ys = regular_grid(0.0, 1.0, y_step)?;
        let mut rows = Vec::with_capacity(xs.len() * ys.len());
        for &x in &xs {
            for &y in &ys {
                rows.push((x, y, self.secondary_unchecked(x, y)));
            }
        }
        Ok(rows)
    }
}
