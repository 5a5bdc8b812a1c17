//! Interval Agreement Approach: a type-1 set whose grade at `x` is the
//! fraction of source intervals that contain `x`.

use crate::error::{Error, Result};
use crate::fuzzy::membership::MembershipFunction;
use crate::fuzzy::scale::{Interval, RatingScale};

/// Type-1 agreement set built from `source_count` closed intervals.
///
/// Alongside the membership function the integer coverage counts are kept so
/// grades can be checked as exact fractions `k / N`.
#[derive(Debug, Clone, PartialEq)]
pub struct AgreementT1 {
    function: MembershipFunction,
    source_count: usize,
    cell_counts: Vec<usize>,
    point_counts: Vec<usize>,
}

impl AgreementT1 {
    pub fn function(&self) -> &MembershipFunction {
        &self.function
    }

    pub fn source_count(&self) -> usize {
        self.source_count
    }

    pub fn scale(&self) -> &RatingScale {
        self.function.scale()
    }

    /// Open-cell coverage counts, aligned with `function().values()`.
    pub fn cell_counts(&self) -> &[usize] {
        &self.cell_counts
    }

    /// Closed coverage counts at each breakpoint.
    pub fn point_counts(&self) -> &[usize] {
        &self.point_counts
    }

    /// Number of source intervals containing `x`.
    pub fn coverage_count(&self, x: f64) -> usize {
        let bps = self.function.breakpoints();
        match bps.binary_search_by(|b| b.total_cmp(&x)) {
            Ok(k) => self.point_counts[k],
            Err(0) => 0,
            Err(k) if k == bps.len() => 0,
            Err(k) => self.cell_counts[k - 1],
        }
    }

    pub fn membership(&self, x: f64) -> Result<f64> {
        self.function.membership(x)
    }
}

/// Builds the IAA type-1 set from closed intervals. Every interval counts
/// equally and nothing is discarded as an outlier.
pub fn build_iaa(intervals: &[Interval], scale: RatingScale) -> Result<AgreementT1> {
    if intervals.is_empty() {
        return Err(Error::EmptyPanel);
    }
    if let Some((i, iv)) = intervals
        .iter()
        .enumerate()
        .find(|(_, iv)| !iv.fits(&scale))
    {
        return Err(Error::validation(format!(
            "interval #{} {iv} lies outside the rating scale {scale}",
            i + 1
        )));
    }

    let mut breakpoints: Vec<f64> = intervals.iter().flat_map(|iv| [iv.lo(), iv.hi()]).collect();
    breakpoints.sort_by(f64::total_cmp);
    breakpoints.dedup();

    let index = |x: f64| {
        breakpoints
            .binary_search_by(|b| b.total_cmp(&x))
            .expect("endpoint is a breakpoint")
    };

    // Difference arrays over breakpoints and cells.
    let nb = breakpoints.len();
    let mut point_delta = vec![0isize; nb + 1];
    let mut cell_delta = vec![0isize; nb];
    for iv in intervals {
        let (a, b) = (index(iv.lo()), index(iv.hi()));
        point_delta[a] += 1;
        point_delta[b + 1] -= 1;
        cell_delta[a] += 1;
        cell_delta[b] -= 1;
    }
    let running = |delta: &[isize], len: usize| -> Vec<usize> {
        delta
            .iter()
            .take(len)
            .scan(0isize, |acc, d| {
                *acc += d;
                Some(*acc as usize)
            })
            .collect()
    };
    let point_counts = running(&point_delta, nb);
    let cell_counts = running(&cell_delta, nb - 1);

    let n = intervals.len();
    let grade = |c: usize| c as f64 / n as f64;
    let values: Vec<f64> = cell_counts.iter().map(|&c| grade(c)).collect();
    let overrides: Vec<(f64, f64)> = (0..nb)
        .filter(|&k| {
            let left = if k > 0 { cell_counts[k - 1] } else { 0 };
            let right = cell_counts.get(k).copied().unwrap_or(0);
            point_counts[k] > left.max(right)
        })
        .map(|k| (breakpoints[k], grade(point_counts[k])))
        .collect();

    let function = MembershipFunction::new(scale, breakpoints, values, overrides)?;
    Ok(AgreementT1 {
        function,
        source_count: n,
        cell_counts,
        point_counts,
    })
}
