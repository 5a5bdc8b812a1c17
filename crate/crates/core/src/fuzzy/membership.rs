//! Exact piecewise-constant membership functions.
//!
//! A function is described by strictly increasing breakpoints, one grade per
//! open cell between consecutive breakpoints, and optional grades at single
//! breakpoints. Outside the first and last breakpoint the grade is zero.
//!
//! At a breakpoint without an explicit point grade the function takes the
//! larger of its two neighbouring cell grades, i.e. it is upper
//! semicontinuous. This is exactly the closed-interval coverage count for
//! IAA sets, and it is preserved by every monotone pointwise operation
//! (min, max, mean, k-th largest), so point grades only have to be stored
//! where they exceed both neighbours.

use crate::error::{Error, Result};
use crate::fuzzy::scale::RatingScale;
use crate::fuzzy::ImpactScore;

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipFunction {
    scale: RatingScale,
    breakpoints: Vec<f64>,
    values: Vec<f64>,
    point_grades: Vec<Option<f64>>,
}

fn check_grade(g: f64) -> Result<()> {
    if (0.0..=1.0).contains(&g) {
        Ok(())
    } else {
        Err(Error::validation(format!(
            "membership grade {g} outside [0, 1]"
        )))
    }
}

impl MembershipFunction {
    /// Builds a function from raw parts. Every override point must be one of
    /// the breakpoints and its grade must be at least both neighbouring cells.
    pub fn new(
        scale: RatingScale,
        breakpoints: Vec<f64>,
        values: Vec<f64>,
        point_overrides: Vec<(f64, f64)>,
    ) -> Result<Self> {
        if breakpoints.iter().any(|b| !scale.contains(*b)) {
            return Err(Error::validation(format!(
                "breakpoints must lie within the rating scale {scale}"
            )));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::validation("breakpoints must be strictly increasing"));
        }
        if values.len() + 1 != breakpoints.len() && !(breakpoints.is_empty() && values.is_empty()) {
            return Err(Error::validation(format!(
                "{} breakpoints need {} cell grades, got {}",
                breakpoints.len(),
                breakpoints.len().saturating_sub(1),
                values.len()
            )));
        }
        for &v in &values {
            check_grade(v)?;
        }

        let mut fs = Self {
            scale,
            point_grades: vec![None; breakpoints.len()],
            breakpoints,
            values,
        };
        for (x, g) in point_overrides {
            check_grade(g)?;
            let k = fs.breakpoints.iter().position(|&b| b == x).ok_or_else(|| {
                Error::validation(format!("override point {x} is not a breakpoint"))
            })?;
            if g < fs.neighbour_max(k) {
                return Err(Error::validation(format!(
                    "override grade {g} at {x} is below its neighbouring cells"
                )));
            }
            fs.point_grades[k] = Some(g);
        }
        fs.drop_redundant_overrides();
        Ok(fs)
    }

    /// The identically-zero function.
    pub fn zero(scale: RatingScale) -> Self {
        Self {
            scale,
            breakpoints: Vec::new(),
            values: Vec::new(),
            point_grades: Vec::new(),
        }
    }

    /// Grade 1 on the closed interval `[lo, hi]`, zero elsewhere.
    pub fn indicator(scale: RatingScale, lo: f64, hi: f64) -> Result<Self> {
        if lo == hi {
            return Self::new(scale, vec![lo], vec![], vec![(lo, 1.0)]);
        }
        Self::new(scale, vec![lo, hi], vec![1.0], vec![])
    }

    pub fn scale(&self) -> &RatingScale {
        &self.scale
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Grades of the open cells between consecutive breakpoints.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Breakpoints whose grade strictly exceeds both neighbouring cells.
    pub fn point_overrides(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.breakpoints
            .iter()
            .zip(&self.point_grades)
            .filter_map(|(&x, g)| g.map(|g| (x, g)))
    }

    /// `(start, end, grade)` for every cell.
    pub fn cells(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.breakpoints
            .windows(2)
            .zip(&self.values)
            .map(|(w, &g)| (w[0], w[1], g))
    }

    pub fn membership(&self, x: f64) -> Result<f64> {
        self.scale.check(x)?;
        Ok(self.grade_at(x))
    }

    /// Unchecked evaluation; zero anywhere outside the breakpoints.
    pub(crate) fn grade_at(&self, x: f64) -> f64 {
        match self.breakpoints.binary_search_by(|b| b.total_cmp(&x)) {
            Ok(k) => self.point_grades[k].unwrap_or_else(|| self.neighbour_max(k)),
            Err(0) => 0.0,
            Err(k) if k == self.breakpoints.len() => 0.0,
            Err(k) => self.values[k - 1],
        }
    }

    fn neighbour_max(&self, k: usize) -> f64 {
        let left = if k > 0 { self.values[k - 1] } else { 0.0 };
        let right = self.values.get(k).copied().unwrap_or(0.0);
        left.max(right)
    }

    fn drop_redundant_overrides(&mut self) {
        for k in 0..self.breakpoints.len() {
            if let Some(g) = self.point_grades[k] {
                if g <= self.neighbour_max(k) {
                    self.point_grades[k] = None;
                }
            }
        }
    }

    pub fn max_grade(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .chain(self.point_grades.iter().flatten().copied())
            .fold(0.0, f64::max)
    }

    /// Combines functions pointwise on the union of their breakpoints.
    ///
    /// `op` receives one grade per input function and must be monotone
    /// non-decreasing in every argument and map all-zero input to zero.
    pub fn combine<F>(fns: &[&MembershipFunction], mut op: F) -> Result<MembershipFunction>
    where
        F: FnMut(&[f64]) -> f64,
    {
        let first = fns
            .first()
            .ok_or_else(|| Error::validation("nothing to combine"))?;
        let scale = first.scale;
        if fns.iter().any(|f| f.scale != scale) {
            return Err(Error::validation(
                "membership functions are on different rating scales",
            ));
        }

        let mut breakpoints: Vec<f64> = fns
            .iter()
            .flat_map(|f| f.breakpoints.iter().copied())
            .collect();
        breakpoints.sort_by(f64::total_cmp);
        breakpoints.dedup();

        let mut grades = vec![0.0; fns.len()];
        let mut eval = |x: f64| {
            for (g, f) in grades.iter_mut().zip(fns) {
                *g = f.grade_at(x);
            }
            op(&grades)
        };

        let values: Vec<f64> = breakpoints
            .windows(2)
            .map(|w| eval(0.5 * (w[0] + w[1])))
            .collect();
        let point_grades: Vec<Option<f64>> = breakpoints.iter().map(|&b| Some(eval(b))).collect();

        let mut out = MembershipFunction {
            scale,
            breakpoints,
            values,
            point_grades,
        };
        out.drop_redundant_overrides();
        Ok(out)
    }

    pub fn pointwise_min(a: &Self, b: &Self) -> Result<Self> {
        Self::combine(&[a, b], |g| g[0].min(g[1]))
    }

    pub fn pointwise_max(a: &Self, b: &Self) -> Result<Self> {
        Self::combine(&[a, b], |g| g[0].max(g[1]))
    }

    /// Pointwise arithmetic mean of the given functions.
    pub fn mean_of(fns: &[&MembershipFunction]) -> Result<Self> {
        let n = fns.len() as f64;
        Self::combine(fns, |g| g.iter().sum::<f64>() / n)
    }

    /// Multiplies every grade by `factor` in `[0, 1]`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&factor) {
            return Err(Error::validation(format!(
                "scale factor {factor} outside [0, 1]"
            )));
        }
        let mut out = self.clone();
        out.values.iter_mut().for_each(|v| *v *= factor);
        out.point_grades
            .iter_mut()
            .flatten()
            .for_each(|g| *g *= factor);
        out.drop_redundant_overrides();
        Ok(out)
    }

    /// Removes breakpoints that separate equal cells and carry no spike,
    /// plus zero-grade edge cells.
    pub fn simplified(&self) -> Self {
        let mut bps = Vec::with_capacity(self.breakpoints.len());
        let mut vals: Vec<f64> = Vec::with_capacity(self.values.len());
        let mut pts = Vec::with_capacity(self.breakpoints.len());
        for k in 0..self.breakpoints.len() {
            let left = if k > 0 { self.values[k - 1] } else { 0.0 };
            let right = self.values.get(k).copied().unwrap_or(0.0);
            let spike = self.point_grades[k];
            if spike.is_none() && left == right {
                continue;
            }
            if !bps.is_empty() {
                vals.push(left);
            }
            bps.push(self.breakpoints[k]);
            pts.push(spike);
        }
        Self {
            scale: self.scale,
            breakpoints: bps,
            values: vals,
            point_grades: pts,
        }
    }

    /// Pointwise equality within `tol`, independent of how breakpoints are laid out.
    pub fn equivalent(&self, other: &Self, tol: f64) -> bool {
        let Ok(diff) = Self::combine(&[self, other], |_| 0.0) else {
            return false;
        };
        let bps = diff.breakpoints;
        let close = |x: f64| (self.grade_at(x) - other.grade_at(x)).abs() <= tol;
        bps.iter().all(|&b| close(b)) && bps.windows(2).all(|w| close(0.5 * (w[0] + w[1])))
    }

    /// Lebesgue integral of the grade. Point spikes have measure zero.
    pub fn area(&self) -> f64 {
        self.cells().map(|(a, b, g)| g * (b - a)).sum()
    }

    /// First moment, the integral of `x * grade(x)`.
    pub fn moment(&self) -> f64 {
        self.cells()
            .map(|(a, b, g)| 0.5 * g * (b * b - a * a))
            .sum()
    }

    /// Centroid defuzzification.
    pub fn centroid(&self) -> Result<ImpactScore> {
        let area = self.area();
        if area <= 0.0 {
            return Err(Error::Undefined("degenerate set: centroid undefined"));
        }
        let lo = self.breakpoints[0];
        let hi = self.breakpoints[self.breakpoints.len() - 1];
        let c = (self.moment() / area).clamp(lo, hi);
        ImpactScore::new(c, &self.scale)
    }

    /// Jaccard similarity: area of the pointwise minimum over area of the pointwise maximum.
    pub fn jaccard(&self, other: &Self) -> Result<f64> {
        let union = Self::pointwise_max(self, other)?.area();
        if union <= 0.0 {
            return Err(Error::Undefined("undefined similarity (0/0)"));
        }
        let inter = Self::pointwise_min(self, other)?.area();
        Ok((inter / union).clamp(0.0, 1.0))
    }
}

/// Centroid of a type-1 membership function.
pub fn centroid_t1(fs: &MembershipFunction) -> Result<ImpactScore> {
    fs.centroid()
}

/// Jaccard similarity between two type-1 membership functions.
pub fn jaccard(a: &MembershipFunction, b: &MembershipFunction) -> Result<f64> {
    a.jaccard(b)
}
