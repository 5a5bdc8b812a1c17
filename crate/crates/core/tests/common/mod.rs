//! Brute-force oracles and random panel generators shared by the integration tests.
//!
//! Nothing here goes through the library's piecewise-constant machinery: grades
//! are computed by counting covering intervals directly.

#![allow(dead_code)]

use iaa_moderation::fuzzy::{build_iaa, AgreementT1, Interval, RatingScale, ZSliceSet};
use rand::rngs::StdRng;
use rand::Rng;

pub const RIEMANN_POINTS: usize = 100_000;

pub fn scale() -> RatingScale {
    RatingScale::default()
}

/// Raw interval endpoints, kept alongside the library types.
#[derive(Debug, Clone)]
pub struct RawPanel {
    pub intervals: Vec<(f64, f64)>,
}

impl RawPanel {
    pub fn grade(&self, x: f64) -> f64 {
        let k = self
            .intervals
            .iter()
            .filter(|&&(lo, hi)| lo <= x && x <= hi)
            .count();
        k as f64 / self.intervals.len() as f64
    }

    pub fn to_intervals(&self) -> Vec<Interval> {
        self.intervals
            .iter()
            .map(|&(lo, hi)| Interval::new(lo, hi, &scale()).unwrap())
            .collect()
    }

    pub fn build(&self) -> AgreementT1 {
        build_iaa(&self.to_intervals(), scale()).unwrap()
    }
}

/// Endpoints on a 0.25 grid over [1, 9].
pub fn random_panel(rng: &mut StdRng, max_n: usize) -> RawPanel {
    let n = rng.gen_range(1..=max_n);
    let intervals = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..=32) as f64 * 0.25 + 1.0;
            let b = rng.gen_range(0..=32) as f64 * 0.25 + 1.0;
            (a.min(b), a.max(b))
        })
        .collect();
    RawPanel { intervals }
}

/// Random panel guaranteed to have positive area.
pub fn random_panel_with_area(rng: &mut StdRng, max_n: usize) -> RawPanel {
    loop {
        let p = random_panel(rng, max_n);
        if p.intervals.iter().any(|(lo, hi)| hi > lo) {
            return p;
        }
    }
}

pub fn zslice_of(groups: &[RawPanel]) -> ZSliceSet {
    ZSliceSet::new(
        groups
            .iter()
            .enumerate()
            .map(|(i, g)| (format!("g{i}"), g.build()))
            .collect(),
    )
    .unwrap()
}

/// Midpoint Riemann sums of f, x*f over [1, 9].
pub fn riemann<F: Fn(f64) -> f64>(f: F) -> (f64, f64) {
    let (lo, hi) = (1.0, 9.0);
    let h = (hi - lo) / RIEMANN_POINTS as f64;
    let mut area = 0.0;
    let mut moment = 0.0;
    for i in 0..RIEMANN_POINTS {
        let x = lo + (i as f64 + 0.5) * h;
        let g = f(x);
        area += g * h;
        moment += x * g * h;
    }
    (area, moment)
}

pub fn riemann_centroid<F: Fn(f64) -> f64>(f: F) -> f64 {
    let (a, m) = riemann(f);
    m / a
}

pub fn riemann_jaccard(a: &RawPanel, b: &RawPanel) -> f64 {
    let (inter, _) = riemann(|x| a.grade(x).min(b.grade(x)));
    let (union, _) = riemann(|x| a.grade(x).max(b.grade(x)));
    inter / union
}

pub fn table_i() -> RawPanel {
    RawPanel {
        intervals: vec![(1.0, 2.0), (1.0, 3.0), (2.0, 4.0)],
    }
}

pub fn table_ii() -> RawPanel {
    RawPanel {
        intervals: vec![(1.0, 5.0), (1.5, 4.0), (1.0, 6.0)],
    }
}

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}
