//! The appendix functions f₁ (conditional entropy) and f₂ (entropy after
//! measurement) over the full seven-parameter X domain, interior-extremum
//! counting in x = cos θ, and randomized testing of the unimodality
//! conjecture.

use rayon::prelude::*;

use crate::entropy::xlnx;
use crate::error::{Error, Result};
use crate::sample::{draw_general_x, stream_rng};
use crate::search::{golden_max, golden_min};
use crate::state::GeneralXState;

/// Plateau tolerance for the discrete derivative.
const PLATEAU_TOL: f64 = 1e-13;

/// Which appendix function to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AppendixFn {
    F1,
    F2,
}

impl std::fmt::Display for AppendixFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", if *self == AppendixFn::F1 { "f1" } else { "f2" })
    }
}

/// Parameters (p1..p5) with the derived transverse weight
/// w = (|p3+p4| + |p3−p4|)/4 = max(|p3|, |p4|)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppendixParams {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
    pub p5: f64,
}

impl AppendixParams {
    pub fn new(p1: f64, p2: f64, p3: f64, p4: f64, p5: f64) -> Result<Self> {
        for (v, name) in [(p1, "p1"), (p2, "p2"), (p3, "p3"), (p4, "p4"), (p5, "p5")] {
            if !v.is_finite() {
                return Err(Error::InvalidInput(name));
            }
        }
        Ok(Self { p1, p2, p3, p4, p5 })
    }

    /// Mapping from the five X-state parameters: (p1..p5) = (s1, s2, c1, c2, c3).
    /// With it f₁(cos θ) is the φ-minimized conditional entropy of the state.
    pub fn from_general_x(state: &GeneralXState) -> Self {
        Self {
            p1: state.s1(),
            p2: state.s2(),
            p3: state.c1(),
            p4: state.c2(),
            p5: state.c3(),
        }
    }

    pub fn w(&self) -> f64 {
        ((self.p3 + self.p4).abs() + (self.p3 - self.p4).abs()) / 4.0
    }
}

fn shannon_args(x: f64, p: &AppendixParams) -> Result<[f64; 4]> {
    let w2 = {
        let w = p.w();
        4.0 * w * w
    };
    let r1 = (p.p1 + p.p5 * x).powi(2) + w2 * (1.0 - x * x);
    let r2 = (p.p1 - p.p5 * x).powi(2) + w2 * (1.0 - x * x);
    let (s1, s2) = (r1.sqrt(), r2.sqrt());
    let args = [
        ((1.0 + p.p2 * x + s1) / 4.0, "(1+p2*x+sqrt(r1))/4"),
        ((1.0 + p.p2 * x - s1) / 4.0, "(1+p2*x-sqrt(r1))/4"),
        ((1.0 - p.p2 * x + s2) / 4.0, "(1-p2*x+sqrt(r2))/4"),
        ((1.0 - p.p2 * x - s2) / 4.0, "(1-p2*x-sqrt(r2))/4"),
    ];
    for (v, name) in args {
        if v < -1e-12 {
            return Err(Error::NegativeShannonArgument { name, value: v });
        }
    }
    Ok(args.map(|(v, _)| v.max(0.0)))
}

/// f₁(x) = −h2((1±p2x)/2) + h4(quaternary args), in nats.
pub fn f1(x: f64, p: &AppendixParams) -> Result<f64> {
    let a = (1.0 + p.p2 * x) / 2.0;
    if !(-1e-12..=1.0 + 1e-12).contains(&a) {
        return Err(Error::NegativeShannonArgument {
            name: "(1+p2*x)/2",
            value: a,
        });
    }
    let q = shannon_args(x, p)?;
    let h2 = -xlnx(a.clamp(0.0, 1.0)) - xlnx((1.0 - a).clamp(0.0, 1.0));
    let h4 = -q.iter().copied().map(xlnx).sum::<f64>();
    Ok(-h2 + h4)
}

/// f₂(x) = +h4(quaternary args), in nats.
pub fn f2(x: f64, p: &AppendixParams) -> Result<f64> {
    let q = shannon_args(x, p)?;
    Ok(-q.iter().copied().map(xlnx).sum::<f64>())
}

pub fn evaluate(which: AppendixFn, x: f64, p: &AppendixParams) -> Result<f64> {
    match which {
        AppendixFn::F1 => f1(x, p),
        AppendixFn::F2 => f2(x, p),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumDirection {
    Minimum,
    Maximum,
}

/// Interior extrema of f over x ∈ (0, 1).
#[derive(Debug, Clone)]
pub struct ExtremaCount {
    pub count: usize,
    pub locations: Vec<f64>,
    pub kinds: Vec<ExtremumDirection>,
}

/// Counts strict sign changes of the discrete derivative on a `grid`-point
/// scan and golden-refines each candidate.
pub fn count_interior_extrema(
    which: AppendixFn,
    p: &AppendixParams,
    grid: usize,
) -> Result<ExtremaCount> {
    if grid < 101 {
        return Err(Error::OutOfRange(format!(
            "extremum counting needs grid >= 101, got {grid}"
        )));
    }
    let xs: Vec<f64> = (0..grid).map(|i| i as f64 / (grid - 1) as f64).collect();
    let mut vs = Vec::with_capacity(grid);
    for &x in &xs {
        vs.push(evaluate(which, x, p)?);
    }
    let mut locations = Vec::new();
    let mut kinds = Vec::new();
    let mut last_sign = 0i8;
    for i in 1..grid {
        let d = vs[i] - vs[i - 1];
        if d.abs() < PLATEAU_TOL {
            continue;
        }
        let s = if d > 0.0 { 1i8 } else { -1i8 };
        if last_sign != 0 && s != last_sign {
            let lo = xs[i.saturating_sub(3)];
            let hi = xs[(i + 1).min(grid - 1)];
            let f = |x: f64| evaluate(which, x, p).unwrap_or(f64::INFINITY);
            let (x_star, direction) = if s > 0 {
                (golden_min(f, lo, hi, 1e-12).0, ExtremumDirection::Minimum)
            } else {
                (golden_max(f, lo, hi, 1e-12).0, ExtremumDirection::Maximum)
            };
            if x_star > 1e-9 && x_star < 1.0 - 1e-9 {
                locations.push(x_star);
                kinds.push(direction);
            }
        }
        last_sign = s;
    }
    Ok(ExtremaCount {
        count: locations.len(),
        locations,
        kinds,
    })
}

/// One conjecture violation: the parameters and the confirmed extremum count.
#[derive(Debug, Clone)]
pub struct Violation {
    pub params: AppendixParams,
    pub count: usize,
}

/// Result of a randomized conjecture trial.
#[derive(Debug, Clone)]
pub struct TrialReport {
    pub samples: usize,
    pub which: AppendixFn,
    pub violations: Vec<Violation>,
    pub max_count_seen: usize,
}

/// Samples valid X states, maps them to appendix parameters and counts
/// interior extrema. Candidates with two or more extrema are re-verified at
/// ten times the grid density before being reported. Deterministic per seed
/// and independent of parallelism.
pub fn conjecture_trial(
    samples: usize,
    seed: u64,
    which: AppendixFn,
    grid: usize,
) -> Result<TrialReport> {
    if samples == 0 {
        return Err(Error::OutOfRange("samples must be positive".into()));
    }
    let results: Vec<(usize, Option<Violation>)> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let state = draw_general_x(&mut stream_rng(seed, i));
            let p = AppendixParams::from_general_x(&state);
            let c = count_interior_extrema(which, &p, grid)
                .map(|e| e.count)
                .unwrap_or(0);
            if c >= 2 {
                // anti-false-positive: confirm at 10x density
                let confirmed = count_interior_extrema(which, &p, grid * 10)
                    .map(|e| e.count)
                    .unwrap_or(0);
                if confirmed >= 2 {
                    return (
                        confirmed,
                        Some(Violation {
                            params: p,
                            count: confirmed,
                        }),
                    );
                }
                return (confirmed, None);
            }
            (c, None)
        })
        .collect();
    let max_count_seen = results.iter().map(|r| r.0).max().unwrap_or(0);
    let mut violations: Vec<Violation> =
        results.into_iter().filter_map(|r| r.1).collect();
    violations.sort_by(|a, b| {
        a.params
            .p1
            .total_cmp(&b.params.p1)
            .then(a.params.p2.total_cmp(&b.params.p2))
    });
    Ok(TrialReport {
        samples,
        which,
        violations,
        max_count_seen,
    })
}
