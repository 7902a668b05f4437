//! Phase-diagram machinery: boundary root-solving on lines through 𝒯,
//! slice scans, deviation curves and Monte Carlo volume estimates.

use rayon::prelude::*;

use crate::branches::{
    crossing_residual, d2_at_0_face_coefficient, q0, q_pi2, s_cond_d2_at_0, s_cond_d2_at_pi2,
};
use crate::error::{Error, Result};
use crate::optimizer::{
    find_interior_extremum_with_grid, ExtremumKind, DEFAULT_CROSSING_TOL, DEFAULT_GRID,
};
use crate::sample::{draw_bell_diagonal, draw_xxz, stream_rng};
use crate::search::{scan_roots, Root, ScanOptions};
use crate::state::XxzState;

/// Scan lines are kept this far inside 𝒯 unless the line itself lies on a
/// face.
const CLIP: f64 = 1e-9;
/// A fixed coordinate this close to its face value puts the whole line on
/// the face.
const FACE_LINE_TOL: f64 = 1e-12;

/// A line through the tetrahedron: c3 fixed, one of (s1, c1) fixed, the
/// other scanned.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScanLine {
    /// Fixed (c3, s1), scanning c1.
    C1 { c3: f64, s1: f64 },
    /// Fixed (c3, c1), scanning s1.
    S1 { c3: f64, c1: f64 },
}

impl ScanLine {
    pub fn c3(&self) -> f64 {
        match *self {
            ScanLine::C1 { c3, .. } | ScanLine::S1 { c3, .. } => c3,
        }
    }

    /// Full range of the scanned coordinate inside 𝒯.
    pub fn coordinate_range(&self) -> (f64, f64) {
        match *self {
            ScanLine::C1 { c3, .. } => {
                let m = (1.0 - c3) / 2.0;
                (-m, m)
            }
            ScanLine::S1 { c3, .. } => {
                let m = (1.0 + c3) / 2.0;
                (-m, m)
            }
        }
    }

    fn state_at(&self, x: f64) -> (f64, f64, f64) {
        match *self {
            ScanLine::C1 { c3, s1 } => (s1, x, c3),
            ScanLine::S1 { c3, c1 } => (x, c1, c3),
        }
    }

    /// True if every state on the line sits on an s1-face of 𝒯.
    fn on_s1_face(&self) -> bool {
        match *self {
            ScanLine::C1 { c3, s1 } => (1.0 + c3 - 2.0 * s1.abs()).abs() <= FACE_LINE_TOL,
            ScanLine::S1 { .. } => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    /// Q_0 = Q_{π/2}.
    Crossing,
    /// S''_cond(0) = 0.
    D2AtZero,
    /// S''_cond(π/2) = 0.
    D2AtPiHalf,
}

impl std::fmt::Display for BoundaryKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundaryKind::Crossing => "crossing",
            BoundaryKind::D2AtZero => "d2-0",
            BoundaryKind::D2AtPiHalf => "d2-pi2",
        };
        write!(f, "{s}")
    }
}

/// Roots of one boundary equation along one scan line.
#[derive(Debug, Clone)]
pub struct BoundarySolution {
    pub line: ScanLine,
    pub kind: BoundaryKind,
    pub roots: Vec<Root>,
}

fn residual_fn(line: &ScanLine, kind: BoundaryKind) -> Box<dyn Fn(f64) -> f64 + Sync + '_> {
    let on_face = line.on_s1_face();
    let line = *line;
    match kind {
        BoundaryKind::Crossing => Box::new(move |x| {
            let (s1, c1, c3) = line.state_at(x);
            crossing_residual(s1, c1, c3)
        }),
        BoundaryKind::D2AtZero if on_face => Box::new(move |x| {
            let (s1, c1, c3) = line.state_at(x);
            match XxzState::new(s1, c1, c3) {
                Ok(st) => d2_at_0_face_coefficient(&st),
                Err(_) => f64::NAN,
            }
        }),
        BoundaryKind::D2AtZero => Box::new(move |x| {
            let (s1, c1, c3) = line.state_at(x);
            match XxzState::new(s1, c1, c3) {
                Ok(st) => s_cond_d2_at_0(&st),
                Err(_) => f64::NAN,
            }
        }),
        BoundaryKind::D2AtPiHalf => Box::new(move |x| {
            let (s1, c1, c3) = line.state_at(x);
            match XxzState::new(s1, c1, c3) {
                Ok(st) => s_cond_d2_at_pi2(&st),
                Err(_) => f64::NAN,
            }
        }),
    }
}

fn default_bracket(line: &ScanLine, kind: BoundaryKind) -> (f64, f64) {
    let (lo, hi) = line.coordinate_range();
    // the face-line residual and the crossing residual are log-free; keep the
    // exact endpoints there so corner roots stay reachable
    let keep_closed = matches!(kind, BoundaryKind::Crossing | BoundaryKind::D2AtPiHalf)
        || line.on_s1_face();
    if keep_closed {
        (lo, hi)
    } else {
        let w = (hi - lo).max(f64::EPSILON);
        (lo + CLIP * w, hi - CLIP * w)
    }
}

fn solve(
    line: &ScanLine,
    kind: BoundaryKind,
    bracket: Option<(f64, f64)>,
    opts: &ScanOptions,
) -> Result<BoundarySolution> {
    let c3 = line.c3();
    if !(-1.0..=1.0).contains(&c3) {
        return Err(Error::OutOfRange(format!("c3 = {c3} outside [-1, 1]")));
    }
    let (lo, hi) = bracket.unwrap_or_else(|| default_bracket(line, kind));
    let f = residual_fn(line, kind);
    let roots = scan_roots(&*f, lo, hi, opts);
    Ok(BoundarySolution {
        line: *line,
        kind,
        roots,
    })
}

/// Roots of Q_0 = Q_{π/2} along a line. No sign change yields an empty
/// solution, which is a valid result.
pub fn solve_crossing(
    line: &ScanLine,
    bracket: Option<(f64, f64)>,
    opts: &ScanOptions,
) -> Result<BoundarySolution> {
    solve(line, BoundaryKind::Crossing, bracket, opts)
}

/// Roots of one endpoint second-derivative condition along a line.
pub fn solve_bifurcation(
    line: &ScanLine,
    kind: BoundaryKind,
    bracket: Option<(f64, f64)>,
    opts: &ScanOptions,
) -> Result<BoundarySolution> {
    if kind == BoundaryKind::Crossing {
        return Err(Error::OutOfRange(
            "solve_bifurcation expects d2-0 or d2-pi2".into(),
        ));
    }
    solve(line, kind, bracket, opts)
}

/// Phase label of a point in a c3-slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseKind {
    Q0,
    QPi2,
    QThetaStarMin,
    QThetaStarMax,
    Crossing,
}

impl std::fmt::Display for PhaseKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PhaseKind::Q0 => "Q0",
            PhaseKind::QPi2 => "QPi2",
            PhaseKind::QThetaStarMin => "QThetaStarMin",
            PhaseKind::QThetaStarMax => "QThetaStarMax",
            PhaseKind::Crossing => "Crossing",
        };
        write!(f, "{s}")
    }
}

/// One labeled grid point with its branch values (nats).
#[derive(Debug, Clone, Copy)]
pub struct PhaseLabel {
    pub s1: f64,
    pub c1: f64,
    pub label: PhaseKind,
    pub q0_nats: f64,
    pub q_pi2_nats: f64,
}

/// A root-solved boundary polyline point accompanying a slice.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryPoint {
    pub kind: BoundaryKind,
    pub s1: f64,
    pub c1: f64,
}

/// A labeled (s1, c1) slice of 𝒯 at fixed c3.
#[derive(Debug, Clone)]
pub struct SliceMap {
    pub c3: f64,
    pub grid: usize,
    /// Row-major, s1 outer, c1 inner.
    pub points: Vec<PhaseLabel>,
    pub boundaries: Vec<BoundaryPoint>,
}

/// Labels one state. IV/V candidates are screened by the signs of the two
/// endpoint second derivatives and confirmed by the grid scan, so the label
/// always agrees with `classify_shape` when the profile is unimodal.
fn label_state(state: &XxzState, crossing_tol: f64) -> PhaseKind {
    let b0 = q0(state).nats();
    let bp = q_pi2(state).nats();
    if (b0 - bp).abs() < crossing_tol {
        return PhaseKind::Crossing;
    }
    let d0 = s_cond_d2_at_0(state);
    let dp = s_cond_d2_at_pi2(state);
    if d0 < 0.0 && dp < 0.0 {
        if let Ok(r) = find_interior_extremum_with_grid(state, DEFAULT_GRID) {
            if r.kind == ExtremumKind::Minimum {
                return PhaseKind::QThetaStarMin;
            }
        }
    } else if d0 > 0.0 && dp > 0.0 {
        if let Ok(r) = find_interior_extremum_with_grid(state, DEFAULT_GRID) {
            if r.kind == ExtremumKind::Maximum {
                return PhaseKind::QThetaStarMax;
            }
        }
    }
    if b0 <= bp {
        PhaseKind::Q0
    } else {
        PhaseKind::QPi2
    }
}

/// Labels a `grid` x `grid` slice at fixed c3 and solves the boundary
/// polylines (the θ*-layers are sub-pixel at plot scale, so the polylines
/// carry the boundary information).
pub fn slice_scan(c3: f64, grid: usize, boundary_samples: usize) -> Result<SliceMap> {
    if !(-1.0 < c3 && c3 < 1.0) {
        return Err(Error::OutOfRange(format!("c3 = {c3} outside (-1, 1)")));
    }
    if grid < 3 {
        return Err(Error::OutOfRange(format!("grid = {grid}, need >= 3")));
    }
    let s_max = (1.0 + c3) / 2.0;
    let c_max = (1.0 - c3) / 2.0;
    let coord = |i: usize, m: f64| -m + 2.0 * m * i as f64 / (grid - 1) as f64;

    let points: Vec<PhaseLabel> = (0..grid * grid)
        .into_par_iter()
        .map(|idx| {
            let s1 = coord(idx / grid, s_max);
            let c1 = coord(idx % grid, c_max);
            let state = XxzState::new(s1, c1, c3).expect("grid point inside slice");
            PhaseLabel {
                s1,
                c1,
                label: label_state(&state, DEFAULT_CROSSING_TOL),
                q0_nats: q0(&state).nats(),
                q_pi2_nats: q_pi2(&state).nats(),
            }
        })
        .collect();

    // boundary polylines: roots in c1 > 0 on lines of fixed s1
    let opts = ScanOptions::default();
    let kinds = [
        BoundaryKind::Crossing,
        BoundaryKind::D2AtZero,
        BoundaryKind::D2AtPiHalf,
    ];
    let ns = boundary_samples.max(2);
    let mut boundaries = Vec::new();
    let columns: Vec<Vec<BoundaryPoint>> = (0..ns)
        .into_par_iter()
        .map(|i| {
            let s1 = -s_max + 2.0 * s_max * i as f64 / (ns - 1) as f64;
            let line = ScanLine::C1 { c3, s1 };
            let mut out = Vec::new();
            for kind in kinds {
                if let Ok(sol) = solve(&line, kind, Some((0.0, c_max)), &opts) {
                    for r in sol.roots {
                        out.push(BoundaryPoint { kind, s1, c1: r.x });
                    }
                }
            }
            out
        })
        .collect();
    for mut col in columns {
        boundaries.append(&mut col);
    }

    Ok(SliceMap {
        c3,
        grid,
        points,
        boundaries,
    })
}

/// One sample of the boundary-deviation curve at fixed c3.
#[derive(Debug, Clone, Copy)]
pub struct DeviationSample {
    pub s1: f64,
    /// Crossing boundary c1^× if present on this line.
    pub crossing: Option<f64>,
    /// 0-boundary c1^0.
    pub boundary_0: Option<f64>,
    /// π/2-boundary c1^{π/2}.
    pub boundary_pi2: Option<f64>,
}

impl DeviationSample {
    /// Δ_0 = c1^0 − c1^×.
    pub fn delta_0(&self) -> Option<f64> {
        Some(self.boundary_0? - self.crossing?)
    }

    /// Δ_{π/2} = c1^{π/2} − c1^×.
    pub fn delta_pi2(&self) -> Option<f64> {
        Some(self.boundary_pi2? - self.crossing?)
    }
}

fn first_positive_root(sol: &BoundarySolution) -> Option<f64> {
    sol.roots.iter().map(|r| r.x).find(|&x| x > 0.0)
}

/// Root-solves the three boundaries in c1 for each s1 sample. Samples where
/// a root is missing are flagged by `None` fields, not dropped.
pub fn deviation_curve(c3: f64, s1_samples: &[f64]) -> Result<Vec<DeviationSample>> {
    if !(0.0 < c3 && c3 < 1.0) {
        return Err(Error::OutOfRange(format!(
            "deviation curve needs c3 in (0, 1), got {c3}"
        )));
    }
    let opts = ScanOptions::default();
    let c_max = (1.0 - c3) / 2.0;
    Ok(s1_samples
        .par_iter()
        .map(|&s1| {
            let line = ScanLine::C1 { c3, s1 };
            let get = |kind| {
                solve(&line, kind, Some((0.0, c_max)), &opts)
                    .ok()
                    .and_then(|sol| first_positive_root(&sol))
            };
            DeviationSample {
                s1,
                crossing: get(BoundaryKind::Crossing),
                boundary_0: get(BoundaryKind::D2AtZero),
                boundary_pi2: get(BoundaryKind::D2AtPiHalf),
            }
        })
        .collect())
}

/// Monte Carlo estimate of the θ*-region (type-IV) volume fraction of 𝒯.
#[derive(Debug, Clone, Copy)]
pub struct VolumeEstimate {
    pub samples: usize,
    pub type_iv: usize,
    pub type_v: usize,
    pub fraction_iv: f64,
    pub stderr_iv: f64,
    pub fraction_v: f64,
    pub stderr_v: f64,
    /// Smallest c3 seen among type-IV samples, if any.
    pub iv_min_c3: Option<f64>,
}

/// Samples 𝒯 uniformly (deterministic per seed, independent of worker
/// count) and counts interior-minimum and interior-maximum profiles.
/// Candidates are screened by the endpoint second-derivative signs and
/// confirmed by the grid scan.
pub fn theta_star_volume(samples: usize, seed: u64) -> Result<VolumeEstimate> {
    if samples < 10_000 {
        return Err(Error::OutOfRange(format!(
            "volume estimate needs >= 1e4 samples, got {samples}"
        )));
    }
    let grid = 801; // the confirm scan only sees pre-screened candidates
    let (iv, v, min_c3) = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let state = draw_xxz(&mut stream_rng(seed, i));
            let d0 = s_cond_d2_at_0(&state);
            let dp = s_cond_d2_at_pi2(&state);
            if d0 < 0.0 && dp < 0.0 {
                if let Ok(r) = find_interior_extremum_with_grid(&state, grid) {
                    if r.kind == ExtremumKind::Minimum {
                        return (1usize, 0usize, state.c3());
                    }
                }
            } else if d0 > 0.0 && dp > 0.0 {
                if let Ok(r) = find_interior_extremum_with_grid(&state, grid) {
                    if r.kind == ExtremumKind::Maximum {
                        return (0, 1, f64::INFINITY);
                    }
                }
            }
            (0, 0, f64::INFINITY)
        })
        .reduce(
            || (0, 0, f64::INFINITY),
            |a, b| (a.0 + b.0, a.1 + b.1, a.2.min(b.2)),
        );
    let n = samples as f64;
    let p_iv = iv as f64 / n;
    let p_v = v as f64 / n;
    Ok(VolumeEstimate {
        samples,
        type_iv: iv,
        type_v: v,
        fraction_iv: p_iv,
        stderr_iv: (p_iv * (1.0 - p_iv) / n).sqrt(),
        fraction_v: p_v,
        stderr_v: (p_v * (1.0 - p_v) / n).sqrt(),
        iv_min_c3: if iv > 0 { Some(min_c3) } else { None },
    })
}

/// Monte Carlo ratio of the Q_{π/2} to Q_0 region volumes of the Bell
/// tetrahedron (Luo branches 1 or 2 versus branch 3). Expected 2.
pub fn bell_region_ratio(samples: usize, seed: u64) -> Result<f64> {
    use crate::branches::luo_discord;
    if samples == 0 {
        return Err(Error::OutOfRange("samples must be positive".into()));
    }
    let q0_count: usize = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let state = draw_bell_diagonal(&mut stream_rng(seed, i));
            let (_, branch) = luo_discord(&state).expect("sampled state is valid");
            usize::from(branch == 3)
        })
        .sum();
    if q0_count == 0 {
        return Err(Error::Numerical("no Q0-region samples"));
    }
    Ok((samples - q0_count) as f64 / q0_count as f64)
}
