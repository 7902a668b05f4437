//! θ-optimization of the conditional entropy: interior-extremum detection,
//! the piecewise discord min{Q_0, Q_{θ*}, Q_{π/2}}, the pseudo-discord
//! min{Q_0, Q_{π/2}}, and the I–V shape classification.

use std::f64::consts::FRAC_PI_2;

use crate::branches::{q0, q_pi2, s_cond};
use crate::entropy::EntropyValue;
use crate::error::{Error, Result};
use crate::search::{golden_max, golden_min};
use crate::state::XxzState;

/// Default θ-grid for interior-extremum scans.
pub const DEFAULT_GRID: usize = 2001;
/// Golden-section θ resolution.
const THETA_TOL: f64 = 1e-10;
/// Discrete differences below this are plateau noise.
const PLATEAU_TOL: f64 = 1e-13;
/// Total grid range below this counts as a constant profile.
const CONSTANT_TOL: f64 = 1e-12;
/// Branch values closer than this are reported as Q0 with a crossing flag.
const TIE_TOL: f64 = 1e-12;
/// Default |Q0 - Qpi2| tolerance for flagging a branch crossing.
pub const DEFAULT_CROSSING_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    None,
    Minimum,
    Maximum,
    Constant,
}

/// What the conditional entropy does inside (0, π/2).
#[derive(Debug, Clone, Copy)]
pub struct ExtremumReport {
    pub kind: ExtremumKind,
    pub theta_star: Option<f64>,
    pub value_at_star: Option<EntropyValue>,
    pub value_at_0: EntropyValue,
    pub value_at_pi2: EntropyValue,
}

/// Conditional-entropy profile types over [0, π/2]:
/// constant, monotone increasing/decreasing, interior minimum/maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeType {
    I,
    II,
    III,
    IV,
    V,
}

impl std::fmt::Display for ShapeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ShapeType::I => "I",
            ShapeType::II => "II",
            ShapeType::III => "III",
            ShapeType::IV => "IV",
            ShapeType::V => "V",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Q0,
    QPi2,
    QThetaStar,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Branch::Q0 => "Q0",
            Branch::QPi2 => "QPi2",
            Branch::QThetaStar => "QThetaStar",
        };
        write!(f, "{s}")
    }
}

/// Result of the piecewise discord evaluation.
#[derive(Debug, Clone, Copy)]
pub struct DiscordResult {
    pub q: EntropyValue,
    pub branch: Branch,
    pub theta_opt: f64,
    /// Set when |Q0 - Qpi2| is below the crossing tolerance.
    pub crossing: bool,
}

fn scan_extrema(state: &XxzState, grid: usize) -> (Vec<f64>, Vec<(usize, bool)>) {
    let n = grid.max(3);
    let values: Vec<f64> = (0..n)
        .map(|i| s_cond(FRAC_PI_2 * i as f64 / (n - 1) as f64, state).nats())
        .collect();
    // strict sign alternations of the discrete derivative; plateaus ignored
    let mut flips = Vec::new();
    let mut last_sign = 0i8;
    for i in 1..n {
        let d = values[i] - values[i - 1];
        if d.abs() < PLATEAU_TOL {
            continue;
        }
        let s = if d > 0.0 { 1i8 } else { -1i8 };
        if last_sign != 0 && s != last_sign {
            // interior extremum between grid points i-2 and i
            flips.push((i - 1, s > 0)); // true: minimum (falling -> rising)
        }
        last_sign = s;
    }
    (values, flips)
}

/// Scans S_cond on a uniform θ-grid, detects at most one interior stationary
/// point, and refines it by golden section.
///
/// Two or more interior extrema (confirmed on a doubled grid) violate the
/// unimodality hypothesis and are reported as an error, never silently.
pub fn find_interior_extremum_with_grid(state: &XxzState, grid: usize) -> Result<ExtremumReport> {
    let value_at_0 = s_cond(0.0, state);
    let value_at_pi2 = s_cond(FRAC_PI_2, state);
    let (values, flips) = scan_extrema(state, grid);

    let range = values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
        - values.iter().copied().fold(f64::INFINITY, f64::min);
    if range < CONSTANT_TOL {
        return Ok(ExtremumReport {
            kind: ExtremumKind::Constant,
            theta_star: None,
            value_at_star: None,
            value_at_0,
            value_at_pi2,
        });
    }

    if flips.len() >= 2 {
        // re-verify before declaring a conjecture violation; a cleared
        // candidate is rescanned wholesale on the doubled grid
        let doubled = grid * 2 - 1;
        let (_, confirmed) = scan_extrema(state, doubled);
        if confirmed.len() >= 2 {
            return Err(Error::ConjectureViolation {
                s1: state.s1(),
                c1: state.c1(),
                c3: state.c3(),
                count: confirmed.len(),
                grid: doubled,
            });
        }
        return find_interior_extremum_with_grid(state, doubled);
    }

    let monotone = |kind| {
        Ok(ExtremumReport {
            kind,
            theta_star: None,
            value_at_star: None,
            value_at_0,
            value_at_pi2,
        })
    };

    let Some(&(idx, is_minimum)) = flips.first() else {
        return monotone(ExtremumKind::None);
    };

    let n = values.len();
    let step = FRAC_PI_2 / (n - 1) as f64;
    // widened by two grid steps so plateau points cannot push the extremum
    // outside the refinement bracket
    let lo = step * idx.saturating_sub(2) as f64;
    let hi = (step * (idx + 2) as f64).min(FRAC_PI_2);
    let f = |t: f64| s_cond(t, state).nats();
    let (theta_star, v_star) = if is_minimum {
        golden_min(f, lo, hi, THETA_TOL)
    } else {
        golden_max(f, lo, hi, THETA_TOL)
    };

    // reject refinements that collapse onto an endpoint
    let near = if theta_star < FRAC_PI_2 / 2.0 {
        value_at_0.nats()
    } else {
        value_at_pi2.nats()
    };
    if theta_star <= 1e-9
        || theta_star >= FRAC_PI_2 - 1e-9
        || (v_star - near).abs() <= 1e-15
    {
        return monotone(ExtremumKind::None);
    }

    Ok(ExtremumReport {
        kind: if is_minimum {
            ExtremumKind::Minimum
        } else {
            ExtremumKind::Maximum
        },
        theta_star: Some(theta_star),
        value_at_star: Some(EntropyValue::from_nats(v_star)),
        value_at_0,
        value_at_pi2,
    })
}

/// [`find_interior_extremum_with_grid`] at the default grid of 2001 points.
pub fn find_interior_extremum(state: &XxzState) -> Result<ExtremumReport> {
    find_interior_extremum_with_grid(state, DEFAULT_GRID)
}

fn assemble(
    state: &XxzState,
    interior: Option<(f64, f64)>, // (theta*, s_cond(theta*)) for a minimum
    crossing_tol: f64,
) -> DiscordResult {
    let b0 = q0(state).nats();
    let bp = q_pi2(state).nats();
    let prefactor = state.subsystem_entropy().nats() - state.state_entropy().nats();
    let crossing = (b0 - bp).abs() < crossing_tol;

    let mut q = b0;
    let mut branch = Branch::Q0;
    let mut theta_opt = 0.0;
    if bp < q && (b0 - bp).abs() >= TIE_TOL {
        q = bp;
        branch = Branch::QPi2;
        theta_opt = FRAC_PI_2;
    }
    if let Some((t_star, s_star)) = interior {
        let q_star = prefactor + s_star;
        if q_star < q {
            q = q_star;
            branch = Branch::QThetaStar;
            theta_opt = t_star;
        }
    }
    DiscordResult {
        q: EntropyValue::from_nats(q),
        branch,
        theta_opt,
        crossing,
    }
}

/// Piecewise discord Q = min{Q_0, Q_{θ*}, Q_{π/2}} with the crossing-flag
/// tolerance made explicit.
pub fn discord_with_tol(state: &XxzState, crossing_tol: f64) -> Result<DiscordResult> {
    let report = find_interior_extremum(state)?;
    let interior = match report.kind {
        ExtremumKind::Minimum => Some((
            report.theta_star.unwrap(),
            report.value_at_star.unwrap().nats(),
        )),
        _ => None,
    };
    Ok(assemble(state, interior, crossing_tol))
}

/// Piecewise discord Q = min{Q_0, Q_{θ*}, Q_{π/2}} (nats inside the result).
pub fn discord(state: &XxzState) -> Result<DiscordResult> {
    discord_with_tol(state, DEFAULT_CROSSING_TOL)
}

/// Pseudo-discord min{Q_0, Q_{π/2}}: ignores any interior minimum.
pub fn pseudo_discord(state: &XxzState) -> DiscordResult {
    assemble(state, None, DEFAULT_CROSSING_TOL)
}

/// Classifies the S_cond(θ) profile into types I–V.
pub fn classify_shape(state: &XxzState) -> Result<ShapeType> {
    classify_shape_with_grid(state, DEFAULT_GRID)
}

pub fn classify_shape_with_grid(state: &XxzState, grid: usize) -> Result<ShapeType> {
    let report = find_interior_extremum_with_grid(state, grid)?;
    Ok(match report.kind {
        ExtremumKind::Constant => ShapeType::I,
        ExtremumKind::Minimum => ShapeType::IV,
        ExtremumKind::Maximum => ShapeType::V,
        ExtremumKind::None => {
            if report.value_at_pi2.nats() >= report.value_at_0.nats() {
                ShapeType::II
            } else {
                ShapeType::III
            }
        }
    })
}
