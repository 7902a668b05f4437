//! Ground-truth conditional entropy via explicit von Neumann measurement on
//! subsystem B.
//!
//! Everything here works on the full 4x4 density matrix with projectors
//! |0'⟩ = cos(θ/2)|0⟩ − e^{−iφ} sin(θ/2)|1⟩, so it also serves general
//! (non-symmetric) X states. It is deliberately independent of the
//! closed-form expressions in [`crate::branches`], which it validates.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use crate::entropy::{xlnx, EntropyValue};
use crate::error::{Error, Result};
use crate::search::golden_min;
use crate::state::DensityMatrix4;

/// Probabilities below this contribute nothing to the average entropy and
/// mark the conditional state as a zero-probability branch.
pub const ZERO_PROB: f64 = 1e-14;

/// Measurement direction on the Bloch sphere, canonicalized to
/// θ ∈ [0, π], φ ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementDirection {
    theta: f64,
    phi: f64,
}

impl MeasurementDirection {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::InvalidInput("theta"));
        }
        if !phi.is_finite() {
            return Err(Error::InvalidInput("phi"));
        }
        let mut t = theta.rem_euclid(TAU);
        let mut p = phi;
        if t > PI {
            t = TAU - t;
            p += PI;
        }
        let p = p.rem_euclid(TAU);
        Ok(Self { theta: t, phi: p })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

type C2 = [[Complex64; 2]; 2];
type C4 = [[Complex64; 4]; 4];

fn projector(dir: &MeasurementDirection) -> C2 {
    let half = dir.theta / 2.0;
    let phase = Complex64::from_polar(1.0, -dir.phi);
    let v = [
        Complex64::new(half.cos(), 0.0),
        -phase * Complex64::new(half.sin(), 0.0),
    ];
    [
        [v[0] * v[0].conj(), v[0] * v[1].conj()],
        [v[1] * v[0].conj(), v[1] * v[1].conj()],
    ]
}

fn lift_b(p: &C2) -> C4 {
    // 1 ⊗ Π acting on the ordered basis |00>,|01>,|10>,|11>
    let z = Complex64::new(0.0, 0.0);
    let mut m = [[z; 4]; 4];
    for a in 0..2 {
        for b in 0..2 {
            for bp in 0..2 {
                m[2 * a + b][2 * a + bp] = p[b][bp];
            }
        }
    }
    m
}

fn matmul(a: &C4, b: &C4) -> C4 {
    let z = Complex64::new(0.0, 0.0);
    let mut out = [[z; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn to_complex(rho: &DensityMatrix4) -> C4 {
    let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = Complex64::new(rho.get(i, j), 0.0);
        }
    }
    m
}

fn partial_trace_b(m: &C4) -> C2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for a in 0..2 {
        for ap in 0..2 {
            out[a][ap] = m[2 * a][2 * ap] + m[2 * a + 1][2 * ap + 1];
        }
    }
    out
}

/// Eigenvalues of a Hermitian 2x2 matrix in closed form (trace/determinant).
fn eig2(m: &C2) -> (f64, f64) {
    let t = (m[0][0] + m[1][1]).re;
    let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).re;
    let disc = (t * t / 4.0 - det).max(0.0).sqrt();
    (t / 2.0 + disc, t / 2.0 - disc)
}

/// One outcome of the measurement: probability and the conditional state of A.
#[derive(Debug, Clone, Copy)]
pub struct ConditionalState {
    pub probability: f64,
    pub state: C2,
    /// True when the outcome probability is below [`ZERO_PROB`]; the state is
    /// then reported as the maximally mixed qubit.
    pub zero_probability: bool,
}

impl ConditionalState {
    pub fn entropy(&self) -> EntropyValue {
        let (a, b) = eig2(&self.state);
        EntropyValue::from_nats(-xlnx(a.max(0.0)) - xlnx(b.max(0.0)))
    }
}

/// Two-outcome post-measurement ensemble on subsystem B.
#[derive(Debug, Clone, Copy)]
pub struct PostMeasurementEnsemble {
    pub outcomes: [ConditionalState; 2],
}

/// Applies the projective measurement {Π, 1−Π} on B and returns
/// (pᵢ, ρ_A|i) with ρ_A|i = Tr_B[(1⊗Πᵢ) ρ (1⊗Πᵢ)]/pᵢ.
pub fn post_measurement_ensemble(
    rho: &DensityMatrix4,
    dir: &MeasurementDirection,
) -> PostMeasurementEnsemble {
    let rho_c = to_complex(rho);
    let p0 = projector(dir);
    let id = [
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
    ];
    let p1 = {
        let mut m = id;
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] -= p0[i][j];
            }
        }
        m
    };
    let make = |proj: &C2| -> ConditionalState {
        let lifted = lift_b(proj);
        let sandwich = matmul(&matmul(&lifted, &rho_c), &lifted);
        let prob = (0..4).map(|i| sandwich[i][i].re).sum::<f64>();
        if prob < ZERO_PROB {
            let half = Complex64::new(0.5, 0.0);
            let z = Complex64::new(0.0, 0.0);
            return ConditionalState {
                probability: prob.max(0.0),
                state: [[half, z], [z, half]],
                zero_probability: true,
            };
        }
        let mut cond = partial_trace_b(&sandwich);
        for row in &mut cond {
            for v in row.iter_mut() {
                *v /= prob;
            }
        }
        ConditionalState {
            probability: prob,
            state: cond,
            zero_probability: false,
        }
    };
    PostMeasurementEnsemble {
        outcomes: [make(&p0), make(&p1)],
    }
}

/// Average post-measurement entropy Σᵢ pᵢ S(ρ_A|i) in nats.
pub fn conditional_entropy_oracle(rho: &DensityMatrix4, dir: &MeasurementDirection) -> EntropyValue {
    let ens = post_measurement_ensemble(rho, dir);
    let nats = ens
        .outcomes
        .iter()
        .filter(|o| !o.zero_probability)
        .map(|o| o.probability * o.entropy().nats())
        .sum::<f64>();
    EntropyValue::from_nats(nats)
}

/// Number of azimuthal grid points; multiples of π/2 are on the grid.
const PHI_GRID: usize = 32;

/// Brute-force discord: minimizes the oracle conditional entropy over a
/// (θ, φ) grid, refines θ by golden section at the best φ, and returns
/// Q = S(ρ_B) − S(ρ_AB) + min S_cond with the minimizing direction.
///
/// Ties on the grid break toward smaller θ, then smaller φ.
pub fn discord_oracle(
    rho: &DensityMatrix4,
    grid: usize,
) -> Result<(EntropyValue, MeasurementDirection)> {
    if grid < 16 {
        return Err(Error::OutOfRange(format!(
            "discord oracle needs grid >= 16, got {grid}"
        )));
    }
    let mut best = (f64::INFINITY, 0.0f64, 0.0f64);
    for pi in 0..PHI_GRID {
        let phi = TAU * pi as f64 / PHI_GRID as f64;
        for ti in 0..grid {
            let theta = FRAC_PI_2 * ti as f64 / (grid - 1) as f64;
            let dir = MeasurementDirection { theta, phi };
            let v = conditional_entropy_oracle(rho, &dir).nats();
            if v + 1e-15 < best.0 {
                best = (v, theta, phi);
            }
        }
    }
    let phi = best.2;
    let step = FRAC_PI_2 / (grid - 1) as f64;
    let lo = (best.1 - step).max(0.0);
    let hi = (best.1 + step).min(FRAC_PI_2);
    let f = |t: f64| {
        conditional_entropy_oracle(rho, &MeasurementDirection { theta: t, phi }).nats()
    };
    let (t_star, v_star) = golden_min(f, lo, hi, 1e-12);
    let (s_min, theta) = if v_star < best.0 {
        (v_star, t_star)
    } else {
        (best.0, best.1)
    };
    let q = rho.subsystem_b_entropy().nats() - rho.state_entropy().nats() + s_min;
    Ok((
        EntropyValue::from_nats(q),
        MeasurementDirection { theta, phi },
    ))
}
