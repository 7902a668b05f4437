//! Bidirectional map between the XXZ state parameters (s1, c1, c3) and the
//! thermal spin dimer (J, Jz, B, T) in a homogeneous z field.
//!
//! The map is defined only up to the temperature factor, so `state_to_dimer`
//! takes T explicitly; the ratios Jz/J and B/J are T-invariant.

use crate::error::{Error, Result};
use crate::state::XxzState;

/// Boltzmann exponents beyond this overflow the map.
const MAX_EXPONENT: f64 = 700.0;

/// Dimer couplings (J, Jz), field B and temperature T, all in energy units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimerParams {
    pub j: f64,
    pub jz: f64,
    pub b: f64,
    pub t: f64,
}

impl DimerParams {
    pub fn new(j: f64, jz: f64, b: f64, t: f64) -> Result<Self> {
        for (v, name) in [(j, "J"), (jz, "Jz"), (b, "B"), (t, "T")] {
            if !v.is_finite() {
                return Err(Error::InvalidInput(name));
            }
        }
        if t <= 0.0 {
            return Err(Error::OutOfRange(format!("T must be positive, got {t}")));
        }
        Ok(Self { j, jz, b, t })
    }

    /// Anisotropy Δ = Jz/J.
    pub fn delta(&self) -> f64 {
        self.jz / self.j
    }

    pub fn b_over_j(&self) -> f64 {
        self.b / self.j
    }
}

/// Energy levels of the dimer: E₁,₂ = −(Jz ± 2B)/2 for the polarized pair
/// and E₃,₄ = (Jz ∓ 2J)/2 for the central block, so that
/// Σ exp(−Eᵢ/T) reproduces the closed-form partition function.
pub fn dimer_energies(p: &DimerParams) -> [f64; 4] {
    [
        -(p.jz + 2.0 * p.b) / 2.0,
        -(p.jz - 2.0 * p.b) / 2.0,
        (p.jz - 2.0 * p.j) / 2.0,
        (p.jz + 2.0 * p.j) / 2.0,
    ]
}

/// Partition function Z = 2[e^{Jz/2T} cosh(B/T) + e^{−Jz/2T} cosh(J/T)].
pub fn partition_function(p: &DimerParams) -> f64 {
    2.0 * ((p.jz / (2.0 * p.t)).exp() * (p.b / p.t).cosh()
        + (-p.jz / (2.0 * p.t)).exp() * (p.j / p.t).cosh())
}

/// Gibbs state of the dimer. The largest Boltzmann exponent is factored out
/// before summing, so the result is finite whenever the exponents are within
/// the overflow guard.
pub fn dimer_to_state(p: &DimerParams) -> Result<XxzState> {
    let a = p.jz / (2.0 * p.t);
    let bb = p.b / p.t;
    let jj = p.j / p.t;
    for (v, name) in [(p.j, "|J|/T"), (p.jz, "|Jz|/T"), (p.b, "|B|/T")] {
        if (v / p.t).abs() > MAX_EXPONENT {
            return Err(Error::OutOfRange(format!("{name} exceeds {MAX_EXPONENT}")));
        }
    }
    let exponents = [a + bb, a - bb, -a + jj, -a - jj];
    let m = exponents.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let w: Vec<f64> = exponents.iter().map(|e| (e - m).exp()).collect();
    let z: f64 = w.iter().sum();
    let s1 = (w[0] - w[1]) / z;
    let c1 = (w[2] - w[3]) / z;
    let c3 = (w[0] + w[1] - w[2] - w[3]) / z;
    XxzState::new(s1, c1, c3)
}

/// Inverts the thermal map at temperature T. States on a face of 𝒯 have a
/// vanishing eigenvalue and map to infinite couplings.
pub fn state_to_dimer(state: &XxzState, t: f64) -> Result<DimerParams> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::OutOfRange(format!("T must be positive, got {t}")));
    }
    let (s1, c1, c3) = (state.s1(), state.c1(), state.c3());
    let num_j = 1.0 + 2.0 * c1 - c3;
    let den_j = 1.0 - 2.0 * c1 - c3;
    let num_b = 1.0 + 2.0 * s1 + c3;
    let den_b = 1.0 - 2.0 * s1 + c3;
    let num_z = (1.0 + c3) * (1.0 + c3) - 4.0 * s1 * s1;
    let den_z = (1.0 - c3) * (1.0 - c3) - 4.0 * c1 * c1;
    for v in [num_j, den_j, num_b, den_b, num_z, den_z] {
        if v <= 0.0 {
            return Err(Error::SingularMap);
        }
    }
    // couplings are t * (log-ratio / 2) so that scaling T scales them exactly
    DimerParams::new(
        t * (0.5 * (num_j / den_j).ln()),
        t * (0.5 * (num_z / den_z).ln()),
        t * (0.5 * (num_b / den_b).ln()),
        t,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::sample_tetrahedron;

    fn params(j: f64, jz: f64, b: f64, t: f64) -> DimerParams {
        DimerParams::new(j, jz, b, t).unwrap()
    }

    #[test]
    fn energy_examples() {
        assert_eq!(dimer_energies(&params(0.0, 0.0, 0.0, 1.0)), [0.0; 4]);
        assert_eq!(
            dimer_energies(&params(1.0, 0.0, 0.0, 1.0)),
            [0.0, 0.0, -1.0, 1.0]
        );
    }

    #[test]
    fn partition_function_matches_energies() {
        for p in [
            params(0.7, -0.4, 1.1, 0.9),
            params(-1.2, 2.0, 0.3, 2.5),
            params(0.0, 0.0, 0.0, 1.0),
        ] {
            let direct: f64 = dimer_energies(&p).iter().map(|e| (-e / p.t).exp()).sum();
            assert!((direct - partition_function(&p)).abs() < 1e-12 * direct);
        }
    }

    #[test]
    fn zero_field_kills_magnetization() {
        let st = dimer_to_state(&params(1.3, 0.4, 0.0, 0.8)).unwrap();
        assert_eq!(st.s1(), 0.0);
    }

    #[test]
    fn high_temperature_is_maximally_mixed() {
        let st = dimer_to_state(&params(1.0, 1.0, 1.0, 1e9)).unwrap();
        assert!(st.s1().abs() < 1e-8);
        assert!(st.c1().abs() < 1e-8);
        assert!(st.c3().abs() < 1e-8);
    }

    #[test]
    fn overflow_guard() {
        assert!(matches!(
            dimer_to_state(&params(800.0, 0.0, 0.0, 1.0)),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn round_trip_both_ways() {
        for p in [
            params(1.0, 1.02, 1.0, 0.8),
            params(-0.6, 0.3, 0.2, 1.7),
            params(0.25, -0.8, -0.4, 0.5),
        ] {
            let st = dimer_to_state(&p).unwrap();
            let back = state_to_dimer(&st, p.t).unwrap();
            assert!((back.j - p.j).abs() <= 1e-9 * p.j.abs().max(1.0));
            assert!((back.jz - p.jz).abs() <= 1e-9 * p.jz.abs().max(1.0));
            assert!((back.b - p.b).abs() <= 1e-9 * p.b.abs().max(1.0));
        }
        for st in sample_tetrahedron(13, 40) {
            if st.on_face(1e-3) {
                continue;
            }
            let p = state_to_dimer(&st, 1.0).unwrap();
            let again = dimer_to_state(&p).unwrap();
            assert!((again.s1() - st.s1()).abs() < 1e-9);
            assert!((again.c1() - st.c1()).abs() < 1e-9);
            assert!((again.c3() - st.c3()).abs() < 1e-9);
        }
    }

    #[test]
    fn temperature_scaling_is_exact() {
        let st = XxzState::new(0.25, 0.14, 0.34).unwrap();
        let p1 = state_to_dimer(&st, 1.0).unwrap();
        let p3 = state_to_dimer(&st, 3.0).unwrap();
        assert_eq!(p3.j, 3.0 * p1.j);
        assert_eq!(p3.jz, 3.0 * p1.jz);
        assert_eq!(p3.b, 3.0 * p1.b);
        assert!((p3.delta() - p1.delta()).abs() < 1e-15 * p1.delta().abs());
        assert!((p3.b_over_j() - p1.b_over_j()).abs() < 1e-15 * p1.b_over_j().abs());
    }

    #[test]
    fn quoted_band_values() {
        let lo = XxzState::new(0.4731928814, 0.14, 0.34).unwrap();
        let hi = XxzState::new(0.4733412570, 0.14, 0.34).unwrap();
        let p_lo = state_to_dimer(&lo, 1.0).unwrap();
        let p_hi = state_to_dimer(&hi, 1.0).unwrap();
        // Δ decreases along s1: the band is [Δ(s1_pi2), Δ(s1_0)]
        assert!((p_lo.delta() - 1.0202484171).abs() < 1e-9);
        assert!((p_hi.delta() - 1.0195589945).abs() < 1e-8);
        assert!((p_lo.b_over_j() - 1.9425190401).abs() < 1e-9);
        assert!((p_hi.b_over_j() - 1.9434950494).abs() < 1e-9);
        assert!((1.0 / p_lo.j - 2.2082157001).abs() < 1e-9);
    }

    #[test]
    fn jz_changes_sign_near_quoted_point() {
        let jz_at = |s1: f64| {
            state_to_dimer(&XxzState::new(s1, 0.14, 0.34).unwrap(), 1.0)
                .unwrap()
                .jz
        };
        assert!(jz_at(0.5995) > 0.0);
        assert!(jz_at(0.5999) < 0.0);
    }

    #[test]
    fn symmetric_state_with_zero_jz() {
        // (1+c3)^2 = (1-c3)^2 - 4c^2 makes the Jz log argument 1
        let c: f64 = 0.3;
        let c3 = {
            // solve (1+x)^2 = (1-x)^2 - 4c^2  =>  x = -c^2
            -c * c
        };
        let st = XxzState::new(0.0, c, c3).unwrap();
        let p = state_to_dimer(&st, 1.0).unwrap();
        assert!(p.jz.abs() < 1e-15);
    }

    #[test]
    fn face_state_is_singular() {
        let st = XxzState::new(0.25, 0.6, -0.5).unwrap();
        assert!(matches!(state_to_dimer(&st, 1.0), Err(Error::SingularMap)));
    }
}
