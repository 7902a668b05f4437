//! Closed-form entropy branches for XXZ-symmetric X states: the discord
//! branches Q_0 and Q_{π/2}, the θ-resolved conditional entropy, its second
//! derivatives at the endpoints of [0, π/2], Luo's Bell-diagonal discord and
//! the v3v4-edge discord.

use std::f64::consts::LN_2;

use crate::entropy::{xlnx, EntropyValue};
use crate::error::Result;
use crate::state::{BellDiagonalState, XxzState};

/// States closer than this to a face of 𝒯 get the divergent-limit handling
/// in the endpoint second derivatives.
pub const FACE_EPS: f64 = 1e-13;

/// Discord branch at measurement angle θ = 0 (nats).
///
/// Independent of s1, even in c1, zero at c1 = 0.
pub fn q0(state: &XxzState) -> EntropyValue {
    let (c1, c3) = (state.c1(), state.c3());
    EntropyValue::from_nats(
        0.25 * (-2.0 * xlnx(1.0 - c3)
            + xlnx(1.0 + 2.0 * c1 - c3)
            + xlnx(1.0 - 2.0 * c1 - c3)),
    )
}

/// Discord branch at measurement angle θ = π/2 (nats). Even in s1 and c1.
pub fn q_pi2(state: &XxzState) -> EntropyValue {
    let (s1, c1, c3) = (state.s1(), state.c1(), state.c3());
    let r = s1.hypot(c1);
    EntropyValue::from_nats(
        -0.5 * (xlnx(1.0 + s1) + xlnx(1.0 - s1) + xlnx(1.0 + r) + xlnx(1.0 - r))
            + 0.25
                * (xlnx(1.0 + 2.0 * c1 - c3)
                    + xlnx(1.0 - 2.0 * c1 - c3)
                    + xlnx(1.0 + 2.0 * s1 + c3)
                    + xlnx(1.0 - 2.0 * s1 + c3)),
    )
}

/// Crossing residual: 4 (Q_0 − Q_{π/2}). Zero on the branch-crossing
/// boundary. Safe on the faces of 𝒯 (all logs appear as x ln x).
pub fn crossing_residual(s1: f64, c1: f64, c3: f64) -> f64 {
    let r = s1.hypot(c1);
    2.0 * (-xlnx(1.0 - c3)
        + xlnx(1.0 + s1)
        + xlnx(1.0 - s1)
        + xlnx(1.0 + r)
        + xlnx(1.0 - r))
        - xlnx(1.0 + 2.0 * s1 + c3)
        - xlnx(1.0 - 2.0 * s1 + c3)
}

/// Average conditional entropy after a von Neumann measurement on B at polar
/// angle θ (nats). Valid for any θ; even and 2π-periodic.
pub fn s_cond(theta: f64, state: &XxzState) -> EntropyValue {
    let (s1, c1, c3) = (state.s1(), state.c1(), state.c3());
    let (sin, cos) = theta.sin_cos();
    let mut total = LN_2 + 0.5 * (xlnx(1.0 + s1 * cos) + xlnx(1.0 - s1 * cos));
    for a in [1.0, -1.0] {
        let root = ((s1 + a * c3 * cos).powi(2) + (c1 * sin).powi(2)).sqrt();
        for b in [1.0, -1.0] {
            total -= 0.25 * xlnx(1.0 + a * s1 * cos + b * root);
        }
    }
    EntropyValue::from_nats(total)
}

/// (1/v) ln((a+v)/(a-v)); series below |v| = 1e-8 to keep the removable
/// singularity finite.
fn atanh_ratio(v: f64, a: f64) -> f64 {
    if v.abs() < 1e-8 {
        let t = v / a;
        2.0 / a * (1.0 + t * t / 3.0)
    } else {
        (2.0 * v / (a - v)).ln_1p() / v
    }
}

/// Coefficient of the logarithmic divergence of S''(0) on the s1-faces of 𝒯
/// (1 ∓ 2 s1 + c3 = 0). Its zero is where the 0-boundary meets the face.
pub fn d2_at_0_face_coefficient(state: &XxzState) -> f64 {
    let s = state.s1().abs();
    let (c1, c3) = (state.c1(), state.c3());
    (s - c3) - c1 * c1 / (s - c3)
}

/// Second derivative of S_cond with respect to θ at θ = 0.
///
/// On the s1-faces the true value diverges logarithmically; this returns the
/// correctly signed infinity (or 0.0 at the slice corner where the
/// divergence coefficient vanishes).
pub fn s_cond_d2_at_0(state: &XxzState) -> f64 {
    let (s1, c1, c3) = (state.s1(), state.c1(), state.c3());
    let ep = 1.0 + 2.0 * s1 + c3;
    let em = 1.0 - 2.0 * s1 + c3;
    if ep < FACE_EPS || em < FACE_EPS {
        let k = d2_at_0_face_coefficient(state);
        return if k.abs() < 1e-14 {
            0.0
        } else {
            k.signum() * f64::INFINITY
        };
    }
    // a-term: (1/(s1+c3)) ln((1+2s1+c3)/(1-c3)) + (1/(s1-c3)) ln((1-c3)/(1-2s1+c3))
    let a_term = atanh_ratio(s1 + c3, 1.0 + s1) + atanh_ratio(s1 - c3, 1.0 - s1);
    let b_term = 2.0 * ((1.0 - s1) / (1.0 + s1)).ln() + (ep / em).ln();
    let c_term = (ep * em / (1.0 - c3).powi(2)).ln();
    0.25 * (-c1 * c1 * a_term + s1 * b_term + c3 * c_term)
}

/// Second derivative of S_cond with respect to θ at θ = π/2.
///
/// Finite on all of 𝒯 except |c3| = 1; the s1 = c1 = 0 limit is -c3².
pub fn s_cond_d2_at_pi2(state: &XxzState) -> f64 {
    let (s1, c1, c3) = (state.s1(), state.c1(), state.c3());
    let r2 = s1 * s1 + c1 * c1;
    let r = r2.sqrt();
    if r < 1e-8 {
        // leading terms of the r -> 0 expansion
        return c1 * c1 - c3 * c3 + 2.0 * s1 * s1 * c3 - c1 * c1 * c3 * c3 / 3.0;
    }
    // ln((1+r)/(1-r)) / (2 r)
    let g = atanh_ratio(r, 1.0) / 2.0;
    let term_log = c1 * c1 * (r2 - c3 * c3) / r2 * g;
    let q = c3 / r;
    let term_s = s1 * s1 / 2.0
        * ((1.0 + q) * (1.0 + q) / (1.0 + r) + (1.0 - q) * (1.0 - q) / (1.0 - r));
    s1 * s1 + term_log - term_s
}

/// Luo's closed-form discord for Bell-diagonal states, with the index of the
/// minimizing branch (ties broken by the smallest index).
pub fn luo_discord(state: &BellDiagonalState) -> Result<(EntropyValue, u8)> {
    let p = state.probs()?;
    let h4 = -p.iter().copied().map(xlnx).sum::<f64>();
    let mut best = f64::INFINITY;
    let mut branch = 1u8;
    for (i, c) in [state.c1(), state.c2(), state.c3()].into_iter().enumerate() {
        let h2c = LN_2 - 0.5 * (xlnx(1.0 + c) + xlnx(1.0 - c));
        let q = LN_2 - h4 + h2c;
        if q < best {
            best = q;
            branch = (i + 1) as u8;
        }
    }
    Ok((EntropyValue::from_nats(best), branch))
}

/// Discord along the v3v4 edge (c3 = -1): ½[(1+c1)ln(1+c1) + (1-c1)ln(1-c1)].
pub fn edge_discord(c1: f64) -> Result<EntropyValue> {
    if !c1.is_finite() {
        return Err(crate::error::Error::InvalidInput("c1"));
    }
    if c1.abs() > 1.0 {
        return Err(crate::error::Error::Domain(format!(
            "edge discord requires |c1| <= 1, got {c1}"
        )));
    }
    Ok(EntropyValue::from_nats(
        0.5 * (xlnx(1.0 + c1) + xlnx(1.0 - c1)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, LN_2};

    fn st(s1: f64, c1: f64, c3: f64) -> XxzState {
        XxzState::new(s1, c1, c3).unwrap()
    }

    #[test]
    fn q0_vanishes_at_c1_zero() {
        assert_eq!(q0(&st(0.3, 0.0, 0.2)).nats(), 0.0);
    }

    #[test]
    fn q0_quoted_value() {
        let v = q0(&st(0.25, 0.14, 0.34));
        assert!((v.bits() - 0.0442314345).abs() < 1e-9);
        // independent of s1
        assert_eq!(v.nats(), q0(&st(0.0, 0.14, 0.34)).nats());
        // even in c1
        assert!((v.nats() - q0(&st(0.25, -0.14, 0.34)).nats()).abs() < 1e-15);
    }

    #[test]
    fn q0_is_one_bit_at_v3_v4() {
        assert!((q0(&st(0.0, 1.0, -1.0)).bits() - 1.0).abs() < 1e-14);
        assert!((q0(&st(0.0, -1.0, -1.0)).bits() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn q_pi2_is_ln2_on_edge() {
        for c1 in [0.0, 0.3, -0.8, 1.0] {
            assert!((q_pi2(&st(0.0, c1, -1.0)).nats() - LN_2).abs() < 1e-14);
        }
    }

    #[test]
    fn q_pi2_on_c3_axis() {
        // oracle-confirmed value: ½[(1+c3)ln(1+c3)+(1−c3)ln(1−c3)]
        assert_eq!(q_pi2(&st(0.0, 0.0, 0.0)).nats(), 0.0);
        let v = q_pi2(&st(0.0, 0.0, 0.5));
        assert!((v.nats() - 0.130812035941137).abs() < 1e-14);
        let expect = 0.5 * (xlnx(1.5) + xlnx(0.5));
        assert!((v.nats() - expect).abs() < 1e-15);
    }

    #[test]
    fn q_pi2_symmetries_and_quoted_point() {
        let v = q_pi2(&st(0.25, 0.14, 0.34)).nats();
        assert!((v - 0.064201804567664).abs() < 1e-14);
        assert!((v - q_pi2(&st(-0.25, 0.14, 0.34)).nats()).abs() < 1e-15);
        assert!((v - q_pi2(&st(0.25, -0.14, 0.34)).nats()).abs() < 1e-15);
        // near the crossing point a the two branches agree to ~1e-7
        let a = st(0.473267, 0.14, 0.34);
        assert!((q0(&a).nats() - q_pi2(&a).nats()).abs() < 1e-6);
    }

    #[test]
    fn s_cond_constant_on_c1_eq_c3() {
        // type-I family: constant in θ (value differs from ln 2 unless c1=0)
        let state = st(0.0, 0.25, 0.25);
        let v0 = s_cond(0.0, &state).nats();
        assert!((v0 - 0.661563238157982).abs() < 1e-14);
        for k in 1..=8 {
            let v = s_cond(FRAC_PI_2 * k as f64 / 8.0, &state).nats();
            assert!((v - v0).abs() < 1e-14);
        }
        assert!((s_cond(0.4, &st(0.0, 0.0, 0.0)).nats() - LN_2).abs() < 1e-15);
    }

    #[test]
    fn s_cond_quoted_values() {
        let a = st(0.4732672580170655, 0.14, 0.34);
        assert!((s_cond(0.0, &a).bits() - 0.8163573993).abs() < 1e-9);
        assert!((s_cond(FRAC_PI_2, &a).bits() - 0.8163573993).abs() < 1e-9);
        assert!((s_cond(0.732419, &a).bits() - 0.8163533082).abs() < 1e-9);

        let b = st(0.25, 0.6563909127, -0.5);
        assert!((s_cond(0.5637701781, &b).bits() - 0.6130583056).abs() < 1e-9);
        assert!((s_cond(0.0, &b).bits() - 0.6068441215).abs() < 1e-9);
    }

    #[test]
    fn s_cond_even_and_periodic() {
        let state = st(0.25, 0.14, 0.34);
        for &t in &[0.3, 1.2, 2.9] {
            let v = s_cond(t, &state).nats();
            assert!((v - s_cond(-t, &state).nats()).abs() < 1e-15);
            assert!((v - s_cond(2.0 * std::f64::consts::PI - t, &state).nats()).abs() < 1e-12);
        }
        assert!((s_cond(0.9, &state).nats() - 0.639009278670193).abs() < 1e-14);
    }

    #[test]
    fn endpoint_identities() {
        // q0 - q_pi2 == s_cond(0) - s_cond(pi/2)
        for (s1, c1, c3) in [(0.3, 0.2, 0.1), (0.47, 0.14, 0.34), (0.1, 0.5, -0.4)] {
            let state = st(s1, c1, c3);
            let lhs = q0(&state).nats() - q_pi2(&state).nats();
            let rhs = s_cond(0.0, &state).nats() - s_cond(FRAC_PI_2, &state).nats();
            assert!((lhs - rhs).abs() < 1e-12);
            // reconstruction: q0 = h2((1+s1)/2) - h4(lambda) + s_cond(0)
            let pre = state.subsystem_entropy().nats() - state.state_entropy().nats();
            assert!((q0(&state).nats() - (pre + s_cond(0.0, &state).nats())).abs() < 1e-12);
            assert!(
                (q_pi2(&state).nats() - (pre + s_cond(FRAC_PI_2, &state).nats())).abs() < 1e-12
            );
        }
    }

    #[test]
    fn d2_values_and_zero_family() {
        assert!((s_cond_d2_at_0(&st(0.25, 0.14, 0.34)) - 0.071156913178949).abs() < 1e-13);
        assert!((s_cond_d2_at_pi2(&st(0.25, 0.14, 0.34)) + 0.063390417268747).abs() < 1e-13);
        // (0, c, c): both endpoint second derivatives vanish
        for c in [0.1, 0.25, 0.3] {
            assert!(s_cond_d2_at_0(&st(0.0, c, c)).abs() < 1e-13);
            assert!(s_cond_d2_at_pi2(&st(0.0, c, c)).abs() < 1e-13);
        }
    }

    #[test]
    fn d2_series_branches_are_continuous() {
        // across the |s1 - c3| ~ 1e-8 series switch
        let a = s_cond_d2_at_0(&st(0.34 + 2e-8, 0.14, 0.34));
        let b = s_cond_d2_at_0(&st(0.34 + 5e-9, 0.14, 0.34));
        let c = s_cond_d2_at_0(&st(0.34, 0.14, 0.34));
        assert!((a - b).abs() < 1e-7);
        assert!((b - c).abs() < 1e-7);
        // small-r branch of the pi/2 derivative: limit is -c3^2
        let v = s_cond_d2_at_pi2(&st(1e-9, 1e-9, 0.4));
        assert!((v + 0.16).abs() < 1e-8, "v = {v}");
        assert!((s_cond_d2_at_pi2(&st(0.0, 0.0, 0.4)) + 0.16).abs() < 1e-15);
    }

    #[test]
    fn d2_face_handling() {
        // on the s1-face (1 - 2 s1 + c3 = 0) the divergence sign follows the
        // face coefficient, which vanishes at the slice corner c1 = (1-c3)/2
        let low = st(0.25, 0.6, -0.5);
        assert!(d2_at_0_face_coefficient(&low) > 0.0);
        assert_eq!(s_cond_d2_at_0(&low), f64::INFINITY);
        let corner = st(0.25, 0.75, -0.5);
        assert_eq!(d2_at_0_face_coefficient(&corner), 0.0);
        assert_eq!(s_cond_d2_at_0(&corner), 0.0);
    }

    #[test]
    fn d2_evenness_in_s1() {
        for (s1, c1, c3) in [(0.3, 0.2, 0.1), (0.45, 0.1, 0.34)] {
            let p = st(s1, c1, c3);
            let m = st(-s1, c1, c3);
            assert!((s_cond_d2_at_0(&p) - s_cond_d2_at_0(&m)).abs() < 1e-13);
            assert!((s_cond_d2_at_pi2(&p) - s_cond_d2_at_pi2(&m)).abs() < 1e-13);
        }
    }

    #[test]
    fn luo_examples() {
        for v in [
            BellDiagonalState::new(1.0, -1.0, 1.0).unwrap(),
            BellDiagonalState::new(-1.0, 1.0, 1.0).unwrap(),
            BellDiagonalState::new(1.0, 1.0, -1.0).unwrap(),
            BellDiagonalState::new(-1.0, -1.0, -1.0).unwrap(),
        ] {
            let (q, _) = luo_discord(&v).unwrap();
            assert!((q.bits() - 1.0).abs() < 1e-12);
        }
        for axis in [
            BellDiagonalState::new(0.6, 0.0, 0.0).unwrap(),
            BellDiagonalState::new(0.0, -0.4, 0.0).unwrap(),
            BellDiagonalState::new(0.0, 0.0, 0.9).unwrap(),
        ] {
            let (q, _) = luo_discord(&axis).unwrap();
            assert!(q.nats().abs() < 1e-12);
        }
        let (q, branch) = luo_discord(&BellDiagonalState::new(0.3, 0.2, 0.1).unwrap()).unwrap();
        assert!((q.nats() - 0.035132135142882).abs() < 1e-13);
        assert_eq!(branch, 1);
    }

    #[test]
    fn luo_nests_min_of_q0_qpi2() {
        for (c1, c3) in [(0.3, 0.1), (0.2, -0.5), (0.05, 0.6), (0.45, -0.05)] {
            let bell = BellDiagonalState::new(c1, c1, c3).unwrap();
            let (q, _) = luo_discord(&bell).unwrap();
            let x = st(0.0, c1, c3);
            let expect = q0(&x).nats().min(q_pi2(&x).nats());
            assert!((q.nats() - expect).abs() < 1e-10);
        }
    }

    #[test]
    fn edge_discord_examples() {
        assert_eq!(edge_discord(0.0).unwrap().nats(), 0.0);
        assert!((edge_discord(1.0).unwrap().bits() - 1.0).abs() < 1e-14);
        assert!((edge_discord(-1.0).unwrap().bits() - 1.0).abs() < 1e-14);
        let v = edge_discord(0.5).unwrap().nats();
        assert!((v - q0(&st(0.0, 0.5, -1.0)).nats()).abs() < 1e-15);
        assert!(edge_discord(1.2).is_err());
    }

    #[test]
    fn crossing_residual_is_scaled_branch_difference() {
        let state = st(0.4, 0.2, 0.3);
        let lhs = crossing_residual(0.4, 0.2, 0.3);
        let rhs = 4.0 * (q0(&state).nats() - q_pi2(&state).nats());
        assert!((lhs - rhs).abs() < 1e-13);
        // exact tangency on the axis at s1 = sqrt(c3)
        let r = crossing_residual(0.34f64.sqrt(), 0.0, 0.34);
        assert!(r.abs() < 1e-15, "r = {r}");
    }
}
