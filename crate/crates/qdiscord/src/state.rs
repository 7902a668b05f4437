//! Two-qubit X-state representations, physicality checks, eigenvalues and
//! fidelity.
//!
//! The central object is [`XxzState`], the symmetric X state with parameters
//! (s1, c1, c3) living on the tetrahedron 𝒯 defined by
//! `c3 ∈ [-1,1]`, `|s1| ≤ (1+c3)/2`, `|c1| ≤ (1-c3)/2`.

use crate::entropy::{xlnx, EntropyValue};
use crate::error::{Error, Result, XConstraint};

/// Eigenvalues in [-EIG_TOL, 0) are clamped to 0; boundary states are legal.
pub const EIG_TOL: f64 = 1e-12;

fn clamp_eig(x: f64) -> Result<f64> {
    if x < -EIG_TOL {
        Err(Error::NegativeEigenvalue(x))
    } else {
        Ok(x.max(0.0))
    }
}

/// Checks the two positive-semidefiniteness inequalities of the real
/// five-parameter X state. Returns the violated constraint if any.
pub fn validate_general_x(s1: f64, s2: f64, c1: f64, c2: f64, c3: f64) -> Result<()> {
    for (v, name) in [(s1, "s1"), (s2, "s2"), (c1, "c1"), (c2, "c2"), (c3, "c3")] {
        if !v.is_finite() {
            return Err(Error::InvalidInput(name));
        }
    }
    let tol = EIG_TOL;
    if (1.0 - c3).powi(2) + tol < (s1 - s2).powi(2) + (c1 + c2).powi(2) {
        return Err(Error::ConstraintViolated(XConstraint::Difference));
    }
    if (1.0 + c3).powi(2) + tol < (s1 + s2).powi(2) + (c1 - c2).powi(2) {
        return Err(Error::ConstraintViolated(XConstraint::Sum));
    }
    Ok(())
}

/// Real five-parameter two-qubit X state (s1, s2, c1, c2, c3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralXState {
    s1: f64,
    s2: f64,
    c1: f64,
    c2: f64,
    c3: f64,
}

impl GeneralXState {
    pub fn new(s1: f64, s2: f64, c1: f64, c2: f64, c3: f64) -> Result<Self> {
        validate_general_x(s1, s2, c1, c2, c3)?;
        Ok(Self { s1, s2, c1, c2, c3 })
    }

    pub fn s1(&self) -> f64 {
        self.s1
    }
    pub fn s2(&self) -> f64 {
        self.s2
    }
    pub fn c1(&self) -> f64 {
        self.c1
    }
    pub fn c2(&self) -> f64 {
        self.c2
    }
    pub fn c3(&self) -> f64 {
        self.c3
    }

    /// Eigenvalues of the two 2x2 blocks: outer pair first.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let ro = ((self.s1 + self.s2).powi(2) + (self.c1 - self.c2).powi(2)).sqrt();
        let ri = ((self.s1 - self.s2).powi(2) + (self.c1 + self.c2).powi(2)).sqrt();
        [
            (1.0 + self.c3 + ro) / 4.0,
            (1.0 + self.c3 - ro) / 4.0,
            (1.0 - self.c3 + ri) / 4.0,
            (1.0 - self.c3 - ri) / 4.0,
        ]
    }

    pub fn density_matrix(&self) -> DensityMatrix4 {
        DensityMatrix4::from_general(self)
    }
}

/// XXZ-symmetric X state: the general state restricted to s2 = s1, c2 = c1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XxzState {
    s1: f64,
    c1: f64,
    c3: f64,
}

impl XxzState {
    pub fn new(s1: f64, c1: f64, c3: f64) -> Result<Self> {
        for (v, name) in [(s1, "s1"), (c1, "c1"), (c3, "c3")] {
            if !v.is_finite() {
                return Err(Error::InvalidInput(name));
            }
        }
        if !(-1.0 - EIG_TOL..=1.0 + EIG_TOL).contains(&c3) {
            return Err(Error::OffTetrahedron {
                bound: "c3 in [-1, 1]",
                value: c3,
            });
        }
        if s1.abs() > (1.0 + c3) / 2.0 + EIG_TOL {
            return Err(Error::OffTetrahedron {
                bound: "|s1| <= (1+c3)/2",
                value: s1,
            });
        }
        if c1.abs() > (1.0 - c3) / 2.0 + EIG_TOL {
            return Err(Error::OffTetrahedron {
                bound: "|c1| <= (1-c3)/2",
                value: c1,
            });
        }
        Ok(Self { s1, c1, c3 })
    }

    pub fn s1(&self) -> f64 {
        self.s1
    }
    pub fn c1(&self) -> f64 {
        self.c1
    }
    pub fn c3(&self) -> f64 {
        self.c3
    }

    /// λ₁,₂ = (1 ± 2s1 + c3)/4, λ₃,₄ = (1 ± 2c1 - c3)/4; clamped at faces.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let l1 = (1.0 + 2.0 * self.s1 + self.c3) / 4.0;
        let l2 = (1.0 - 2.0 * self.s1 + self.c3) / 4.0;
        let l3 = (1.0 + 2.0 * self.c1 - self.c3) / 4.0;
        let l4 = (1.0 - 2.0 * self.c1 - self.c3) / 4.0;
        [l1, l2, l3, l4].map(|x| x.max(0.0))
    }

    pub fn as_general(&self) -> GeneralXState {
        GeneralXState {
            s1: self.s1,
            s2: self.s1,
            c1: self.c1,
            c2: self.c1,
            c3: self.c3,
        }
    }

    pub fn density_matrix(&self) -> DensityMatrix4 {
        DensityMatrix4::from_xxz(self)
    }

    /// Entropy of the joint state, -Σ λ ln λ in nats.
    pub fn state_entropy(&self) -> EntropyValue {
        let l = self.eigenvalues();
        EntropyValue::from_nats(-l.iter().copied().map(xlnx).sum::<f64>())
    }

    /// Entropy of the reduced state of either qubit, h2((1+s1)/2).
    pub fn subsystem_entropy(&self) -> EntropyValue {
        let p = (1.0 + self.s1) / 2.0;
        EntropyValue::from_nats(-xlnx(p) - xlnx(1.0 - p))
    }

    /// True if some eigenvalue vanishes within `tol` (state on a face of 𝒯).
    pub fn on_face(&self, tol: f64) -> bool {
        self.eigenvalues().iter().any(|&l| l < tol)
    }
}

/// Bell-diagonal state (c1, c2, c3); both local Bloch vectors vanish.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellDiagonalState {
    c1: f64,
    c2: f64,
    c3: f64,
}

impl BellDiagonalState {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        for (v, name) in [(c1, "c1"), (c2, "c2"), (c3, "c3")] {
            if !v.is_finite() {
                return Err(Error::InvalidInput(name));
            }
        }
        let st = Self { c1, c2, c3 };
        st.probs()?;
        Ok(st)
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }
    pub fn c2(&self) -> f64 {
        self.c2
    }
    pub fn c3(&self) -> f64 {
        self.c3
    }

    /// Eigenvalues p₁..p₄ of the Bell-diagonal density matrix.
    pub fn probs(&self) -> Result<[f64; 4]> {
        let p = [
            (1.0 + self.c1 - self.c2 + self.c3) / 4.0,
            (1.0 - self.c1 + self.c2 + self.c3) / 4.0,
            (1.0 + self.c1 + self.c2 - self.c3) / 4.0,
            (1.0 - self.c1 - self.c2 - self.c3) / 4.0,
        ];
        for (i, &v) in p.iter().enumerate() {
            if v < -EIG_TOL {
                return Err(Error::OutsideBellTetrahedron {
                    index: i + 1,
                    value: v,
                });
            }
        }
        Ok(p.map(|x| x.max(0.0)))
    }

    pub fn as_general(&self) -> GeneralXState {
        GeneralXState {
            s1: 0.0,
            s2: 0.0,
            c1: self.c1,
            c2: self.c2,
            c3: self.c3,
        }
    }
}

/// Eigenvalues p₁..p₄ of a Bell-diagonal state, erroring outside the
/// tetrahedron.
pub fn bell_probs(state: &BellDiagonalState) -> Result<[f64; 4]> {
    state.probs()
}

/// Real 4x4 X-shaped density matrix (nonzero only on the diagonal and
/// anti-diagonal).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4 {
    m: [[f64; 4]; 4],
}

impl DensityMatrix4 {
    pub fn from_xxz(state: &XxzState) -> Self {
        Self::from_general(&state.as_general())
    }

    pub fn from_general(state: &GeneralXState) -> Self {
        let (s1, s2, c1, c2, c3) = (state.s1, state.s2, state.c1, state.c2, state.c3);
        let mut m = [[0.0; 4]; 4];
        m[0][0] = (1.0 + s1 + s2 + c3) / 4.0;
        m[1][1] = (1.0 + s1 - s2 - c3) / 4.0;
        m[2][2] = (1.0 - s1 + s2 - c3) / 4.0;
        m[3][3] = (1.0 - s1 - s2 + c3) / 4.0;
        m[0][3] = (c1 - c2) / 4.0;
        m[3][0] = m[0][3];
        m[1][2] = (c1 + c2) / 4.0;
        m[2][1] = m[1][2];
        Self { m }
    }

    /// Validates raw entries: symmetric, unit trace, X-shaped sparsity and
    /// nonnegative block eigenvalues.
    pub fn try_from_entries(m: [[f64; 4]; 4]) -> Result<Self> {
        for row in &m {
            for &v in row {
                if !v.is_finite() {
                    return Err(Error::InvalidDensityMatrix("non-finite entry"));
                }
            }
        }
        let tr: f64 = (0..4).map(|i| m[i][i]).sum();
        if (tr - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDensityMatrix("trace != 1"));
        }
        for (i, row) in m.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let on_pattern = i == j || i + j == 3;
                if !on_pattern && v.abs() > 1e-12 {
                    return Err(Error::InvalidDensityMatrix("not X-shaped"));
                }
                if (v - m[j][i]).abs() > 1e-12 {
                    return Err(Error::InvalidDensityMatrix("not symmetric"));
                }
            }
        }
        let dm = Self { m };
        for l in dm.eigenvalues_unchecked() {
            clamp_eig(l)?;
        }
        Ok(dm)
    }

    pub fn entries(&self) -> &[[f64; 4]; 4] {
        &self.m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    pub fn trace(&self) -> f64 {
        (0..4).map(|i| self.m[i][i]).sum()
    }

    fn eigenvalues_unchecked(&self) -> [f64; 4] {
        let block = |a: f64, d: f64, b: f64| {
            let t = (a + d) / 2.0;
            let r = (((a - d) / 2.0).powi(2) + b * b).sqrt();
            (t + r, t - r)
        };
        let (o1, o2) = block(self.m[0][0], self.m[3][3], self.m[0][3]);
        let (i1, i2) = block(self.m[1][1], self.m[2][2], self.m[1][2]);
        [o1, o2, i1, i2]
    }

    /// Eigenvalues via the closed-form 2x2 blocks, clamped at faces.
    pub fn eigenvalues(&self) -> [f64; 4] {
        self.eigenvalues_unchecked().map(|x| x.max(0.0))
    }

    /// von Neumann entropy of the full state, in nats.
    pub fn state_entropy(&self) -> EntropyValue {
        EntropyValue::from_nats(-self.eigenvalues().iter().copied().map(xlnx).sum::<f64>())
    }

    /// Reduced state of qubit B is diagonal for X states; its entropy in nats.
    pub fn subsystem_b_entropy(&self) -> EntropyValue {
        let p = self.m[0][0] + self.m[2][2];
        EntropyValue::from_nats(-xlnx(p) - xlnx(1.0 - p))
    }
}

/// Fidelity between two commuting XXZ states, F = (Σ √(λⱼ λ'ⱼ))².
///
/// Eigenvalues are paired by shared eigenvector (the index order of
/// [`XxzState::eigenvalues`]), not by sorted magnitude.
pub fn fidelity(a: &XxzState, b: &XxzState) -> f64 {
    let la = a.eigenvalues();
    let lb = b.eigenvalues();
    let s: f64 = la.iter().zip(&lb).map(|(&x, &y)| (x * y).sqrt()).sum();
    (s * s).min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximally_mixed_is_valid() {
        assert!(validate_general_x(0.0, 0.0, 0.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn pure_product_state_saturates() {
        // equality case of the positivity constraints
        assert!(validate_general_x(1.0, 1.0, 0.0, 0.0, 1.0).is_ok());
    }

    #[test]
    fn violated_first_inequality_is_named() {
        let err = validate_general_x(0.9, -0.9, 0.5, 0.5, 0.0).unwrap_err();
        match err {
            Error::ConstraintViolated(c) => assert_eq!(c, XConstraint::Difference),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn non_finite_input_rejected() {
        assert!(matches!(
            validate_general_x(f64::NAN, 0.0, 0.0, 0.0, 0.0),
            Err(Error::InvalidInput("s1"))
        ));
    }

    #[test]
    fn xxz_eigenvalues_match_formulas() {
        let st = XxzState::new(0.25, 0.14, 0.34).unwrap();
        let l = st.eigenvalues();
        for (v, expect) in l.iter().zip([0.46, 0.21, 0.235, 0.095]) {
            assert!((v - expect).abs() < 1e-15);
        }
        assert!((l.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn edge_state_eigenvalues() {
        // edge v3v4: c3 = -1 forces s1 = 0
        let st = XxzState::new(0.0, 0.4, -1.0).unwrap();
        let l = st.eigenvalues();
        assert_eq!(l[0], 0.0);
        assert_eq!(l[1], 0.0);
        assert!((l[2] - (2.0 + 0.8) / 4.0).abs() < 1e-15);
        assert!((l[3] - (2.0 - 0.8) / 4.0).abs() < 1e-15);
    }

    #[test]
    fn off_tetrahedron_names_bound() {
        let err = XxzState::new(0.9, 0.0, 0.34).unwrap_err();
        match err {
            Error::OffTetrahedron { bound, .. } => assert!(bound.contains("s1")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn density_matrix_pattern() {
        let st = XxzState::new(0.25, 0.14, 0.34).unwrap();
        let dm = st.density_matrix();
        assert!((dm.get(1, 1) - 0.165).abs() < 1e-15);
        assert!((dm.get(1, 2) - 0.07).abs() < 1e-15);
        assert_eq!(dm.get(0, 3), 0.0);
        assert!((dm.trace() - 1.0).abs() < 1e-15);

        // diagonal case: c1 = 0 kills the off-diagonals
        let d = XxzState::new(0.3, 0.0, 0.2).unwrap().density_matrix();
        assert_eq!(d.get(1, 2), 0.0);
        assert!((d.get(0, 0) - (1.0 + 0.6 + 0.2) / 4.0).abs() < 1e-15);
    }

    #[test]
    fn density_matrix_eigenvalues_agree() {
        let st = XxzState::new(-0.2, 0.3, 0.1).unwrap();
        let from_state = st.eigenvalues();
        let mut from_matrix = st.density_matrix().eigenvalues();
        // block order differs only inside pairs; compare as sorted sets
        let mut a = from_state;
        a.sort_by(f64::total_cmp);
        from_matrix.sort_by(f64::total_cmp);
        for (x, y) in a.iter().zip(&from_matrix) {
            assert!((x - y).abs() < 1e-14);
        }
    }

    #[test]
    fn try_from_entries_validates_shape() {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 0.25;
        }
        m[0][1] = 0.1;
        m[1][0] = 0.1;
        assert!(matches!(
            DensityMatrix4::try_from_entries(m),
            Err(Error::InvalidDensityMatrix("not X-shaped"))
        ));
    }

    #[test]
    fn bell_probs_examples() {
        let mm = BellDiagonalState::new(0.0, 0.0, 0.0).unwrap();
        assert_eq!(bell_probs(&mm).unwrap(), [0.25; 4]);

        let v1 = BellDiagonalState::new(1.0, -1.0, 1.0).unwrap();
        assert_eq!(bell_probs(&v1).unwrap(), [1.0, 0.0, 0.0, 0.0]);

        let err = BellDiagonalState::new(0.5, 0.5, 0.5).unwrap_err();
        match err {
            Error::OutsideBellTetrahedron { index, value } => {
                assert_eq!(index, 4);
                assert!((value + 0.125).abs() < 1e-15);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn fidelity_examples() {
        let a = XxzState::new(0.4731928814, 0.14, 0.34).unwrap();
        let b = XxzState::new(0.4733412570, 0.14, 0.34).unwrap();
        let f = fidelity(&a, &b);
        assert!((f - 0.99999998).abs() < 5e-9, "f = {f}");
        assert!((fidelity(&a, &a) - 1.0).abs() < 1e-15);
        assert!((fidelity(&a, &b) - fidelity(&b, &a)).abs() < 1e-16);

        let x = XxzState::new(0.25, 0.6406688666, -0.5).unwrap();
        let y = XxzState::new(0.25, 0.75, -0.5).unwrap();
        let f = fidelity(&x, &y);
        assert!((f - 0.945).abs() < 1e-3, "f = {f}");
        assert!((f - 0.9450758950695025).abs() < 1e-13);
    }

    #[test]
    fn general_x_matches_xxz_on_diagonal() {
        let g = GeneralXState::new(0.25, 0.25, 0.14, 0.14, 0.34).unwrap();
        let x = XxzState::new(0.25, 0.14, 0.34).unwrap();
        let mut a = g.eigenvalues();
        let mut b = x.eigenvalues();
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        for (u, v) in a.iter().zip(&b) {
            assert!((u - v).abs() < 1e-15);
        }
    }
}
