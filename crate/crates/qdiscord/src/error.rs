//! Crate-wide error type.

use thiserror::Error;

/// Identifies which positivity constraint a five-parameter X state violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XConstraint {
    /// (1 - c3)^2 >= (s1 - s2)^2 + (c1 + c2)^2
    Difference,
    /// (1 + c3)^2 >= (s1 + s2)^2 + (c1 - c2)^2
    Sum,
}

impl std::fmt::Display for XConstraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            XConstraint::Difference => write!(f, "(1-c3)^2 >= (s1-s2)^2 + (c1+c2)^2"),
            XConstraint::Sum => write!(f, "(1+c3)^2 >= (s1+s2)^2 + (c1-c2)^2"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite input: {0}")]
    InvalidInput(&'static str),

    #[error("X-state constraint violated: {0}")]
    ConstraintViolated(XConstraint),

    #[error("state off the tetrahedron: {bound} (value {value})")]
    OffTetrahedron { bound: &'static str, value: f64 },

    #[error("outside the Bell tetrahedron: p{index} = {value}")]
    OutsideBellTetrahedron { index: usize, value: f64 },

    #[error("negative eigenvalue beyond tolerance: {0}")]
    NegativeEigenvalue(f64),

    #[error("not a valid X-shaped density matrix: {0}")]
    InvalidDensityMatrix(&'static str),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("negative Shannon argument {name} = {value}")]
    NegativeShannonArgument { name: &'static str, value: f64 },

    #[error("singular map: state on a face of the tetrahedron has a zero eigenvalue (infinite coupling)")]
    SingularMap,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("numerical error: {0}")]
    Numerical(&'static str),

    #[error(
        "unimodality violated at ({s1}, {c1}, {c3}): {count} interior extrema at grid {grid}"
    )]
    ConjectureViolation {
        s1: f64,
        c1: f64,
        c3: f64,
        count: usize,
        grid: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
