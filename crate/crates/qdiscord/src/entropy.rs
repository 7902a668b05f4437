//! Shannon entropy helpers and the entropy value type.
//!
//! All internal computation is in nats; bit conversion happens at
//! presentation boundaries.

use crate::error::{Error, Result};

/// Arguments of a logarithm in [-1e-12, 0) are treated as exact zeros
/// (boundary states of the tetrahedron).
pub const LOG_CLAMP: f64 = 1e-12;

/// Measurement unit for entropy-like quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntropyUnit {
    Nat,
    #[default]
    Bit,
}

impl EntropyUnit {
    pub fn suffix(self) -> &'static str {
        match self {
            EntropyUnit::Nat => "nat",
            EntropyUnit::Bit => "bit",
        }
    }
}

/// A nonnegative entropy-like value with an explicit unit tag.
///
/// Stored in nats; `bits()` divides by ln 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyValue {
    nats: f64,
}

impl EntropyValue {
    pub fn from_nats(nats: f64) -> Self {
        Self { nats }
    }

    pub fn from_bits(bits: f64) -> Self {
        Self {
            nats: bits * std::f64::consts::LN_2,
        }
    }

    pub fn nats(self) -> f64 {
        self.nats
    }

    pub fn bits(self) -> f64 {
        self.nats / std::f64::consts::LN_2
    }

    pub fn in_unit(self, unit: EntropyUnit) -> f64 {
        match unit {
            EntropyUnit::Nat => self.nats(),
            EntropyUnit::Bit => self.bits(),
        }
    }
}

/// x ln x with the 0 ln 0 = 0 convention and boundary clamping.
#[inline]
pub fn xlnx(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

fn check_prob(p: f64, name: &'static str) -> Result<()> {
    if !p.is_finite() {
        return Err(Error::InvalidInput(name));
    }
    if p < -LOG_CLAMP {
        return Err(Error::NegativeShannonArgument { name, value: p });
    }
    Ok(())
}

/// Binary Shannon entropy -p ln p - (1-p) ln(1-p), in nats.
pub fn h2(p: f64) -> Result<EntropyValue> {
    check_prob(p, "p")?;
    check_prob(1.0 - p, "1-p")?;
    Ok(EntropyValue::from_nats(-xlnx(p) - xlnx(1.0 - p)))
}

/// Quaternary Shannon entropy -sum p_i ln p_i, in nats.
///
/// The arguments must sum to 1 within 1e-12.
pub fn h4(p1: f64, p2: f64, p3: f64, p4: f64) -> Result<EntropyValue> {
    check_prob(p1, "p1")?;
    check_prob(p2, "p2")?;
    check_prob(p3, "p3")?;
    check_prob(p4, "p4")?;
    let sum = p1 + p2 + p3 + p4;
    if (sum - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "h4 arguments sum to {sum}, expected 1"
        )));
    }
    Ok(EntropyValue::from_nats(
        -xlnx(p1) - xlnx(p2) - xlnx(p3) - xlnx(p4),
    ))
}
