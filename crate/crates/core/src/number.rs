//! The neutrosophic number `a + bI`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ParseError, Result};
use crate::literal;
use crate::scalar::ExtReal;

/// `a + bI`: a determinate part `a` and the coefficient `b` of the
/// indeterminacy symbol `I`.
///
/// Equality is componentwise. `I` itself is never stored, and since no
/// operation here multiplies two `I` coefficients, `I² = I` never has to be
/// applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct NeutroNumber {
    pub a: ExtReal,
    pub b: ExtReal,
}

impl NeutroNumber {
    pub const ZERO: NeutroNumber = NeutroNumber {
        a: ExtReal::ZERO,
        b: ExtReal::ZERO,
    };

    pub fn new(a: impl Into<ExtReal>, b: impl Into<ExtReal>) -> Self {
        NeutroNumber {
            a: a.into(),
            b: b.into(),
        }
    }

    /// Fails on NaN in either component.
    pub fn from_f64(a: f64, b: f64) -> Result<Self> {
        Ok(NeutroNumber {
            a: ExtReal::new(a)?,
            b: ExtReal::new(b)?,
        })
    }

    /// A plain real number, `a + 0I`.
    pub fn real(a: impl Into<ExtReal>) -> Self {
        NeutroNumber::new(a, ExtReal::ZERO)
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite()
    }
}

impl fmt::Display for NeutroNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&literal::format_nn(self))
    }
}

impl FromStr for NeutroNumber {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        literal::parse_nn(s)
    }
}

impl Serialize for NeutroNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&literal::format_nn(self))
    }
}

impl<'de> Deserialize<'de> for NeutroNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        literal::parse_nn(&text).map_err(serde::de::Error::custom)
    }
}
