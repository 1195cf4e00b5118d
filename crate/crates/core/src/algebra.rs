//! Tropical operations on neutrosophic numbers.
//!
//! Addition is a componentwise `min` (mode [`AlgebraMode::Min`]) or `max`
//! ([`AlgebraMode::Max`]). Multiplication is componentwise classical
//! addition, with `0 + 0I` as its identity. Division is componentwise
//! subtraction, the exact inverse of multiplication on finite values.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::NeutroNumber;
use crate::scalar::ExtReal;

/// Which tropical addition is in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraMode {
    /// Componentwise `min`, identity `+inf + infI`.
    Min,
    /// Componentwise `max`, identity `-inf - infI`.
    Max,
}

impl AlgebraMode {
    pub fn additive_identity(self) -> NeutroNumber {
        let z = self.zero_component();
        NeutroNumber { a: z, b: z }
    }

    pub fn add(self, x: NeutroNumber, z: NeutroNumber) -> NeutroNumber {
        match self {
            AlgebraMode::Min => add_min(x, z),
            AlgebraMode::Max => add_max(x, z),
        }
    }

    fn zero_component(self) -> ExtReal {
        match self {
            AlgebraMode::Min => ExtReal::POS_INF,
            AlgebraMode::Max => ExtReal::NEG_INF,
        }
    }
}

impl fmt::Display for AlgebraMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraMode::Min => "min",
            AlgebraMode::Max => "max",
        })
    }
}

impl FromStr for AlgebraMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(AlgebraMode::Min),
            "max" => Ok(AlgebraMode::Max),
            other => Err(Error::Domain(format!("unknown algebra mode {other:?}"))),
        }
    }
}

/// What `(+inf) + (-inf)` inside a product becomes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InfinityPolicy {
    /// The mode's additive-identity component, which keeps that identity
    /// absorbing on the whole carrier.
    #[default]
    Resolve,
    /// A [`Error::Domain`].
    Strict,
}

pub fn add_min(x: NeutroNumber, z: NeutroNumber) -> NeutroNumber {
    NeutroNumber {
        a: x.a.min(z.a),
        b: x.b.min(z.b),
    }
}

pub fn add_max(x: NeutroNumber, z: NeutroNumber) -> NeutroNumber {
    NeutroNumber {
        a: x.a.max(z.a),
        b: x.b.max(z.b),
    }
}

pub fn add(x: NeutroNumber, z: NeutroNumber, mode: AlgebraMode) -> NeutroNumber {
    mode.add(x, z)
}

/// Tropical product under [`InfinityPolicy::Resolve`].
///
/// For finite inputs the result does not depend on `mode`.
pub fn mul(x: NeutroNumber, z: NeutroNumber, mode: AlgebraMode) -> NeutroNumber {
    let resolve = |l: ExtReal, r: ExtReal| l.checked_add(r).unwrap_or(mode.zero_component());
    NeutroNumber {
        a: resolve(x.a, z.a),
        b: resolve(x.b, z.b),
    }
}

pub fn mul_with_policy(
    x: NeutroNumber,
    z: NeutroNumber,
    mode: AlgebraMode,
    policy: InfinityPolicy,
) -> Result<NeutroNumber> {
    match policy {
        InfinityPolicy::Resolve => Ok(mul(x, z, mode)),
        InfinityPolicy::Strict => {
            let strict = |l: ExtReal, r: ExtReal| {
                l.checked_add(r)
                    .ok_or_else(|| Error::Domain(format!("({x}) ⊗ ({z}) adds +inf to -inf")))
            };
            Ok(NeutroNumber {
                a: strict(x.a, z.a)?,
                b: strict(x.b, z.b)?,
            })
        }
    }
}

/// Tropical division: componentwise `x - z`. The divisor must be finite.
pub fn div(x: NeutroNumber, z: NeutroNumber) -> Result<NeutroNumber> {
    if !z.is_finite() {
        return Err(Error::Domain(format!(
            "cannot divide by {z}: divisor has an infinite component"
        )));
    }
    // A finite divisor never yields NaN.
    let sub = |l: ExtReal, r: ExtReal| l.checked_sub(r).expect("finite divisor");
    Ok(NeutroNumber {
        a: sub(x.a, z.a),
        b: sub(x.b, z.b),
    })
}

pub fn additive_identity(mode: AlgebraMode) -> NeutroNumber {
    mode.additive_identity()
}

pub fn multiplicative_identity() -> NeutroNumber {
    NeutroNumber::ZERO
}

/// Componentwise partial order: `x.a <= z.a && x.b <= z.b`.
pub fn component_leq(x: NeutroNumber, z: NeutroNumber) -> bool {
    x.a <= z.a && x.b <= z.b
}
