//! Real numbers extended with both infinities.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A real number, `+inf` or `-inf`. Never NaN.
///
/// `-0.0` and `0.0` compare equal; nothing normalizes the sign bit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtReal(f64);

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal(0.0);
    pub const POS_INF: ExtReal = ExtReal(f64::INFINITY);
    pub const NEG_INF: ExtReal = ExtReal(f64::NEG_INFINITY);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() {
            Err(Error::Domain("NaN is not an extended real".into()))
        } else {
            Ok(ExtReal(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_pos_inf(self) -> bool {
        self.0 == f64::INFINITY
    }

    pub fn is_neg_inf(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    /// Classical sum; `None` for `(+inf) + (-inf)`.
    pub fn checked_add(self, other: ExtReal) -> Option<ExtReal> {
        let sum = self.0 + other.0;
        (!sum.is_nan()).then_some(ExtReal(sum))
    }

    /// Classical difference; `None` when it would be undefined (`inf - inf`).
    pub fn checked_sub(self, other: ExtReal) -> Option<ExtReal> {
        let diff = self.0 - other.0;
        (!diff.is_nan()).then_some(ExtReal(diff))
    }
}

impl Eq for ExtReal {}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .partial_cmp(&other.0)
            .expect("ExtReal never holds NaN, so it is totally ordered")
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for ExtReal {
    fn default() -> Self {
        ExtReal::ZERO
    }
}

impl TryFrom<f64> for ExtReal {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        ExtReal::new(value)
    }
}

impl From<i32> for ExtReal {
    fn from(value: i32) -> Self {
        ExtReal(f64::from(value))
    }
}

impl From<ExtReal> for f64 {
    fn from(value: ExtReal) -> Self {
        value.0
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pos_inf() {
            f.write_str("inf")
        } else if self.is_neg_inf() {
            f.write_str("-inf")
        } else if self.0 == 0.0 {
            f.write_str("0")
        } else {
            // f64's Display is the shortest decimal that round-trips and never
            // uses exponent notation.
            write!(f, "{}", self.0)
        }
    }
}
