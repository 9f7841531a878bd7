use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::iosim::Words;

/// A finite real or positive infinity.
///
/// Positive infinity is the padding sentinel: it ranks above every finite
/// value and absorbs addition. Internally this is an `f64` that is never NaN
/// and never negative infinity, so comparisons and sums stay cheap.
#[derive(Clone, Copy, PartialEq)]
pub struct ExtendedValue(f64);

impl ExtendedValue {
    pub const POS_INF: ExtendedValue = ExtendedValue(f64::INFINITY);

    /// Wraps a finite value. Panics on NaN or infinities; validated inputs
    /// never reach this with either.
    pub fn finite(v: f64) -> Self {
        assert!(v.is_finite(), "ExtendedValue::finite called with {v}");
        // normalizes -0.0 so that printing is stable
        ExtendedValue(v + 0.0)
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_pos_inf(self) -> bool {
        self.0 == f64::INFINITY
    }

    /// The finite payload, or `None` for the sentinel.
    pub fn as_finite(self) -> Option<f64> {
        self.is_finite().then_some(self.0)
    }
}

impl Eq for ExtendedValue {}

impl PartialOrd for ExtendedValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedValue {
    fn cmp(&self, other: &Self) -> Ordering {
        // NaN is unrepresentable, so the partial order is total.
        self.0.partial_cmp(&other.0).unwrap_or(Ordering::Equal)
    }
}

impl Add for ExtendedValue {
    type Output = ExtendedValue;

    fn add(self, rhs: Self) -> Self {
        // Ingestion bounds magnitudes to f64::MAX / 2, so a finite sum never
        // overflows and inf + finite stays inf.
        ExtendedValue(self.0 + rhs.0)
    }
}

impl From<f64> for ExtendedValue {
    fn from(v: f64) -> Self {
        if v == f64::INFINITY {
            Self::POS_INF
        } else {
            Self::finite(v)
        }
    }
}

impl fmt::Debug for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_finite() {
            Some(v) => write!(f, "Finite({v})"),
            None => f.write_str("PosInf"),
        }
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_finite() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

impl Words for ExtendedValue {
    const WORDS: usize = 1;
}
