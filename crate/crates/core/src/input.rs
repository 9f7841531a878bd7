use crate::error::{Error, Result};
use crate::value::ExtendedValue;

/// Largest accepted magnitude; keeps every pairwise sum finite.
pub const MAX_MAGNITUDE: f64 = f64::MAX / 2.0;

/// Smallest power of two that is at least `max(m, n)`.
pub fn pad_length(m: usize, n: usize) -> usize {
    m.max(n).max(1).next_power_of_two()
}

/// A validated nondecreasing sequence of finite values, logically extended
/// with `+inf` up to a power-of-two length.
#[derive(Debug, Clone, PartialEq)]
pub struct SortedInput {
    values: Vec<f64>,
    padded_len: usize,
}

impl SortedInput {
    /// Validates `values` and pads to the next power of two of its own length.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (index, &v) in values.iter().enumerate() {
            if v.is_nan() {
                return Err(Error::NotANumber { index });
            }
            if !(v.abs() <= MAX_MAGNITUDE) {
                return Err(Error::OutOfRange { index, value: v });
            }
        }
        if let Some(index) = (1..values.len()).find(|&i| values[i] < values[i - 1]) {
            return Err(Error::Unsorted { index });
        }
        let values: Vec<f64> = values.into_iter().map(|v| v + 0.0).collect();
        let padded_len = pad_length(values.len(), values.len());
        Ok(SortedInput { values, padded_len })
    }

    /// Validates both inputs of one instance and pads them to a common length.
    pub fn pair(x: Vec<f64>, y: Vec<f64>) -> Result<(Self, Self)> {
        let x = Self::new(x)?;
        let y = Self::new(y)?;
        let n = pad_length(x.len(), y.len());
        Ok((x.with_padded_len(n), y.with_padded_len(n)))
    }

    /// Re-pads to `n`, which must be a power of two no smaller than `len()`.
    pub fn with_padded_len(mut self, n: usize) -> Self {
        assert!(n.is_power_of_two() && n >= self.values.len(), "bad padded length {n}");
        self.padded_len = n;
        self
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn padded_len(&self) -> usize {
        self.padded_len
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Element `i` of the padded sequence.
    pub fn logical_at(&self, i: usize) -> ExtendedValue {
        assert!(i < self.padded_len, "index {i} beyond padded length {}", self.padded_len);
        logical_at(&self.values, i)
    }
}

pub(crate) fn logical_at(values: &[f64], i: usize) -> ExtendedValue {
    match values.get(i) {
        Some(&v) => ExtendedValue::finite(v),
        None => ExtendedValue::POS_INF,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pad_length_is_next_power_of_two() {
        assert_eq!(pad_length(3, 5), 8);
        assert_eq!(pad_length(4, 4), 4);
        assert_eq!(pad_length(1, 1), 1);
    }

    #[test]
    fn logical_at_pads_with_sentinel() {
        let x = SortedInput::new(vec![1.0, 3.0]).unwrap().with_padded_len(4);
        assert_eq!(x.logical_at(1), ExtendedValue::finite(3.0));
        assert!(x.logical_at(2).is_pos_inf());
        assert!(x.logical_at(3).is_pos_inf());
    }

    #[test]
    #[should_panic]
    fn logical_at_past_padding_panics() {
        let x = SortedInput::new(vec![1.0, 3.0]).unwrap();
        x.logical_at(2);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(SortedInput::new(vec![]), Err(Error::EmptyInput));
        assert_eq!(SortedInput::new(vec![20.0, 10.0]), Err(Error::Unsorted { index: 1 }));
        assert_eq!(
            SortedInput::new(vec![1.0, f64::NAN]),
            Err(Error::NotANumber { index: 1 })
        );
        assert!(matches!(
            SortedInput::new(vec![0.0, f64::INFINITY]),
            Err(Error::OutOfRange { index: 1, .. })
        ));
    }

    #[test]
    fn pair_shares_padded_length() {
        let (x, y) = SortedInput::pair(vec![1.0, 2.0, 3.0], vec![10.0, 20.0]).unwrap();
        assert_eq!(x.padded_len(), 4);
        assert_eq!(y.padded_len(), 4);
        let logical: Vec<_> = (0..4).map(|i| y.logical_at(i)).collect();
        assert!(logical.windows(2).all(|w| w[0] <= w[1]));
    }
}
