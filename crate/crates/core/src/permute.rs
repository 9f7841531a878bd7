//! Partial bit-reversal permutation and the four permuted views of the
//! inputs that let the splitting step read input values left to right.
//!
//! For `1 ≤ p < lg N` and `1 ≤ i ≤ 2^(p-1)`:
//!
//! ```text
//! X1[2^(p-1) + i - 1] = X[(2i-1)·N/2^p]
//! X2[2^(p-1) + i - 1] = X[(2i-1)·N/2^p - 1]
//! ```
//!
//! and likewise for `Y1`, `Y2`.

use crate::error::{Error, Result};
use crate::input::SortedInput;
use crate::iosim::{Probe, TrackedVec, Untracked, Words};
use crate::value::ExtendedValue;

/// Permutes `z` in place: even positions to the front half in order, odd
/// positions to the back half in order, then recurse on the front half only.
pub fn pbr_tracked<T: Copy + Words, P: Probe>(z: &mut TrackedVec<T, P>) -> Result<()> {
    let s = z.len();
    if !s.is_power_of_two() {
        return Err(Error::Contract(format!("partial bit reversal needs a power-of-two length, got {s}")));
    }
    if s == 1 {
        return Ok(());
    }
    let fill = z.untracked()[0];
    let mut even = TrackedVec::from_vec("pbr.even", z.probe(), vec![fill; s / 2]);
    let mut odd = TrackedVec::from_vec("pbr.odd", z.probe(), vec![fill; s / 2]);
    pbr_level(z, &mut even, &mut odd, s);
    Ok(())
}

fn pbr_level<T: Copy + Words, P: Probe>(
    z: &mut TrackedVec<T, P>,
    even: &mut TrackedVec<T, P>,
    odd: &mut TrackedVec<T, P>,
    s: usize,
) {
    if s <= 1 {
        return;
    }
    for i in 0..s {
        let v = z.get(i);
        if i % 2 == 0 {
            even.set(i / 2, v);
        } else {
            odd.set(i / 2, v);
        }
    }
    let half = s / 2;
    for i in 0..half {
        z.set(i, even.get(i));
    }
    for i in half..s {
        z.set(i, odd.get(i - half));
    }
    pbr_level(z, even, odd, half);
}

/// Partial bit reversal of a slice.
pub fn pbr<T: Copy + Words>(z: &[T]) -> Result<Vec<T>> {
    let mut t = TrackedVec::from_vec("pbr", &Untracked, z.to_vec());
    pbr_tracked(&mut t)?;
    Ok(t.into_vec())
}

/// `lg n` for a power of two.
pub(crate) fn lg(n: usize) -> u32 {
    debug_assert!(n.is_power_of_two());
    n.trailing_zeros()
}

fn check_level(p: u32, n: usize) -> Result<()> {
    if !n.is_power_of_two() || p < 1 || p >= lg(n) {
        return Err(Error::Contract(format!("iteration {p} has no permuted slots for N = {n}")));
    }
    Ok(())
}

/// Position in the first view of source index `j = (2i-1)·N/2^p`.
pub fn beta1(j: usize, p: u32, n: usize) -> Result<usize> {
    check_level(p, n)?;
    let stride = n >> p;
    if j == 0 || j >= n || j % stride != 0 || (j / stride) % 2 == 0 {
        return Err(Error::Contract(format!("index {j} is not an odd multiple of {stride} below {n}")));
    }
    Ok(beta1_unchecked(j, p, n))
}

/// Position in the second view of source index `j = (2i-1)·N/2^p - 1`.
pub fn beta2(j: usize, p: u32, n: usize) -> Result<usize> {
    let next = j.checked_add(1).ok_or_else(|| Error::Contract("index overflow".into()))?;
    beta1(next, p, n).map_err(|_| {
        Error::Contract(format!("index {j} is not one below an odd multiple of {} for N = {n}", n >> p))
    })
}

#[inline]
pub(crate) fn beta1_unchecked(j: usize, p: u32, n: usize) -> usize {
    (1 << (p - 1)) + ((j >> (lg(n) - p)) + 1) / 2 - 1
}

#[inline]
pub(crate) fn beta2_unchecked(j: usize, p: u32, n: usize) -> usize {
    beta1_unchecked(j + 1, p, n)
}

/// The four permuted copies of the padded inputs.
///
/// Only slots `1 .. N/2` are meaningful; the rest of each array is the
/// untouched tail of the permutation.
pub struct PermutedViews<P: Probe> {
    pub x1: TrackedVec<ExtendedValue, P>,
    pub x2: TrackedVec<ExtendedValue, P>,
    pub y1: TrackedVec<ExtendedValue, P>,
    pub y2: TrackedVec<ExtendedValue, P>,
    pub n_padded: usize,
}

/// Reads element `i` of a padded input; padding costs no access.
#[inline]
pub(crate) fn read_logical<P: Probe>(values: &TrackedVec<f64, P>, i: usize) -> ExtendedValue {
    if i < values.len() {
        ExtendedValue::finite(values.get(i))
    } else {
        ExtendedValue::POS_INF
    }
}

fn first_view<P: Probe>(src: &TrackedVec<f64, P>, n: usize, label: &'static str) -> TrackedVec<ExtendedValue, P> {
    let mut z = TrackedVec::with_capacity(label, src.probe(), n);
    for i in 0..n {
        z.push(read_logical(src, i));
    }
    pbr_tracked(&mut z).expect("padded length is a power of two");
    z
}

fn second_view<P: Probe>(src: &TrackedVec<f64, P>, n: usize, label: &'static str) -> TrackedVec<ExtendedValue, P> {
    // Shifting right by one turns the second identity into the first.
    let mut w = TrackedVec::with_capacity(label, src.probe(), n);
    w.push(ExtendedValue::POS_INF);
    for j in 1..n {
        w.push(read_logical(src, j - 1));
    }
    pbr_tracked(&mut w).expect("padded length is a power of two");
    w
}

impl<P: Probe> PermutedViews<P> {
    /// Builds all four views from tracked inputs padded to `n`.
    pub fn build_tracked(x: &TrackedVec<f64, P>, y: &TrackedVec<f64, P>, n: usize) -> Self {
        assert!(n.is_power_of_two() && x.len() <= n && y.len() <= n);
        PermutedViews {
            x1: first_view(x, n, "X1"),
            x2: second_view(x, n, "X2"),
            y1: first_view(y, n, "Y1"),
            y2: second_view(y, n, "Y2"),
            n_padded: n,
        }
    }

    /// `X[j]` for `j = (2i-1)·N/2^p`.
    #[inline]
    pub fn x_even(&self, j: usize, p: u32) -> ExtendedValue {
        self.x1.get(beta1_unchecked(j, p, self.n_padded))
    }

    /// `X[j]` for `j = (2i-1)·N/2^p - 1`.
    #[inline]
    pub fn x_odd(&self, j: usize, p: u32) -> ExtendedValue {
        self.x2.get(beta2_unchecked(j, p, self.n_padded))
    }

    #[inline]
    pub fn y_even(&self, j: usize, p: u32) -> ExtendedValue {
        self.y1.get(beta1_unchecked(j, p, self.n_padded))
    }

    #[inline]
    pub fn y_odd(&self, j: usize, p: u32) -> ExtendedValue {
        self.y2.get(beta2_unchecked(j, p, self.n_padded))
    }
}

/// Builds the views of two inputs that share a padded length.
pub fn build_views(x: &SortedInput, y: &SortedInput) -> Result<PermutedViews<Untracked>> {
    if x.padded_len() != y.padded_len() {
        return Err(Error::Contract(format!(
            "inputs padded to different lengths {} and {}",
            x.padded_len(),
            y.padded_len()
        )));
    }
    let xs = TrackedVec::from_vec("X", &Untracked, x.values().to_vec());
    let ys = TrackedVec::from_vec("Y", &Untracked, y.values().to_vec());
    Ok(PermutedViews::build_tracked(&xs, &ys, x.padded_len()))
}
