//! Ground truth and instance generation.
//!
//! The oracle materializes and sorts every pairwise sum. It shares no code
//! with the selection drivers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::input::SortedInput;
use crate::value::ExtendedValue;

/// The `k`th smallest of all `x[i] + y[j]`, by sorting.
pub fn brute_force_kth(x: &[f64], y: &[f64], k: u64) -> Result<ExtendedValue> {
    let max = x.len() as u64 * y.len() as u64;
    if k == 0 || k > max {
        return Err(Error::RankOutOfBounds { k, max });
    }
    let mut sums: Vec<f64> = x.iter().flat_map(|&a| y.iter().map(move |&b| a + b)).collect();
    sums.sort_by(|a, b| a.partial_cmp(b).expect("sums of validated inputs are never NaN"));
    Ok(ExtendedValue::finite(sums[k as usize - 1]))
}

/// `(|{sums < v}|, |{sums ≤ v}|)` by enumeration. `v` has rank `k` exactly
/// when the first is below `k` and the second at least `k`.
pub fn rank_bounds(x: &[f64], y: &[f64], v: f64) -> (u64, u64) {
    let mut less = 0;
    let mut less_eq = 0;
    for &a in x {
        for &b in y {
            let s = a + b;
            less += (s < v) as u64;
            less_eq += (s <= v) as u64;
        }
    }
    (less, less_eq)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub x: SortedInput,
    pub y: SortedInput,
    pub k: u64,
    pub seed: u64,
}

fn sorted_values(rng: &mut ChaCha8Rng, len: usize, duplicate_bias: f64) -> Vec<f64> {
    let mut v: Vec<f64> = (0..len).map(|_| rng.gen_range(-1000i32..=1000) as f64).collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for i in 1..len {
        if rng.gen_bool(duplicate_bias) {
            v[i] = v[i - 1];
        }
    }
    v
}

/// A random instance: lengths uniform in `[1, max_len]`, integer-valued
/// inputs, each value copying its predecessor with probability
/// `duplicate_bias`, and `k` uniform over all ranks.
pub fn gen_instance(seed: u64, max_len: usize, duplicate_bias: f64) -> Instance {
    assert!(max_len >= 1);
    assert!((0.0..=1.0).contains(&duplicate_bias));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(1..=max_len);
    let n = rng.gen_range(1..=max_len);
    shaped(rng, seed, m, n, duplicate_bias)
}

/// Like [`gen_instance`] but with the lengths fixed to `m` and `n`.
pub fn gen_shaped(seed: u64, m: usize, n: usize, duplicate_bias: f64) -> Instance {
    assert!(m >= 1 && n >= 1);
    assert!((0.0..=1.0).contains(&duplicate_bias));
    shaped(ChaCha8Rng::seed_from_u64(seed), seed, m, n, duplicate_bias)
}

fn shaped(mut rng: ChaCha8Rng, seed: u64, m: usize, n: usize, duplicate_bias: f64) -> Instance {
    let xv = sorted_values(&mut rng, m, duplicate_bias);
    let yv = sorted_values(&mut rng, n, duplicate_bias);
    let k = rng.gen_range(1..=(m * n) as u64);
    let (x, y) = SortedInput::pair(xv, yv).expect("generated inputs are sorted and finite");
    Instance { x, y, k, seed }
}

/// Two inputs of exactly `len` uniform reals in `[0, 1e6)`, for benchmarks.
pub fn gen_sized(seed: u64, len: usize) -> (SortedInput, SortedInput) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || {
        let mut v: Vec<f64> = (0..len).map(|_| rng.gen::<f64>() * 1e6).collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    };
    let xv = draw();
    let yv = draw();
    SortedInput::pair(xv, yv).expect("generated inputs are sorted and finite")
}
