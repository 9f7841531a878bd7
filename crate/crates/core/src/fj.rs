//! Selection in a sorted `X + Y` matrix by iterated cell splitting and
//! rank-based pruning.
//!
//! Each iteration splits every active cell into four, then keeps at most
//! `q` cells ranked by minimum and drops `r` cells ranked by maximum. Ties
//! are broken by the lexicographic `(i1, j1)` order of the cell list, which
//! keeps the active region a staircase and keeps the list sorted without any
//! sort. Two drivers share all of this and differ only in where the split
//! reads its midpoint values: the permuted views (scan-friendly) or the
//! original inputs (strided).

use std::cmp::Ordering;

use crate::cell::{check_cell_list, lex_compare, Cell};
use crate::error::{Error, Result};
use crate::input::{pad_length, SortedInput};
use crate::iosim::{Probe, TrackedVec, Untracked};
use crate::permute::{lg, read_logical, PermutedViews};
use crate::select::select_kth;
use crate::value::ExtendedValue;

pub type CellList<P> = TrackedVec<Cell, P>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Midpoints come from the permuted views.
    CacheOblivious,
    /// Midpoints are read straight from `X` and `Y`.
    Naive,
}

/// What one iteration did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationReport {
    pub p: u32,
    /// Active cells before splitting.
    pub cells: usize,
    /// Cells after splitting.
    pub split: usize,
    pub l: u64,
    pub q: u64,
    pub r: i64,
    /// Active cells after both discards.
    pub survivors: usize,
    /// Rank after the update.
    pub k: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub value: ExtendedValue,
    pub iterations: Vec<IterationReport>,
}

/// Supplies the two input values on either side of a split line.
pub trait MidpointSource<P: Probe> {
    /// `(X[i_m - 1], X[i_m])` for a split at column `i_m` in iteration `p`.
    fn x_mid(&self, i_m: usize, p: u32) -> (ExtendedValue, ExtendedValue);
    /// `(Y[j_m - 1], Y[j_m])` for a split at row `j_m` in iteration `p`.
    fn y_mid(&self, j_m: usize, p: u32) -> (ExtendedValue, ExtendedValue);
}

impl<P: Probe> MidpointSource<P> for PermutedViews<P> {
    #[inline]
    fn x_mid(&self, i_m: usize, p: u32) -> (ExtendedValue, ExtendedValue) {
        (self.x_odd(i_m - 1, p), self.x_even(i_m, p))
    }

    #[inline]
    fn y_mid(&self, j_m: usize, p: u32) -> (ExtendedValue, ExtendedValue) {
        (self.y_odd(j_m - 1, p), self.y_even(j_m, p))
    }
}

/// Reads midpoints from the original (padded) inputs.
pub struct DirectInputs<'a, P: Probe> {
    pub x: &'a TrackedVec<f64, P>,
    pub y: &'a TrackedVec<f64, P>,
}

impl<P: Probe> MidpointSource<P> for DirectInputs<'_, P> {
    #[inline]
    fn x_mid(&self, i_m: usize, _p: u32) -> (ExtendedValue, ExtendedValue) {
        (read_logical(self.x, i_m - 1), read_logical(self.x, i_m))
    }

    #[inline]
    fn y_mid(&self, j_m: usize, _p: u32) -> (ExtendedValue, ExtendedValue) {
        (read_logical(self.y, j_m - 1), read_logical(self.y, j_m))
    }
}

/// `L_p = min(N, 2^(p+1) - 1)`.
pub fn frontier_bound(p: u32, n: usize) -> u64 {
    (n as u64).min((1u64 << (p + 1)) - 1)
}

/// `⌈k·4^p / N²⌉`, exact.
fn scaled_rank(k: u64, p: u32, n: usize) -> Result<u64> {
    let overflow = || Error::Invariant(format!("rank arithmetic overflows for k = {k}, p = {p}, N = {n}"));
    let num = (k as u128).checked_mul(1u128.checked_shl(2 * p).ok_or_else(overflow)?).ok_or_else(overflow)?;
    let den = (n as u128).checked_mul(n as u128).ok_or_else(overflow)?;
    u64::try_from(num.div_ceil(den)).map_err(|_| overflow())
}

/// `q = ⌈k·4^p/N²⌉ + L_p`.
pub fn upper_quota(k: u64, p: u32, n: usize) -> Result<u64> {
    Ok(scaled_rank(k, p, n)? + frontier_bound(p, n))
}

/// `r = ⌈k·4^p/N²⌉ - L_p`, possibly non-positive.
pub fn lower_quota(k: u64, p: u32, n: usize) -> Result<i64> {
    Ok(scaled_rank(k, p, n)? as i64 - frontier_bound(p, n) as i64)
}

/// Splits every cell into its four half-side subcells, returned lex-sorted.
///
/// West children (columns `[i1, i_m)`) and east children (`[i_m, i2)`) are
/// staged separately, north before south within a parent. Given the column
/// contiguity of the input, each staging list is already sorted, so one
/// two-way merge finishes the job.
pub fn split_cells<P: Probe, S: MidpointSource<P>>(
    cells: &CellList<P>,
    source: &S,
    p: u32,
) -> Result<CellList<P>> {
    let probe = cells.probe();
    let len = cells.len();
    let mut west = TrackedVec::with_capacity("cells.west", probe, 2 * len);
    let mut east = TrackedVec::with_capacity("cells.east", probe, 2 * len);
    for idx in 0..len {
        let c = cells.get(idx);
        let side = c.side();
        if side < 2 {
            return Err(Error::Contract(format!("cell {c:?} has side {side} and cannot be split")));
        }
        let half = side / 2;
        let (i_m, j_m) = (c.i1 + half, c.j1 + half);
        let ((xw, xe), (yn, ys)) = if half == 1 {
            // every value the children need is already a corner of the parent
            ((c.x_lo, c.x_hi), (c.y_lo, c.y_hi))
        } else {
            (source.x_mid(i_m, p), source.y_mid(j_m, p))
        };
        let nw = Cell { i1: c.i1, j1: c.j1, i2: i_m, j2: j_m, x_lo: c.x_lo, x_hi: xw, y_lo: c.y_lo, y_hi: yn };
        let sw = Cell { j1: j_m, j2: c.j2, y_lo: ys, y_hi: c.y_hi, ..nw };
        let ne = Cell { i1: i_m, i2: c.i2, x_lo: xe, x_hi: c.x_hi, ..nw };
        let se = Cell { j1: j_m, j2: c.j2, y_lo: ys, y_hi: c.y_hi, ..ne };
        west.push(nw);
        west.push(sw);
        east.push(ne);
        east.push(se);
    }
    Ok(merge_lex(&west, &east))
}

/// [`split_cells`] reading midpoints from the permuted views.
pub fn partition_cells<P: Probe>(cells: &CellList<P>, views: &PermutedViews<P>, p: u32) -> Result<CellList<P>> {
    split_cells(cells, views, p)
}

fn merge_lex<P: Probe>(a: &CellList<P>, b: &CellList<P>) -> CellList<P> {
    let mut out = TrackedVec::with_capacity("cells", a.probe(), a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut next_a = (!a.is_empty()).then(|| a.get(0));
    let mut next_b = (!b.is_empty()).then(|| b.get(0));
    loop {
        let take_a = match (next_a, next_b) {
            (Some(ca), Some(cb)) => lex_compare(&ca, &cb) != Ordering::Greater,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        if take_a {
            out.push(next_a.unwrap());
            i += 1;
            next_a = (i < a.len()).then(|| a.get(i));
        } else {
            out.push(next_b.unwrap());
            j += 1;
            next_b = (j < b.len()).then(|| b.get(j));
        }
    }
    out
}

/// Writes `key(c)` for every cell into a fresh key buffer.
fn keys_of<P: Probe>(cells: &CellList<P>, key: impl Fn(&Cell) -> ExtendedValue) -> TrackedVec<ExtendedValue, P> {
    let mut keys = TrackedVec::with_capacity("keys", cells.probe(), cells.len());
    for i in 0..cells.len() {
        keys.push(key(&cells.get(i)));
    }
    keys
}

fn count_below<P: Probe>(keys: &TrackedVec<ExtendedValue, P>, pivot: ExtendedValue) -> usize {
    (0..keys.len()).filter(|&i| keys.get(i) < pivot).count()
}

/// Step (b): keeps at most `q = ⌈k·4^p/N²⌉ + L_p` cells, ranked by minimum.
pub fn discard_upper<P: Probe>(cells: CellList<P>, k: u64, p: u32, n: usize) -> Result<CellList<P>> {
    let q = upper_quota(k, p, n)?;
    keep_lowest_minima(cells, q)
}

/// Keeps the `q` cells of smallest minimum, ties going to the lexicographically
/// smallest. The dropped set is closed towards the south-east. Identity when
/// `q ≥ |cells|`.
pub fn keep_lowest_minima<P: Probe>(cells: CellList<P>, q: u64) -> Result<CellList<P>> {
    if q >= cells.len() as u64 {
        return Ok(cells);
    }
    let keys = keys_of(&cells, Cell::min);
    let x_u = select_kth(&keys, q)?;
    let mut ties = q as usize - count_below(&keys, x_u);
    let mut out = TrackedVec::with_capacity("cells", cells.probe(), q as usize);
    for i in 0..cells.len() {
        let key = keys.get(i);
        let keep = match key.cmp(&x_u) {
            Ordering::Less => true,
            Ordering::Equal if ties > 0 => {
                ties -= 1;
                true
            }
            _ => false,
        };
        if keep {
            out.push(cells.get(i));
        }
    }
    Ok(out)
}

/// Step (c): drops `r = ⌈k·4^p/N²⌉ - L_p` cells ranked by maximum, if `r ≥ 1`;
/// returns the survivors and the number dropped.
pub fn discard_lower<P: Probe>(cells: CellList<P>, k: u64, p: u32, n: usize) -> Result<(CellList<P>, u64)> {
    let r = lower_quota(k, p, n)?;
    if r < 1 {
        return Ok((cells, 0));
    }
    let r = r as u64;
    Ok((drop_lowest_maxima(cells, r)?, r))
}

/// Drops the `r` cells of smallest maximum, ties going to the lexicographically
/// smallest. The dropped set is closed towards the north-west.
pub fn drop_lowest_maxima<P: Probe>(cells: CellList<P>, r: u64) -> Result<CellList<P>> {
    if r == 0 {
        return Ok(cells);
    }
    if r > cells.len() as u64 {
        return Err(Error::Invariant(format!("asked to drop {r} of {} cells", cells.len())));
    }
    let keys = keys_of(&cells, Cell::max);
    let x_l = select_kth(&keys, r)?;
    let mut ties = r as usize - count_below(&keys, x_l);
    let mut out = TrackedVec::with_capacity("cells", cells.probe(), cells.len() - r as usize);
    for i in 0..cells.len() {
        let key = keys.get(i);
        let drop = match key.cmp(&x_l) {
            Ordering::Less => true,
            Ordering::Equal if ties > 0 => {
                ties -= 1;
                true
            }
            _ => false,
        };
        if !drop {
            out.push(cells.get(i));
        }
    }
    Ok(out)
}

/// `k - r·(N/2^p)²`, which must stay positive.
pub fn update_rank(k: u64, r: u64, p: u32, n: usize) -> Result<u64> {
    let side = (n >> p) as u64;
    let dropped = r.checked_mul(side * side).ok_or_else(|| Error::Invariant("rank update overflows".into()))?;
    if dropped >= k {
        return Err(Error::Invariant(format!(
            "dropping {r} cells of {} elements leaves no room for rank {k}",
            side * side
        )));
    }
    Ok(k - dropped)
}

/// The `k`th smallest of `{X[i] + Y[j]}` (1-based, duplicates counted).
pub fn fj_select(x: &SortedInput, y: &SortedInput, k: u64) -> Result<ExtendedValue> {
    Ok(select_with(x, y, k, Strategy::CacheOblivious, &Untracked)?.value)
}

/// Same contract as [`fj_select`], splitting cells by strided reads of the inputs.
pub fn naive_fj_select(x: &SortedInput, y: &SortedInput, k: u64) -> Result<ExtendedValue> {
    Ok(select_with(x, y, k, Strategy::Naive, &Untracked)?.value)
}

/// Runs a driver with the given probe. Inputs are charged from the moment the
/// driver first reads them.
pub fn select_with<P: Probe>(
    x: &SortedInput,
    y: &SortedInput,
    k: u64,
    strategy: Strategy,
    probe: &P,
) -> Result<Outcome> {
    let max = x.len() as u64 * y.len() as u64;
    if k == 0 || k > max {
        return Err(Error::RankOutOfBounds { k, max });
    }
    let n = pad_length(x.len(), y.len());
    let xs = TrackedVec::from_vec("X", probe, x.values().to_vec());
    let ys = TrackedVec::from_vec("Y", probe, y.values().to_vec());
    match strategy {
        Strategy::CacheOblivious => {
            let views = PermutedViews::build_tracked(&xs, &ys, n);
            drive(&xs, &ys, n, k, &views)
        }
        Strategy::Naive => drive(&xs, &ys, n, k, &DirectInputs { x: &xs, y: &ys }),
    }
}

/// The single cell covering the padded `n × n` matrix.
pub fn whole_matrix<P: Probe>(xs: &TrackedVec<f64, P>, ys: &TrackedVec<f64, P>, n: usize) -> CellList<P> {
    let mut cells = TrackedVec::with_capacity("cells", xs.probe(), 1);
    cells.push(Cell {
        i1: 0,
        j1: 0,
        i2: n,
        j2: n,
        x_lo: read_logical(xs, 0),
        x_hi: read_logical(xs, n - 1),
        y_lo: read_logical(ys, 0),
        y_hi: read_logical(ys, n - 1),
    });
    cells
}

fn drive<P: Probe, S: MidpointSource<P>>(
    xs: &TrackedVec<f64, P>,
    ys: &TrackedVec<f64, P>,
    n: usize,
    mut k: u64,
    source: &S,
) -> Result<Outcome> {
    let mut cells = whole_matrix(xs, ys, n);
    let mut iterations = Vec::with_capacity(lg(n) as usize);
    for p in 1..=lg(n) {
        let before = cells.len();
        let (q, r_signed) = (upper_quota(k, p, n)?, lower_quota(k, p, n)?);
        let split = split_cells(&cells, source, p)?;
        drop(cells);
        let split_len = split.len();
        let kept = discard_upper(split, k, p, n)?;
        let (survivors, r) = discard_lower(kept, k, p, n)?;
        if r > 0 {
            k = update_rank(k, r, p, n)?;
        }
        let l = frontier_bound(p, n);
        if survivors.len() as u64 > 2 * l {
            return Err(Error::Invariant(format!(
                "{} active cells after iteration {p}, more than 2·L_p = {}",
                survivors.len(),
                2 * l
            )));
        }
        if cfg!(debug_assertions) {
            check_cell_list(survivors.untracked(), n).map_err(Error::Invariant)?;
        }
        iterations.push(IterationReport {
            p,
            cells: before,
            split: split_len,
            l,
            q,
            r: r_signed,
            survivors: survivors.len(),
            k,
        });
        cells = survivors;
    }
    // every surviving cell is 1×1, so its minimum is its only element
    let keys = keys_of(&cells, Cell::min);
    let value = select_kth(&keys, k).map_err(|e| Error::Invariant(format!("final selection failed: {e}")))?;
    Ok(Outcome { value, iterations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_updates() {
        assert_eq!(update_rank(10, 1, 1, 4), Ok(6));
        assert_eq!(update_rank(10, 0, 3, 16), Ok(10));
        assert_eq!(update_rank(5, 2, 2, 4), Ok(3));
        assert!(matches!(update_rank(4, 1, 1, 4), Err(Error::Invariant(_))));
    }

    #[test]
    fn quotas() {
        assert_eq!(frontier_bound(1, 8), 3);
        assert_eq!(frontier_bound(3, 8), 8);
        // k = 32 of 64, p = 1: ⌈32·4/64⌉ = 2
        assert_eq!(upper_quota(32, 1, 8), Ok(5));
        assert_eq!(lower_quota(32, 1, 8), Ok(-1));
        // ⌈1·16/64⌉ = 1
        assert_eq!(upper_quota(1, 2, 8), Ok(8));
    }

    #[test]
    fn quotas_do_not_overflow_at_the_size_limit() {
        let n = 1usize << 20;
        let k = (n as u64) * (n as u64);
        assert_eq!(upper_quota(k, 20, n), Ok((1u64 << 40) + n as u64));
        assert_eq!(lower_quota(k, 20, n), Ok((1i64 << 40) - n as i64));
    }
}
