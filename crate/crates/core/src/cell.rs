//! Square submatrices of `A = X + Y` and the sorted lists that hold them.
//!
//! Column index `i` runs over `X`, row index `j` over `Y`; rows grow
//! southwards. A cell covers columns `[i1, i2)` and rows `[j1, j2)` and
//! caches the four input values at its corners.

use std::cmp::Ordering;

use crate::iosim::Words;
use crate::value::ExtendedValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub i1: usize,
    pub j1: usize,
    pub i2: usize,
    pub j2: usize,
    /// `X[i1]`
    pub x_lo: ExtendedValue,
    /// `X[i2 - 1]`
    pub x_hi: ExtendedValue,
    /// `Y[j1]`
    pub y_lo: ExtendedValue,
    /// `Y[j2 - 1]`
    pub y_hi: ExtendedValue,
}

impl Words for Cell {
    const WORDS: usize = 8;
}

impl Cell {
    /// Side length; cells are square.
    pub fn side(&self) -> usize {
        self.i2 - self.i1
    }

    /// Smallest element, at the north-west corner.
    #[inline]
    pub fn min(&self) -> ExtendedValue {
        self.x_lo + self.y_lo
    }

    /// Largest element, at the south-east corner.
    #[inline]
    pub fn max(&self) -> ExtendedValue {
        self.x_hi + self.y_hi
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        (self.i1..self.i2).contains(&i) && (self.j1..self.j2).contains(&j)
    }
}

pub fn cell_min(c: &Cell) -> ExtendedValue {
    c.min()
}

pub fn cell_max(c: &Cell) -> ExtendedValue {
    c.max()
}

/// Lexicographic order on `(i1, j1)`, `i1` dominant.
#[inline]
pub fn lex_compare(a: &Cell, b: &Cell) -> Ordering {
    (a.i1, a.j1).cmp(&(b.i1, b.j1))
}

/// Checks the structural invariants of an active-cell list: square cells of
/// equal side inside `[0, n)`, strictly lex-sorted, each column a contiguous
/// run of rows, and column bottoms non-increasing from west to east.
pub fn check_cell_list(cells: &[Cell], n: usize) -> Result<(), String> {
    let Some(first) = cells.first() else {
        return Ok(());
    };
    let side = first.side();
    for (idx, c) in cells.iter().enumerate() {
        if c.i2 - c.i1 != side || c.j2 - c.j1 != side || !side.is_power_of_two() {
            return Err(format!("cell {idx} {c:?} is not a square of side {side}"));
        }
        if c.i2 > n || c.j2 > n || c.i1 % side != 0 || c.j1 % side != 0 {
            return Err(format!("cell {idx} {c:?} is off the grid of side {side} in [0, {n})"));
        }
        if c.x_lo > c.x_hi || c.y_lo > c.y_hi {
            return Err(format!("cell {idx} {c:?} has inverted corner values"));
        }
    }
    let mut prev_bottom: Option<usize> = None;
    let mut col_start = 0;
    for idx in 1..=cells.len() {
        if idx < cells.len() {
            let (a, b) = (&cells[idx - 1], &cells[idx]);
            if lex_compare(a, b) != Ordering::Less {
                return Err(format!("cells {} and {idx} are out of order", idx - 1));
            }
            if a.i1 == b.i1 {
                if b.j1 != a.j2 {
                    return Err(format!("column {} has a gap before cell {idx}", a.i1));
                }
                continue;
            }
        }
        let bottom = cells[idx - 1].j1;
        if let Some(pb) = prev_bottom {
            if bottom > pb {
                return Err(format!(
                    "column {} bottom row {bottom} lies below the previous column's {pb}",
                    cells[col_start].i1
                ));
            }
        }
        prev_bottom = Some(bottom);
        col_start = idx;
    }
    Ok(())
}
