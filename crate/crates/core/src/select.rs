//! Deterministic linear-time selection (median of medians, groups of five).
//!
//! Every pass is a forward scan over a contiguous buffer, and each recursion
//! level copies the surviving class into a fresh buffer rather than
//! partitioning in place, so the block transfers stay within a constant
//! factor of a scan of the input.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::iosim::{Probe, TrackedVec, Untracked, Words};
use crate::value::ExtendedValue;

/// Anything selectable by an [`ExtendedValue`] key.
pub trait Keyed: Copy + Words {
    fn key(&self) -> ExtendedValue;
}

impl Keyed for ExtendedValue {
    #[inline]
    fn key(&self) -> ExtendedValue {
        *self
    }
}

/// A key with a payload that travels with it; ordering looks at the key only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyedItem<T> {
    pub key: ExtendedValue,
    pub payload: T,
}

impl<T: Copy + Words> Words for KeyedItem<T> {
    const WORDS: usize = 1 + T::WORDS;
}

impl<T: Copy + Words> Keyed for KeyedItem<T> {
    #[inline]
    fn key(&self) -> ExtendedValue {
        self.key
    }
}

/// Stable three-way split of a sequence around a pivot.
pub struct Partition3<T, P: Probe> {
    pub below: TrackedVec<T, P>,
    pub equal: TrackedVec<T, P>,
    pub above: TrackedVec<T, P>,
}

pub fn partition3<T: Keyed, P: Probe>(items: &TrackedVec<T, P>, pivot: ExtendedValue) -> Partition3<T, P> {
    let probe = items.probe();
    let mut out = Partition3 {
        below: TrackedVec::new("select.below", probe),
        equal: TrackedVec::new("select.equal", probe),
        above: TrackedVec::new("select.above", probe),
    };
    for i in 0..items.len() {
        let item = items.get(i);
        match item.key().cmp(&pivot) {
            Ordering::Less => out.below.push(item),
            Ordering::Equal => out.equal.push(item),
            Ordering::Greater => out.above.push(item),
        }
    }
    out
}

/// The `k`th smallest key (1-based, duplicates counted).
pub fn select_kth<T: Keyed, P: Probe>(items: &TrackedVec<T, P>, k: u64) -> Result<ExtendedValue> {
    let len = items.len() as u64;
    if k == 0 || k > len {
        return Err(Error::RankOutOfBounds { k, max: len });
    }
    Ok(select_in(items, k as usize))
}

/// [`select_kth`] over a plain slice.
pub fn select_kth_slice<T: Keyed>(items: &[T], k: u64) -> Result<ExtendedValue> {
    let tracked = TrackedVec::from_vec("select.input", &Untracked, items.to_vec());
    select_kth(&tracked, k)
}

fn median_of_small(keys: &mut [ExtendedValue]) -> ExtendedValue {
    keys.sort_unstable();
    keys[(keys.len() - 1) / 2]
}

fn select_in<T: Keyed, P: Probe>(items: &TrackedVec<T, P>, mut k: usize) -> ExtendedValue {
    let mut owned: Option<TrackedVec<T, P>> = None;
    loop {
        let cur = owned.as_ref().unwrap_or(items);
        let s = cur.len();
        debug_assert!(1 <= k && k <= s);

        if s <= 5 {
            let mut keys = [ExtendedValue::POS_INF; 5];
            for (i, slot) in keys.iter_mut().enumerate().take(s) {
                *slot = cur.get(i).key();
            }
            keys[..s].sort_unstable();
            return keys[k - 1];
        }

        let mut medians = TrackedVec::with_capacity("select.medians", cur.probe(), s.div_ceil(5));
        let mut group = [ExtendedValue::POS_INF; 5];
        for start in (0..s).step_by(5) {
            let g = (s - start).min(5);
            for (j, slot) in group.iter_mut().enumerate().take(g) {
                *slot = cur.get(start + j).key();
            }
            medians.push(median_of_small(&mut group[..g]));
        }
        let pivot = select_in(&medians, medians.len().div_ceil(2));
        drop(medians);

        let (mut below, mut equal) = (0usize, 0usize);
        for i in 0..s {
            match cur.get(i).key().cmp(&pivot) {
                Ordering::Less => below += 1,
                Ordering::Equal => equal += 1,
                Ordering::Greater => {}
            }
        }

        let keep = if k <= below {
            Ordering::Less
        } else if k <= below + equal {
            return pivot;
        } else {
            k -= below + equal;
            Ordering::Greater
        };
        let mut next = TrackedVec::with_capacity(
            "select.class",
            cur.probe(),
            if keep == Ordering::Less { below } else { s - below - equal },
        );
        for i in 0..s {
            let item = cur.get(i);
            if item.key().cmp(&pivot) == keep {
                next.push(item);
            }
        }
        owned = Some(next);
    }
}
