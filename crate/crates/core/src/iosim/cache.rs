//! Fully associative LRU cache over `M` words split into blocks of `B` words.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};

use super::ArrayId;

/// Block size `B` and capacity `M`, both in words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CacheConfig {
    block_words: usize,
    capacity_words: usize,
}

impl CacheConfig {
    /// Requires `B ≥ 1`, `M ≥ 2B` and `B | M`.
    pub fn new(block_words: usize, capacity_words: usize) -> Result<Self> {
        if block_words == 0 {
            return Err(Error::Contract("block size must be positive".into()));
        }
        if capacity_words < 2 * block_words {
            return Err(Error::Contract(format!(
                "cache of {capacity_words} words cannot hold two blocks of {block_words} words"
            )));
        }
        if capacity_words % block_words != 0 {
            return Err(Error::Contract(format!(
                "block size {block_words} does not divide capacity {capacity_words}"
            )));
        }
        Ok(CacheConfig { block_words, capacity_words })
    }

    /// A cache large enough to never evict.
    pub fn unbounded(block_words: usize) -> Self {
        assert!(block_words > 0);
        let blocks = usize::MAX / block_words / 2;
        CacheConfig { block_words, capacity_words: blocks * block_words }
    }

    pub fn block_words(&self) -> usize {
        self.block_words
    }

    pub fn capacity_words(&self) -> usize {
        self.capacity_words
    }

    pub fn capacity_blocks(&self) -> usize {
        self.capacity_words / self.block_words
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AccessOutcome {
    Hit,
    Miss,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    pub accesses: u64,
    pub misses: u64,
}

impl Counters {
    fn record(&mut self, accesses: u64, misses: u64) {
        self.accesses += accesses;
        self.misses += misses;
    }
}

impl std::ops::AddAssign for Counters {
    fn add_assign(&mut self, rhs: Self) {
        self.record(rhs.accesses, rhs.misses);
    }
}

/// Immutable copy of a cache's counters. `per_array[id]` holds the counters
/// of the array with that id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub total: Counters,
    pub per_array: Vec<Counters>,
}

const NIL: u32 = u32::MAX;

#[derive(Clone, Copy)]
struct Node {
    key: u64,
    prev: u32,
    next: u32,
}

/// LRU cache keyed by `(array, block)`.
///
/// Residency is an intrusive doubly linked list over a slab, indexed by a
/// hash map. The most recently used key is cached separately so that runs of
/// accesses to one block cost a single comparison each.
pub struct SimulatedCache {
    config: CacheConfig,
    map: FxHashMap<u64, u32>,
    nodes: Vec<Node>,
    head: u32,
    tail: u32,
    mru: Option<u64>,
    total: Counters,
    per_array: Vec<Counters>,
}

fn pack(array: ArrayId, block: u64) -> u64 {
    debug_assert!(block < 1 << 40);
    ((array.0 as u64) << 40) | block
}

impl SimulatedCache {
    pub fn new(config: CacheConfig) -> Self {
        SimulatedCache {
            config,
            map: FxHashMap::default(),
            nodes: Vec::new(),
            head: NIL,
            tail: NIL,
            mru: None,
            total: Counters::default(),
            per_array: Vec::new(),
        }
    }

    pub fn config(&self) -> CacheConfig {
        self.config
    }

    /// Number of resident blocks.
    pub fn resident_blocks(&self) -> usize {
        self.map.len()
    }

    /// One access to `block` of `array`.
    pub fn access(&mut self, array: ArrayId, block: u64) -> AccessOutcome {
        let missed = self.touch(pack(array, block));
        self.count(array, 1, missed as u64);
        if missed {
            AccessOutcome::Miss
        } else {
            AccessOutcome::Hit
        }
    }

    /// `count` back-to-back accesses to the same block; identical in effect
    /// to calling [`access`](Self::access) `count` times.
    pub fn access_run(&mut self, array: ArrayId, block: u64, count: u64) {
        if count == 0 {
            return;
        }
        let missed = self.touch(pack(array, block));
        self.count(array, count, missed as u64);
    }

    /// Accesses to every word in `[first_word, first_word + words)`.
    pub fn access_words(&mut self, array: ArrayId, first_word: usize, words: usize) {
        let b = self.config.block_words;
        let mut word = first_word;
        let end = first_word + words;
        while word < end {
            let block = word / b;
            let block_end = ((block + 1) * b).min(end);
            self.access_run(array, block as u64, (block_end - word) as u64);
            word = block_end;
        }
    }

    pub fn snapshot(&self) -> CacheStats {
        CacheStats { total: self.total, per_array: self.per_array.clone() }
    }

    /// Zeroes every counter and empties the cache.
    pub fn reset(&mut self) {
        *self = SimulatedCache::new(self.config);
    }

    fn count(&mut self, array: ArrayId, accesses: u64, misses: u64) {
        self.total.record(accesses, misses);
        let idx = array.0 as usize;
        if idx >= self.per_array.len() {
            self.per_array.resize(idx + 1, Counters::default());
        }
        self.per_array[idx].record(accesses, misses);
    }

    /// Marks `key` most recently used; returns whether it missed.
    fn touch(&mut self, key: u64) -> bool {
        if self.mru == Some(key) {
            return false;
        }
        self.mru = Some(key);
        if let Some(&slot) = self.map.get(&key) {
            self.unlink(slot);
            self.push_front(slot);
            return false;
        }
        let slot = if self.map.len() >= self.config.capacity_blocks() {
            let victim = self.tail;
            self.unlink(victim);
            self.map.remove(&self.nodes[victim as usize].key);
            self.nodes[victim as usize].key = key;
            victim
        } else {
            self.nodes.push(Node { key, prev: NIL, next: NIL });
            (self.nodes.len() - 1) as u32
        };
        self.map.insert(key, slot);
        self.push_front(slot);
        true
    }

    fn unlink(&mut self, slot: u32) {
        let Node { prev, next, .. } = self.nodes[slot as usize];
        if prev == NIL {
            self.head = next;
        } else {
            self.nodes[prev as usize].next = next;
        }
        if next == NIL {
            self.tail = prev;
        } else {
            self.nodes[next as usize].prev = prev;
        }
    }

    fn push_front(&mut self, slot: u32) {
        let old = self.head;
        {
            let node = &mut self.nodes[slot as usize];
            node.prev = NIL;
            node.next = old;
        }
        if old == NIL {
            self.tail = slot;
        } else {
            self.nodes[old as usize].prev = slot;
        }
        self.head = slot;
    }
}

/// Blocks transferred by a scan of `s` consecutive items: `1 + ⌈s/B⌉`.
pub fn scan_bound(s: u64, block_words: u64) -> u64 {
    assert!(block_words > 0);
    1 + s.div_ceil(block_words)
}
