use std::cell::RefCell;
use std::collections::BTreeMap;
use std::rc::Rc;

use super::{ArrayId, CacheConfig, Counters, SimulatedCache, Trace};

/// Receives the word-level access stream of an instrumented run.
pub trait Probe: Clone {
    /// Allocates a fresh array id. `label` groups arrays in reports.
    fn register(&self, label: &'static str) -> ArrayId;

    /// Reports one access to each word in `[first_word, first_word + words)`.
    fn touch(&self, array: ArrayId, first_word: usize, words: usize);
}

/// The uninstrumented probe.
#[derive(Debug, Clone, Copy, Default)]
pub struct Untracked;

impl Probe for Untracked {
    #[inline(always)]
    fn register(&self, _label: &'static str) -> ArrayId {
        ArrayId(0)
    }

    #[inline(always)]
    fn touch(&self, _array: ArrayId, _first_word: usize, _words: usize) {}
}

/// Counters of one cache configuration, grouped by array label.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledStats {
    pub config: CacheConfig,
    pub total: Counters,
    pub by_label: BTreeMap<&'static str, Counters>,
}

impl LabeledStats {
    pub(crate) fn from_cache(cache: &SimulatedCache, labels: &[&'static str]) -> Self {
        let snap = cache.snapshot();
        let mut by_label: BTreeMap<&'static str, Counters> = BTreeMap::new();
        for (id, c) in snap.per_array.iter().enumerate() {
            *by_label.entry(labels[id]).or_default() += *c;
        }
        LabeledStats { config: cache.config(), total: snap.total, by_label }
    }
}

struct TracerState {
    labels: Vec<&'static str>,
    caches: Vec<SimulatedCache>,
    trace: Option<Trace>,
}

/// Instrumenting probe: feeds the same access stream to every configured
/// cache and, if enabled, to a recorded trace.
///
/// A tracer belongs to one run on one thread; clones share state.
#[derive(Clone)]
pub struct Tracer(Rc<RefCell<TracerState>>);

impl Tracer {
    pub fn new(configs: &[CacheConfig]) -> Self {
        Tracer(Rc::new(RefCell::new(TracerState {
            labels: Vec::new(),
            caches: configs.iter().map(|&c| SimulatedCache::new(c)).collect(),
            trace: None,
        })))
    }

    /// A tracer that only records the access stream.
    pub fn recording() -> Self {
        let t = Self::new(&[]);
        t.0.borrow_mut().trace = Some(Trace::default());
        t
    }

    /// Per-configuration stats, in construction order.
    pub fn stats(&self) -> Vec<LabeledStats> {
        let st = self.0.borrow();
        st.caches.iter().map(|c| LabeledStats::from_cache(c, &st.labels)).collect()
    }

    /// Takes the recorded trace, leaving an empty one in its place.
    pub fn take_trace(&self) -> Option<Trace> {
        let mut st = self.0.borrow_mut();
        let labels = st.labels.clone();
        st.trace.as_mut().map(|t| {
            let mut taken = std::mem::take(t);
            taken.set_labels(labels);
            taken
        })
    }

    pub fn label(&self, id: ArrayId) -> &'static str {
        self.0.borrow().labels[id.0 as usize]
    }

    /// Zeroes all counters, empties all caches and clears the trace.
    pub fn reset(&self) {
        let mut st = self.0.borrow_mut();
        for c in &mut st.caches {
            c.reset();
        }
        if let Some(t) = st.trace.as_mut() {
            *t = Trace::default();
        }
    }
}

impl Probe for Tracer {
    fn register(&self, label: &'static str) -> ArrayId {
        let mut st = self.0.borrow_mut();
        st.labels.push(label);
        ArrayId((st.labels.len() - 1) as u32)
    }

    fn touch(&self, array: ArrayId, first_word: usize, words: usize) {
        let mut st = self.0.borrow_mut();
        for c in &mut st.caches {
            c.access_words(array, first_word, words);
        }
        if let Some(t) = st.trace.as_mut() {
            t.push(array, first_word, words);
        }
    }
}
