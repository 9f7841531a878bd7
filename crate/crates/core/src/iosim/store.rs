use super::{ArrayId, Probe};

/// Size of one element in machine words.
pub trait Words {
    const WORDS: usize;
}

macro_rules! one_word {
    ($($t:ty),*) => { $(impl Words for $t { const WORDS: usize = 1; })* };
}

one_word!(f64, u64, u32, usize);

/// A contiguous array whose element reads and writes are reported to a probe.
///
/// Element `i` occupies words `[i·W, (i+1)·W)` of the array's block space.
#[derive(Debug, Clone)]
pub struct TrackedVec<T, P: Probe> {
    id: ArrayId,
    data: Vec<T>,
    probe: P,
}

impl<T: Copy + Words, P: Probe> TrackedVec<T, P> {
    pub fn new(label: &'static str, probe: &P) -> Self {
        Self::with_capacity(label, probe, 0)
    }

    pub fn with_capacity(label: &'static str, probe: &P, capacity: usize) -> Self {
        TrackedVec { id: probe.register(label), data: Vec::with_capacity(capacity), probe: probe.clone() }
    }

    /// Wraps data that is already laid out in slow memory; nothing is charged.
    pub fn from_vec(label: &'static str, probe: &P, data: Vec<T>) -> Self {
        TrackedVec { id: probe.register(label), data, probe: probe.clone() }
    }

    pub fn id(&self) -> ArrayId {
        self.id
    }

    pub fn probe(&self) -> &P {
        &self.probe
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> T {
        let v = self.data[i];
        self.probe.touch(self.id, i * T::WORDS, T::WORDS);
        v
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: T) {
        self.data[i] = v;
        self.probe.touch(self.id, i * T::WORDS, T::WORDS);
    }

    #[inline]
    pub fn push(&mut self, v: T) {
        self.probe.touch(self.id, self.data.len() * T::WORDS, T::WORDS);
        self.data.push(v);
    }

    /// Read-only view that bypasses instrumentation. For assertions and for
    /// handing results back to callers, never for the algorithm itself.
    pub fn untracked(&self) -> &[T] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }
}
