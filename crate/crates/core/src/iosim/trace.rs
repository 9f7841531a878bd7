use super::{ArrayId, CacheConfig, LabeledStats, SimulatedCache};

/// A maximal run of consecutive words accessed in order within one array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub array: ArrayId,
    pub first_word: u64,
    pub words: u32,
}

/// Recorded word-level access stream, run-length compressed.
///
/// Replaying it under any cache configuration gives exactly the counters a
/// live run under that configuration would have produced.
#[derive(Debug, Clone, Default)]
pub struct Trace {
    runs: Vec<Run>,
    labels: Vec<&'static str>,
}

impl Trace {
    pub(crate) fn push(&mut self, array: ArrayId, first_word: usize, words: usize) {
        if words == 0 {
            return;
        }
        let first_word = first_word as u64;
        if let Some(last) = self.runs.last_mut() {
            if last.array == array
                && last.first_word + last.words as u64 == first_word
                && (last.words as u64 + words as u64) <= u32::MAX as u64
            {
                last.words += words as u32;
                return;
            }
        }
        self.runs.push(Run { array, first_word, words: words as u32 });
    }

    pub(crate) fn set_labels(&mut self, labels: Vec<&'static str>) {
        self.labels = labels;
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn label(&self, array: ArrayId) -> &'static str {
        self.labels[array.0 as usize]
    }

    /// Total number of word accesses.
    pub fn accesses(&self) -> u64 {
        self.runs.iter().map(|r| r.words as u64).sum()
    }

    /// Word indices accessed in arrays labelled `label`, in access order.
    pub fn words_of(&self, label: &str) -> Vec<(ArrayId, u64)> {
        self.runs
            .iter()
            .filter(|r| self.label(r.array) == label)
            .flat_map(|r| (0..r.words as u64).map(move |w| (r.array, r.first_word + w)))
            .collect()
    }

    pub fn replay(&self, config: CacheConfig) -> LabeledStats {
        let mut cache = SimulatedCache::new(config);
        for r in &self.runs {
            cache.access_words(r.array, r.first_word as usize, r.words as usize);
        }
        LabeledStats::from_cache(&cache, &self.labels)
    }
}
