//! External-memory instrumentation.
//!
//! Algorithms are written against [`TrackedVec`], which reports every word it
//! reads or writes to a [`Probe`]. With [`Untracked`] the reports compile
//! away; with a [`Tracer`] they drive one or more [`SimulatedCache`]s and
//! optionally a recorded [`Trace`]. The algorithms never see `M` or `B`.

mod cache;
mod probe;
mod store;
mod trace;

pub use cache::{scan_bound, AccessOutcome, CacheConfig, CacheStats, Counters, SimulatedCache};
pub use probe::{LabeledStats, Probe, Tracer, Untracked};
pub use store::{TrackedVec, Words};
pub use trace::{Run, Trace};

/// Identifies one logical array; every array has its own block-index space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrayId(pub u32);
