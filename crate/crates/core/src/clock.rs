//! Engine time source.
//!
//! All timestamps flow through a [`Clock`] so that transcript replay and
//! tests are fully deterministic while the live service uses wall time.
//! Every `now()` call returns a strictly increasing value; this is what
//! makes "updated_at bumps on every applied update" observable even for
//! back-to-back operations.

use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{SystemTime, UNIX_EPOCH};

/// Milliseconds since the engine epoch (UNIX epoch for the system clock,
/// zero for manual clocks).
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct Timestamp(pub u64);

impl Timestamp {
    pub fn millis(self) -> u64 {
        self.0
    }

    pub fn saturating_add_secs(self, secs: u64) -> Timestamp {
        Timestamp(self.0.saturating_add(secs.saturating_mul(1000)))
    }
}

impl std::fmt::Display for Timestamp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "t{}", self.0)
    }
}

/// Strictly monotonic time source.
pub trait Clock: Send + Sync {
    /// Current time. Successive calls return strictly increasing values.
    fn now(&self) -> Timestamp;

    /// Guarantee that future `now()` calls exceed `t`. Used after recovery
    /// so restored timestamps never run ahead of the clock.
    fn advance_past(&self, t: Timestamp);
}

/// Wall-clock time, forced strictly monotonic across calls.
#[derive(Debug, Default)]
pub struct SystemClock {
    last: AtomicU64,
}

impl SystemClock {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Clock for SystemClock {
    fn now(&self) -> Timestamp {
        let wall = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_millis() as u64)
            .unwrap_or(0);
        let mut prev = self.last.load(Ordering::Relaxed);
        loop {
            let next = wall.max(prev + 1);
            match self
                .last
                .compare_exchange_weak(prev, next, Ordering::Relaxed, Ordering::Relaxed)
            {
                Ok(_) => return Timestamp(next),
                Err(seen) => prev = seen,
            }
        }
    }

    fn advance_past(&self, t: Timestamp) {
        self.last.fetch_max(t.0, Ordering::Relaxed);
    }
}

/// Deterministic clock for replay and tests: each `now()` yields the next
/// tick. `advance_millis` jumps forward (e.g. to trigger idle timeouts).
#[derive(Debug, Default)]
pub struct ManualClock {
    next: AtomicU64,
}

impl ManualClock {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn starting_at(millis: u64) -> Self {
        Self {
            next: AtomicU64::new(millis),
        }
    }

    pub fn advance_millis(&self, delta: u64) {
        self.next.fetch_add(delta, Ordering::Relaxed);
    }

    pub fn advance_secs(&self, secs: u64) {
        self.advance_millis(secs.saturating_mul(1000));
    }
}

impl Clock for ManualClock {
    fn now(&self) -> Timestamp {
        Timestamp(self.next.fetch_add(1, Ordering::Relaxed))
    }

    fn advance_past(&self, t: Timestamp) {
        self.next.fetch_max(t.0 + 1, Ordering::Relaxed);
    }
}
