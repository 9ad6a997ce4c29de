//! Thread-local comparison counter used by query structures.
//!
//! Counts geometric predicate evaluations along query paths so scaling
//! suites can fit growth rates. Queries on immutable structures may run
//! concurrently; each thread meters its own work.

use std::cell::Cell;

thread_local! {
    static COMPARISONS: Cell<u64> = const { Cell::new(0) };
}

#[inline]
pub fn tick() {
    COMPARISONS.with(|c| c.set(c.get() + 1));
}

#[inline]
pub fn add(n: u64) {
    COMPARISONS.with(|c| c.set(c.get() + n));
}

/// Current counter value for this thread.
pub fn read() -> u64 {
    COMPARISONS.with(|c| c.get())
}

pub fn reset() {
    COMPARISONS.with(|c| c.set(0));
}

/// Run `f` and return its result together with the comparisons it performed
/// on this thread.
pub fn metered<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let before = read();
    let out = f();
    (out, read() - before)
}
