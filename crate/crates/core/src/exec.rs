//! Scheduling of data-parallel checks.
//!
//! Every search returns the match with the smallest index, so parallel and
//! sequential runs produce identical verdicts.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a search over an index space is scheduled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is on, otherwise sequential.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Exhaustive enumeration or seeded sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

impl CheckMode {
    pub fn sampled(count: usize, seed: u64) -> Self {
        CheckMode::Sampled { count, seed }
    }
}

/// First `f(i)` that is `Some`, scanning `0..n` in index order.
pub fn find_first<R, F>(exec: Exec, n: u64, f: F) -> Option<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..n).into_par_iter().find_map_first(f),
        _ => (0..n).find_map(f),
    }
}

/// `f` applied to every index, results in index order.
pub fn map_indices<R, F>(exec: Exec, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
        _ => (0..n).map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn find_first_returns_smallest_match_under_both_schedules() {
        let f = |i: u64| (i % 7 == 3 && i > 100).then_some(i);
        assert_eq!(find_first(Exec::Sequential, 10_000, f), Some(101));
        assert_eq!(find_first(Exec::Parallel, 10_000, f), Some(101));
        assert_eq!(find_first(Exec::Parallel, 50, f), None);
    }

    #[test]
    fn map_indices_preserves_order() {
        let v = map_indices(Exec::Parallel, 1000, |i| i * 2);
        assert!(v.iter().enumerate().all(|(i, x)| *x == 2 * i));
    }
}
