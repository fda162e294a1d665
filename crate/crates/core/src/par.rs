//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature disabled every entry point runs on the
//! calling thread and [`Execution::Parallel`] behaves like
//! [`Execution::Sequential`]. Results never depend on the mode.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    /// Whether work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Folds every integer of `range` into an accumulator, merging partial
/// accumulators with `merge`, and stops at the first error.
/// `merge` must be associative and `identity()` its neutral element.
pub fn try_fold_range<T, E, I, F, M>(
    exec: Execution,
    range: Range<u64>,
    identity: I,
    fold: F,
    merge: M,
) -> Result<T, E>
where
    T: Send,
    E: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, u64) -> Result<T, E> + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range
            .into_par_iter()
            .try_fold(&identity, &fold)
            .try_reduce(&identity, |a, b| Ok(merge(a, b)));
    }
    let _ = (exec, &merge);
    range.into_iter().try_fold(identity(), fold)
}

/// Order-preserving map over a slice.
pub fn map<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Sizes the global thread pool. Only the first call has any effect; a
/// no-op without the `parallel` feature.
pub fn configure_threads(threads: usize) -> Result<(), String> {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| e.to_string())
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        Ok(())
    }
}
