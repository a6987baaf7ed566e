//! Sequential or data-parallel execution of the enumeration and sweep loops.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] runs on the
//! rayon global pool; without it every mode falls back to a sequential loop.
//! Output order never depends on the mode.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when this mode will actually fan out across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Ordered `filter_map` over an index range.
    pub fn filter_map_range<T, F>(self, range: Range<u64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return range.into_par_iter().filter_map(f).collect();
        }
        range.filter_map(f).collect()
    }

    /// Ordered `map` over a slice.
    pub fn map_slice<S, T, F>(self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }
}

/// Sizes the rayon global pool. A no-op without the `parallel` feature or
/// when the pool was already initialised.
pub fn configure_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let f = |i: u64| (i % 3 == 0).then_some(i * i);
        let seq = Exec::Sequential.filter_map_range(0..10_000, f);
        let par = Exec::Parallel.filter_map_range(0..10_000, f);
        assert_eq!(seq, par);
        assert!(seq.windows(2).all(|w| w[0] < w[1]));
        let items: Vec<u32> = (0..500).collect();
        assert_eq!(
            Exec::Sequential.map_slice(&items, |x| x + 1),
            Exec::Parallel.map_slice(&items, |x| x + 1)
        );
    }
}
