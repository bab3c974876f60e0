//! Order-preserving parallel map used by the grid scans.
//!
//! With the `parallel` feature the work fans out over rayon's pool; results
//! come back in input order either way, so output never depends on scheduling.

/// Applies `f` to every item, keeping the `Some` results in input order.
pub(crate) fn par_filter_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.into_par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().filter_map(f).collect()
    }
}
