//! Thin data-parallel shim. With the `parallel` feature (default) `map` runs
//! on rayon; without it, the same call compiles to plain iteration. `map_seq`
//! is always sequential so the two paths can be benchmarked side by side in
//! one build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map<I, O, F>(items: &[I], f: F) -> Vec<O>
where
    I: Sync,
    O: Send,
    F: Fn(&I) -> O + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Sequential reference path, available regardless of features.
pub fn map_seq<I, O, F>(items: &[I], f: F) -> Vec<O>
where
    F: Fn(&I) -> O,
{
    items.iter().map(f).collect()
}

/// Thread cap requested through the TOOLKIT_THREADS environment variable.
pub fn thread_cap() -> Option<usize> {
    std::env::var("TOOLKIT_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Installs a global thread pool honoring TOOLKIT_THREADS. Safe to call more
/// than once (later calls are ignored); a no-op in sequential builds.
pub fn configure_threads() {
    #[cfg(feature = "parallel")]
    if let Some(n) = thread_cap() {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let xs: Vec<u64> = (0..500).collect();
        let f = |x: &u64| x * x + 1;
        assert_eq!(map(&xs, f), map_seq(&xs, f));
    }
}
