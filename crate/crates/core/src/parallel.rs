//! Optional data parallelism controlled by `BETHE_FF_THREADS`.
//!
//! Results are always collected in input order and reduced sequentially by
//! the caller, so parallel runs are bit-for-bit reproducible.

use std::sync::OnceLock;

pub const THREADS_ENV: &str = "BETHE_FF_THREADS";

fn pool() -> Option<&'static rayon::ThreadPool> {
    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();
    POOL.get_or_init(|| {
        let n: usize = std::env::var(THREADS_ENV).ok()?.trim().parse().ok()?;
        if n == 0 {
            return None;
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()
    })
    .as_ref()
}

/// `items.map(f)` in order, in parallel when a thread cap is configured.
pub fn ordered_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match pool() {
        Some(p) if items.len() > 1 => {
            use rayon::prelude::*;
            p.install(|| items.par_iter().map(&f).collect())
        }
        _ => items.iter().map(f).collect(),
    }
}
