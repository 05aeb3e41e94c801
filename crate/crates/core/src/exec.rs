//! Data-parallel map over independent cases. Uses rayon when the
//! `parallel` feature is on, unless the calling thread opted out.

use std::cell::Cell;

thread_local! {
    static SEQUENTIAL: Cell<bool> = const { Cell::new(false) };
}

/// Run `f` with parallel maps disabled on this thread.
pub fn sequential<R>(f: impl FnOnce() -> R) -> R {
    let prev = SEQUENTIAL.with(|s| s.replace(true));
    let out = f();
    SEQUENTIAL.with(|s| s.set(prev));
    out
}

/// Whether `par_map` would fan out from this thread.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && !SEQUENTIAL.with(|s| s.get())
}

pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}
