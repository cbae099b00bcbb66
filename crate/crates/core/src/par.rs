//! Thin switch between rayon data-parallel loops and a sequential
//! fallback, selected by the `parallel` cargo feature. Callers restore
//! determinism by sorting results; the helpers themselves preserve input
//! order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over a slice, with a per-worker scratch state created by `init`.
#[cfg(feature = "parallel")]
pub(crate) fn map_with<T, U, S, I, F>(items: &[T], init: I, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    S: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &T) -> U + Sync + Send,
{
    items.par_iter().map_init(&init, |s, t| f(s, t)).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_with<T, U, S, I, F>(items: &[T], init: I, f: F) -> Vec<U>
where
    I: Fn() -> S,
    F: Fn(&mut S, &T) -> U,
{
    let mut state = init();
    items.iter().map(|t| f(&mut state, t)).collect()
}

/// Plain parallel map.
#[cfg(feature = "parallel")]
pub(crate) fn map_vec<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vec<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
