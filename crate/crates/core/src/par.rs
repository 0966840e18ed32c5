//! Data-parallel helpers. With the `parallel` feature these run on the
//! rayon pool when asked to; without it, or when `parallel` is false, they
//! iterate sequentially. Results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// Index and value of the first item (in slice order) for which `f`
/// returns `Some`.
pub(crate) fn find_first<T, R, F>(items: &[T], parallel: bool, f: F) -> Option<(usize, R)>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items
            .par_iter()
            .enumerate()
            .find_map_first(|(i, item)| f(item).map(|r| (i, r)));
    }
    let _ = parallel;
    items
        .iter()
        .enumerate()
        .find_map(|(i, item)| f(item).map(|r| (i, r)))
}
