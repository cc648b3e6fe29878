//! Order-preserving data-parallel helpers.
//!
//! With the `parallel` feature (on by default) [`Strategy::Parallel`] runs on
//! the rayon global pool. Without it every strategy runs sequentially. Results
//! are always returned in input order, so callers see identical output under
//! either strategy.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    /// Whether this strategy actually fans out in the current build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

pub fn map<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = strategy;
    items.iter().map(f).collect()
}

pub fn map_range<R, F>(strategy: Strategy, len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = strategy;
    (0..len).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map(Strategy::Sequential, &items, |x| x * x);
        let par = map(Strategy::Parallel, &items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(map_range(Strategy::Parallel, 10, |i| i), (0..10).collect::<Vec<_>>());
    }
}
