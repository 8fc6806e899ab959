use std::sync::{Arc, RwLock};

/// Append-only cache of values indexed by level, built strictly bottom-up.
///
/// Readers share completed levels through `Arc`s; a missing level is built
/// under the write lock together with every level below it, so a builder
/// always sees all lower levels.
pub(crate) struct LevelCache<T> {
    levels: RwLock<Vec<Arc<T>>>,
}

impl<T> LevelCache<T> {
    pub(crate) const fn new() -> Self {
        LevelCache {
            levels: RwLock::new(Vec::new()),
        }
    }

    pub(crate) fn get(&self, level: usize, build: impl Fn(usize, &[Arc<T>]) -> T) -> Arc<T> {
        if let Some(v) = self.levels.read().unwrap().get(level) {
            return Arc::clone(v);
        }
        let mut levels = self.levels.write().unwrap();
        while levels.len() <= level {
            let next = build(levels.len(), &levels);
            levels.push(Arc::new(next));
        }
        Arc::clone(&levels[level])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_every_lower_level_once() {
        let cache: LevelCache<Vec<usize>> = LevelCache::new();
        let build = |level: usize, lower: &[Arc<Vec<usize>>]| {
            assert_eq!(lower.len(), level);
            let mut v = lower.last().map(|l| (**l).clone()).unwrap_or_default();
            v.push(level);
            v
        };
        assert_eq!(*cache.get(3, build), vec![0, 1, 2, 3]);
        assert_eq!(*cache.get(1, |_, _| unreachable!()), vec![0, 1]);
    }
}
