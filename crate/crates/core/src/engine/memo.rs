use lru::LruCache;
use parking_lot::Mutex;

use crate::graph::CanonicalKey;
use crate::poly::Polynomial;

/// Bounded LRU map from canonical form to chromatic polynomial.
///
/// Safe to share between worker threads. Two workers racing on the same key
/// store equal polynomials, so the second store has no observable effect.
pub struct MemoCache {
    capacity: usize,
    // grown on demand; `LruCache::new` would preallocate the full capacity
    inner: Option<Mutex<LruCache<CanonicalKey, Polynomial>>>,
}

impl MemoCache {
    /// A capacity of zero disables caching entirely.
    pub fn new(capacity: usize) -> MemoCache {
        MemoCache {
            capacity,
            inner: (capacity > 0).then(|| Mutex::new(LruCache::unbounded())),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.inner.as_ref().map_or(0, |m| m.lock().len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn lookup(&self, key: &CanonicalKey) -> Option<Polynomial> {
        self.inner.as_ref()?.lock().get(key).cloned()
    }

    pub fn store(&self, key: CanonicalKey, p: Polynomial) {
        if let Some(m) = &self.inner {
            let mut m = m.lock();
            m.put(key, p);
            while m.len() > self.capacity {
                m.pop_lru();
            }
        }
    }

    pub fn clear(&self) {
        if let Some(m) = &self.inner {
            m.lock().clear();
        }
    }
}

impl std::fmt::Debug for MemoCache {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MemoCache")
            .field("capacity", &self.capacity())
            .field("len", &self.len())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, Graph};

    #[test]
    fn relabeled_graph_hits() {
        let memo = MemoCache::new(8);
        let g = Family::Wheel(6).build().unwrap();
        let p = crate::closed_forms::chrom_wheel(6).unwrap();
        memo.store(g.canonical_form(), p.clone());
        let h = g.permute(&[3, 5, 0, 1, 4, 2]);
        assert_eq!(memo.lookup(&h.canonical_form()), Some(p));
    }

    #[test]
    fn miss_and_eviction() {
        let memo = MemoCache::new(1);
        let a = Graph::empty(2).canonical_form();
        let b = Graph::empty(3).canonical_form();
        assert_eq!(memo.lookup(&a), None);
        memo.store(a.clone(), Polynomial::monomial(2));
        memo.store(b.clone(), Polynomial::monomial(3));
        assert_eq!(memo.lookup(&a), None);
        assert_eq!(memo.lookup(&b), Some(Polynomial::monomial(3)));
    }

    #[test]
    fn zero_capacity_never_stores() {
        let memo = MemoCache::new(0);
        let a = Graph::empty(2).canonical_form();
        memo.store(a.clone(), Polynomial::monomial(2));
        assert!(memo.lookup(&a).is_none());
        assert!(memo.is_empty());
    }
}
