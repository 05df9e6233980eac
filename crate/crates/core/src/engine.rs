//! Shared memoization for polynomial constructions.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use crate::exact_algebra::ZPoly;

/// A concurrent map where readers never block each other and a racing
/// insertion keeps whichever identical value landed first.
#[derive(Debug)]
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Self { map: RwLock::new(HashMap::new()) }
    }
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn get(&self, k: &K) -> Option<Arc<V>> {
        self.map.read().expect("memo lock poisoned").get(k).cloned()
    }

    pub(crate) fn insert(&self, k: K, v: V) -> Arc<V> {
        let mut guard = self.map.write().expect("memo lock poisoned");
        guard.entry(k).or_insert_with(|| Arc::new(v)).clone()
    }

    pub(crate) fn get_or_try<E>(&self, k: &K, make: impl FnOnce() -> Result<V, E>) -> Result<Arc<V>, E> {
        if let Some(v) = self.get(k) {
            return Ok(v);
        }
        let v = make()?;
        Ok(self.insert(k.clone(), v))
    }

    pub(crate) fn len(&self) -> usize {
        self.map.read().expect("memo lock poisoned").len()
    }
}

/// Size limits enforced before any construction starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub max_weight: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_n: 6, max_weight: 12 }
    }
}

/// Caches of `Y_i z^κ`, `E_μ`, `f_μ` and resonance specializations. Safe to
/// share across threads.
#[derive(Debug, Default)]
pub struct Engine {
    pub limits: Limits,
    pub(crate) y_images: Memo<(usize, Vec<u32>), ZPoly>,
    pub(crate) e_cache: Memo<Vec<u32>, ZPoly>,
    pub(crate) f_cache: Memo<Vec<u32>, ZPoly>,
    pub(crate) f_resonant: Memo<(Vec<u32>, i32), ZPoly>,
    pub(crate) e_resonant: Memo<(Vec<u32>, i32), ZPoly>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limits(limits: Limits) -> Self {
        Self { limits, ..Self::default() }
    }

    /// Number of cached `(E, f)` polynomials.
    pub fn cache_sizes(&self) -> (usize, usize) {
        (self.e_cache.len(), self.f_cache.len())
    }

    pub(crate) fn check_limits(&self, mu: &[u32]) -> Result<(), LimitError> {
        let w: u32 = mu.iter().sum();
        if mu.len() > self.limits.max_n {
            return Err(LimitError::TooManyVariables { n: mu.len(), max: self.limits.max_n });
        }
        if w > self.limits.max_weight {
            return Err(LimitError::WeightTooLarge { weight: w, max: self.limits.max_weight });
        }
        if mu.is_empty() {
            return Err(LimitError::Empty);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LimitError {
    #[error("n = {n} exceeds the configured maximum {max}")]
    TooManyVariables { n: usize, max: usize },
    #[error("weight {weight} exceeds the configured maximum {max}")]
    WeightTooLarge { weight: u32, max: u32 },
    #[error("empty composition")]
    Empty,
}
