//! Shared plumbing for the two skein-tree evaluators: node budgets and the
//! optional memo cache keyed by canonical diagram codes.

use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::diagram::DiagramError;
use crate::poly::Laurent2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("skein node budget of {budget} exhausted; raise the budget to force the computation")]
    BudgetExceeded { budget: u64 },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Which invariant a cache entry belongs to; the two recursions share one
/// cache object but never each other's values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum CacheKind {
    Homfly,
    KauffmanLambda,
}

/// A memo cache shareable across computations (e.g. one census run).
/// Insertions are atomic insert-if-absent; results are deterministic
/// regardless of thread interleaving because every stored value is a pure
/// function of its key.
#[derive(Default)]
pub struct SkeinCache {
    map: Mutex<FxHashMap<(CacheKind, Vec<u32>), Laurent2>>,
}

impl SkeinCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn get(&self, kind: CacheKind, key: &[u32]) -> Option<Laurent2> {
        self.map
            .lock()
            .expect("cache lock")
            .get(&(kind, key.to_vec()))
            .cloned()
    }

    pub(crate) fn insert(&self, kind: CacheKind, key: Vec<u32>, value: Laurent2) {
        self.map
            .lock()
            .expect("cache lock")
            .entry((kind, key))
            .or_insert(value);
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Evaluation options for the skein recursions.
#[derive(Clone)]
pub struct SkeinOptions {
    /// Hard cap on visited skein nodes; exceeding it is an error, never an
    /// approximate answer.
    pub node_budget: u64,
    /// Optional cache shared across invocations.
    pub cache: Option<Arc<SkeinCache>>,
}

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

impl Default for SkeinOptions {
    fn default() -> Self {
        SkeinOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            cache: None,
        }
    }
}

impl SkeinOptions {
    pub fn with_budget(node_budget: u64) -> Self {
        SkeinOptions {
            node_budget,
            ..Default::default()
        }
    }
}

/// Per-invocation evaluation state: node counter, local memo, optional
/// shared cache.
pub(crate) struct EvalCtx {
    used: u64,
    budget: u64,
    local: FxHashMap<Vec<u32>, Laurent2>,
    shared: Option<Arc<SkeinCache>>,
    kind: CacheKind,
}

impl EvalCtx {
    pub(crate) fn new(opts: &SkeinOptions, kind: CacheKind) -> Self {
        EvalCtx {
            used: 0,
            budget: opts.node_budget,
            local: FxHashMap::default(),
            shared: opts.cache.clone(),
            kind,
        }
    }

    pub(crate) fn tick(&mut self) -> Result<(), SkeinError> {
        self.used += 1;
        if self.used > self.budget {
            return Err(SkeinError::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    pub(crate) fn lookup(&self, key: &[u32]) -> Option<Laurent2> {
        if let Some(v) = self.local.get(key) {
            return Some(v.clone());
        }
        self.shared.as_ref().and_then(|c| c.get(self.kind, key))
    }

    pub(crate) fn store(&mut self, key: Vec<u32>, value: &Laurent2) {
        if let Some(c) = &self.shared {
            c.insert(self.kind, key.clone(), value.clone());
        }
        self.local.insert(key, value.clone());
    }
}
