use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::solids::SolidKind;

use super::{constructive, enumerate_frame_shapes, oracle_count_with_caps, series_from_shapes, OracleCaps};

/// One way of counting solids in `{0, …, n}³`.
pub trait CountStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn count(&self, kind: SolidKind, n: u32) -> Result<u64>;

    /// Counts for `1..=n_max`.
    fn count_series(&self, kind: SolidKind, n_max: u32) -> Result<Vec<u64>> {
        (1..=n_max).map(|n| self.count(kind, n)).collect()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ConstructiveStrategy;

impl CountStrategy for ConstructiveStrategy {
    fn name(&self) -> &'static str {
        "constructive"
    }

    fn description(&self) -> &'static str {
        "triples -> lattice triangles -> tetrahedra -> cubes -> octahedra, counted by translation class"
    }

    fn count(&self, kind: SolidKind, n: u32) -> Result<u64> {
        Ok(*self.count_series(kind, n)?.last().expect("n >= 1"))
    }

    fn count_series(&self, kind: SolidKind, n_max: u32) -> Result<Vec<u64>> {
        let shapes = constructive::shape_set(kind, n_max)?;
        Ok(series_from_shapes(&shapes, n_max))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct FrameStrategy;

impl CountStrategy for FrameStrategy {
    fn name(&self) -> &'static str {
        "frames"
    }

    fn description(&self) -> &'static str {
        "integer orthogonal frames (u, v, u x v / s), counted by translation class"
    }

    fn count(&self, kind: SolidKind, n: u32) -> Result<u64> {
        Ok(*self.count_series(kind, n)?.last().expect("n >= 1"))
    }

    fn count_series(&self, kind: SolidKind, n_max: u32) -> Result<Vec<u64>> {
        let shapes = enumerate_frame_shapes(kind, n_max)?.into_iter().collect();
        Ok(series_from_shapes(&shapes, n_max))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct OracleStrategy {
    pub caps: OracleCaps,
}

impl CountStrategy for OracleStrategy {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn description(&self) -> &'static str {
        "exhaustive vertex-subset search with exact distance tests (small n only)"
    }

    fn count(&self, kind: SolidKind, n: u32) -> Result<u64> {
        oracle_count_with_caps(kind, n, self.caps)
    }
}

/// Counting strategies by name.
pub struct StrategyRegistry {
    entries: BTreeMap<&'static str, Box<dyn CountStrategy>>,
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    /// `constructive`, `frames` and `oracle` (with the given caps).
    pub fn with_builtins(caps: OracleCaps) -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(ConstructiveStrategy));
        reg.register(Box::new(FrameStrategy));
        reg.register(Box::new(OracleStrategy { caps }));
        reg
    }

    /// Adds a strategy, replacing any previous one with the same name.
    pub fn register(&mut self, strategy: Box<dyn CountStrategy>) -> Option<Box<dyn CountStrategy>> {
        self.entries.insert(strategy.name(), strategy)
    }

    pub fn get(&self, name: &str) -> Result<&dyn CountStrategy> {
        self.entries
            .get(name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::UnknownStrategy(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn CountStrategy> {
        self.entries.values().map(|s| s.as_ref())
    }
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        Self::with_builtins(OracleCaps::default())
    }
}
