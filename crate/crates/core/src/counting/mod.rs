//! Counting regular solids with vertices in the grid `{0, …, n}³`.
//!
//! Solids are generated once per translation class (anchored so the minimal
//! corner of the bounding box is the origin) and counted in closed form: a
//! class with extents `(ex, ey, ez)` has `∏ max(0, n − eᵢ + 1)` placements.
//!
//! Three interchangeable [`CountStrategy`] implementations are registered in
//! a [`StrategyRegistry`]:
//!
//! * `constructive`: triples → lattice triangles → tetrahedra → cubes →
//!   octahedra, the construction this crate is built around.
//! * `frames`: integer orthogonal frames `(u, v, u × v / s)` enumerated
//!   directly. Shares no code with the triangle pipeline.
//! * `oracle`: exhaustive search over vertex subsets of the grid with exact
//!   distance tests. Capped to small `n`.
//!
//! Tetrahedra are counted as distinct 4-element vertex sets.

mod constructive;
mod frames;
mod icosahedron;
mod oracle;
mod registry;

use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::solids::{cube_to_octahedron, Cube, Solid, SolidKind};
use crate::vector::IntVector3;

pub use constructive::enumerate_shapes;
pub use frames::enumerate_frame_shapes;
pub use icosahedron::{count_icosahedra, IcosahedronSearch};
pub use oracle::{oracle_count, oracle_count_with_caps, OracleCaps, ORACLE_CAP_ENV};
pub use registry::{ConstructiveStrategy, CountStrategy, FrameStrategy, OracleStrategy, StrategyRegistry};

/// Counts of each solid kind in `{0, …, n}³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridCensus {
    pub n: u32,
    pub cubes: u64,
    pub tetrahedra: u64,
    pub octahedra: u64,
}

/// One solid up to integer translation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeClass {
    pub kind: SolidKind,
    /// Vertices sorted lexicographically, minimal corner at the origin.
    pub vertices: Vec<IntVector3>,
    pub extents: [Int; 3],
}

impl ShapeClass {
    /// Anchors an arbitrary placement of a solid.
    pub fn from_vertices(kind: SolidKind, points: &[IntVector3]) -> Self {
        let lo = points.iter().skip(1).fold(points[0].clone(), |acc, p| acc.componentwise_min(p));
        let hi = points.iter().skip(1).fold(points[0].clone(), |acc, p| acc.componentwise_max(p));
        let mut vertices: Vec<IntVector3> = points.iter().map(|p| p - &lo).collect();
        vertices.sort();
        let ext = hi - lo;
        Self {
            kind,
            vertices,
            extents: [ext.x, ext.y, ext.z],
        }
    }

    pub fn representative(&self) -> Solid {
        let v = self.vertices.clone();
        match self.kind {
            SolidKind::Tetrahedron => Solid::Tetrahedron(v.try_into().expect("4 vertices")),
            SolidKind::Cube => Solid::Cube(v.try_into().expect("8 vertices")),
            SolidKind::Octahedron => Solid::Octahedron(v.try_into().expect("6 vertices")),
        }
    }

    pub fn fits(&self, n: u32) -> bool {
        self.extents.iter().all(|e| *e <= Int::from(n))
    }

    /// Number of integer translates inside `{0, …, n}³`.
    pub fn translations(&self, n: u32) -> u64 {
        self.extents
            .iter()
            .map(|e| {
                let free: Int = Int::from(n) - e + 1;
                free.to_u64().unwrap_or(0)
            })
            .product()
    }

    /// Image under a signed coordinate permutation, re-anchored.
    pub fn signed_permutation(&self, perm: [usize; 3], signs: [i8; 3]) -> Self {
        let moved: Vec<IntVector3> = self.vertices.iter().map(|p| p.signed_permutation(perm, signs)).collect();
        Self::from_vertices(self.kind, &moved)
    }
}

/// Classes of the requested kind induced by one cube (two for tetrahedra).
pub(crate) fn classes_from_cube(kind: SolidKind, cube: &Cube) -> Vec<ShapeClass> {
    match kind {
        SolidKind::Cube => vec![ShapeClass::from_vertices(kind, cube.vertices())],
        SolidKind::Tetrahedron => cube
            .inscribed_tetrahedra()
            .iter()
            .map(|t| ShapeClass::from_vertices(kind, t.vertices()))
            .collect(),
        SolidKind::Octahedron => vec![ShapeClass::from_vertices(kind, cube_to_octahedron(cube).vertices())],
    }
}

pub(crate) fn check_grid(n: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidArgument("grid size n must be at least 1".into()));
    }
    Ok(())
}

/// Σ over classes of their translation counts, for each `1..=n_max`.
pub fn series_from_shapes(shapes: &BTreeSet<ShapeClass>, n_max: u32) -> Vec<u64> {
    (1..=n_max).map(|n| shapes.iter().map(|s| s.translations(n)).sum()).collect()
}

pub fn count_cubes(n: u32) -> Result<u64> {
    ConstructiveStrategy.count(SolidKind::Cube, n)
}

pub fn count_tetrahedra(n: u32) -> Result<u64> {
    ConstructiveStrategy.count(SolidKind::Tetrahedron, n)
}

pub fn count_octahedra(n: u32) -> Result<u64> {
    ConstructiveStrategy.count(SolidKind::Octahedron, n)
}

/// Censuses for every grid size `1..=n_max`.
pub fn census(n_max: u32) -> Result<Vec<GridCensus>> {
    let s = ConstructiveStrategy;
    let cubes = s.count_series(SolidKind::Cube, n_max)?;
    let tetrahedra = s.count_series(SolidKind::Tetrahedron, n_max)?;
    let octahedra = s.count_series(SolidKind::Octahedron, n_max)?;
    Ok((0..n_max as usize)
        .map(|i| GridCensus {
            n: i as u32 + 1,
            cubes: cubes[i],
            tetrahedra: tetrahedra[i],
            octahedra: octahedra[i],
        })
        .collect())
}
