//! Exact construction and enumeration of the Platonic solids whose vertices
//! have integer coordinates.
//!
//! The chain runs from number theory to geometry:
//!
//! 1. [`diophantine`] solves `a² + b² + c² = 3d²` (plane normals),
//!    `m² − mn + n² = k²` and `2q = s² + 3r²`.
//! 2. [`lattice_triangles`] builds the generators `ζ, η` of the equilateral
//!    triangle lattice in each plane.
//! 3. [`solids`] lifts triangles to regular tetrahedra, completes them to
//!    cubes and dualises cubes to octahedra. Icosahedra and dodecahedra are
//!    ruled out by [`solids::icosahedron_obstruction`].
//! 4. [`counting`] counts each solid in the grid `{0, …, n}³` through
//!    interchangeable strategies.
//! 5. [`orthogonal`] reads rational orthogonal matrices off integer cubes.
//!
//! All arithmetic is exact.

pub mod counting;
pub mod diophantine;
pub mod error;
pub mod int;
pub mod lattice_triangles;
pub mod orthogonal;
pub mod solids;
pub mod vector;

pub use counting::{
    count_cubes, count_octahedra, count_tetrahedra, enumerate_shapes, oracle_count, CountStrategy, GridCensus,
    OracleCaps, ShapeClass, StrategyRegistry,
};
pub use diophantine::{enumerate_triples, omega, solve_rs, suitable_rs, EisensteinPair, RSPair, TripleSolution};
pub use error::{Error, Result};
pub use int::Int;
pub use lattice_triangles::{in_plane_lattice, triangle, zeta_eta, LatticeTriangle, ZetaEta};
pub use orthogonal::{compose, matrix_from_cube, tier_of, tier_representations, RationalMatrix3, Rational, Tier};
pub use solids::{
    complete_to_cube, cube_to_octahedron, fourth_vertices, icosahedron_obstruction, is_irreducible,
    octahedron_to_cube, verify_regular, Cube, Octahedron, SignChoice, Solid, SolidKind, Tetrahedron,
};
pub use vector::IntVector3;
