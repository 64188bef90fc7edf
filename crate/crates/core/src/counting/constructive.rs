use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::diophantine::{enumerate_triples, omega, suitable_rs, TripleSolution};
use crate::error::Result;
use crate::int::Int;
use crate::lattice_triangles::zeta_eta;
use crate::solids::{complete_to_cube, fourth_vertices, SolidKind};

use super::{check_grid, classes_from_cube, ShapeClass};

/// Largest `d·k` that can still fit in the grid: `(dk)² ≤ 3n²`.
fn side_bound(n: u32) -> u64 {
    let three_n_sq = 3 * (n as u64) * (n as u64);
    (three_n_sq as f64).sqrt() as u64 + 1
}

/// Shape classes in `{0, …, n}³` built through the triangle pipeline.
///
/// Every plane `ax + by + cz = 0` (all signed permutations of each primitive
/// triple) contributes its origin-anchored tetrahedra `O, P, Q, R` for every
/// `(m, n) ∈ Ω(k)` and every integral apex. Each tetrahedron is completed to
/// its cube; octahedra are the duals of those cubes. Sorted by class key.
pub fn enumerate_shapes(kind: SolidKind, n: u32) -> Result<Vec<ShapeClass>> {
    Ok(shape_set(kind, n)?.into_iter().collect())
}

pub(crate) fn shape_set(kind: SolidKind, n: u32) -> Result<BTreeSet<ShapeClass>> {
    check_grid(n)?;
    let limit = side_bound(n);
    let max_sq = 3 * (n as u64) * (n as u64);
    let planes: Vec<TripleSolution> = enumerate_triples(limit)?
        .iter()
        .flat_map(TripleSolution::expand)
        .collect();

    let max_k = limit;
    let omegas = (1..=max_k)
        .map(|k| omega(&Int::from(k)))
        .collect::<Result<Vec<_>>>()?;

    let per_plane = planes
        .par_iter()
        .map(|plane| -> Result<BTreeSet<ShapeClass>> {
            let mut found = BTreeSet::new();
            let ze = zeta_eta(plane, &suitable_rs(plane)?)?;
            let d = plane.d().to_u64().expect("bounded by side_bound");
            for (k_index, pairs) in omegas.iter().enumerate() {
                let k = k_index as u64 + 1;
                if (d * k) * (d * k) > max_sq {
                    break;
                }
                let k_int = Int::from(k);
                for pair in pairs {
                    let apex = fourth_vertices(&ze, pair.m(), pair.n(), &k_int)?;
                    for tetra in apex.tetrahedra()? {
                        let cube = complete_to_cube(&tetra)?;
                        let classes = match kind {
                            SolidKind::Tetrahedron => vec![ShapeClass::from_vertices(kind, tetra.vertices())],
                            _ => classes_from_cube(kind, &cube),
                        };
                        found.extend(classes.into_iter().filter(|c| c.fits(n)));
                    }
                }
            }
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(per_plane.into_iter().flatten().collect())
}
