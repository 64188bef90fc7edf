use std::collections::BTreeSet;

use crate::error::Result;
use crate::int::Int;
use crate::solids::{Cube, SolidKind};
use crate::vector::IntVector3;

use super::{check_grid, classes_from_cube, ShapeClass};

fn vectors_of_norm(s: i64) -> Vec<IntVector3> {
    let target = s * s;
    let mut out = Vec::new();
    for x in -s..=s {
        for y in -s..=s {
            let rest = target - x * x - y * y;
            if rest < 0 {
                continue;
            }
            let z = (rest as f64).sqrt().round() as i64;
            if z * z == rest {
                out.push(IntVector3::new(x, y, z));
                if z != 0 {
                    out.push(IntVector3::new(x, y, -z));
                }
            }
        }
    }
    out
}

/// Shape classes from integer orthogonal frames `u, v, w = u × v / s`.
///
/// Every integer cube has integer side `s`, and every class fitting in the
/// grid has `s ≤ n` (a cube or inscribed tetrahedron is at least `s` wide in
/// every axis direction; an octahedron built on side `s` at least `2s/√3`).
pub fn enumerate_frame_shapes(kind: SolidKind, n: u32) -> Result<Vec<ShapeClass>> {
    check_grid(n)?;
    let mut found = BTreeSet::new();
    let origin = IntVector3::zero();
    for s in 1..=n as i64 {
        let side = Int::from(s);
        let vecs = vectors_of_norm(s);
        for u in &vecs {
            for v in &vecs {
                if u.dot(v) != Int::from(0) {
                    continue;
                }
                let Some(w) = u.cross(v).div_exact(&side) else {
                    continue;
                };
                let cube = Cube::from_frame(&origin, u, v, &w)?;
                found.extend(classes_from_cube(kind, &cube).into_iter().filter(|c| c.fits(n)));
            }
        }
    }
    Ok(found.into_iter().collect())
}
