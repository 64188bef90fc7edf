//! Exhaustive grid search, kept independent of every constructive path:
//! plain `i64` points, its own distance arithmetic, no lattice theory.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::solids::SolidKind;

use super::check_grid;

/// Environment variable that raises every oracle cap to the given value.
pub const ORACLE_CAP_ENV: &str = "LATTICE_SOLIDS_UNSAFE_ORACLE_CAP";

/// Largest grid size the oracle will scan, per solid kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    pub tetrahedron: u32,
    pub cube: u32,
    pub octahedron: u32,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            tetrahedron: 3,
            cube: 4,
            octahedron: 4,
        }
    }
}

impl OracleCaps {
    pub fn uniform(cap: u32) -> Self {
        Self {
            tetrahedron: cap,
            cube: cap,
            octahedron: cap,
        }
    }

    /// Defaults, or a uniform cap taken from [`ORACLE_CAP_ENV`] when it is set
    /// to an integer.
    pub fn from_env() -> Self {
        std::env::var(ORACLE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Self::uniform)
            .unwrap_or_default()
    }

    pub fn cap(&self, kind: SolidKind) -> u32 {
        match kind {
            SolidKind::Tetrahedron => self.tetrahedron,
            SolidKind::Cube => self.cube,
            SolidKind::Octahedron => self.octahedron,
        }
    }
}

type Point = [i64; 3];

fn dist_sq(p: &Point, q: &Point) -> i64 {
    (0..3).map(|i| (p[i] - q[i]) * (p[i] - q[i])).sum()
}

fn dot(p: &Point, q: &Point) -> i64 {
    (0..3).map(|i| p[i] * q[i]).sum()
}

fn sub(p: &Point, q: &Point) -> Point {
    [p[0] - q[0], p[1] - q[1], p[2] - q[2]]
}

/// Expected squared-distance multiset as `(multiple of the edge², count)`.
fn profile(kind: SolidKind) -> &'static [(i64, usize)] {
    match kind {
        SolidKind::Tetrahedron => &[(1, 6)],
        SolidKind::Cube => &[(1, 12), (2, 12), (3, 4)],
        SolidKind::Octahedron => &[(1, 12), (2, 3)],
    }
}

struct Search<'a> {
    points: &'a [Point],
    kind: SolidKind,
    size: usize,
    edge: i64,
    chosen: Vec<usize>,
    tally: BTreeMap<i64, usize>,
    found: u64,
}

impl Search<'_> {
    fn limit(&self, d: i64) -> Option<usize> {
        if d % self.edge != 0 {
            return None;
        }
        profile(self.kind)
            .iter()
            .find(|(f, _)| *f * self.edge == d)
            .map(|(_, c)| *c)
    }

    fn extend(&mut self, from: usize) {
        if self.chosen.len() == self.size {
            if self.accept() {
                self.found += 1;
            }
            return;
        }
        for idx in from..self.points.len() {
            let p = self.points[idx];
            let dists: Vec<i64> = self.chosen.iter().map(|&j| dist_sq(&p, &self.points[j])).collect();
            let mut ok = true;
            let mut counted = 0;
            for &d in &dists {
                let Some(max) = self.limit(d) else {
                    ok = false;
                    break;
                };
                let entry = self.tally.entry(d).or_insert(0);
                *entry += 1;
                counted += 1;
                if *entry > max {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.chosen.push(idx);
                self.extend(idx + 1);
                self.chosen.pop();
            }
            for d in &dists[..counted] {
                *self.tally.get_mut(d).expect("counted above") -= 1;
            }
        }
    }

    fn accept(&self) -> bool {
        let complete = profile(self.kind)
            .iter()
            .all(|(f, c)| self.tally.get(&(f * self.edge)).copied().unwrap_or(0) == *c);
        if !complete {
            return false;
        }
        match self.kind {
            SolidKind::Cube => self.cube_structure(),
            _ => true,
        }
    }

    /// Every vertex has three orthogonal edges.
    fn cube_structure(&self) -> bool {
        let pts: Vec<Point> = self.chosen.iter().map(|&i| self.points[i]).collect();
        pts.iter().all(|p| {
            let edges: Vec<Point> = pts
                .iter()
                .filter(|q| dist_sq(p, q) == self.edge)
                .map(|q| sub(q, p))
                .collect();
            edges.len() == 3 && dot(&edges[0], &edges[1]) == 0 && dot(&edges[0], &edges[2]) == 0 && dot(&edges[1], &edges[2]) == 0
        })
    }
}

/// Exhaustive count with the default caps.
pub fn oracle_count(kind: SolidKind, n: u32) -> Result<u64> {
    oracle_count_with_caps(kind, n, OracleCaps::default())
}

/// Counts vertex sets of `{0, …, n}³` forming the solid, by backtracking over
/// index-increasing subsets with exact squared-distance bookkeeping.
pub fn oracle_count_with_caps(kind: SolidKind, n: u32, caps: OracleCaps) -> Result<u64> {
    check_grid(n)?;
    let cap = caps.cap(kind);
    if n > cap {
        return Err(Error::OracleCapExceeded { kind, n, cap });
    }
    let side = n as i64;
    let mut points = Vec::new();
    for x in 0..=side {
        for y in 0..=side {
            for z in 0..=side {
                points.push([x, y, z]);
            }
        }
    }
    let size = kind.vertex_count();
    let mut total = 0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let first = dist_sq(&points[i], &points[j]);
            for &(factor, _) in profile(kind) {
                if first % factor != 0 {
                    continue;
                }
                let mut search = Search {
                    points: &points,
                    kind,
                    size,
                    edge: first / factor,
                    chosen: vec![i, j],
                    tally: BTreeMap::from([(first, 1)]),
                    found: 0,
                };
                search.extend(j + 1);
                total += search.found;
            }
        }
    }
    Ok(total)
}
