//! Exhaustive search for regular icosahedra with vertices in `{0, …, n}³`.
//!
//! Every icosahedron vertex is the apex of a pentagonal cap: five
//! neighbours at the edge distance, consecutive ones also at the edge
//! distance. The search enumerates such caps for every apex and every edge
//! length class present in the grid, and completes each cap by locating the
//! lower ring and the antipode, then checks the twelve points exactly.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;

use super::check_grid;

type Point = [i64; 3];

fn dist_sq(p: &Point, q: &Point) -> i64 {
    (0..3).map(|i| (p[i] - q[i]) * (p[i] - q[i])).sum()
}

/// Outcome of a grid search.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IcosahedronSearch {
    pub n: u32,
    /// Edge-length classes examined (distinct squared distances from an apex).
    pub edge_classes: u64,
    /// Pentagonal caps found (apex plus five-cycle of neighbours).
    pub caps: u64,
    /// Distinct 12-point icosahedra found.
    pub icosahedra: u64,
}

fn five_cycles(nbrs: &[Point], edge: i64) -> Vec<[Point; 5]> {
    let adj = |a: &Point, b: &Point| dist_sq(a, b) == edge;
    let mut out = Vec::new();
    // Anchor each cycle at its smallest member to avoid rotations.
    for (i, a) in nbrs.iter().enumerate() {
        let later = &nbrs[i + 1..];
        for b in later.iter().filter(|b| adj(a, b)) {
            for c in later.iter().filter(|c| *c != b && adj(b, c) && !adj(a, c)) {
                for d in later.iter().filter(|d| *d != b && *d != c && adj(c, d) && !adj(a, d) && !adj(b, d)) {
                    for e in later
                        .iter()
                        .filter(|e| ![b, c, d].contains(e) && adj(d, e) && adj(e, a) && !adj(b, e) && !adj(c, e))
                    {
                        out.push([*a, *b, *c, *d, *e]);
                    }
                }
            }
        }
    }
    out
}

/// Every way of picking one point from each slot.
fn choices(slots: &[Vec<Point>]) -> Vec<Vec<Point>> {
    let mut out = vec![Vec::with_capacity(slots.len())];
    for slot in slots {
        out = out
            .iter()
            .flat_map(|prefix| {
                slot.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(*p);
                    next
                })
            })
            .collect();
    }
    out
}

fn is_icosahedron(points: &BTreeSet<Point>, edge: i64) -> bool {
    points.len() == 12
        && points
            .iter()
            .all(|p| points.iter().filter(|q| dist_sq(p, q) == edge).count() == 5)
        && points
            .iter()
            .map(|p| points.iter().filter(|q| dist_sq(p, q) == edge).count())
            .sum::<usize>()
            == 60
}

/// Runs the search on `{0, …, n}³`.
pub fn count_icosahedra(n: u32) -> Result<IcosahedronSearch> {
    check_grid(n)?;
    let side = n as i64;
    let mut grid = Vec::new();
    for x in 0..=side {
        for y in 0..=side {
            for z in 0..=side {
                grid.push([x, y, z]);
            }
        }
    }
    let mut report = IcosahedronSearch {
        n,
        ..Default::default()
    };
    let mut found = BTreeSet::new();
    for apex in &grid {
        let mut by_dist: BTreeMap<i64, Vec<Point>> = BTreeMap::new();
        for p in grid.iter().filter(|p| *p != apex) {
            by_dist.entry(dist_sq(apex, p)).or_default().push(*p);
        }
        for (&edge, nbrs) in &by_dist {
            report.edge_classes += 1;
            if nbrs.len() < 5 {
                continue;
            }
            for cap in five_cycles(nbrs, edge) {
                report.caps += 1;
                // Lower ring: each vertex adjacent to two consecutive cap vertices, not the apex.
                let mut ring = Vec::new();
                for i in 0..5 {
                    let (a, b) = (cap[i], cap[(i + 1) % 5]);
                    let candidates: Vec<Point> = grid
                        .iter()
                        .filter(|p| *p != apex && dist_sq(p, &a) == edge && dist_sq(p, &b) == edge)
                        .copied()
                        .collect();
                    ring.push(candidates);
                }
                for combo in choices(&ring) {
                    for bottom in grid.iter().filter(|p| combo.iter().all(|q| dist_sq(p, q) == edge)) {
                        let set: BTreeSet<Point> = std::iter::once(*apex)
                            .chain(cap)
                            .chain(combo.iter().copied())
                            .chain(std::iter::once(*bottom))
                            .collect();
                        if is_icosahedron(&set, edge) {
                            found.insert(set.into_iter().collect::<Vec<_>>());
                        }
                    }
                }
            }
        }
    }
    report.icosahedra = found.len() as u64;
    Ok(report)
}
