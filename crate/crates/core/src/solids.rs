//! Regular tetrahedra, cubes and octahedra with integer vertices.
//!
//! A tetrahedron is grown from an origin-anchored lattice triangle by adding
//! the apex `R` above or below its centroid. Completing a tetrahedron to its
//! circumscribed cube never leaves `Z³`, and the octahedra are exactly the
//! face-centre duals of doubled cubes.
//!
//! No icosahedron has integer vertices: two adjacent faces would have
//! integer normals `(a, b, c)`, `(a', b', c')` whose angle cosine
//! `(aa' + bb' + cc') / 3dd'` is rational, while the icosahedral dihedral
//! cosine is `−√5/3`. A dodecahedron in `Z³` would yield an icosahedron in
//! `Z³` (dual, translated, scaled by five), so the same check rules it out;
//! see [`icosahedron_obstruction`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::diophantine::{eisenstein_norm, TripleSolution};
use crate::error::{Error, Result};
use crate::int::{exact_sqrt, Int};
use crate::lattice_triangles::{triangle, ZetaEta};
use crate::vector::IntVector3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolidKind {
    Tetrahedron,
    Cube,
    Octahedron,
}

impl SolidKind {
    pub const ALL: [SolidKind; 3] = [SolidKind::Tetrahedron, SolidKind::Cube, SolidKind::Octahedron];

    pub fn vertex_count(self) -> usize {
        match self {
            SolidKind::Tetrahedron => 4,
            SolidKind::Cube => 8,
            SolidKind::Octahedron => 6,
        }
    }

    /// Short name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            SolidKind::Tetrahedron => "tetra",
            SolidKind::Cube => "cube",
            SolidKind::Octahedron => "octa",
        }
    }
}

impl fmt::Display for SolidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolidKind::Tetrahedron => "tetrahedron",
            SolidKind::Cube => "cube",
            SolidKind::Octahedron => "octahedron",
        })
    }
}

impl FromStr for SolidKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tetra" | "tetrahedron" => Ok(SolidKind::Tetrahedron),
            "cube" => Ok(SolidKind::Cube),
            "octa" | "octahedron" => Ok(SolidKind::Octahedron),
            other => Err(Error::InvalidArgument(format!("unknown solid kind `{other}`"))),
        }
    }
}

/// Raw vertex lists, not yet checked for regularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solid {
    Triangle([IntVector3; 3]),
    Tetrahedron([IntVector3; 4]),
    Cube([IntVector3; 8]),
    Octahedron([IntVector3; 6]),
}

impl Solid {
    pub fn vertices(&self) -> &[IntVector3] {
        match self {
            Solid::Triangle(v) => v,
            Solid::Tetrahedron(v) => v,
            Solid::Cube(v) => v,
            Solid::Octahedron(v) => v,
        }
    }
}

/// Squared distances over all unordered vertex pairs, with multiplicities.
fn distance_multiset(points: &[IntVector3]) -> BTreeMap<Int, usize> {
    let mut out = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            *out.entry(p.dist_sq(q)).or_insert(0) += 1;
        }
    }
    out
}

fn multiset_is(points: &[IntVector3], expected: &[(usize, i64)]) -> bool {
    let found = distance_multiset(points);
    let Some((unit, _)) = found.iter().next() else {
        return false;
    };
    if unit.is_zero() || found.len() != expected.len() {
        return false;
    }
    expected
        .iter()
        .all(|(count, factor)| found.get(&(unit * Int::from(*factor))) == Some(count))
}

/// Exact regularity check by squared-distance multiset.
pub fn verify_regular(s: &Solid) -> bool {
    match s {
        Solid::Triangle(v) => multiset_is(v, &[(3, 1)]),
        Solid::Tetrahedron(v) => multiset_is(v, &[(6, 1)]),
        Solid::Cube(v) => multiset_is(v, &[(12, 1), (12, 2), (4, 3)]) && cube_frame(v).is_some(),
        Solid::Octahedron(v) => multiset_is(v, &[(12, 1), (3, 2)]),
    }
}

/// Base vertex (lexicographic minimum) and its three edge vectors in
/// descending lexicographic order, if the points form a cube.
fn cube_frame(points: &[IntVector3]) -> Option<(IntVector3, [IntVector3; 3])> {
    let base = points.iter().min()?.clone();
    let side_sq = points
        .iter()
        .filter(|p| **p != base)
        .map(|p| p.dist_sq(&base))
        .min()?;
    let mut edges: Vec<IntVector3> = points
        .iter()
        .filter(|p| p.dist_sq(&base) == side_sq)
        .map(|p| p - &base)
        .collect();
    if edges.len() != 3 {
        return None;
    }
    edges.sort_by(|a, b| b.cmp(a));
    let [u, v, w]: [IntVector3; 3] = edges.try_into().ok()?;
    if !(u.dot(&v).is_zero() && u.dot(&w).is_zero() && v.dot(&w).is_zero()) {
        return None;
    }
    let mut expected = frame_vertices(&base, &u, &v, &w).to_vec();
    let mut given = points.to_vec();
    expected.sort();
    given.sort();
    (expected == given).then_some((base, [u, v, w]))
}

fn frame_vertices(b: &IntVector3, u: &IntVector3, v: &IntVector3, w: &IntVector3) -> [IntVector3; 8] {
    [
        b.clone(),
        b + u,
        b + v,
        b + w,
        b + u + v,
        b + u + w,
        b + v + w,
        b + u + v + w,
    ]
}

/// A regular tetrahedron in `Z³`; side² is `2λ²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tetrahedron {
    vertices: [IntVector3; 4],
    side_sq: Int,
}

impl Tetrahedron {
    pub fn new(vertices: [IntVector3; 4]) -> Result<Self> {
        if !verify_regular(&Solid::Tetrahedron(vertices.clone())) {
            return Err(Error::NotRegular("tetrahedron".into()));
        }
        let side_sq = vertices[0].dist_sq(&vertices[1]);
        let lambda_sq = num_integer::Integer::div_rem(&side_sq, &Int::from(2));
        if !lambda_sq.1.is_zero() || exact_sqrt(&lambda_sq.0).is_none() {
            return Err(Error::InvariantViolation(format!(
                "regular tetrahedron with side^2 = {side_sq}, which is not 2 * square"
            )));
        }
        Ok(Self { vertices, side_sq })
    }

    pub fn vertices(&self) -> &[IntVector3; 4] {
        &self.vertices
    }

    pub fn side_sq(&self) -> &Int {
        &self.side_sq
    }

    /// `λ` with side length `λ√2`.
    pub fn lambda(&self) -> Int {
        exact_sqrt(&(&self.side_sq / Int::from(2))).expect("validated at construction")
    }
}

/// Which signs of the `±2k(a, b, c)` apex offset give an integral apex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignChoice {
    pub plus_valid: bool,
    pub minus_valid: bool,
}

/// The integral apices completing the triangle `triangle(ze, m, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourthVertices {
    /// `+` candidate first when both are valid.
    pub candidates: Vec<IntVector3>,
    pub signs: SignChoice,
    pub p: IntVector3,
    pub q: IntVector3,
}

impl FourthVertices {
    pub fn tetrahedra(&self) -> Result<Vec<Tetrahedron>> {
        self.candidates
            .iter()
            .map(|r| Tetrahedron::new([IntVector3::zero(), self.p.clone(), self.q.clone(), r.clone()]))
            .collect()
    }
}

/// Numerators `3R ∓ 2k(a, b, c)`, i.e. three times the centroid of `O, P, Q`.
pub(crate) fn apex_numerator_base(ze: &ZetaEta, m: &Int, n: &Int) -> IntVector3 {
    let two_zeta_minus_eta = ze.zeta.scale(&Int::from(2)) - &ze.eta;
    let zeta_plus_eta = &ze.zeta + &ze.eta;
    two_zeta_minus_eta.scale(m) - zeta_plus_eta.scale(n)
}

/// Apex candidates `R = ((2ζ − η)m − (ζ + η)n ± 2k(a, b, c)) / 3`.
///
/// Both signs are integral when `3 | k`, exactly one otherwise.
pub fn fourth_vertices(ze: &ZetaEta, m: &Int, n: &Int, k: &Int) -> Result<FourthVertices> {
    if !k.is_positive() {
        return Err(Error::InvalidArgument(format!("k must be positive, got {k}")));
    }
    let norm = eisenstein_norm(m, n);
    if norm != k * k {
        return Err(Error::NotInOmega {
            m: m.to_string(),
            n: n.to_string(),
            k: k.to_string(),
            norm: norm.to_string(),
        });
    }
    let tri = triangle(ze, m, n)?;
    let base = apex_numerator_base(ze, m, n);
    let offset = ze.source.normal().scale(&(Int::from(2) * k));
    let three = Int::from(3);
    let plus = (&base + &offset).div_exact(&three);
    let minus = (&base - &offset).div_exact(&three);
    let signs = SignChoice {
        plus_valid: plus.is_some(),
        minus_valid: minus.is_some(),
    };
    let candidates: Vec<IntVector3> = plus.into_iter().chain(minus).collect();
    let both_expected = (k % &three).is_zero();
    let consistent = if both_expected {
        candidates.len() == 2
    } else {
        candidates.len() == 1
    };
    if !consistent {
        return Err(Error::InvariantViolation(format!(
            "apex sign rule broken for (m, n, k) = ({m}, {n}, {k}) over {}: {} integral candidates",
            ze.source,
            candidates.len()
        )));
    }
    for r in &candidates {
        if r.norm_sq() != tri.side_sq || r.dist_sq(&tri.p) != tri.side_sq || r.dist_sq(&tri.q) != tri.side_sq {
            return Err(Error::InvariantViolation(format!("apex {r} does not complete a regular tetrahedron")));
        }
    }
    Ok(FourthVertices {
        candidates,
        signs,
        p: tri.p,
        q: tri.q,
    })
}

/// A cube in `Z³`, vertices in canonical order: base (lexicographic
/// minimum), its three neighbours by descending edge vector, the three
/// face-diagonal vertices `b+u+v, b+u+w, b+v+w`, then `b+u+v+w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cube {
    vertices: [IntVector3; 8],
    side: Int,
}

impl Cube {
    /// Builds the cube from any listing of its eight vertices.
    pub fn new(points: [IntVector3; 8]) -> Result<Self> {
        if !multiset_is(&points, &[(12, 1), (12, 2), (4, 3)]) {
            return Err(Error::NotRegular("cube".into()));
        }
        let (base, [u, v, w]) = cube_frame(&points).ok_or_else(|| Error::NotRegular("cube".into()))?;
        Self::from_frame(&base, &u, &v, &w)
    }

    /// The cube `base + {0,1}u + {0,1}v + {0,1}w` for orthogonal edges of equal length.
    pub fn from_frame(base: &IntVector3, u: &IntVector3, v: &IntVector3, w: &IntVector3) -> Result<Self> {
        let side_sq = u.norm_sq();
        if side_sq.is_zero()
            || v.norm_sq() != side_sq
            || w.norm_sq() != side_sq
            || !u.dot(v).is_zero()
            || !u.dot(w).is_zero()
            || !v.dot(w).is_zero()
        {
            return Err(Error::NotRegular("cube".into()));
        }
        let side = exact_sqrt(&side_sq).ok_or_else(|| {
            Error::InvariantViolation(format!("integer cube with non-integral side^2 = {side_sq}"))
        })?;
        let all = frame_vertices(base, u, v, w);
        let new_base = all.iter().min().expect("eight vertices").clone();
        let mut edges: Vec<IntVector3> = all
            .iter()
            .filter(|p| p.dist_sq(&new_base) == side_sq)
            .map(|p| p - &new_base)
            .collect();
        edges.sort_by(|a, b| b.cmp(a));
        let [e1, e2, e3]: [IntVector3; 3] = edges
            .try_into()
            .map_err(|_| Error::InvariantViolation("cube base without three neighbours".into()))?;
        Ok(Self {
            vertices: [
                new_base.clone(),
                &new_base + &e1,
                &new_base + &e2,
                &new_base + &e3,
                &new_base + &e1 + &e2,
                &new_base + &e1 + &e3,
                &new_base + &e2 + &e3,
                &new_base + &e1 + &e2 + &e3,
            ],
            side,
        })
    }

    pub fn vertices(&self) -> &[IntVector3; 8] {
        &self.vertices
    }

    pub fn base(&self) -> &IntVector3 {
        &self.vertices[0]
    }

    pub fn side(&self) -> &Int {
        &self.side
    }

    /// Edge vectors at the base vertex, descending lexicographically. The
    /// axis-aligned cube yields `e_x, e_y, e_z`.
    pub fn edges(&self) -> [IntVector3; 3] {
        let b = self.base();
        [&self.vertices[1] - b, &self.vertices[2] - b, &self.vertices[3] - b]
    }

    /// All 48 (vertex, ordered outgoing edge triple) frames of the cube.
    pub fn frames(&self) -> Vec<(IntVector3, [IntVector3; 3])> {
        let side_sq = &self.side * &self.side;
        let mut out = Vec::with_capacity(48);
        for corner in &self.vertices {
            let edges: Vec<IntVector3> = self
                .vertices
                .iter()
                .filter(|p| p.dist_sq(corner) == side_sq)
                .map(|p| p - corner)
                .collect();
            for [i, j, k] in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                out.push((corner.clone(), [edges[i].clone(), edges[j].clone(), edges[k].clone()]));
            }
        }
        out
    }

    /// The two regular tetrahedra on alternating vertices.
    pub fn inscribed_tetrahedra(&self) -> [Tetrahedron; 2] {
        let v = &self.vertices;
        let even = [v[0].clone(), v[4].clone(), v[5].clone(), v[6].clone()];
        let odd = [v[1].clone(), v[2].clone(), v[3].clone(), v[7].clone()];
        [
            Tetrahedron::new(even).expect("alternate cube vertices form a regular tetrahedron"),
            Tetrahedron::new(odd).expect("alternate cube vertices form a regular tetrahedron"),
        ]
    }

    pub fn translate(&self, by: &IntVector3) -> Self {
        Self {
            vertices: self.vertices.clone().map(|p| p + by),
            side: self.side.clone(),
        }
    }

    pub fn scale(&self, factor: &Int) -> Result<Self> {
        let [u, v, w] = self.edges();
        Self::from_frame(&self.base().scale(factor), &u.scale(factor), &v.scale(factor), &w.scale(factor))
    }
}

/// The cube through the tetrahedron's four vertices, based at `vertices[0]`.
pub fn complete_to_cube(t: &Tetrahedron) -> Result<Cube> {
    let [v0, v1, v2, v3] = t.vertices();
    let (a, b, c) = (v1 - v0, v2 - v0, v3 - v0);
    let two = Int::from(2);
    let half = |x: IntVector3| {
        x.div_exact(&two).ok_or_else(|| {
            Error::InvariantViolation(format!("cube completion of {v0}, {v1}, {v2}, {v3} leaves Z^3"))
        })
    };
    let u = half(&a + &b - &c)?;
    let v = half(&a - &b + &c)?;
    let w = half(&b + &c - &a)?;
    let cube = Cube::from_frame(v0, &u, &v, &w)?;
    debug_assert!(t.vertices().iter().all(|p| cube.vertices().contains(p)));
    Ok(cube)
}

/// A regular octahedron in `Z³`; vertices sorted, centre integral.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Octahedron {
    vertices: [IntVector3; 6],
    center: IntVector3,
}

impl Octahedron {
    pub fn new(mut vertices: [IntVector3; 6]) -> Result<Self> {
        if !verify_regular(&Solid::Octahedron(vertices.clone())) {
            return Err(Error::NotRegular("octahedron".into()));
        }
        vertices.sort();
        let sum = vertices.iter().fold(IntVector3::zero(), |acc, p| acc + p);
        let center = sum.div_exact(&Int::from(6)).ok_or_else(|| {
            Error::InvariantViolation("regular integer octahedron with a non-integral centre".into())
        })?;
        Ok(Self { vertices, center })
    }

    pub fn vertices(&self) -> &[IntVector3; 6] {
        &self.vertices
    }

    pub fn center(&self) -> &IntVector3 {
        &self.center
    }

    /// Squared edge length.
    pub fn edge_sq(&self) -> Int {
        distance_multiset(&self.vertices).into_keys().next().expect("six vertices")
    }

    /// Three half-diagonals `e_i` with vertices `center ± e_i`.
    pub fn half_axes(&self) -> [IntVector3; 3] {
        let mut axes: Vec<IntVector3> = self
            .vertices
            .iter()
            .map(|p| p - &self.center)
            .filter(|e| *e > IntVector3::zero())
            .collect();
        axes.sort();
        axes.try_into().expect("three opposite vertex pairs")
    }
}

/// Face centres of the doubled cube `2c`.
pub fn cube_to_octahedron(c: &Cube) -> Octahedron {
    let [u, v, w] = c.edges();
    let center = c.base().scale(&Int::from(2)) + &u + &v + &w;
    let vertices = [
        &center + &u,
        &center - &u,
        &center + &v,
        &center - &v,
        &center + &w,
        &center - &w,
    ];
    Octahedron::new(vertices).expect("dual of a doubled integer cube is a regular octahedron")
}

/// The cube whose face centres are the octahedron's vertices. Inverts
/// [`cube_to_octahedron`] up to the factor 2 that one introduces.
pub fn octahedron_to_cube(o: &Octahedron) -> Result<Cube> {
    let [e1, e2, e3] = o.half_axes();
    let corner = o.center() - &e1 - &e2 - &e3;
    let two = Int::from(2);
    Cube::from_frame(&corner, &e1.scale(&two), &e2.scale(&two), &e3.scale(&two))
}

/// `true` iff the cube is not an integer translate of an integer cube
/// scaled by a factor greater than one.
pub fn is_irreducible(c: &Cube) -> bool {
    let b = c.base();
    c.vertices()
        .iter()
        .fold(Int::zero(), |g, p| num_integer::Integer::gcd(&g, &(p - b).content()))
        .is_one()
}

/// `true` iff the plane angle between the two triangle normals cannot be the
/// icosahedral dihedral angle, i.e. `(aa' + bb' + cc')² ≠ 5(dd')²`.
///
/// Since `√5` is irrational this is `true` for every input; `false` would
/// mean the arithmetic is broken.
pub fn icosahedron_obstruction(t1: &TripleSolution, t2: &TripleSolution) -> bool {
    let s = t1.normal().dot(&t2.normal());
    let dd = t1.d() * t2.d();
    &s * &s != Int::from(5) * &dd * &dd
}
