//! Exact rational orthogonal 3×3 matrices, graded by tier (the least common
//! denominator of the entries).
//!
//! Tier 1 is the 48 signed permutation matrices. A tier-`N` matrix is `A / N`
//! with `A` integral and `AᵀA = N²I`; its image of the diagonal `(1, 1, 1)`
//! is `(a, b, c) / N` with `a² + b² + c² = 3N²`, which ties the tiers back to
//! the triangle-plane normals.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diophantine::{triples_with_d, TripleSolution, MAX_TRIPLE_BOUND};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::solids::Cube;
use crate::vector::{signed_permutations, IntVector3};

pub type Rational = BigRational;

/// Tier of a rational orthogonal matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tier(pub Int);

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Row-major 3×3 matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix3 {
    entries: [[Rational; 3]; 3],
}

impl RationalMatrix3 {
    /// Any rational matrix; orthogonality is not enforced here.
    pub fn from_rows(entries: [[Rational; 3]; 3]) -> Self {
        Self { entries }
    }

    /// `rows / den`, required to be orthogonal.
    pub fn orthogonal_from_integers(rows: [[i64; 3]; 3], den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let m = Self::from_rows(rows.map(|r| r.map(|x| Rational::new(BigInt::from(x), BigInt::from(den)))));
        if !m.is_orthogonal() {
            return Err(Error::InvalidArgument("matrix is not orthogonal".into()));
        }
        Ok(m)
    }

    /// Orthogonal matrix with the given integer columns divided by `den`.
    pub fn from_columns(columns: &[IntVector3; 3], den: &Int) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let entry = |row: usize, col: usize| Rational::new(columns[col].components()[row].clone(), den.clone());
        let m = Self::from_rows(std::array::from_fn(|r| std::array::from_fn(|c| entry(r, c))));
        if !m.is_orthogonal() {
            return Err(Error::InvalidArgument("columns do not form an orthogonal frame".into()));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self::from_rows(std::array::from_fn(|r| {
            std::array::from_fn(|c| if r == c { Rational::one() } else { Rational::zero() })
        }))
    }

    pub fn entries(&self) -> &[[Rational; 3]; 3] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row][col]
    }

    pub fn transpose(&self) -> Self {
        Self::from_rows(std::array::from_fn(|r| std::array::from_fn(|c| self.entries[c][r].clone())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_rows(std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                (0..3).fold(Rational::zero(), |acc, k| acc + &self.entries[r][k] * &other.entries[k][c])
            })
        }))
    }

    pub fn determinant(&self) -> Rational {
        let m = &self.entries;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// `MᵀM = I`, exactly.
    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self) == Self::identity()
    }

    /// Flips the sign of the last column when the determinant is −1.
    pub fn to_rotation(&self) -> Self {
        if self.determinant().is_negative() {
            let mut out = self.clone();
            for row in out.entries.iter_mut() {
                row[2] = -row[2].clone();
            }
            out
        } else {
            self.clone()
        }
    }

    /// Integer matrix `tier · M`.
    pub fn scaled_integers(&self) -> [[Int; 3]; 3] {
        let t = tier_of(self).0;
        std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let e = &self.entries[r][c];
                e.numer() * (&t / e.denom())
            })
        })
    }
}

impl fmt::Display for RationalMatrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// Columns are the cube's canonical edge vectors divided by its side.
pub fn matrix_from_cube(c: &Cube) -> Result<RationalMatrix3> {
    let [u, v, w] = c.edges();
    matrix_from_frame(&[u, v, w], c.side())
}

fn matrix_from_frame(edges: &[IntVector3; 3], side: &Int) -> Result<RationalMatrix3> {
    if side.is_zero() {
        return Err(Error::InvalidArgument("degenerate cube".into()));
    }
    RationalMatrix3::from_columns(edges, side)
}

/// Matrices from every (vertex, ordered edge triple) frame of the cube.
pub fn matrices_of_cube(c: &Cube) -> Result<Vec<RationalMatrix3>> {
    c.frames()
        .iter()
        .map(|(_, edges)| matrix_from_frame(edges, c.side()))
        .collect()
}

/// Least common multiple of the reduced entry denominators.
pub fn tier_of(m: &RationalMatrix3) -> Tier {
    Tier(
        m.entries
            .iter()
            .flatten()
            .fold(Int::one(), |acc, e| acc.lcm(e.denom())),
    )
}

/// Exact product `m1 · m2`.
pub fn compose(m1: &RationalMatrix3, m2: &RationalMatrix3) -> RationalMatrix3 {
    m1.mul(m2)
}

/// Unordered triples `a ≤ b ≤ c` of positive odd integers with
/// `a² + b² + c² = 3N²` and `gcd(a, b, c) = 1`.
pub fn tier_representations(tier: u64) -> Result<Vec<[Int; 3]>> {
    if !(1..=MAX_TRIPLE_BOUND).contains(&tier) {
        return Err(Error::InvalidArgument(format!("tier must be in 1..={MAX_TRIPLE_BOUND}, got {tier}")));
    }
    if tier.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    Ok(triples_with_d(tier)
        .into_iter()
        .map(|t: TripleSolution| [t.a().clone(), t.b().clone(), t.c().clone()])
        .collect())
}

fn vectors_of_norm(n: i64) -> Vec<[i64; 3]> {
    let target = n * n;
    let mut out = Vec::new();
    for x in -n..=n {
        for y in -n..=n {
            let rest = target - x * x - y * y;
            if rest < 0 {
                continue;
            }
            let z = rest.sqrt();
            if z * z == rest {
                out.push([x, y, z]);
                if z != 0 {
                    out.push([x, y, -z]);
                }
            }
        }
    }
    out
}

type IntMatrix = [[i64; 3]; 3];

fn canonical_under_signed_permutations(a: &IntMatrix) -> IntMatrix {
    let perms: Vec<([usize; 3], [i8; 3])> = signed_permutations().collect();
    let apply_rows = |m: &IntMatrix, (p, s): &([usize; 3], [i8; 3])| -> IntMatrix {
        std::array::from_fn(|i| m[p[i]].map(|x| x * s[i] as i64))
    };
    let transpose = |m: &IntMatrix| -> IntMatrix { std::array::from_fn(|r| std::array::from_fn(|c| m[c][r])) };
    let mut best: Option<IntMatrix> = None;
    for left in &perms {
        let la = transpose(&apply_rows(a, left));
        for right in &perms {
            let candidate = transpose(&apply_rows(&la, right));
            if best.is_none_or(|b| candidate < b) {
                best = Some(candidate);
            }
        }
    }
    best.expect("non-empty group")
}

/// All tier-`N` orthogonal matrices, grouped into classes under left and
/// right multiplication by signed permutation matrices. Returns one
/// canonical integer matrix `N·M` per class, sorted, and the total number of
/// tier-`N` matrices.
pub fn tier_classes(tier: u32) -> Result<(Vec<IntMatrix>, usize)> {
    if tier < 1 {
        return Err(Error::InvalidArgument("tier must be at least 1".into()));
    }
    let n = tier as i64;
    let vecs = vectors_of_norm(n);
    let dot = |u: &[i64; 3], v: &[i64; 3]| u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    let mut matrices = BTreeSet::new();
    for u in &vecs {
        for v in vecs.iter().filter(|v| dot(u, v) == 0) {
            let cross = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
            if cross.iter().any(|x| x % n != 0) {
                continue;
            }
            let w = cross.map(|x| x / n);
            for w in [w, w.map(|x| -x)] {
                let a: IntMatrix = std::array::from_fn(|r| [u[r], v[r], w[r]]);
                let g = a.iter().flatten().fold(0i64, |g, x| g.gcd(x));
                // Tier is N exactly when the entries share no factor with N.
                if g.gcd(&n) == 1 {
                    matrices.insert(a);
                }
            }
        }
    }
    let total = matrices.len();
    let classes: BTreeSet<IntMatrix> = matrices.iter().map(canonical_under_signed_permutations).collect();
    Ok((classes.into_iter().collect(), total))
}
