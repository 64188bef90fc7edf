//! Solvers for `a² + b² + c² = 3d²`, the Eisenstein norm equation
//! `m² − mn + n² = k²`, and the auxiliary representation `2q = s² + 3r²`.
//!
//! Enumeration bounds are machine integers; every value handed back is an
//! exact [`Int`]. Inner loops run in `i128` where the search bound proves the
//! intermediate squares cannot overflow.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::int::{exact_sqrt, gcd3, is_odd, Int};
use crate::lattice_triangles::zeta_eta;
use crate::vector::{signed_permutations, IntVector3};

/// Largest `d_max` (or tier) accepted by the brute-force triple enumeration.
/// Keeps `3 d²` comfortably inside `i128`.
pub const MAX_TRIPLE_BOUND: u64 = 1 << 40;

/// Largest `k` accepted by [`omega`].
pub const MAX_OMEGA_K: u64 = 1 << 40;

/// A primitive solution of `a² + b² + c² = 3d²` with `d > 0`.
///
/// The normal `(a, b, c)` of an equilateral-triangle plane. All four
/// components are odd and `gcd(a, b, c) = 1`. Signs and order of `(a, b, c)`
/// are free; [`TripleSolution::canonical`] picks the class representative
/// `0 < a ≤ b ≤ c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleSolution {
    d: Int,
    a: Int,
    b: Int,
    c: Int,
}

impl TripleSolution {
    pub fn new(a: impl Into<Int>, b: impl Into<Int>, c: impl Into<Int>, d: impl Into<Int>) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if !d.is_positive() {
            return Err(Error::InvalidArgument(format!("d must be positive, got {d}")));
        }
        if &a * &a + &b * &b + &c * &c != Int::from(3) * &d * &d {
            return Err(Error::InvalidArgument(format!(
                "({a}, {b}, {c}, {d}) does not satisfy a^2 + b^2 + c^2 = 3d^2"
            )));
        }
        if !gcd3(&a, &b, &c).is_one() {
            return Err(Error::InvalidArgument(format!(
                "({a}, {b}, {c}, {d}) is not primitive"
            )));
        }
        // Primitivity already forces oddness (3d² ≡ 3 mod 8); kept explicit.
        if ![&a, &b, &c, &d].into_iter().all(is_odd) {
            return Err(Error::InvalidArgument(format!(
                "({a}, {b}, {c}, {d}) has an even component"
            )));
        }
        Ok(Self { d, a, b, c })
    }

    pub fn a(&self) -> &Int {
        &self.a
    }
    pub fn b(&self) -> &Int {
        &self.b
    }
    pub fn c(&self) -> &Int {
        &self.c
    }
    pub fn d(&self) -> &Int {
        &self.d
    }

    pub fn normal(&self) -> IntVector3 {
        IntVector3::new(self.a.clone(), self.b.clone(), self.c.clone())
    }

    /// `q = a² + b²`, the modulus of the `(r, s)` equation.
    pub fn q(&self) -> Int {
        &self.a * &self.a + &self.b * &self.b
    }

    /// Representative with `0 < a ≤ b ≤ c`.
    pub fn canonical(&self) -> Self {
        let mut abc = [self.a.abs(), self.b.abs(), self.c.abs()];
        abc.sort();
        let [a, b, c] = abc;
        Self { d: self.d.clone(), a, b, c }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Every distinct signed permutation of `(a, b, c)`; at most 48.
    pub fn expand(&self) -> Vec<TripleSolution> {
        let normal = self.normal();
        signed_permutations()
            .map(|(p, s)| normal.signed_permutation(p, s))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .map(|v| Self {
                d: self.d.clone(),
                a: v.x,
                b: v.y,
                c: v.z,
            })
            .collect()
    }
}

impl fmt::Display for TripleSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// A pair `(m, n)` certified to satisfy `m² − mn + n² = k²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinPair {
    m: Int,
    n: Int,
    k: Int,
}

impl EisensteinPair {
    pub fn new(m: impl Into<Int>, n: impl Into<Int>, k: impl Into<Int>) -> Result<Self> {
        let (m, n, k) = (m.into(), n.into(), k.into());
        if k.is_negative() {
            return Err(Error::InvalidArgument(format!("k must be nonnegative, got {k}")));
        }
        let norm = eisenstein_norm(&m, &n);
        if norm != &k * &k {
            return Err(Error::NotInOmega {
                m: m.to_string(),
                n: n.to_string(),
                k: k.to_string(),
                norm: norm.to_string(),
            });
        }
        Ok(Self { m, n, k })
    }

    pub fn m(&self) -> &Int {
        &self.m
    }
    pub fn n(&self) -> &Int {
        &self.n
    }
    pub fn k(&self) -> &Int {
        &self.k
    }
}

/// `m² − mn + n²`.
pub fn eisenstein_norm(m: &Int, n: &Int) -> Int {
    m * m - m * n + n * n
}

/// A solution of `s² + 3r² = 2q` with `r ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RSPair {
    pub r: Int,
    pub s: Int,
    pub q: Int,
}

impl RSPair {
    pub fn new(r: impl Into<Int>, s: impl Into<Int>, q: impl Into<Int>) -> Result<Self> {
        let (r, s, q) = (r.into(), s.into(), q.into());
        if r.is_negative() {
            return Err(Error::InvalidArgument(format!("r must be nonnegative, got {r}")));
        }
        if &s * &s + Int::from(3) * &r * &r != Int::from(2) * &q {
            return Err(Error::InvalidArgument(format!(
                "s^2 + 3r^2 = {} but 2q = {}",
                &s * &s + Int::from(3) * &r * &r,
                Int::from(2) * &q
            )));
        }
        Ok(Self { r, s, q })
    }
}

fn triple_bound_check(d_max: u64) -> Result<()> {
    if d_max < 1 {
        return Err(Error::InvalidArgument("d_max must be at least 1".into()));
    }
    if d_max > MAX_TRIPLE_BOUND {
        return Err(Error::InvalidArgument(format!(
            "d_max = {d_max} exceeds the enumeration limit {MAX_TRIPLE_BOUND}"
        )));
    }
    Ok(())
}

fn isqrt_exact_i128(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let r = v.sqrt();
    (r * r == v).then_some(r)
}

/// Canonical primitive triples with exactly the given `d`, ordered by `(a, b, c)`.
pub(crate) fn triples_with_d(d: u64) -> Vec<TripleSolution> {
    let d = d as i128;
    let target = 3 * d * d;
    let mut out = Vec::new();
    let mut a: i128 = 1;
    while 3 * a * a <= target {
        let mut b = a;
        while a * a + 2 * b * b <= target {
            if let Some(c) = isqrt_exact_i128(target - a * a - b * b) {
                if c >= b && a.gcd(&b).gcd(&c) == 1 {
                    out.push(TripleSolution {
                        d: Int::from(d),
                        a: Int::from(a),
                        b: Int::from(b),
                        c: Int::from(c),
                    });
                }
            }
            b += 2;
        }
        a += 2;
    }
    out
}

/// All canonical primitive solutions of `a² + b² + c² = 3d²` with
/// `d ≤ d_max`, sorted by `(d, a, b, c)`.
pub fn enumerate_triples(d_max: u64) -> Result<Vec<TripleSolution>> {
    triple_bound_check(d_max)?;
    // d is necessarily odd for a primitive solution.
    Ok((1..=d_max).step_by(2).flat_map(triples_with_d).collect())
}

/// Every integer pair with `m² − mn + n² = k²`, sorted by `(m, n)`.
///
/// Solving the norm form for `n` gives `n = (m ± √(4k² − 3m²)) / 2`, so the
/// scan over `m` is linear; `|m| ≤ 2k` bounds it.
pub fn omega(k: &Int) -> Result<Vec<EisensteinPair>> {
    if *k < Int::one() {
        return Err(Error::InvalidArgument(format!("k must be at least 1, got {k}")));
    }
    let kk = k
        .to_u64()
        .filter(|&v| v <= MAX_OMEGA_K)
        .ok_or_else(|| Error::InvalidArgument(format!("k = {k} exceeds the enumeration limit {MAX_OMEGA_K}")))?
        as i128;
    let mut out = BTreeSet::new();
    for m in -2 * kk..=2 * kk {
        let Some(root) = isqrt_exact_i128(4 * kk * kk - 3 * m * m) else {
            continue;
        };
        for num in [m + root, m - root] {
            if num % 2 == 0 {
                out.insert((m, num / 2));
            }
        }
    }
    Ok(out
        .into_iter()
        .map(|(m, n)| EisensteinPair {
            m: Int::from(m),
            n: Int::from(n),
            k: k.clone(),
        })
        .collect())
}

/// All `(r, s)` with `r ≥ 0` and `s² + 3r² = 2q`, ascending by `(r, s)`.
pub fn solve_rs(q: &Int) -> Result<Vec<RSPair>> {
    if *q < Int::one() {
        return Err(Error::InvalidArgument(format!("q must be at least 1, got {q}")));
    }
    let two_q = Int::from(2) * q;
    let r_max = (&two_q / Int::from(3)).sqrt();
    let mut out = Vec::new();
    let mut r = Int::zero();
    while r <= r_max {
        if let Some(s) = exact_sqrt(&(&two_q - Int::from(3) * &r * &r)) {
            if !s.is_zero() {
                out.push(RSPair { r: r.clone(), s: -&s, q: q.clone() });
            }
            out.push(RSPair { r: r.clone(), s, q: q.clone() });
        }
        r += 1;
    }
    Ok(out)
}

/// The first `(r, s)` that makes every generator coordinate integral.
///
/// Candidates are tried by increasing `r`, positive `s` before negative.
pub fn suitable_rs(t: &TripleSolution) -> Result<RSPair> {
    let candidates = solve_rs(&t.q())?;
    let mut ordered: Vec<&RSPair> = candidates.iter().collect();
    ordered.sort_by(|x, y| x.r.cmp(&y.r).then_with(|| y.s.cmp(&x.s)));
    ordered
        .into_iter()
        .find(|rs| zeta_eta(t, rs).is_ok())
        .cloned()
        .ok_or_else(|| {
            Error::InvariantViolation(format!(
                "no (r, s) with s^2 + 3r^2 = 2q makes the generators of {t} integral"
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_omega(k: i64) -> Vec<(i64, i64)> {
        let mut v = Vec::new();
        for m in -2 * k..=2 * k {
            for n in -2 * k..=2 * k {
                if m * m - m * n + n * n == k * k {
                    v.push((m, n));
                }
            }
        }
        v
    }

    fn pairs(k: i64) -> Vec<(i64, i64)> {
        omega(&Int::from(k))
            .unwrap()
            .iter()
            .map(|p| (p.m.to_i64().unwrap(), p.n.to_i64().unwrap()))
            .collect()
    }

    fn triple(a: i64, b: i64, c: i64, d: i64) -> TripleSolution {
        TripleSolution::new(a, b, c, d).unwrap()
    }

    #[test]
    fn triples_small() {
        assert_eq!(enumerate_triples(1).unwrap(), vec![triple(1, 1, 1, 1)]);
        let five = enumerate_triples(5).unwrap();
        assert!(five.contains(&triple(1, 5, 7, 5)));
        let nine = enumerate_triples(9).unwrap();
        assert!(nine.contains(&triple(5, 7, 13, 9)));
        assert!(nine.contains(&triple(1, 11, 11, 9)));
    }

    #[test]
    fn triples_reject_zero_bound() {
        assert!(matches!(enumerate_triples(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn triple_validation() {
        assert!(TripleSolution::new(1, 1, 1, -1).is_err());
        assert!(TripleSolution::new(3, 3, 15, 9).is_err(), "not primitive");
        assert!(TripleSolution::new(1, 1, 2, 1).is_err());
        let t = triple(-7, 5, -1, 5);
        assert_eq!(t.canonical(), triple(1, 5, 7, 5));
        assert!(!t.is_canonical());
    }

    #[test]
    fn expansion_counts() {
        assert_eq!(triple(1, 1, 1, 1).expand().len(), 8);
        assert_eq!(triple(1, 11, 11, 9).expand().len(), 24);
        assert_eq!(triple(5, 7, 13, 9).expand().len(), 48);
    }

    #[test]
    fn omega_one() {
        assert_eq!(pairs(1), vec![(-1, -1), (-1, 0), (0, -1), (0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn omega_matches_brute_force() {
        for k in 1..=30 {
            let mut expected = brute_omega(k);
            expected.sort();
            assert_eq!(pairs(k), expected, "k = {k}");
        }
        assert!(pairs(7).contains(&(8, 3)));
    }

    #[test]
    fn omega_rejects_nonpositive() {
        assert!(omega(&Int::from(0)).is_err());
        assert!(omega(&Int::from(-3)).is_err());
    }

    #[test]
    fn eisenstein_pair_checks_norm() {
        assert!(EisensteinPair::new(8, 3, 7).is_ok());
        assert!(matches!(EisensteinPair::new(1, 0, 2), Err(Error::NotInOmega { .. })));
    }

    #[test]
    fn rs_solutions() {
        let rs = |q: i64| -> Vec<(i64, i64)> {
            solve_rs(&Int::from(q))
                .unwrap()
                .iter()
                .map(|p| (p.r.to_i64().unwrap(), p.s.to_i64().unwrap()))
                .collect()
        };
        assert!(rs(1).is_empty());
        assert_eq!(rs(2), vec![(0, -2), (0, 2), (1, -1), (1, 1)]);
        assert!(rs(26).contains(&(4, 2)));
        for q in 1..200i64 {
            for (r, s) in rs(q) {
                assert_eq!(s * s + 3 * r * r, 2 * q);
            }
        }
    }

    #[test]
    fn suitable_pair_for_unit_triple() {
        // (1, 1) is suitable, but (0, 2) precedes it in the documented order.
        let t = triple(1, 1, 1, 1);
        assert!(zeta_eta(&t, &RSPair::new(1, 1, 2).unwrap()).is_ok());
        let rs = suitable_rs(&t).unwrap();
        assert_eq!((rs.r, rs.s), (Int::from(0), Int::from(2)));
    }

    #[test]
    fn suitable_pair_exists_for_every_small_triple() {
        for t in enumerate_triples(25).unwrap() {
            for e in t.expand() {
                let rs = suitable_rs(&e).unwrap();
                assert_eq!(&rs.s * &rs.s + Int::from(3) * &rs.r * &rs.r, Int::from(2) * e.q());
            }
        }
        let rs = suitable_rs(&triple(1, 5, 7, 5)).unwrap();
        assert_eq!(rs.q, Int::from(26));
    }
}
