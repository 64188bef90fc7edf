//! Generators of the equilateral-triangle sub-lattice inside the plane
//! `ax + by + cz = 0`, and the origin-anchored triangles they span.

use num_traits::Zero;

use crate::diophantine::{eisenstein_norm, RSPair, TripleSolution};
use crate::error::{Error, Result};
use crate::int::{exact_div, Int};
use crate::vector::IntVector3;

/// The pair `ζ, η` spanning every triangle vertex of one plane lattice.
///
/// Gram matrix is always `[[2d², d²], [d², 2d²]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaEta {
    pub zeta: IntVector3,
    pub eta: IntVector3,
    pub source: TripleSolution,
    pub rs: RSPair,
}

/// Equilateral triangle `O, P, Q` with `O` at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeTriangle {
    pub p: IntVector3,
    pub q: IntVector3,
    pub side_sq: Int,
}

impl LatticeTriangle {
    pub fn vertices(&self) -> [IntVector3; 3] {
        [IntVector3::zero(), self.p.clone(), self.q.clone()]
    }
}

/// Builds `ζ, η` for the triple and `(r, s)`.
///
/// Fails with [`Error::UnsuitablePair`] when any of the six quotients is not
/// an integer, or when `(r, s)` does not solve `s² + 3r² = 2(a² + b²)`.
pub fn zeta_eta(t: &TripleSolution, rs: &RSPair) -> Result<ZetaEta> {
    let (a, b, c, d) = (t.a(), t.b(), t.c(), t.d());
    let (r, s) = (&rs.r, &rs.s);
    let q = t.q();
    let unsuitable = |reason: &str| Error::UnsuitablePair {
        r: r.to_string(),
        s: s.to_string(),
        reason: reason.to_string(),
    };
    if rs.q != q || s * s + Int::from(3) * r * r != Int::from(2) * &q {
        return Err(unsuitable("s^2 + 3r^2 != 2(a^2 + b^2)"));
    }
    let two_q = Int::from(2) * &q;
    let s_minus_3r = s - Int::from(3) * r;
    let r_plus_s = r + s;

    let div = |num: Int, den: &Int, which: &str| {
        exact_div(&num, den).ok_or_else(|| unsuitable(&format!("{which} is not an integer")))
    };
    let zeta = IntVector3 {
        x: div(-(r * a * c + d * b * s), &q, "zeta_1")?,
        y: div(d * a * s - b * c * r, &q, "zeta_2")?,
        z: r.clone(),
    };
    let eta = IntVector3 {
        x: div(-(d * b * &s_minus_3r + a * c * &r_plus_s), &two_q, "eta_1")?,
        y: div(d * a * &s_minus_3r - b * c * &r_plus_s, &two_q, "eta_2")?,
        z: div(r_plus_s.clone(), &Int::from(2), "eta_3")?,
    };

    let ze = ZetaEta {
        zeta,
        eta,
        source: t.clone(),
        rs: rs.clone(),
    };
    check_gram(&ze)?;
    Ok(ze)
}

fn check_gram(ze: &ZetaEta) -> Result<()> {
    let d = ze.source.d();
    let d2 = d * d;
    let normal = ze.source.normal();
    let ok = ze.zeta.dot(&normal).is_zero()
        && ze.eta.dot(&normal).is_zero()
        && ze.zeta.norm_sq() == Int::from(2) * &d2
        && ze.eta.norm_sq() == Int::from(2) * &d2
        && ze.zeta.dot(&ze.eta) == d2;
    if ok {
        Ok(())
    } else {
        Err(Error::InvariantViolation(format!(
            "generators zeta = {}, eta = {} of {} fail the Gram conditions",
            ze.zeta, ze.eta, ze.source
        )))
    }
}

/// `P = mζ − nη`, `Q = m(ζ − η) − nζ`; side² is `2d²(m² − mn + n²)`.
///
/// `Q` is `P` turned by 60° about the plane normal. The minus signs pair
/// `ζ·η = d²` with the norm form `m² − mn + n²`.
pub fn triangle(ze: &ZetaEta, m: &Int, n: &Int) -> Result<LatticeTriangle> {
    if m.is_zero() && n.is_zero() {
        return Err(Error::Degenerate);
    }
    let p = ze.zeta.scale(m) - ze.eta.scale(n);
    let q = (&ze.zeta - &ze.eta).scale(m) - ze.zeta.scale(n);
    let d = ze.source.d();
    let side_sq = Int::from(2) * d * d * eisenstein_norm(m, n);
    if p.norm_sq() != side_sq || q.norm_sq() != side_sq || p.dist_sq(&q) != side_sq {
        return Err(Error::InvariantViolation(format!(
            "triangle O, {p}, {q} is not equilateral with side^2 {side_sq}"
        )));
    }
    Ok(LatticeTriangle { p, q, side_sq })
}

/// `true` iff `p` lies on the plane `ax + by + cz = 0`.
pub fn in_plane_lattice(p: &IntVector3, t: &TripleSolution) -> bool {
    p.dot(&t.normal()).is_zero()
}
