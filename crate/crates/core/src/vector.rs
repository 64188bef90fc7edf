use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::int::{exact_div, Int};

/// A point or displacement in Z^3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVector3 {
    pub x: Int,
    pub y: Int,
    pub z: Int,
}

impl IntVector3 {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>, z: impl Into<Int>) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
            z: z.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_array(v: [i64; 3]) -> Self {
        Self::new(v[0], v[1], v[2])
    }

    pub fn components(&self) -> [&Int; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn from_components(c: [Int; 3]) -> Self {
        let [x, y, z] = c;
        Self { x, y, z }
    }

    pub fn dot(&self, other: &Self) -> Int {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn norm_sq(&self) -> Int {
        self.dot(self)
    }

    pub fn dist_sq(&self, other: &Self) -> Int {
        (self - other).norm_sq()
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self {
            x: &self.y * &other.z - &self.z * &other.y,
            y: &self.z * &other.x - &self.x * &other.z,
            z: &self.x * &other.y - &self.y * &other.x,
        }
    }

    pub fn scale(&self, factor: &Int) -> Self {
        Self {
            x: &self.x * factor,
            y: &self.y * factor,
            z: &self.z * factor,
        }
    }

    /// Componentwise exact division; `None` if any component leaves a remainder.
    pub fn div_exact(&self, den: &Int) -> Option<Self> {
        Some(Self {
            x: exact_div(&self.x, den)?,
            y: exact_div(&self.y, den)?,
            z: exact_div(&self.z, den)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// gcd of the absolute values of the components (0 for the zero vector).
    pub fn content(&self) -> Int {
        self.x.gcd(&self.y).gcd(&self.z)
    }

    pub fn componentwise_min(&self, other: &Self) -> Self {
        Self {
            x: (&self.x).min(&other.x).clone(),
            y: (&self.y).min(&other.y).clone(),
            z: (&self.z).min(&other.z).clone(),
        }
    }

    pub fn componentwise_max(&self, other: &Self) -> Self {
        Self {
            x: (&self.x).max(&other.x).clone(),
            y: (&self.y).max(&other.y).clone(),
            z: (&self.z).max(&other.z).clone(),
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            x: self.x.abs(),
            y: self.y.abs(),
            z: self.z.abs(),
        }
    }

    /// Applies a signed coordinate permutation: component `i` of the result is
    /// `signs[i] * self[perm[i]]`.
    pub fn signed_permutation(&self, perm: [usize; 3], signs: [i8; 3]) -> Self {
        let c = self.components();
        let pick = |i: usize| {
            let v = c[perm[i]].clone();
            if signs[i] < 0 {
                -v
            } else {
                v
            }
        };
        Self {
            x: pick(0),
            y: pick(1),
            z: pick(2),
        }
    }

    /// Components as `i64` when they all fit.
    pub fn to_i64_array(&self) -> Option<[i64; 3]> {
        use num_traits::ToPrimitive;
        Some([self.x.to_i64()?, self.y.to_i64()?, self.z.to_i64()?])
    }
}

/// The 48 signed permutations of three coordinates, in a fixed order.
pub fn signed_permutations() -> impl Iterator<Item = ([usize; 3], [i8; 3])> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    PERMS.into_iter().flat_map(|perm| {
        (0..8u8).map(move |bits| {
            let sign = |b: u8| if bits & b != 0 { -1 } else { 1 };
            (perm, [sign(1), sign(2), sign(4)])
        })
    })
}

impl fmt::Display for IntVector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&IntVector3> for &IntVector3 {
            type Output = IntVector3;
            fn $method(self, rhs: &IntVector3) -> IntVector3 {
                IntVector3 {
                    x: &self.x $op &rhs.x,
                    y: &self.y $op &rhs.y,
                    z: &self.z $op &rhs.z,
                }
            }
        }
        impl $trait<IntVector3> for IntVector3 {
            type Output = IntVector3;
            fn $method(self, rhs: IntVector3) -> IntVector3 {
                &self $op &rhs
            }
        }
        impl $trait<&IntVector3> for IntVector3 {
            type Output = IntVector3;
            fn $method(self, rhs: &IntVector3) -> IntVector3 {
                &self $op rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);

impl Neg for &IntVector3 {
    type Output = IntVector3;
    fn neg(self) -> IntVector3 {
        IntVector3 {
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }
}

impl Neg for IntVector3 {
    type Output = IntVector3;
    fn neg(self) -> IntVector3 {
        -&self
    }
}

impl Mul<&IntVector3> for &Int {
    type Output = IntVector3;
    fn mul(self, rhs: &IntVector3) -> IntVector3 {
        rhs.scale(self)
    }
}
