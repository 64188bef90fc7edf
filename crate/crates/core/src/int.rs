//! Exact integer helpers shared by the solvers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Arbitrary-precision signed integer used throughout the public API.
pub type Int = BigInt;

/// Returns `Some(root)` when `value` is a perfect square.
pub fn exact_sqrt(value: &Int) -> Option<Int> {
    if value.is_negative() {
        return None;
    }
    let root = value.sqrt();
    (&root * &root == *value).then_some(root)
}

/// Returns `Some(num / den)` when the division is exact.
pub fn exact_div(num: &Int, den: &Int) -> Option<Int> {
    if den.is_zero() {
        return None;
    }
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}

pub fn is_odd(value: &Int) -> bool {
    value.is_odd()
}

pub fn gcd3(a: &Int, b: &Int, c: &Int) -> Int {
    a.gcd(b).gcd(c)
}
