use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;

/// Relative tolerance used when comparing complex carrier values.
pub const COMPLEX_TOLERANCE: f64 = 1e-12;

/// A carrier value.
///
/// `same` is equality of canonical forms. For exact carriers it is plain
/// `==`; complex values compare within [`COMPLEX_TOLERANCE`].
pub trait Value: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn same(&self, other: &Self) -> bool;
}

impl Value for u32 {
    fn same(&self, other: &Self) -> bool {
        self == other
    }
}

impl Value for BigInt {
    fn same(&self, other: &Self) -> bool {
        self == other
    }
}

impl Value for Complex64 {
    fn same(&self, other: &Self) -> bool {
        let scale = 1f64.max(self.norm()).max(other.norm());
        (self - other).norm() <= COMPLEX_TOLERANCE * scale
    }
}

pub(crate) fn position_of<V: Value>(items: &[V], v: &V) -> Option<usize> {
    items.iter().position(|x| x.same(v))
}
