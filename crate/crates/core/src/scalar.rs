//! Integer coordinate scalars with exact widened arithmetic.
//!
//! Every geometric predicate in this crate reduces to the sign of a 2x2
//! determinant of coordinate differences. To keep those signs exact the
//! coordinate type widens into an intermediate type that provably holds
//! `8 * MAX_ABS^2`, and point-set constructors reject coordinates outside
//! `[-MAX_ABS, MAX_ABS]`. No floating point is involved anywhere.

use std::fmt;
use std::hash::Hash;

use num_traits::{FromPrimitive, PrimInt, Signed};

/// An exact signed integer coordinate.
pub trait Coord:
    PrimInt + Signed + FromPrimitive + fmt::Debug + fmt::Display + Hash + Send + Sync + 'static
{
    /// Intermediate type for determinant arithmetic; must hold `8 * MAX_ABS^2`.
    type Wide: PrimInt + Signed;

    /// Largest admissible coordinate magnitude.
    const MAX_ABS: Self;

    fn to_wide(self) -> Self::Wide;
}

impl Coord for i32 {
    type Wide = i64;

    // 8 * (2^29)^2 = 2^61 fits in i64.
    const MAX_ABS: i32 = 1 << 29;

    #[inline(always)]
    fn to_wide(self) -> i64 {
        self as i64
    }
}

impl Coord for i64 {
    type Wide = i128;

    // 8 * (2^30)^2 = 2^63 fits comfortably in i128.
    const MAX_ABS: i64 = 1 << 30;

    #[inline(always)]
    fn to_wide(self) -> i128 {
        self as i128
    }
}
