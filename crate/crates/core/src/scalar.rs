use std::fmt;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive};

/// Coefficient scalar for multivectors, matrices and state vectors:
/// `f32` or `f64` (anything float-like with exact small-integer arithmetic).
pub trait Scalar:
    Float
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + fmt::Display
    + fmt::Debug
    + Send
    + Sync
    + 'static
{
    /// Exact conversion from a small signed integer.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
