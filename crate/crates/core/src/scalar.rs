//! Scalar abstractions shared by the spectral code.
//!
//! [`Scalar`] is anything the quadratic-form helpers can evaluate exactly
//! (floats, but also `num_rational::Ratio<i64>`); [`Real`] adds the
//! floating point operations that the iterative solvers need.

use std::fmt::Debug;

use num_traits::{Float, FromPrimitive, Num, NumCast, Signed};

/// Field-like scalar: exact rationals or floats.
pub trait Scalar: Num + Signed + Copy + PartialOrd + FromPrimitive + Debug + Send + Sync {}

impl<T> Scalar for T where T: Num + Signed + Copy + PartialOrd + FromPrimitive + Debug + Send + Sync {}

/// Floating point scalar: f32 or f64.
pub trait Real: Scalar + Float + NumCast {}

impl<T> Real for T where T: Scalar + Float + NumCast {}

/// Converts a vertex count or degree into the scalar type.
#[inline]
pub(crate) fn from_count<T: Scalar>(k: usize) -> T {
    T::from_usize(k).expect("count representable in scalar type")
}

/// Converts an `f64` constant into a float type.
#[inline]
pub(crate) fn lit<T: Real>(x: f64) -> T {
    <T as NumCast>::from(x).expect("literal representable in scalar type")
}
