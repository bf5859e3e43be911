//! Scalar abstraction for the numeric core.
//!
//! Everything numeric in this crate is generic over a floating-point
//! scalar so the same routines run at `f32` or `f64`. The tolerances
//! quoted throughout the crate (and the experiment harness) are
//! calibrated for `f64`; the `*64` aliases at the crate root are the
//! supported production configuration.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar used by all numeric routines.
///
/// Implemented by `f32` and `f64` through the blanket impl.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Cast an `f64` literal (tolerances, kernel constants) into `Self`.
    ///
    /// Values below the target type's subnormal range flush to zero.
    fn cast(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 literal")
    }
}

impl<T> Scalar for T where T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

/// Euclidean norm of a slice.
pub fn norm<T: Scalar>(v: &[T]) -> T {
    v.iter()
        .fold(T::zero(), |acc, &x| acc + x * x)
        .sqrt()
}

/// Dot product of two equal-length slices.
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}
