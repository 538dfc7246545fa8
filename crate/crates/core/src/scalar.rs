//! Numeric traits the spectral layer is generic over.
//!
//! [`Field`] is what exact linear algebra needs (quotients, characteristic
//! polynomials); [`Scalar`] adds the floating-point operations required by
//! the eigensolvers and the p-Sombor weights.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_rational::Rational64;
use num_traits::{Float, FromPrimitive, Num, Signed};

/// A signed ordered field with a notion of "close enough".
pub trait Field: Num + Signed + Clone + PartialOrd + FromPrimitive + Debug {
    /// Absolute slack allowed when testing two row sums for equality.
    /// Exact types return zero.
    fn equity_tolerance() -> Self;

    fn from_count(k: usize) -> Self {
        Self::from_usize(k).expect("count representable")
    }
}

impl Field for f64 {
    fn equity_tolerance() -> Self {
        1e-12
    }
}

impl Field for f32 {
    fn equity_tolerance() -> Self {
        1e-5
    }
}

impl Field for Rational64 {
    fn equity_tolerance() -> Self {
        Rational64::from_integer(0)
    }
}

/// Floating-point scalar for eigensolvers.
pub trait Scalar: Field + Float + Copy + Display + Sum + Send + Sync + 'static {
    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("finite literal")
    }
}

impl Scalar for f64 {}
impl Scalar for f32 {}
