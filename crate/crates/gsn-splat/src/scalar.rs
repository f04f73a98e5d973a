//! Scalar abstraction over `f32`/`f64`.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::Float;

/// Floating-point scalar the whole pipeline is generic over.
///
/// Training runs in `f32`; gradient checks instantiate the same code in
/// `f64` because central finite differences are unreliable in single
/// precision.
pub trait Real: Float + Debug + Display + Sum + Send + Sync + Default + 'static {
    /// Lossy conversion from `f64` (used for constants and RNG draws).
    fn of(v: f64) -> Self;

    /// Widening conversion to `f64` (used for logging and metrics).
    fn to_f64(self) -> f64;

    fn of_usize(v: usize) -> Self {
        Self::of(v as f64)
    }
}

impl Real for f32 {
    #[inline]
    fn of(v: f64) -> Self {
        v as f32
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Real for f64 {
    #[inline]
    fn of(v: f64) -> Self {
        v
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
}
