//! Scalar abstraction shared by every geometric and combinatorial routine.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar the engine is generic over: `f32` or `f64`.
///
/// The associated tolerances are matched to the precision of the type:
/// `match_eps` decides when two matrices or vectors are the same element,
/// `tie_eps` decides when two strategy values count as a tie.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Matrix/vector identification tolerance.
    fn match_eps() -> Self;

    /// Relative tolerance below which two objective values are tied.
    fn tie_eps() -> Self;

    /// Converts an `f64` literal. Never fails for finite input.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    #[inline]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count fits in scalar")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

impl Real for f64 {
    #[inline]
    fn match_eps() -> Self {
        1e-9
    }
    #[inline]
    fn tie_eps() -> Self {
        1e-12
    }
}

impl Real for f32 {
    #[inline]
    fn match_eps() -> Self {
        1e-4
    }
    #[inline]
    fn tie_eps() -> Self {
        1e-5
    }
}
