//! Scalar abstraction: everything numeric in this crate is generic over the
//! underlying real type.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the crate is generic over: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Convert an `f64` literal into the scalar type.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("literal not representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}
