//! Scalar abstraction for the series and matrix containers.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient scalar for the generic containers.
///
/// The shipped aliases instantiate everything with arbitrary-precision
/// rationals, where all arithmetic is exact; any signed field-like numeric
/// type satisfies the bound. `FromPrimitive` is only ever used to lift
/// small machine integers (loop indices, exponent bases) into the scalar.
pub trait Scalar: Num + Signed + FromPrimitive + Clone + Debug {}

impl<T> Scalar for T where T: Num + Signed + FromPrimitive + Clone + Debug {}
