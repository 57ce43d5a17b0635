//! Scalar abstraction for the exact arithmetic used throughout the crate.
//!
//! Matrices and polynomials are generic over any commutative ring scalar
//! satisfying [`Scalar`]; the concrete instantiations used everywhere are
//! arbitrary-precision integers and rationals (see the type aliases at the
//! crate root). No floating point is used anywhere.

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

/// Ring scalar: exact, clonable, with ring operations by value.
///
/// `Zero` supplies addition, `One` supplies multiplication.
pub trait Scalar:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}
