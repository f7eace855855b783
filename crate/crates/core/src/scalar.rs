//! Scalar traits shared by [`crate::formal`] and [`crate::linalg`].
//!
//! Everything in the crate is exact, so the concrete choices are `i64`,
//! [`crate::BigInt`] and [`crate::Rational`]. The bounds are written against
//! `num-traits` so floating-point types also satisfy [`Field`] for callers
//! who want approximate checks.

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};

/// Commutative ring with unit.
pub trait Ring: Num + Neg<Output = Self> + Clone + PartialEq + Debug + FromPrimitive {
    fn from_int(x: i64) -> Self {
        Self::from_i64(x).expect("integer does not fit in scalar type")
    }
}

impl<T> Ring for T where T: Num + Neg<Output = T> + Clone + PartialEq + Debug + FromPrimitive {}

/// Ring with exact division by nonzero divisors of products; required by
/// fraction-free (Bareiss) elimination.
pub trait IntegralDomain: Ring + Integer {}

impl<T> IntegralDomain for T where T: Ring + Integer {}

/// Ring in which every nonzero element is invertible.
pub trait Field: Ring {}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer,
    Ratio<T>: Ring,
{
}

impl Field for f32 {}
impl Field for f64 {}

/// Sign `(-1)^e` in any ring.
pub fn sign_pow<T: Ring>(e: usize) -> T {
    if e.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}
