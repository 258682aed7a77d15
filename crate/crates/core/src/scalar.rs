//! Coefficient types.
//!
//! Every symbolic object in the crate is generic over its coefficient type.
//! The exact path uses [`Rational`]; `f32`/`f64` work for the same algebra
//! wherever rounding is acceptable.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// A field usable as polynomial coefficients.
pub trait Scalar:
    Num + Signed + Clone + PartialEq + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// `value` as a scalar. Panics only if the type cannot represent small integers.
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("scalar type must represent small integers")
    }

    /// `num / den` as a scalar.
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// Converts through `f64`. Lossy for rationals with huge parts.
    fn cast<U: Scalar>(&self) -> U {
        let v = self.to_f64().unwrap_or(f64::NAN);
        U::from_f64(v).unwrap_or_else(|| U::from_int(0))
    }
}

impl<T> Scalar for T where
    T: Num + Signed + Clone + PartialEq + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Builds an exact rational `num / den`.
///
/// # Panics
/// If `den` is zero.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
