//! Numeric abstractions shared by the counting and linear-programming code.
//!
//! Matching counts are generic over a [`Tally`] (fixed-width integers that
//! report overflow, or `BigUint`), and the simplex is generic over an
//! [`LpScalar`] (exact `BigRational`, or `f64`/`f32` with a pivot tolerance).

use std::fmt::{Debug, Display};

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, Float, FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Counter type for matching counts.
pub trait Tally: Clone + Debug + Display + Zero + One + CheckedAdd {}

impl<T> Tally for T where T: Clone + Debug + Display + Zero + One + CheckedAdd {}

/// Ordered field used by the simplex tableau.
pub trait LpScalar:
    Clone + Debug + Display + PartialOrd + Signed + FromPrimitive + ToPrimitive
{
    /// True when arithmetic is exact and comparisons need no tolerance.
    const EXACT: bool;

    /// Magnitudes at or below this are treated as zero.
    fn tolerance() -> Self;

    fn floor_value(&self) -> Self;

    fn is_negligible(&self) -> bool {
        self.abs() <= Self::tolerance()
    }

    fn is_clearly_positive(&self) -> bool {
        *self > Self::tolerance()
    }

    fn is_clearly_negative(&self) -> bool {
        *self < -Self::tolerance()
    }

    /// Distance to the nearest integer.
    fn fractionality(&self) -> Self {
        let down = self.clone() - self.floor_value();
        let up = Self::one() - down.clone();
        if down < up {
            down
        } else {
            up
        }
    }

    fn is_integral(&self) -> bool {
        self.fractionality().is_negligible()
    }
}

impl LpScalar for BigRational {
    const EXACT: bool = true;

    fn tolerance() -> Self {
        Self::zero()
    }

    fn floor_value(&self) -> Self {
        self.floor()
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl LpScalar for $t {
            const EXACT: bool = false;

            fn tolerance() -> Self {
                $tol
            }

            fn floor_value(&self) -> Self {
                Float::floor(*self)
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-5);

pub(crate) fn rational_from_int(v: i64) -> BigRational {
    Ratio::from_integer(BigInt::from(v))
}

/// Converts a count to `u64` when it fits.
pub fn count_to_u64(c: &BigUint) -> Option<u64> {
    c.to_u64()
}
