//! Coefficient rings for [`TruncatedSeries`](crate::series::TruncatedSeries).
//!
//! Everything in the pipeline runs over [`BigRational`]; the float
//! implementations exist for quick approximate evaluation and for tests that
//! want to compare against a cheap reference.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive};

/// A commutative ring with division by positive integers.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync {
    fn from_integer(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }

    /// `self / n` for a positive integer `n`.
    fn div_integer(&self, n: u64) -> Self {
        self.clone() / Self::from_i64(n as i64)
    }
}

/// Scalars that can report whether a value is an exact integer.
pub trait ExactScalar: Scalar {
    fn to_exact_integer(&self) -> Option<BigInt>;
}

impl Scalar for BigRational {
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn div_integer(&self, n: u64) -> Self {
        self / BigInt::from(n)
    }
}

impl ExactScalar for BigRational {
    fn to_exact_integer(&self) -> Option<BigInt> {
        if self.denom().is_one() {
            Some(self.numer().clone())
        } else {
            None
        }
    }
}

impl Scalar for f64 {
    fn from_integer(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn from_integer(n: &BigInt) -> Self {
        n.to_f32().unwrap_or(f32::NAN)
    }
}
