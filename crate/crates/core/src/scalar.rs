//! Scalar trait shared by polynomials, rational functions and the algebra code.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, One, ToPrimitive};

/// Variable names used when printing, indexed by nesting level.
pub const VAR_NAMES: [&str; 4] = ["v", "z", "w", "u"];

/// A commutative ring element usable as a polynomial coefficient.
///
/// `LEVEL` counts how many formal variables are already nested inside the
/// type; `RatFunc<RatFunc<Q>>` has level 2 and prints in `z` over `v`.
pub trait Scalar:
    Num + Clone + Neg<Output = Self> + Debug + Display + Send + Sync + 'static
{
    const LEVEL: usize = 0;

    fn from_i64(n: i64) -> Self;

    /// True when equality and division are exact. Floats say no.
    fn is_exact() -> bool {
        true
    }

    /// Best-effort conversion for numerical cross-checks.
    fn to_f64(&self) -> Option<f64> {
        None
    }

    /// `acc += a * b`, the inner step of polynomial multiplication.
    fn add_mul(acc: &mut Self, a: &Self, b: &Self) {
        *acc = acc.clone() + a.clone() * b.clone();
    }

    /// `a + b` without consuming either side.
    fn add_ref(a: &Self, b: &Self) -> Self {
        a.clone() + b.clone()
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn is_exact() -> bool {
        false
    }
    fn to_f64(&self) -> Option<f64> {
        Some(*self)
    }
}

impl Scalar for f32 {
    fn from_i64(n: i64) -> Self {
        n as f32
    }
    fn is_exact() -> bool {
        false
    }
    fn to_f64(&self) -> Option<f64> {
        Some(*self as f64)
    }
}

impl Scalar for i64 {
    fn from_i64(n: i64) -> Self {
        n
    }
    fn to_f64(&self) -> Option<f64> {
        Some(*self as f64)
    }
}

impl Scalar for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn to_f64(&self) -> Option<f64> {
        ToPrimitive::to_f64(self)
    }
}

impl Scalar for Rational64 {
    fn from_i64(n: i64) -> Self {
        Rational64::from_integer(n)
    }
    fn to_f64(&self) -> Option<f64> {
        ToPrimitive::to_f64(self)
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn to_f64(&self) -> Option<f64> {
        ToPrimitive::to_f64(self)
    }
    // Coefficients are almost always integers; skip the gcds of the
    // generic operators for them.
    fn add_mul(acc: &mut Self, a: &Self, b: &Self) {
        if a.denom().is_one() && b.denom().is_one() && acc.denom().is_one() {
            *acc = BigRational::from_integer(acc.numer() + a.numer() * b.numer());
        } else {
            *acc = &*acc + a * b;
        }
    }
    fn add_ref(a: &Self, b: &Self) -> Self {
        if a.denom().is_one() && b.denom().is_one() {
            BigRational::from_integer(a.numer() + b.numer())
        } else {
            a + b
        }
    }
}

pub(crate) fn var_name(level: usize) -> &'static str {
    VAR_NAMES.get(level).copied().unwrap_or("t")
}
