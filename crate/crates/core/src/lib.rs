//! Exact arithmetic for affine Hecke algebras with unequal parameters:
//! root data, label functions, the Bernstein presentation, Harish-Chandra
//! mu-factors, rank-one intertwiners and a catalog of parameter results.
//!
//! Numeric code is generic over [`Scalar`]; the aliases below fix the exact
//! choices used throughout.

pub mod error;
pub mod hecke_algebra;
pub mod intertwiner_rank1;
pub mod isogeny_transfer;
pub mod label_params;
pub mod mu_function;
pub mod param_catalog;
pub mod poly;
pub mod ratfunc;
pub mod root_data;
pub mod scalar;
pub mod serde_rat;

pub use error::{Error, Result};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use scalar::Scalar;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

/// Small rationals for exponents and labels.
pub type Rat = num_rational::Rational64;

/// The coefficient field `Q(v)` of the Hecke algebra, with `v^2` the base.
pub type Coeff = RatFunc<Rational>;

/// Rational functions in `z` over `Q(v)`.
pub type Coeff2 = RatFunc<Coeff>;

/// Floating point counterpart of [`Coeff`], for numerical cross-checks.
pub type CoeffF64 = Poly<f64>;
