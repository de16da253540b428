//! Characteristic polynomial of the arrangements `J_n` in `R^n`:
//! the walls `x_i + x_j = 1` (`i < j`), `x_k = 0` and `x_k = 1`.
//!
//! The main route counts central coloured graphs with exponential generating
//! functions ([`central`]) and folds the counts into `χ_{J_n}(t)`
//! ([`charpoly`]). The [`oracle`] module recomputes the same quantities by
//! brute force, and [`verify`] compares the two.
//!
//! Series are generic over the coefficient ring ([`scalar::Scalar`]); the
//! pipeline itself runs over [`Rational`].

pub mod central;
pub mod charpoly;
pub mod counts;
pub mod decimal;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod published;
pub mod scalar;
pub mod series;
pub mod verify;

pub use central::{GammaCoefficients, Mode};
pub use charpoly::{chambers, chi, chi_table, ChamberCounts};
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use series::{Caps, Monomial, TruncatedSeries};

pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;

/// Exact trivariate series; every generating function in the crate.
pub type Series = TruncatedSeries<Rational>;
/// Floating-point series, for quick approximate evaluation.
pub type FloatSeries = TruncatedSeries<f64>;
/// Polynomials in `t` with big-integer coefficients.
pub type IntPolynomial = Polynomial<Integer>;
