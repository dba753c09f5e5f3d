//! Exact-arithmetic Bernoulli numbers via Kronecker-type closed formulas,
//! together with the truncated power-series algebra that verifies the
//! identities those formulas rest on.
//!
//! Everything is computed over arbitrary-precision rationals; every equality
//! the crate claims is bit-exact, never approximate. The main layers:
//!
//! - [`arith`]: binomials, integer powers, plain and weighted power sums.
//! - [`bernoulli`]: B_m by the defining recurrence (the oracle) and by three
//!   direct closed formulas, plus the alternating-sum identity relating them.
//! - [`series`]: truncated formal power series in one and two variables,
//!   Laurent polynomials, exact division by a linear form, and the
//!   two-variable expansions whose coefficients reproduce the formulas.
//! - [`matrix`]: exact Gauss-Jordan inversion of rational matrices.
//! - [`muhat`]: the linear map sending z-powers to signed sums of
//!   two-variable exponentials, its log-coordinate images, and the sparse
//!   tensor model of loop powers it encodes.
//!
//! The containers in [`series`] and [`matrix`] are generic over a [`Scalar`]
//! coefficient type; the aliases below pin the exact rational scalar used
//! throughout the crate.
//!
//! ```
//! use bkron::bernoulli::{bernoulli_generalized, bernoulli_number};
//! use bkron::series::phi;
//!
//! // the two-parameter closed form agrees with the recurrence oracle
//! assert_eq!(bernoulli_generalized(12, 5, 20).unwrap(), bernoulli_number(12));
//!
//! // low-order terms of the Bernoulli generating series in Y - X
//! assert_eq!(phi(2).term_lines(), ["0 0 1/1", "1 0 1/2", "0 1 -1/2"]);
//! ```

pub mod arith;
pub mod bernoulli;
pub mod error;
pub mod matrix;
pub mod muhat;
pub mod rational;
pub mod rng;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use rational::{Int, Rational};
pub use scalar::Scalar;

/// One-variable truncated series over the exact rational scalar.
pub type QSeries = series::UniSeries<Rational>;
/// Two-variable total-degree-truncated series over the exact rational scalar.
pub type QBiSeries = series::BiSeries<Rational>;
/// Sparse Laurent polynomial over the exact rational scalar.
pub type QLaurent = series::LaurentPoly<Rational>;
/// Dense square matrix over the exact rational scalar.
pub type QMatrix = matrix::Matrix<Rational>;
