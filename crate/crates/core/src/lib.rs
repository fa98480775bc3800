//! Exact computations around Macaulay's theorem on Hilbert functions.
//!
//! The crate covers four layers:
//!
//! - [`binom`]: exact binomials, the `n`-th Macaulay representation of an
//!   integer and the shift operator `A_(n)|_s^t`, plus the combinatorial
//!   identities relating the two classical forms of Macaulay's bound.
//! - [`poly`]: sparse homogeneous polynomials, graded pieces of homogeneous
//!   ideals, Hilbert functions by exact rank, and the Macaulay bound checks.
//! - [`hermitian`]: bihomogeneous Hermitian forms as Gaussian-rational
//!   coefficient matrices, their rank and signature, products with signed
//!   norms, and the rank/signature inequalities for sums of squared norms.
//! - [`oracle`]: brute-force references and seeded instance generators used by
//!   the test suites and the CLI.
//!
//! Linear algebra and polynomials are generic over the exact scalar traits in
//! [`scalar`]; the concrete instantiations used throughout are re-exported
//! here as type aliases.

// Dense matrix code reads better with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod binom;
pub mod error;
pub mod hermitian;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision natural number.
pub type Natural = num_bigint::BigUint;
/// Exact rational number.
pub type Rational = num_rational::BigRational;
/// Gaussian integer `a + bi` with `a, b` integers.
pub type GaussianInteger = num_complex::Complex<Integer>;
/// Gaussian rational `a + bi` with `a, b` rational.
pub type GaussianRational = num_complex::Complex<Rational>;

/// Homogeneous polynomial with rational coefficients.
pub type Poly = poly::HomogPoly<Rational>;
/// Homogeneous polynomial with Gaussian-rational coefficients.
pub type GaussPoly = poly::HomogPoly<GaussianRational>;
/// Homogeneous ideal over the rationals.
pub type Ideal = poly::GradedIdeal<Rational>;
/// Homogeneous ideal over the Gaussian rationals.
pub type GaussIdeal = poly::GradedIdeal<GaussianRational>;
