//! Exact polynomial and matrix algebra over ℚ.
//!
//! Everything here is exact; there are no tolerances. Rationals are
//! `num_rational::BigRational`, which reduces to lowest terms on every
//! operation.

mod matrix;
mod poly;
mod squarefree;
mod sturm;

pub use matrix::{char_poly, min_poly, RationalMatrix};
pub use poly::RationalPolynomial;
pub use squarefree::{squarefree_decompose, SquarefreeDecomposition, SquarefreeFactor};
pub use sturm::{count_real_roots, sturm_sequence};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;
