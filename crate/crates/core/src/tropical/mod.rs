//! Exact arithmetic in the tropical (max-plus) semiring.
//!
//! Scalars are exact rationals extended by a bottom element standing for `-inf`.
//! Polynomials are finite maxima of affine functions with nonnegative integer
//! slopes, rational functions are differences of two polynomials.

mod map;
mod poly;
mod value;

pub use map::{TropicalMap, TropicalRationalFn};
pub use poly::{Monomial, TropicalPolynomial};
pub use value::TropicalValue;
