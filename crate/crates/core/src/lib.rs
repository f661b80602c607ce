//! Exact tropical algebra for ReLU networks with integer weights.
//!
//! The crate converts feedforward networks into tropical rational maps and
//! back, builds the Newton and dual polytopes of tropical polynomials, counts
//! linear regions, and ships independent checkers for all of it.

pub mod acceptance;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod network;
pub mod oracle;
pub mod polytope;
pub mod rational;
pub mod regions;
pub mod tropical;

pub use error::{Error, Result};
pub use rational::{Point, Rational};
