//! Exact scalars, normalized linear combinations and exact linear algebra.

pub mod lincomb;
pub mod matrix;
pub mod scalar;

pub use lincomb::LinComb;
pub use matrix::{Matrix, Vector};
pub use scalar::{format_scalar, parse_scalar, ratio, scalar, Scalar};
