//! Exact computer algebra for the free nonassociative algebra over a braided
//! generator space.
//!
//! The crate builds the braided extension of a user supplied braiding to the
//! free algebra, the shuffle coproduct, counit and divisions that make it a
//! braided nonassociative Hopf algebra, and the braided primitive and Sabinin
//! operations for involutive braidings. Every structural identity comes with
//! an exhaustive verifier at bounded degree.

pub mod braid;
pub mod braiding;
pub mod cli;
mod error;
pub mod foundation;
pub mod free_algebra;
pub mod hopf;
pub mod report;
pub mod sabinin;

pub use braiding::Braiding;
pub use error::Error;
pub use foundation::{LinComb, Scalar};
pub use free_algebra::{FreeElement, Shape, TensorElement, Tree};
pub use hopf::HopfContext;
pub use report::Report;
pub use sabinin::{MultilinearOp, Operation, SabininContext};
