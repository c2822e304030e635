//! The free nonassociative algebra on a braided generator space.

mod braided;
pub mod checks;
mod element;
mod json;
mod shape;
mod tree;

pub use braided::{BraidedAlgebra, PairImage};
pub use checks::verify_tau_star;
pub use element::{
    contract, generator, generator_bound, multiply, parse_element, parse_tensor, render,
    render_tensor, tensor_of, tuple, unit, FreeElement, TensorElement, Tuple,
};
pub use json::{
    element_from_json, element_to_json, tensor_from_json, tensor_to_json, ElementJson, TensorJson,
    TensorTermJson, TermJson,
};
pub use shape::{Shape, MAX_DEGREE};
pub use tree::Tree;
