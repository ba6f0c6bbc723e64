//! Exact computation in the rectangular and annular planar rook categories.

pub mod algebra;
pub mod cmodule;
pub mod diagram;
pub mod error;
pub mod fock;
pub mod lincomb;
pub mod scalar;
pub mod tensorrep;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use scalar::{CycScalar, ExactMatrix};
