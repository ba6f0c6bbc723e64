//! Exact scalars in cyclotomic fields and dense linear algebra over them.

mod cyclotomic;
mod matrix;

pub use cyclotomic::{cyc_arith, cyclotomic_polynomial, lcm, totient, ArithOp, CycScalar, Rational};
pub use matrix::{commutant, independent_subset, inner, mat_kernel, span_rank, ExactMatrix};
