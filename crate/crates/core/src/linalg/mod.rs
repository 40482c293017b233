//! Exact linear algebra over the rationals: dense matrices, row reduction,
//! canonical subspaces, quotients and Kronecker products.
//!
//! Tensor products of coordinate spaces always use the lexicographic basis
//! `e_i ⊗ e_j ↦ i·dim₂ + j`; every structure tensor in the crate follows it.

mod matrix;
mod rational;
mod subspace;

pub use matrix::{kronecker, rref, Matrix};
pub use rational::{
    add_vectors, dot, frac, int, is_zero_vector, kron_vector, one, parse_rational, scale_vector,
    unit, zero, zeros, Rational, Vector,
};
pub use subspace::{
    intersect, kernel_basis, membership, quotient, tensor_projection_kernel, tensor_sum_subspace,
    QuotientData, Subspace,
};
