//! Exact computer algebra for BiHom-associative algebras.
//!
//! Finite-dimensional BiHom-algebras, coalgebras, right modules and comodules are
//! given by structure constants over the rationals together with their twisting
//! maps. The crate validates every axiom exhaustively on basis tensors, builds
//! dual coalgebras and comodules, and carries out the finite (Sweedler) dual
//! constructions through explicit witness ideals and quotient spaces. The
//! [`poly`] module handles the infinite-dimensional polynomial family with
//! degree-bounded but exact computations.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command-line
//! front end live in the `bihom` crate.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod coalgebra;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod modules;
pub mod poly;
pub mod report;

pub use algebra::{AlgebraMorphism, FDBiHomAlgebra, IdealHandle};
pub use coalgebra::{CoalgebraMorphism, FDBiHomCoalgebra};
pub use error::Error;
pub use linalg::{Matrix, Rational, Subspace};
pub use report::ValidationReport;
