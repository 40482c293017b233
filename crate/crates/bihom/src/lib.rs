//! File formats, seeded instance generators and the command-line front end
//! for the `bihom-core` library.

pub mod cli;
pub mod json;
pub mod random;

pub use cli::{run, Report};
