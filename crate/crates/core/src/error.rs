use alloc::string::String;

/// Errors raised by constructions and validators.
///
/// A mathematical check that simply fails is not an error: validators return a
/// [`ValidationReport`](crate::report::ValidationReport) carrying the witness.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed input: wrong shapes, mismatched dimensions, objects over different bases.
    #[error("input error: {0}")]
    Input(String),
    /// An operation was given an object that has not passed the validation it requires.
    #[error("contract error: {0}")]
    Contract(String),
    /// A stated precondition of a construction does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A functional does not vanish on the given witness ideal.
    #[error("functional does not annihilate basis vector {basis_index} of the witness (value {value})")]
    NotAnnihilated { basis_index: usize, value: crate::linalg::Rational },
}
