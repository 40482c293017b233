use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{Rational, Vector};

/// Where a failing identity was observed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    /// A tuple of basis indices, e.g. `(i, j, k)` for `e_i ⊗ e_j ⊗ e_k`.
    Basis(Vec<usize>),
    /// A tuple of monomial exponent vectors.
    Monomials(Vec<Vec<u32>>),
    /// A vector that should have been in a subspace.
    Vector(Vector),
}

/// Both sides of a failing identity at `at`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub at: Location,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

/// Ordered list of named checks, each with a pass/fail verdict and a witness on failure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub subject: String,
    /// Echoed parameters such as degree bounds, in insertion order.
    pub parameters: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport { subject: subject.into(), parameters: Vec::new(), checks: Vec::new() }
    }

    pub fn with_parameter(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.parameters.push((key.into(), alloc::format!("{}", value)));
        self
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: Witness) {
        self.checks.push(Check { name: name.into(), passed: false, witness: Some(witness) });
    }

    pub fn record(&mut self, name: impl Into<String>, witness: Option<Witness>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    /// Appends all checks of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for mut c in other.checks {
            c.name = alloc::format!("{}: {}", prefix, c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for (k, v) in &self.parameters {
            writeln!(f, "  {} = {}", k, v)?;
        }
        for c in &self.checks {
            writeln!(f, "  [{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                writeln!(f, "      at {}", w.at)?;
                writeln!(f, "      lhs = {}", DisplayVector(&w.lhs))?;
                writeln!(f, "      rhs = {}", DisplayVector(&w.rhs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Basis(idx) => {
                write!(f, "basis (")?;
                for (n, i) in idx.iter().enumerate() {
                    if n > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "e{}", i)?;
                }
                write!(f, ")")
            }
            Location::Monomials(ms) => {
                write!(f, "monomials (")?;
                for (n, m) in ms.iter().enumerate() {
                    if n > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "x^{:?}", m)?;
                }
                write!(f, ")")
            }
            Location::Vector(v) => write!(f, "vector {}", DisplayVector(v)),
        }
    }
}

/// `[a, b, c]` with rationals printed as `p/q`.
pub struct DisplayVector<'a>(pub &'a [Rational]);

impl fmt::Display for DisplayVector<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (n, x) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, "]")
    }
}

/// Splits a flat lexicographic tensor index into per-factor indices.
pub(crate) fn unflatten(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = alloc::vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

/// Compares two linear maps column by column; the first differing column becomes the witness.
pub(crate) fn compare_maps(
    lhs: &crate::linalg::Matrix,
    rhs: &crate::linalg::Matrix,
    input_dims: &[usize],
) -> Option<Witness> {
    lhs.first_differing_column(rhs).map(|c| Witness {
        at: Location::Basis(unflatten(c, input_dims)),
        lhs: lhs.column(c),
        rhs: rhs.column(c),
    })
}
