//! Finite-dimensional BiHom-coalgebras `(C, Δ, ψ, φ)`.
//!
//! `Δ` is stored as a `dim² × dim` matrix: column `i` holds `Δ(e_i)` in the
//! lexicographic basis of `C ⊗ C`, so `d[i][j][k]` sits at row `j·dim + k`.
//! This is the transpose of the algebra layout, which makes dualizing a pure
//! transposition.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{check_shape, sparse_tensor};
use crate::error::Error;
use crate::linalg::{kronecker, Matrix, Rational, Vector};
use crate::report::{compare_maps, ValidationReport};

pub const BIHOM_COASSOCIATIVITY: &str = "BiHom-coassociativity";
pub const PSI_COMULTIPLICATIVITY: &str = "psi-comultiplicativity";
pub const PHI_COMULTIPLICATIVITY: &str = "phi-comultiplicativity";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDBiHomCoalgebra {
    labels: Vec<String>,
    delta: Matrix,
    psi: Matrix,
    phi: Matrix,
}

pub type CoalgebraRef = Arc<FDBiHomCoalgebra>;

impl FDBiHomCoalgebra {
    pub fn new(labels: Vec<String>, delta: Matrix, psi: Matrix, phi: Matrix) -> Result<Self, Error> {
        let n = labels.len();
        check_shape("delta", &delta, n * n, n)?;
        check_shape("psi", &psi, n, n)?;
        check_shape("phi", &phi, n, n)?;
        Ok(FDBiHomCoalgebra { labels, delta, psi, phi })
    }

    /// `(i, j, k, c)` entries meaning `d[i][j][k] = c` in `Δ(e_i) = Σ d[i][j][k] e_j ⊗ e_k`.
    pub fn from_structure_constants(
        labels: Vec<String>,
        entries: &[(usize, usize, usize, Rational)],
        psi: Matrix,
        phi: Matrix,
    ) -> Result<Self, Error> {
        let n = labels.len();
        if let Some((i, j, k, _)) = entries.iter().find(|(i, j, k, _)| *i >= n || *j >= n || *k >= n) {
            return Err(Error::Input(alloc::format!(
                "delta entry ({}, {}, {}) out of range for dimension {}",
                i, j, k, n
            )));
        }
        // Reuse the algebra helper by viewing Δ transposed: row i, column j·n + k.
        let flipped: Vec<_> = entries.iter().map(|(i, j, k, c)| (*j, *k, *i, c.clone())).collect();
        let delta = sparse_tensor(n, n, n, &flipped, "delta")?.transpose();
        FDBiHomCoalgebra::new(labels, delta, psi, phi)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    pub fn psi(&self) -> &Matrix {
        &self.psi
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn costructure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.delta.get(j * self.dim() + k, i)
    }

    /// `Δ(x)` in coordinates of `C ⊗ C`.
    pub fn comultiply(&self, x: &[Rational]) -> Vector {
        self.delta.apply(x)
    }

    pub fn with_costructure_constant(&self, i: usize, j: usize, k: usize, value: Rational) -> Self {
        let mut out = self.clone();
        let n = self.dim();
        out.delta.set(j * n + k, i, value);
        out
    }
}

/// Twist commutation, `(φ⊗Δ)Δ = (Δ⊗ψ)Δ`, `Δψ = (ψ⊗ψ)Δ`, `Δφ = (φ⊗φ)Δ`.
pub fn validate_coalgebra(c: &FDBiHomCoalgebra) -> ValidationReport {
    let n = c.dim();
    let (d, psi, phi) = (&c.delta, &c.psi, &c.phi);
    let mut report = ValidationReport::new("BiHom-coalgebra").with_parameter("dim", n);
    report.record(
        crate::algebra::TWIST_COMMUTATION,
        compare_maps(&psi.mul(phi), &phi.mul(psi), &[n]),
    );
    report.record(
        BIHOM_COASSOCIATIVITY,
        compare_maps(&kronecker(phi, d).mul(d), &kronecker(d, psi).mul(d), &[n]),
    );
    report.record(
        PSI_COMULTIPLICATIVITY,
        compare_maps(&d.mul(psi), &kronecker(psi, psi).mul(d), &[n]),
    );
    report.record(
        PHI_COMULTIPLICATIVITY,
        compare_maps(&d.mul(phi), &kronecker(phi, phi).mul(d), &[n]),
    );
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraMorphism {
    pub source: CoalgebraRef,
    pub target: CoalgebraRef,
    pub map: Matrix,
}

impl CoalgebraMorphism {
    pub fn new(source: CoalgebraRef, target: CoalgebraRef, map: Matrix) -> Result<Self, Error> {
        check_shape("coalgebra morphism", &map, target.dim(), source.dim())?;
        Ok(CoalgebraMorphism { source, target, map })
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &CoalgebraMorphism) -> Result<CoalgebraMorphism, Error> {
        if !(Arc::ptr_eq(&self.target, &next.source) || self.target == next.source) {
            return Err(Error::Input("composed morphisms do not share a coalgebra".into()));
        }
        Ok(CoalgebraMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: next.map.mul(&self.map),
        })
    }
}

/// `(g⊗g)∘Δ = Δ'∘g`, `g∘ψ = ψ'∘g`, `g∘φ = φ'∘g`.
pub fn validate_coalgebra_morphism(g: &CoalgebraMorphism) -> ValidationReport {
    let (src, tgt, m) = (&g.source, &g.target, &g.map);
    let n = src.dim();
    let mut report = ValidationReport::new("BiHom-coalgebra morphism")
        .with_parameter("source_dim", n)
        .with_parameter("target_dim", tgt.dim());
    report.record(
        "comultiplicativity",
        compare_maps(&kronecker(m, m).mul(&src.delta), &tgt.delta.mul(m), &[n]),
    );
    report.record("psi intertwining", compare_maps(&m.mul(&src.psi), &tgt.psi.mul(m), &[n]));
    report.record("phi intertwining", compare_maps(&m.mul(&src.phi), &tgt.phi.mul(m), &[n]));
    report
}
