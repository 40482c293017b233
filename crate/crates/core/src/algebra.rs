//! Finite-dimensional BiHom-associative algebras given by structure constants.
//!
//! An algebra `(G, μ, α, β)` of dimension `n` stores `μ` as an `n × n²` matrix
//! whose column `i·n + j` holds the coordinates of `e_i e_j`, so the constant
//! `c[i][j][k]` of `μ(e_i ⊗ e_j) = Σ_k c[i][j][k] e_k` sits at row `k`.
//! The axioms checked are
//!
//! ```text
//! α∘β = β∘α
//! α(g)(hk) = (gh)β(k)
//! α(hk) = α(h)α(k)
//! β(hk) = β(h)β(k)
//! ```
//!
//! Construction never validates; [`validate_algebra`] does.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::linalg::{
    kernel_basis, kron_vector, kronecker, quotient, unit, Matrix, Rational, Subspace, Vector,
};
use crate::report::{compare_maps, ValidationReport};

pub const TWIST_COMMUTATION: &str = "twist commutation";
pub const BIHOM_ASSOCIATIVITY: &str = "BiHom-associativity";
pub const ALPHA_MULTIPLICATIVITY: &str = "alpha-multiplicativity";
pub const BETA_MULTIPLICATIVITY: &str = "beta-multiplicativity";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Twist {
    Alpha,
    Beta,
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Twist::Alpha => "alpha",
            Twist::Beta => "beta",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDBiHomAlgebra {
    labels: Vec<String>,
    mu: Matrix,
    alpha: Matrix,
    beta: Matrix,
}

pub type AlgebraRef = Arc<FDBiHomAlgebra>;

pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{}{}", prefix, i)).collect()
}

impl FDBiHomAlgebra {
    /// `mu` is `dim × dim²`; `alpha` and `beta` are `dim × dim`.
    pub fn new(labels: Vec<String>, mu: Matrix, alpha: Matrix, beta: Matrix) -> Result<Self, Error> {
        let n = labels.len();
        check_shape("mu", &mu, n, n * n)?;
        check_shape("alpha", &alpha, n, n)?;
        check_shape("beta", &beta, n, n)?;
        Ok(FDBiHomAlgebra { labels, mu, alpha, beta })
    }

    /// Builds `μ` from sparse `(i, j, k, c)` entries meaning `c[i][j][k] = c`.
    /// Repeated entries are summed; omitted entries are zero.
    pub fn from_structure_constants(
        labels: Vec<String>,
        entries: &[(usize, usize, usize, Rational)],
        alpha: Matrix,
        beta: Matrix,
    ) -> Result<Self, Error> {
        let n = labels.len();
        let mu = sparse_tensor(n, n, n, entries, "mu")?;
        FDBiHomAlgebra::new(labels, mu, alpha, beta)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mu(&self) -> &Matrix {
        &self.mu
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn twist(&self, which: Twist) -> &Matrix {
        match which {
            Twist::Alpha => &self.alpha,
            Twist::Beta => &self.beta,
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.mu.get(k, i * self.dim() + j)
    }

    /// `x · y` for coordinate vectors.
    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.mu.apply(&kron_vector(x, y))
    }

    /// `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.mu.column(i * self.dim() + j)
    }

    /// Copy with one structure constant replaced; used to build mutants.
    pub fn with_structure_constant(&self, i: usize, j: usize, k: usize, value: Rational) -> Self {
        let mut out = self.clone();
        let n = self.dim();
        out.mu.set(k, i * n + j, value);
        out
    }

    pub fn with_twists(&self, alpha: Matrix, beta: Matrix) -> Result<Self, Error> {
        FDBiHomAlgebra::new(self.labels.clone(), self.mu.clone(), alpha, beta)
    }
}

pub(crate) fn check_shape(name: &str, m: &Matrix, rows: usize, cols: usize) -> Result<(), Error> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::Input(format!(
            "{} is {}x{}, expected {}x{}",
            name,
            m.rows(),
            m.cols(),
            rows,
            cols
        )));
    }
    Ok(())
}

/// Dense `rows × (a·b)` matrix from `(i, j, k, c)` entries placed at row `k`, column `i·b + j`.
pub(crate) fn sparse_tensor(
    a: usize,
    b: usize,
    rows: usize,
    entries: &[(usize, usize, usize, Rational)],
    name: &str,
) -> Result<Matrix, Error> {
    let mut m = Matrix::zeros(rows, a * b);
    for (i, j, k, c) in entries {
        if *i >= a || *j >= b || *k >= rows {
            return Err(Error::Input(format!(
                "{} entry ({}, {}, {}) out of range for dimensions ({}, {}, {})",
                name, i, j, k, a, b, rows
            )));
        }
        let col = i * b + j;
        let v = m.get(*k, col) + c;
        m.set(*k, col, v);
    }
    Ok(m)
}

/// Exhaustive check of the four BiHom-algebra axioms.
pub fn validate_algebra(a: &FDBiHomAlgebra) -> ValidationReport {
    let n = a.dim();
    let (mu, alpha, beta) = (&a.mu, &a.alpha, &a.beta);
    let mut report = ValidationReport::new("BiHom-algebra").with_parameter("dim", n);
    report.record(TWIST_COMMUTATION, compare_maps(&alpha.mul(beta), &beta.mul(alpha), &[n]));
    // μ∘(α⊗μ) and μ∘(μ⊗β) as maps G⊗G⊗G → G; column (i·n + j)·n + k is e_i⊗e_j⊗e_k.
    let lhs = mu.mul(&kronecker(alpha, mu));
    let rhs = mu.mul(&kronecker(mu, beta));
    report.record(BIHOM_ASSOCIATIVITY, compare_maps(&lhs, &rhs, &[n, n, n]));
    report.record(
        ALPHA_MULTIPLICATIVITY,
        compare_maps(&alpha.mul(mu), &mu.mul(&kronecker(alpha, alpha)), &[n, n]),
    );
    report.record(
        BETA_MULTIPLICATIVITY,
        compare_maps(&beta.mul(mu), &mu.mul(&kronecker(beta, beta)), &[n, n]),
    );
    report
}

/// Checks the inputs of [`yau_twist`]: associativity of the core product,
/// both maps being endomorphisms of it, and commutation.
pub fn check_yau_inputs(assoc_mu: &Matrix, alpha: &Matrix, beta: &Matrix) -> ValidationReport {
    let n = alpha.rows();
    let mut report = ValidationReport::new("Yau twist inputs").with_parameter("dim", n);
    let id = Matrix::identity(n);
    report.record(
        "associativity",
        compare_maps(
            &assoc_mu.mul(&kronecker(&id, assoc_mu)),
            &assoc_mu.mul(&kronecker(assoc_mu, &id)),
            &[n, n, n],
        ),
    );
    report.record(
        "alpha is an endomorphism",
        compare_maps(&alpha.mul(assoc_mu), &assoc_mu.mul(&kronecker(alpha, alpha)), &[n, n]),
    );
    report.record(
        "beta is an endomorphism",
        compare_maps(&beta.mul(assoc_mu), &assoc_mu.mul(&kronecker(beta, beta)), &[n, n]),
    );
    report.record(TWIST_COMMUTATION, compare_maps(&alpha.mul(beta), &beta.mul(alpha), &[n]));
    report
}

/// `μ(g ⊗ h) := assoc(α(g) ⊗ β(h))` for an associative product and two commuting
/// endomorphisms of it.
pub fn yau_twist(
    labels: Vec<String>,
    assoc_mu: &Matrix,
    alpha: &Matrix,
    beta: &Matrix,
) -> Result<FDBiHomAlgebra, Error> {
    let n = labels.len();
    check_shape("assoc_mu", assoc_mu, n, n * n)?;
    check_shape("alpha", alpha, n, n)?;
    check_shape("beta", beta, n, n)?;
    let report = check_yau_inputs(assoc_mu, alpha, beta);
    if let Some(c) = report.failures().next() {
        let at = c.witness.as_ref().map(|w| format!(" at {}", w.at)).unwrap_or_default();
        return Err(Error::Precondition(format!("Yau twist input fails {}{}", c.name, at)));
    }
    let mu = assoc_mu.mul(&kronecker(alpha, beta));
    FDBiHomAlgebra::new(labels, mu, alpha.clone(), beta.clone())
}

/// A linear map between two algebras, `target.dim × source.dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub source: AlgebraRef,
    pub target: AlgebraRef,
    pub map: Matrix,
}

impl AlgebraMorphism {
    pub fn new(source: AlgebraRef, target: AlgebraRef, map: Matrix) -> Result<Self, Error> {
        check_shape("morphism", &map, target.dim(), source.dim())?;
        Ok(AlgebraMorphism { source, target, map })
    }

    pub fn identity(a: &AlgebraRef) -> Self {
        AlgebraMorphism { source: a.clone(), target: a.clone(), map: Matrix::identity(a.dim()) }
    }

    pub fn zero(source: &AlgebraRef, target: &AlgebraRef) -> Self {
        AlgebraMorphism {
            source: source.clone(),
            target: target.clone(),
            map: Matrix::zeros(target.dim(), source.dim()),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &AlgebraMorphism) -> Result<AlgebraMorphism, Error> {
        if !same_algebra(&self.target, &next.source) {
            return Err(Error::Input("composed morphisms do not share an algebra".into()));
        }
        Ok(AlgebraMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: next.map.mul(&self.map),
        })
    }
}

pub fn same_algebra(a: &AlgebraRef, b: &AlgebraRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// `μ'∘(f⊗f) = f∘μ`, `f∘α = α'∘f`, `f∘β = β'∘f`, each exhaustively on basis tensors.
pub fn validate_morphism(f: &AlgebraMorphism) -> ValidationReport {
    let (src, tgt, m) = (&f.source, &f.target, &f.map);
    let n = src.dim();
    let mut report = ValidationReport::new("BiHom-algebra morphism")
        .with_parameter("source_dim", n)
        .with_parameter("target_dim", tgt.dim());
    report.record(
        "multiplicativity",
        compare_maps(&tgt.mu.mul(&kronecker(m, m)), &m.mul(&src.mu), &[n, n]),
    );
    report.record(
        "alpha intertwining",
        compare_maps(&m.mul(&src.alpha), &tgt.alpha.mul(m), &[n]),
    );
    report.record("beta intertwining", compare_maps(&m.mul(&src.beta), &tgt.beta.mul(m), &[n]));
    report
}

/// A verified two-sided, twist-stable ideal.
///
/// Only [`is_ideal`] (and the operations built on it) produce these, so the flags
/// always read `true`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealHandle {
    algebra: AlgebraRef,
    subspace: Subspace,
    twist_closed: bool,
    absorbing: bool,
    codim: usize,
}

impl IdealHandle {
    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn twist_closed(&self) -> bool {
        self.twist_closed
    }

    pub fn absorbing(&self) -> bool {
        self.absorbing
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn zero(a: &AlgebraRef) -> IdealHandle {
        IdealHandle {
            algebra: a.clone(),
            subspace: Subspace::zero(a.dim()),
            twist_closed: true,
            absorbing: true,
            codim: a.dim(),
        }
    }

    pub fn full(a: &AlgebraRef) -> IdealHandle {
        IdealHandle {
            algebra: a.clone(),
            subspace: Subspace::full(a.dim()),
            twist_closed: true,
            absorbing: true,
            codim: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealCondition {
    AmbientDimension,
    LeftAbsorption,
    RightAbsorption,
    AlphaClosure,
    BetaClosure,
}

/// Why a subspace is not an ideal: the offending image `image` of ideal basis
/// vector `ideal_vector` (multiplied by `e_generator` for the absorption conditions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFailure {
    pub condition: IdealCondition,
    pub generator: Option<usize>,
    pub ideal_vector: usize,
    pub image: Vector,
}

impl fmt::Display for IdealFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails for ideal basis vector {}", self.condition, self.ideal_vector)?;
        if let Some(g) = self.generator {
            write!(f, " with e{}", g)?;
        }
        write!(f, ": image {} leaves the subspace", crate::report::DisplayVector(&self.image))
    }
}

/// Verifies two-sided absorption (`e_i·v`, `v·e_i ∈ s`) and twist closure
/// (`α(v)`, `β(v) ∈ s`) on every basis vector `v` of `s`.
pub fn is_ideal(a: &AlgebraRef, s: &Subspace) -> Result<IdealHandle, IdealFailure> {
    let n = a.dim();
    if s.ambient_dim() != n {
        return Err(IdealFailure {
            condition: IdealCondition::AmbientDimension,
            generator: None,
            ideal_vector: 0,
            image: Vec::new(),
        });
    }
    for (idx, v) in s.basis_vectors().iter().enumerate() {
        for i in 0..n {
            let e = unit(n, i);
            let left = a.multiply(&e, v);
            if !s.contains(&left) {
                return Err(IdealFailure {
                    condition: IdealCondition::LeftAbsorption,
                    generator: Some(i),
                    ideal_vector: idx,
                    image: left,
                });
            }
            let right = a.multiply(v, &e);
            if !s.contains(&right) {
                return Err(IdealFailure {
                    condition: IdealCondition::RightAbsorption,
                    generator: Some(i),
                    ideal_vector: idx,
                    image: right,
                });
            }
        }
        for (cond, m) in
            [(IdealCondition::AlphaClosure, &a.alpha), (IdealCondition::BetaClosure, &a.beta)]
        {
            let img = m.apply(v);
            if !s.contains(&img) {
                return Err(IdealFailure { condition: cond, generator: None, ideal_vector: idx, image: img });
            }
        }
    }
    Ok(IdealHandle {
        algebra: a.clone(),
        subspace: s.clone(),
        twist_closed: true,
        absorbing: true,
        codim: s.codim(),
    })
}

/// Smallest twist-stable two-sided ideal containing `generators`.
pub fn ideal_closure(a: &AlgebraRef, generators: &[Vector]) -> Result<IdealHandle, Error> {
    let n = a.dim();
    let mut current = Subspace::span(n, generators)?;
    // Each non-final pass raises the dimension, so at most n + 1 passes run.
    for _ in 0..=n {
        let mut spanning = current.basis_vectors();
        for v in current.basis_vectors() {
            for i in 0..n {
                let e = unit(n, i);
                spanning.push(a.multiply(&e, &v));
                spanning.push(a.multiply(&v, &e));
            }
            spanning.push(a.alpha.apply(&v));
            spanning.push(a.beta.apply(&v));
        }
        let next = Subspace::span(n, &spanning)?;
        if next.dim() == current.dim() {
            break;
        }
        current = next;
    }
    is_ideal(a, &current).map_err(|e| Error::Contract(format!("closure is not an ideal: {}", e)))
}

fn require_same(a: &AlgebraRef, b: &AlgebraRef, what: &str) -> Result<(), Error> {
    if same_algebra(a, b) {
        Ok(())
    } else {
        Err(Error::Input(format!("{} belong to different algebras", what)))
    }
}

/// `J ∩ H`, re-verified as an ideal, with the codimension identity
/// `dim(G/(J∩H)) = dim(G/H) + dim(H/(J∩H))` checked exactly.
pub fn intersect_ideals(j: &IdealHandle, h: &IdealHandle) -> Result<IdealHandle, Error> {
    require_same(&j.algebra, &h.algebra, "ideals")?;
    let s = crate::linalg::intersect(&j.subspace, &h.subspace)?;
    let k = is_ideal(&j.algebra, &s)
        .map_err(|e| Error::Contract(format!("intersection is not an ideal: {}", e)))?;
    if k.codim != h.codim + (h.dim() - k.dim()) {
        return Err(Error::Contract("codimension identity for J ∩ H fails".into()));
    }
    Ok(k)
}

/// `f⁻¹(J) = {v : f(v) ∈ J}`, the kernel of `G → G'/J`.
pub fn preimage_ideal(f: &AlgebraMorphism, j: &IdealHandle) -> Result<IdealHandle, Error> {
    require_same(&f.target, &j.algebra, "morphism target and ideal")?;
    if !validate_morphism(f).passed() {
        return Err(Error::Contract("preimage requires a validated morphism".into()));
    }
    let q = quotient(&j.subspace);
    let composite = q.projection.mul(&f.map);
    let s = kernel_basis(&composite);
    let pre = is_ideal(&f.source, &s)
        .map_err(|e| Error::Contract(format!("preimage is not an ideal: {}", e)))?;
    if pre.codim > j.codim {
        return Err(Error::Contract("preimage codimension exceeds target codimension".into()));
    }
    Ok(pre)
}

/// `G/J` with structure pushed through the projection, and the canonical map `π`.
pub fn quotient_algebra(
    a: &AlgebraRef,
    j: &IdealHandle,
) -> Result<(AlgebraRef, AlgebraMorphism), Error> {
    require_same(a, &j.algebra, "algebra and ideal")?;
    let q = quotient(&j.subspace);
    let (p, s) = (&q.projection, &q.section);
    let mu = p.mul(&a.mu).mul(&kronecker(s, s));
    let alpha = p.mul(&a.alpha).mul(s);
    let beta = p.mul(&a.beta).mul(s);
    let labels = q.representatives.iter().map(|&r| format!("[{}]", a.labels[r])).collect();
    let quotient = Arc::new(FDBiHomAlgebra::new(labels, mu, alpha, beta)?);
    let pi = AlgebraMorphism { source: a.clone(), target: quotient.clone(), map: p.clone() };
    Ok((quotient, pi))
}

/// The unique `f̄` with `f̄∘π = f`, given `ker π ⊆ ker f` and `π` surjective.
pub fn factor_through_quotient(
    f: &AlgebraMorphism,
    pi: &AlgebraMorphism,
) -> Result<AlgebraMorphism, Error> {
    require_same(&f.source, &pi.source, "f and π sources")?;
    for v in kernel_basis(&pi.map).basis_vectors() {
        if !crate::linalg::is_zero_vector(&f.map.apply(&v)) {
            return Err(Error::Precondition(format!(
                "ker π ⊄ ker f: f does not vanish on {}",
                crate::report::DisplayVector(&v)
            )));
        }
    }
    let section = right_inverse(&pi.map)
        .ok_or_else(|| Error::Precondition("π is not surjective".into()))?;
    let map = f.map.mul(&section);
    if map.mul(&pi.map) != f.map {
        return Err(Error::Contract("f̄∘π ≠ f".into()));
    }
    Ok(AlgebraMorphism { source: pi.target.clone(), target: f.target.clone(), map })
}

/// `S` with `m·S = I` for a full-row-rank `m`, supported on the pivot columns of `m`.
pub(crate) fn right_inverse(m: &Matrix) -> Option<Matrix> {
    let (_, pivots) = crate::linalg::rref(m);
    if pivots.len() != m.rows() {
        return None;
    }
    let cols: Vec<Vector> = pivots.iter().map(|&p| m.column(p)).collect();
    let inv = Matrix::from_columns(m.rows(), &cols).inverse()?;
    let mut s = Matrix::zeros(m.cols(), m.rows());
    for (r, &p) in pivots.iter().enumerate() {
        for c in 0..m.rows() {
            s.set(p, c, inv.get(r, c).clone());
        }
    }
    Some(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{e1, zero_algebra};
    use crate::linalg::int;
    use crate::report::Location;
    use alloc::vec;

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        let vs: Vec<Vector> = vs.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect();
        Subspace::span(n, &vs).unwrap()
    }

    #[test]
    fn e1_table_matches_hand_expansion() {
        let a = e1();
        assert_eq!(a.basis_product(0, 0), [int(1), int(0)]);
        assert_eq!(a.basis_product(0, 1), [int(0), int(3)]);
        assert_eq!(a.basis_product(1, 0), [int(0), int(2)]);
        assert_eq!(a.basis_product(1, 1), [int(0), int(0)]);
    }

    #[test]
    fn zero_algebra_validates() {
        assert!(validate_algebra(&zero_algebra(3)).passed());
    }

    #[test]
    fn e1_validates_and_mutant_fails_at_e0_e0_e1() {
        assert!(validate_algebra(&e1()).passed());
        let mutant = e1().with_structure_constant(0, 1, 1, int(4));
        let report = validate_algebra(&mutant);
        let c = report.check(BIHOM_ASSOCIATIVITY).unwrap();
        assert!(!c.passed);
        let w = c.witness.as_ref().unwrap();
        assert_eq!(w.at, Location::Basis(vec![0, 0, 1]));
        // α(e0)(e0e1) = e0·4e1 = 16e1, (e0e0)β(e1) = e0·3e1 = 12e1
        assert_eq!(w.lhs, [int(0), int(16)]);
        assert_eq!(w.rhs, [int(0), int(12)]);
    }

    #[test]
    fn yau_twist_classical_case() {
        let core = crate::fixtures::dual_numbers_product();
        let id = Matrix::identity(2);
        let a = yau_twist(default_labels("e", 2), &core, &id, &id).unwrap();
        assert_eq!(a.mu(), &core);
        assert!(validate_algebra(&a).passed());
    }

    #[test]
    fn yau_twist_rejects_non_endomorphism() {
        let core = crate::fixtures::dual_numbers_product();
        // α(1) = 2·1 is not multiplicative: α(1·1) = 2 but α(1)α(1) = 4.
        let alpha = Matrix::diagonal(&[int(2), int(1)]);
        let err = yau_twist(default_labels("e", 2), &core, &alpha, &Matrix::identity(2)).unwrap_err();
        assert!(matches!(err, Error::Precondition(msg) if msg.contains("alpha is an endomorphism")));
    }

    #[test]
    fn morphism_examples_on_e1() {
        let a = Arc::new(e1());
        assert!(validate_morphism(&AlgebraMorphism::identity(&a)).passed());
        assert!(validate_morphism(&AlgebraMorphism::zero(&a, &a)).passed());
        let f = AlgebraMorphism::new(a.clone(), a.clone(), Matrix::diagonal(&[int(1), int(2)])).unwrap();
        assert!(validate_morphism(&f).passed());
        let bad = AlgebraMorphism::new(a.clone(), a.clone(), Matrix::from_i64(2, 2, &[0, 0, 1, 0])).unwrap();
        assert!(!validate_morphism(&bad).passed());
        assert!(AlgebraMorphism::new(a.clone(), a, Matrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn ideal_examples_on_e1() {
        let a = Arc::new(e1());
        let z = is_ideal(&a, &Subspace::zero(2)).unwrap();
        assert_eq!(z.codim(), 2);
        let f = is_ideal(&a, &Subspace::full(2)).unwrap();
        assert_eq!(f.codim(), 0);
        let j = is_ideal(&a, &span(2, &[&[0, 1]])).unwrap();
        assert_eq!(j.codim(), 1);
        assert!(j.twist_closed() && j.absorbing());
        let err = is_ideal(&a, &span(2, &[&[1, 0]])).unwrap_err();
        assert_eq!(err.condition, IdealCondition::LeftAbsorption);
        assert_eq!(err.generator, Some(1));
        let err = is_ideal(&a, &Subspace::zero(3)).unwrap_err();
        assert_eq!(err.condition, IdealCondition::AmbientDimension);
    }

    #[test]
    fn twist_closure_is_enforced() {
        // zero product, so every subspace absorbs; α swaps the coordinates.
        let a = Arc::new(
            FDBiHomAlgebra::new(
                default_labels("e", 2),
                Matrix::zeros(2, 4),
                Matrix::from_i64(2, 2, &[0, 1, 1, 0]),
                Matrix::identity(2),
            )
            .unwrap(),
        );
        let err = is_ideal(&a, &span(2, &[&[1, 0]])).unwrap_err();
        assert_eq!(err.condition, IdealCondition::AlphaClosure);
    }

    #[test]
    fn closure_examples() {
        let a = Arc::new(e1());
        assert_eq!(ideal_closure(&a, &[]).unwrap().subspace(), &Subspace::zero(2));
        assert_eq!(
            ideal_closure(&a, &[vec![int(0), int(1)]]).unwrap().subspace(),
            &span(2, &[&[0, 1]])
        );
        assert_eq!(ideal_closure(&a, &[vec![int(1), int(0)]]).unwrap().subspace(), &Subspace::full(2));
    }

    #[test]
    fn intersection_examples() {
        let a = Arc::new(e1());
        let j = is_ideal(&a, &span(2, &[&[0, 1]])).unwrap();
        assert_eq!(intersect_ideals(&j, &j).unwrap(), j);
        assert_eq!(intersect_ideals(&j, &IdealHandle::full(&a)).unwrap(), j);
        let z = Arc::new(zero_algebra(2));
        let x = is_ideal(&z, &span(2, &[&[1, 0]])).unwrap();
        let y = is_ideal(&z, &span(2, &[&[0, 1]])).unwrap();
        let k = intersect_ideals(&x, &y).unwrap();
        assert_eq!(k.dim(), 0);
        assert_eq!(k.codim(), y.codim() + (y.dim() - k.dim()));
        assert!(intersect_ideals(&j, &x).is_err());
    }

    #[test]
    fn preimage_examples() {
        let a = Arc::new(e1());
        let j = is_ideal(&a, &span(2, &[&[0, 1]])).unwrap();
        let id = AlgebraMorphism::identity(&a);
        assert_eq!(preimage_ideal(&id, &j).unwrap(), j);
        let zero = AlgebraMorphism::zero(&a, &a);
        assert_eq!(preimage_ideal(&zero, &j).unwrap().subspace(), &Subspace::full(2));
        let f = AlgebraMorphism::new(a.clone(), a.clone(), Matrix::diagonal(&[int(1), int(2)])).unwrap();
        let p = preimage_ideal(&f, &j).unwrap();
        assert_eq!(p.subspace(), j.subspace());
        assert!(p.codim() <= j.codim());
        let bad = AlgebraMorphism::new(a.clone(), a, Matrix::from_i64(2, 2, &[0, 0, 1, 0])).unwrap();
        assert!(matches!(preimage_ideal(&bad, &j), Err(Error::Contract(_))));
    }

    #[test]
    fn quotient_examples() {
        let a = Arc::new(e1());
        let (q0, pi0) = quotient_algebra(&a, &IdealHandle::zero(&a)).unwrap();
        assert_eq!(q0.mu(), a.mu());
        assert_eq!(pi0.map, Matrix::identity(2));
        let (qf, _) = quotient_algebra(&a, &IdealHandle::full(&a)).unwrap();
        assert_eq!(qf.dim(), 0);
        assert!(validate_algebra(&qf).passed());
        let j = is_ideal(&a, &span(2, &[&[0, 1]])).unwrap();
        let (q, pi) = quotient_algebra(&a, &j).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.basis_product(0, 0), [int(1)]);
        assert_eq!(q.alpha(), &Matrix::identity(1));
        assert_eq!(q.beta(), &Matrix::identity(1));
        assert!(validate_algebra(&q).passed());
        assert!(validate_morphism(&pi).passed());
        assert_eq!(&kernel_basis(&pi.map), j.subspace());
    }

    #[test]
    fn factor_examples() {
        let a = Arc::new(e1());
        let j = is_ideal(&a, &span(2, &[&[0, 1]])).unwrap();
        let (q, pi) = quotient_algebra(&a, &j).unwrap();
        let fbar = factor_through_quotient(&pi, &pi).unwrap();
        assert_eq!(fbar.map, Matrix::identity(1));
        let zero = AlgebraMorphism::zero(&a, &q);
        assert!(factor_through_quotient(&zero, &pi).unwrap().map.is_zero());
        let alpha = AlgebraMorphism::new(a.clone(), a.clone(), a.alpha().clone()).unwrap();
        let f = alpha.then(&pi).unwrap();
        let fbar = factor_through_quotient(&f, &pi).unwrap();
        assert_eq!(fbar.map.mul(&pi.map), f.map);
        assert!(validate_morphism(&fbar).passed());
        // identity does not vanish on ker π
        let err = factor_through_quotient(&AlgebraMorphism::identity(&a), &pi).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }
}
