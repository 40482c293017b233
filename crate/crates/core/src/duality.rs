//! Duals of finite-dimensional BiHom-algebras and the finite (Sweedler) dual.
//!
//! Functionals on an algebra of dimension `n` are coordinate vectors in the dual
//! basis `e_0*, …, e_{n-1}*`, so `⟨f, x⟩` is a dot product. The dual coalgebra of
//! `(G, μ, α, β)` is `(G*, μ*, β*, α*)`: `Δ = μᵀ`, `ψ = βᵀ`, `φ = αᵀ`.
//!
//! A [`SweedlerFunctional`] carries a witness ideal `J` with `f(J) = 0`. Its
//! comultiplication is computed the long way round: `f∘μ` is pushed down to
//! `(G/J) ⊗ (G/J)` (whose kernel is checked to be `J⊗G + G⊗J`), expanded in the
//! dual basis of the quotient, and pulled back along the projection, so every
//! tensor factor again carries the witness `J`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{
    is_ideal, intersect_ideals, preimage_ideal, same_algebra, validate_algebra, validate_morphism,
    AlgebraMorphism, AlgebraRef, FDBiHomAlgebra, IdealHandle, Twist,
};
use crate::coalgebra::{CoalgebraMorphism, FDBiHomCoalgebra};
use crate::error::Error;
use crate::linalg::{
    add_vectors, dot, kron_vector, quotient, scale_vector, tensor_projection_kernel,
    tensor_sum_subspace, Matrix, Rational, Subspace, Vector,
};
use crate::report::{unflatten, Location, ValidationReport, Witness};

fn dual_labels(labels: &[alloc::string::String]) -> Vec<alloc::string::String> {
    labels.iter().map(|l| format!("{}*", l)).collect()
}

/// `(G*, μ*, β*, α*)` without checking that `a` is a BiHom-algebra.
pub fn dual_coalgebra_unchecked(a: &FDBiHomAlgebra) -> FDBiHomCoalgebra {
    FDBiHomCoalgebra::new(
        dual_labels(a.labels()),
        a.mu().transpose(),
        a.beta().transpose(),
        a.alpha().transpose(),
    )
    .expect("transposed shapes agree")
}

/// The dual BiHom-coalgebra of a validated finite-dimensional BiHom-algebra.
pub fn dual_coalgebra(a: &FDBiHomAlgebra) -> Result<FDBiHomCoalgebra, Error> {
    let report = validate_algebra(a);
    if let Some(c) = report.failures().next() {
        return Err(Error::Contract(format!("dual of an invalid algebra ({} fails)", c.name)));
    }
    Ok(dual_coalgebra_unchecked(a))
}

/// `f* : G'* → G*` between the dual coalgebras.
pub fn dual_algebra_morphism(f: &AlgebraMorphism) -> CoalgebraMorphism {
    CoalgebraMorphism {
        source: Arc::new(dual_coalgebra_unchecked(&f.target)),
        target: Arc::new(dual_coalgebra_unchecked(&f.source)),
        map: f.map.transpose(),
    }
}

/// `⟨Δ(f), x ⊗ y⟩ = ⟨f, xy⟩` on every dual basis `f` and basis `x`, `y`, checked
/// entry by entry rather than through the transpose.
pub fn pairing_report(a: &FDBiHomAlgebra, c: &FDBiHomCoalgebra) -> ValidationReport {
    let n = a.dim();
    let mut report = ValidationReport::new("dual pairing").with_parameter("dim", n);
    let mut witness = None;
    'outer: for f in 0..n {
        for x in 0..n {
            for y in 0..n {
                let lhs = c.costructure_constant(f, x, y);
                let rhs = &a.basis_product(x, y)[f];
                if lhs != rhs {
                    witness = Some(Witness {
                        at: Location::Basis(alloc::vec![f, x, y]),
                        lhs: alloc::vec![lhs.clone()],
                        rhs: alloc::vec![rhs.clone()],
                    });
                    break 'outer;
                }
            }
        }
    }
    report.record("<Delta(f), x (x) y> = <f, xy>", witness);
    report
}

/// Computes `ker(π_A ⊗ π_B)` and `A⊗J + I⊗B` independently and checks they are
/// the same subspace, with quotient dimension `codim(I)·codim(J)`.
pub fn tensor_quotient_kernel(
    dim_a: usize,
    dim_b: usize,
    i: &Subspace,
    j: &Subspace,
) -> Result<(Subspace, ValidationReport), Error> {
    if i.ambient_dim() != dim_a || j.ambient_dim() != dim_b {
        return Err(Error::Input(format!(
            "subspaces live in K^{} and K^{}, expected K^{} and K^{}",
            i.ambient_dim(),
            j.ambient_dim(),
            dim_a,
            dim_b
        )));
    }
    let kernel = tensor_projection_kernel(&quotient(i), &quotient(j));
    let sum = tensor_sum_subspace(dim_a, dim_b, i, j);
    let mut report = ValidationReport::new("tensor quotient kernel")
        .with_parameter("dim_a", dim_a)
        .with_parameter("dim_b", dim_b);
    let witness = if kernel == sum {
        None
    } else {
        let stray = kernel
            .basis_vectors()
            .into_iter()
            .find(|v| !sum.contains(v))
            .or_else(|| sum.basis_vectors().into_iter().find(|v| !kernel.contains(v)))
            .unwrap_or_default();
        Some(Witness { at: Location::Vector(stray), lhs: Vec::new(), rhs: Vec::new() })
    };
    report.record("ker(pi_A (x) pi_B) = A (x) J + I (x) B", witness);
    let quotient_dim = dim_a * dim_b - kernel.dim();
    let expected = i.codim() * j.codim();
    let witness = (quotient_dim != expected).then(|| Witness {
        at: Location::Basis(Vec::new()),
        lhs: alloc::vec![Rational::from_integer(quotient_dim.into())],
        rhs: alloc::vec![Rational::from_integer(expected.into())],
    });
    report.record("dim quotient = codim(I) * codim(J)", witness);
    Ok((kernel, report))
}

/// A functional on `G` together with a witness ideal it annihilates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweedlerFunctional {
    algebra: AlgebraRef,
    coeffs: Vector,
    witness: IdealHandle,
}

impl SweedlerFunctional {
    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn witness(&self) -> &IdealHandle {
        &self.witness
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        dot(&self.coeffs, x)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Checks `⟨coeffs, v⟩ = 0` for every basis vector `v` of the witness.
pub(crate) fn check_annihilates(coeffs: &[Rational], s: &Subspace) -> Result<(), Error> {
    for (idx, v) in s.basis_vectors().iter().enumerate() {
        let value = dot(coeffs, v);
        if !value.is_zero() {
            return Err(Error::NotAnnihilated { basis_index: idx, value });
        }
    }
    Ok(())
}

pub fn sweedler_wrap(
    a: &AlgebraRef,
    coeffs: Vector,
    j: &IdealHandle,
) -> Result<SweedlerFunctional, Error> {
    if !same_algebra(a, j.algebra()) {
        return Err(Error::Input("witness ideal belongs to another algebra".into()));
    }
    if coeffs.len() != a.dim() {
        return Err(Error::Input(format!(
            "functional has {} coefficients, algebra has dimension {}",
            coeffs.len(),
            a.dim()
        )));
    }
    check_annihilates(&coeffs, j.subspace())?;
    Ok(SweedlerFunctional { algebra: a.clone(), coeffs, witness: j.clone() })
}

/// `f + g` with witness `J ∩ H`.
pub fn sweedler_add(
    f: &SweedlerFunctional,
    g: &SweedlerFunctional,
) -> Result<SweedlerFunctional, Error> {
    if !same_algebra(&f.algebra, &g.algebra) {
        return Err(Error::Input("functionals on different algebras".into()));
    }
    let witness = intersect_ideals(&f.witness, &g.witness)?;
    sweedler_wrap(&f.algebra, add_vectors(&f.coeffs, &g.coeffs), &witness)
}

pub fn sweedler_scale(f: &SweedlerFunctional, c: &Rational) -> SweedlerFunctional {
    SweedlerFunctional {
        algebra: f.algebra.clone(),
        coeffs: scale_vector(c, &f.coeffs),
        witness: f.witness.clone(),
    }
}

/// Sum of `left ⊗ right` as a dense `len(left) × len(right)` matrix.
pub fn rank_one_sum<'a>(
    rows: usize,
    cols: usize,
    terms: impl IntoIterator<Item = (&'a [Rational], &'a [Rational])>,
) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for (l, r) in terms {
        for (x, lx) in l.iter().enumerate() {
            if lx.is_zero() {
                continue;
            }
            for (y, ry) in r.iter().enumerate() {
                if !ry.is_zero() {
                    let v = m.get(x, y) + lx * ry;
                    m.set(x, y, v);
                }
            }
        }
    }
    m
}

/// `Δ(f)` as an explicit list of rank-one terms `left ⊗ right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweedlerDelta {
    pub dim: usize,
    pub terms: Vec<(SweedlerFunctional, SweedlerFunctional)>,
}

impl SweedlerDelta {
    /// Canonical form: entry `(x, y)` is `⟨Δ(f), e_x ⊗ e_y⟩`.
    pub fn tensor(&self) -> Matrix {
        rank_one_sum(
            self.dim,
            self.dim,
            self.terms.iter().map(|(l, r)| (l.coeffs(), r.coeffs())),
        )
    }
}

/// `Δ(f) = f∘μ`, built through the quotient `G/J` of the witness ideal.
pub fn sweedler_delta(f: &SweedlerFunctional) -> Result<SweedlerDelta, Error> {
    let a = &f.algebra;
    let n = a.dim();
    let j = f.witness.subspace();
    check_annihilates(&f.coeffs, j)
        .map_err(|e| Error::Contract(format!("functional does not kill its witness: {}", e)))?;
    let q = quotient(j);
    let (kernel, report) = tensor_quotient_kernel(n, n, j, j)?;
    if !report.passed() {
        return Err(Error::Contract("tensor quotient kernel mismatch".into()));
    }
    let f_mu = a.mu().apply_left(&f.coeffs);
    if let Some(v) = kernel.basis_vectors().iter().find(|v| !dot(&f_mu, v).is_zero()) {
        return Err(Error::Contract(format!(
            "f∘μ does not vanish on J⊗G + G⊗J at {}",
            crate::report::DisplayVector(v)
        )));
    }
    let codim = q.codim();
    let reps: Vec<Vector> = (0..codim).map(|i| q.section.column(i)).collect();
    let factors = (0..codim)
        .map(|i| sweedler_wrap(a, q.projection.row(i).to_vec(), &f.witness))
        .collect::<Result<Vec<_>, _>>()?;
    let mut terms = Vec::new();
    for (i, si) in reps.iter().enumerate() {
        for (jdx, sj) in reps.iter().enumerate() {
            let k = dot(&f_mu, &kron_vector(si, sj));
            if !k.is_zero() {
                terms.push((sweedler_scale(&factors[i], &k), factors[jdx].clone()));
            }
        }
    }
    Ok(SweedlerDelta { dim: n, terms })
}

/// `α°(f) = f∘α` or `β°(f) = f∘β`; the witness is unchanged since it is twist-stable.
pub fn sweedler_twist(f: &SweedlerFunctional, which: Twist) -> SweedlerFunctional {
    SweedlerFunctional {
        algebra: f.algebra.clone(),
        coeffs: f.algebra.twist(which).apply_left(&f.coeffs),
        witness: f.witness.clone(),
    }
}

/// `f°(b) = b∘f` with witness `f⁻¹(J)`.
pub fn sweedler_dual_morphism(
    f: &AlgebraMorphism,
    b: &SweedlerFunctional,
) -> Result<SweedlerFunctional, Error> {
    if !same_algebra(&f.target, &b.algebra) {
        return Err(Error::Input("functional is not on the morphism target".into()));
    }
    if !validate_morphism(f).passed() {
        return Err(Error::Contract("dual morphism requires a validated morphism".into()));
    }
    let witness = preimage_ideal(f, &b.witness)?;
    sweedler_wrap(&f.source, f.map.apply_left(&b.coeffs), &witness)
}

pub(crate) fn compare_tensors(lhs: &Matrix, rhs: &Matrix) -> Option<Witness> {
    let (rows, cols) = (lhs.rows(), lhs.cols());
    (0..rows * cols)
        .find(|&idx| lhs.entries()[idx] != rhs.entries()[idx])
        .map(|idx| Witness {
            at: Location::Basis(unflatten(idx, &[rows, cols])),
            lhs: alloc::vec![lhs.entries()[idx].clone()],
            rhs: alloc::vec![rhs.entries()[idx].clone()],
        })
}

pub(crate) fn compare_coeffs(lhs: &[Rational], rhs: &[Rational]) -> Option<Witness> {
    (lhs != rhs).then(|| Witness {
        at: Location::Basis(Vec::new()),
        lhs: lhs.to_vec(),
        rhs: rhs.to_vec(),
    })
}

/// For one functional `b` on the target: `Δ∘f° = (f°⊗f°)∘Δ'` and
/// `f°∘α'° = α°∘f°`, `f°∘β'° = β°∘f°`, all evaluated exactly.
pub fn dual_morphism_report(
    f: &AlgebraMorphism,
    b: &SweedlerFunctional,
) -> Result<ValidationReport, Error> {
    let fb = sweedler_dual_morphism(f, b)?;
    let mut report = ValidationReport::new("Sweedler dual morphism");
    let lhs = sweedler_delta(&fb)?.tensor();
    let pulled: Vec<(Vector, Vector)> = sweedler_delta(b)?
        .terms
        .iter()
        .map(|(l, r)| (f.map.apply_left(l.coeffs()), f.map.apply_left(r.coeffs())))
        .collect();
    let n = f.source.dim();
    let rhs = rank_one_sum(n, n, pulled.iter().map(|(l, r)| (l.as_slice(), r.as_slice())));
    report.record("Delta f° = (f° (x) f°) Delta'", compare_tensors(&lhs, &rhs));
    for which in [Twist::Alpha, Twist::Beta] {
        let lhs = sweedler_twist(&fb, which);
        let rhs = sweedler_dual_morphism(f, &sweedler_twist(b, which))?;
        report.record(format!("{}° f° = f° {}'°", which, which), compare_coeffs(&lhs.coeffs, &rhs.coeffs));
    }
    Ok(report)
}

/// Re-wraps every tensor factor of `Δ(f)`: each must annihilate the witness of `f`.
pub fn delta_factors_rewrap(f: &SweedlerFunctional, delta: &SweedlerDelta) -> Result<(), Error> {
    for (l, r) in &delta.terms {
        sweedler_wrap(&f.algebra, l.coeffs.clone(), &f.witness)?;
        sweedler_wrap(&f.algebra, r.coeffs.clone(), &f.witness)?;
    }
    Ok(())
}

/// Witness-free convenience: the zero ideal is finite-codimensional in finite dimension.
pub fn sweedler_from_dual(a: &AlgebraRef, coeffs: Vector) -> Result<SweedlerFunctional, Error> {
    let zero = is_ideal(a, &Subspace::zero(a.dim()))
        .map_err(|e| Error::Contract(format!("{}", e)))?;
    sweedler_wrap(a, coeffs, &zero)
}
