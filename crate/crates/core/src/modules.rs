//! Right BiHom-modules and comodules, and their duals.
//!
//! A module `(M, ρ, κ, τ)` over `(G, μ, α, β)` stores `ρ` as a
//! `dim_m × (dim_m·dim_g)` matrix with column `p·dim_g + j` holding `m_p·e_j`.
//! The laws are
//!
//! ```text
//! κ∘τ = τ∘κ
//! ρ∘(ρ⊗β) = ρ∘(κ⊗μ)
//! ρ∘(κ⊗α) = κ∘ρ
//! ρ∘(τ⊗β) = τ∘ρ
//! ```
//!
//! A comodule `(A, γ, ω, θ)` over `(C, Δ, ψ, φ)` stores `γ` as a
//! `(dim_a·dim_c) × dim_a` matrix, column `p` being `γ(a_p)`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{
    check_shape, intersect_ideals, same_algebra, sparse_tensor, validate_algebra, AlgebraRef,
    IdealHandle,
};
use crate::coalgebra::CoalgebraRef;
use crate::duality::{
    check_annihilates, compare_tensors, dual_coalgebra_unchecked, rank_one_sum, sweedler_wrap,
    SweedlerFunctional,
};
use crate::error::Error;
use crate::linalg::{
    add_vectors, dot, kron_vector, kronecker, quotient, scale_vector, unit, Matrix, Rational,
    Subspace, Vector,
};
use crate::report::{compare_maps, Location, ValidationReport, Witness};

pub const MODULE_ASSOCIATIVITY: &str = "module BiHom-associativity";
pub const KAPPA_MULTIPLICATIVITY: &str = "kappa-multiplicativity";
pub const TAU_MULTIPLICATIVITY: &str = "tau-multiplicativity";
pub const COMODULE_COASSOCIATIVITY: &str = "comodule BiHom-coassociativity";
pub const OMEGA_COMULTIPLICATIVITY: &str = "omega-comultiplicativity";
pub const THETA_COMULTIPLICATIVITY: &str = "theta-comultiplicativity";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDBiHomModule {
    algebra: AlgebraRef,
    dim_m: usize,
    rho: Matrix,
    kappa: Matrix,
    tau: Matrix,
}

pub type ModuleRef = Arc<FDBiHomModule>;

impl FDBiHomModule {
    pub fn new(
        algebra: AlgebraRef,
        dim_m: usize,
        rho: Matrix,
        kappa: Matrix,
        tau: Matrix,
    ) -> Result<Self, Error> {
        check_shape("rho", &rho, dim_m, dim_m * algebra.dim())?;
        check_shape("kappa", &kappa, dim_m, dim_m)?;
        check_shape("tau", &tau, dim_m, dim_m)?;
        Ok(FDBiHomModule { algebra, dim_m, rho, kappa, tau })
    }

    /// `(p, j, q, c)` entries meaning `r[p][j][q] = c` in `m_p·e_j = Σ r[p][j][q] m_q`.
    pub fn from_action_constants(
        algebra: AlgebraRef,
        dim_m: usize,
        entries: &[(usize, usize, usize, Rational)],
        kappa: Matrix,
        tau: Matrix,
    ) -> Result<Self, Error> {
        let rho = sparse_tensor(dim_m, algebra.dim(), dim_m, entries, "rho")?;
        FDBiHomModule::new(algebra, dim_m, rho, kappa, tau)
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim_m
    }

    pub fn rho(&self) -> &Matrix {
        &self.rho
    }

    pub fn kappa(&self) -> &Matrix {
        &self.kappa
    }

    pub fn tau(&self) -> &Matrix {
        &self.tau
    }

    pub fn action_constant(&self, p: usize, j: usize, q: usize) -> &Rational {
        self.rho.get(q, p * self.algebra.dim() + j)
    }

    /// `m·g`.
    pub fn act(&self, m: &[Rational], g: &[Rational]) -> Vector {
        self.rho.apply(&kron_vector(m, g))
    }

    pub fn with_twists(&self, kappa: Matrix, tau: Matrix) -> Result<Self, Error> {
        FDBiHomModule::new(self.algebra.clone(), self.dim_m, self.rho.clone(), kappa, tau)
    }
}

/// `(G, μ, α, β)` acting on itself.
pub fn regular_module(a: &AlgebraRef) -> FDBiHomModule {
    FDBiHomModule {
        algebra: a.clone(),
        dim_m: a.dim(),
        rho: a.mu().clone(),
        kappa: a.alpha().clone(),
        tau: a.beta().clone(),
    }
}

pub fn validate_module(m: &FDBiHomModule) -> ValidationReport {
    let (dm, dg) = (m.dim_m, m.algebra.dim());
    let a = &m.algebra;
    let (r, k, t) = (&m.rho, &m.kappa, &m.tau);
    let mut report = ValidationReport::new("right BiHom-module")
        .with_parameter("dim_m", dm)
        .with_parameter("dim_g", dg);
    report.record(crate::algebra::TWIST_COMMUTATION, compare_maps(&k.mul(t), &t.mul(k), &[dm]));
    report.record(
        MODULE_ASSOCIATIVITY,
        compare_maps(
            &r.mul(&kronecker(r, a.beta())),
            &r.mul(&kronecker(k, a.mu())),
            &[dm, dg, dg],
        ),
    );
    report.record(
        KAPPA_MULTIPLICATIVITY,
        compare_maps(&r.mul(&kronecker(k, a.alpha())), &k.mul(r), &[dm, dg]),
    );
    report.record(
        TAU_MULTIPLICATIVITY,
        compare_maps(&r.mul(&kronecker(t, a.beta())), &t.mul(r), &[dm, dg]),
    );
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDBiHomComodule {
    coalgebra: CoalgebraRef,
    dim_a: usize,
    gamma: Matrix,
    omega: Matrix,
    theta: Matrix,
}

pub type ComoduleRef = Arc<FDBiHomComodule>;

impl FDBiHomComodule {
    pub fn new(
        coalgebra: CoalgebraRef,
        dim_a: usize,
        gamma: Matrix,
        omega: Matrix,
        theta: Matrix,
    ) -> Result<Self, Error> {
        check_shape("gamma", &gamma, dim_a * coalgebra.dim(), dim_a)?;
        check_shape("omega", &omega, dim_a, dim_a)?;
        check_shape("theta", &theta, dim_a, dim_a)?;
        Ok(FDBiHomComodule { coalgebra, dim_a, gamma, omega, theta })
    }

    /// `(p, q, k, c)` entries meaning `γ(a_p)` has coefficient `c` on `a_q ⊗ c_k`.
    pub fn from_coaction_constants(
        coalgebra: CoalgebraRef,
        dim_a: usize,
        entries: &[(usize, usize, usize, Rational)],
        omega: Matrix,
        theta: Matrix,
    ) -> Result<Self, Error> {
        let dc = coalgebra.dim();
        for (p, q, k, _) in entries {
            if *p >= dim_a || *q >= dim_a || *k >= dc {
                return Err(Error::Input(format!(
                    "gamma entry ({}, {}, {}) out of range for dimensions ({}, {}, {})",
                    p, q, k, dim_a, dim_a, dc
                )));
            }
        }
        let flipped: Vec<_> = entries.iter().map(|(p, q, k, c)| (*q, *k, *p, c.clone())).collect();
        let gamma = sparse_tensor(dim_a, dc, dim_a, &flipped, "gamma")?.transpose();
        FDBiHomComodule::new(coalgebra, dim_a, gamma, omega, theta)
    }

    pub fn coalgebra(&self) -> &CoalgebraRef {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.dim_a
    }

    pub fn gamma(&self) -> &Matrix {
        &self.gamma
    }

    pub fn omega(&self) -> &Matrix {
        &self.omega
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    pub fn coaction_constant(&self, p: usize, q: usize, k: usize) -> &Rational {
        self.gamma.get(q * self.coalgebra.dim() + k, p)
    }

    pub fn coact(&self, x: &[Rational]) -> Vector {
        self.gamma.apply(x)
    }

    pub fn with_twists(&self, omega: Matrix, theta: Matrix) -> Result<Self, Error> {
        FDBiHomComodule::new(self.coalgebra.clone(), self.dim_a, self.gamma.clone(), omega, theta)
    }
}

/// `(γ⊗ψ)∘γ = (θ⊗Δ)∘γ`, `(ω⊗ψ)∘γ = γ∘ω`, `(θ⊗φ)∘γ = γ∘θ`, and `ω∘θ = θ∘ω`.
pub fn validate_comodule(a: &FDBiHomComodule) -> ValidationReport {
    let c = &a.coalgebra;
    let (g, w, t) = (&a.gamma, &a.omega, &a.theta);
    let n = a.dim_a;
    let mut report = ValidationReport::new("right BiHom-comodule")
        .with_parameter("dim_a", n)
        .with_parameter("dim_c", c.dim());
    report.record(crate::algebra::TWIST_COMMUTATION, compare_maps(&w.mul(t), &t.mul(w), &[n]));
    report.record(
        COMODULE_COASSOCIATIVITY,
        compare_maps(&kronecker(g, c.psi()).mul(g), &kronecker(t, c.delta()).mul(g), &[n]),
    );
    report.record(
        OMEGA_COMULTIPLICATIVITY,
        compare_maps(&kronecker(w, c.psi()).mul(g), &g.mul(w), &[n]),
    );
    report.record(
        THETA_COMULTIPLICATIVITY,
        compare_maps(&kronecker(t, c.phi()).mul(g), &g.mul(t), &[n]),
    );
    report
}

/// `σ : M → N`, a `dim N × dim M` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    pub source: ModuleRef,
    pub target: ModuleRef,
    pub map: Matrix,
}

impl ModuleMorphism {
    pub fn new(source: ModuleRef, target: ModuleRef, map: Matrix) -> Result<Self, Error> {
        check_shape("module morphism", &map, target.dim(), source.dim())?;
        Ok(ModuleMorphism { source, target, map })
    }
}

/// `σ∘ρ = ρ'∘(σ⊗Id)`, `κ'∘σ = σ∘κ`, `τ'∘σ = σ∘τ`.
pub fn validate_module_morphism(s: &ModuleMorphism) -> Result<ValidationReport, Error> {
    let (m, n, f) = (&s.source, &s.target, &s.map);
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::Input("modules over different algebras".into()));
    }
    let (dm, dg) = (m.dim_m, m.algebra.dim());
    let mut report = ValidationReport::new("module morphism")
        .with_parameter("source_dim", dm)
        .with_parameter("target_dim", n.dim_m);
    report.record(
        "action intertwining",
        compare_maps(&f.mul(&m.rho), &n.rho.mul(&kronecker(f, &Matrix::identity(dg))), &[dm, dg]),
    );
    report.record("kappa intertwining", compare_maps(&n.kappa.mul(f), &f.mul(&m.kappa), &[dm]));
    report.record("tau intertwining", compare_maps(&n.tau.mul(f), &f.mul(&m.tau), &[dm]));
    Ok(report)
}

/// `f : A → A'`, a `dim A' × dim A` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleMorphism {
    pub source: ComoduleRef,
    pub target: ComoduleRef,
    pub map: Matrix,
}

impl ComoduleMorphism {
    pub fn new(source: ComoduleRef, target: ComoduleRef, map: Matrix) -> Result<Self, Error> {
        check_shape("comodule morphism", &map, target.dim(), source.dim())?;
        Ok(ComoduleMorphism { source, target, map })
    }
}

/// `γ'∘f = (f⊗Id)∘γ`, `ω'∘f = f∘ω`, `θ'∘f = f∘θ`.
pub fn validate_comodule_morphism(h: &ComoduleMorphism) -> Result<ValidationReport, Error> {
    let (a, b, f) = (&h.source, &h.target, &h.map);
    if !(Arc::ptr_eq(&a.coalgebra, &b.coalgebra) || a.coalgebra == b.coalgebra) {
        return Err(Error::Input("comodules over different coalgebras".into()));
    }
    let (da, dc) = (a.dim_a, a.coalgebra.dim());
    let mut report = ValidationReport::new("comodule morphism")
        .with_parameter("source_dim", da)
        .with_parameter("target_dim", b.dim_a);
    report.record(
        "coaction intertwining",
        compare_maps(&b.gamma.mul(f), &kronecker(f, &Matrix::identity(dc)).mul(&a.gamma), &[da]),
    );
    report.record("omega intertwining", compare_maps(&b.omega.mul(f), &f.mul(&a.omega), &[da]));
    report.record("theta intertwining", compare_maps(&b.theta.mul(f), &f.mul(&a.theta), &[da]));
    Ok(report)
}

/// `(M*, ρ*, τ*, κ*)` over the dual coalgebra of the base algebra, without validation.
pub fn dual_comodule_unchecked(m: &FDBiHomModule) -> FDBiHomComodule {
    FDBiHomComodule {
        coalgebra: Arc::new(dual_coalgebra_unchecked(&m.algebra)),
        dim_a: m.dim_m,
        gamma: m.rho.transpose(),
        omega: m.tau.transpose(),
        theta: m.kappa.transpose(),
    }
}

pub fn dual_comodule(m: &FDBiHomModule) -> Result<FDBiHomComodule, Error> {
    if let Some(c) = validate_algebra(&m.algebra).failures().next() {
        return Err(Error::Contract(format!("base algebra is invalid ({} fails)", c.name)));
    }
    if let Some(c) = validate_module(m).failures().next() {
        return Err(Error::Contract(format!("dual of an invalid module ({} fails)", c.name)));
    }
    Ok(dual_comodule_unchecked(m))
}

/// `⟨γ(ξ), m ⊗ g⟩ = ⟨ξ, m·g⟩` on every dual basis `ξ` and basis `m`, `g`, entry by entry.
pub fn comodule_pairing_report(m: &FDBiHomModule, c: &FDBiHomComodule) -> ValidationReport {
    let (dm, dg) = (m.dim_m, m.algebra.dim());
    let mut report = ValidationReport::new("dual comodule pairing").with_parameter("dim_m", dm);
    let mut witness = None;
    'outer: for xi in 0..dm {
        for p in 0..dm {
            for j in 0..dg {
                let lhs = c.coaction_constant(xi, p, j);
                let rhs = &m.act(&unit(dm, p), &unit(dg, j))[xi];
                if lhs != rhs {
                    witness = Some(Witness {
                        at: Location::Basis(alloc::vec![xi, p, j]),
                        lhs: alloc::vec![lhs.clone()],
                        rhs: alloc::vec![rhs.clone()],
                    });
                    break 'outer;
                }
            }
        }
    }
    report.record("<gamma(xi), m (x) g> = <xi, m.g>", witness);
    report
}

/// `M·J`, the span of `m_p·v` over a basis of `J`, checked to be `κ`- and `τ`-stable.
pub fn product_submodule(m: &FDBiHomModule, j: &IdealHandle) -> Result<Subspace, Error> {
    if !same_algebra(&m.algebra, j.algebra()) {
        return Err(Error::Input("ideal belongs to another algebra".into()));
    }
    let dm = m.dim_m;
    let mut spanning = Vec::new();
    for v in j.subspace().basis_vectors() {
        for p in 0..dm {
            spanning.push(m.act(&unit(dm, p), &v));
        }
    }
    let mj = Subspace::span(dm, &spanning)?;
    for v in mj.basis_vectors() {
        for (name, t) in [("kappa", &m.kappa), ("tau", &m.tau)] {
            if !mj.contains(&t.apply(&v)) {
                return Err(Error::Contract(format!("M·J is not {}-stable", name)));
            }
        }
    }
    Ok(mj)
}

/// A functional on `M` with a witness ideal `J` of the base algebra; it kills `M·J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSweedlerFunctional {
    module: ModuleRef,
    coeffs: Vector,
    witness: IdealHandle,
}

impl ModuleSweedlerFunctional {
    pub fn module(&self) -> &ModuleRef {
        &self.module
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

pub fn module_sweedler_wrap(
    m: &ModuleRef,
    coeffs: Vector,
    j: &IdealHandle,
) -> Result<ModuleSweedlerFunctional, Error> {
    if coeffs.len() != m.dim_m {
        return Err(Error::Input(format!(
            "functional has {} coefficients, module has dimension {}",
            coeffs.len(),
            m.dim_m
        )));
    }
    let mj = product_submodule(m, j)?;
    check_annihilates(&coeffs, &mj)?;
    Ok(ModuleSweedlerFunctional { module: m.clone(), coeffs, witness: j.clone() })
}

/// `ξ + η` with witness `J ∩ H`.
pub fn module_sweedler_add(
    xi: &ModuleSweedlerFunctional,
    eta: &ModuleSweedlerFunctional,
) -> Result<ModuleSweedlerFunctional, Error> {
    if !(Arc::ptr_eq(&xi.module, &eta.module) || xi.module == eta.module) {
        return Err(Error::Input("functionals on different modules".into()));
    }
    let witness = intersect_ideals(&xi.witness, &eta.witness)?;
    module_sweedler_wrap(&xi.module, add_vectors(&xi.coeffs, &eta.coeffs), &witness)
}

pub fn module_sweedler_scale(xi: &ModuleSweedlerFunctional, c: &Rational) -> ModuleSweedlerFunctional {
    ModuleSweedlerFunctional {
        module: xi.module.clone(),
        coeffs: scale_vector(c, &xi.coeffs),
        witness: xi.witness.clone(),
    }
}

fn require_surjective_beta(a: &AlgebraRef) -> Result<(), Error> {
    if a.beta().rank() != a.dim() {
        return Err(Error::Precondition(format!(
            "the twisting map beta must be surjective (rank {} < dimension {}); \
             without it (M·J)·G need not lie in M·J",
            a.beta().rank(),
            a.dim()
        )));
    }
    Ok(())
}

/// `ρ°(ξ) = ξ∘ρ` as rank-one terms `left ⊗ right` with `left ∈ M°`, `right ∈ G°`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCoaction {
    pub dim_m: usize,
    pub dim_g: usize,
    pub terms: Vec<(ModuleSweedlerFunctional, SweedlerFunctional)>,
}

impl ModuleCoaction {
    /// Entry `(p, j)` is `⟨ρ°(ξ), m_p ⊗ e_j⟩`.
    pub fn tensor(&self) -> Matrix {
        rank_one_sum(
            self.dim_m,
            self.dim_g,
            self.terms.iter().map(|(l, r)| (l.coeffs(), r.coeffs())),
        )
    }
}

/// Pushes `ξ∘ρ` down to `(M/M·J) ⊗ (G/J)` and expands it in the dual bases there.
pub fn module_sweedler_coaction(xi: &ModuleSweedlerFunctional) -> Result<ModuleCoaction, Error> {
    let m = &xi.module;
    let a = &m.algebra;
    require_surjective_beta(a)?;
    let (dm, dg) = (m.dim_m, a.dim());
    let j = xi.witness.subspace();
    let mj = product_submodule(m, &xi.witness)?;
    check_annihilates(&xi.coeffs, &mj)
        .map_err(|e| Error::Contract(format!("functional does not kill M·J: {}", e)))?;
    let (kernel, report) = crate::duality::tensor_quotient_kernel(dm, dg, &mj, j)?;
    if !report.passed() {
        return Err(Error::Contract("tensor quotient kernel mismatch".into()));
    }
    let xi_rho = m.rho.apply_left(&xi.coeffs);
    if let Some(v) = kernel.basis_vectors().iter().find(|v| !dot(&xi_rho, v).is_zero()) {
        return Err(Error::Contract(format!(
            "ξ∘ρ does not vanish on M·J⊗G + M⊗J at {}",
            crate::report::DisplayVector(v)
        )));
    }
    let (qm, qg) = (quotient(&mj), quotient(j));
    let left = (0..qm.codim())
        .map(|p| module_sweedler_wrap(m, qm.projection.row(p).to_vec(), &xi.witness))
        .collect::<Result<Vec<_>, _>>()?;
    let right = (0..qg.codim())
        .map(|q| sweedler_wrap(a, qg.projection.row(q).to_vec(), &xi.witness))
        .collect::<Result<Vec<_>, _>>()?;
    let mut terms = Vec::new();
    for (p, l) in left.iter().enumerate() {
        let s = qm.section.column(p);
        for (q, r) in right.iter().enumerate() {
            let k = dot(&xi_rho, &kron_vector(&s, &qg.section.column(q)));
            if !k.is_zero() {
                terms.push((module_sweedler_scale(l, &k), r.clone()));
            }
        }
    }
    Ok(ModuleCoaction { dim_m: dm, dim_g: dg, terms })
}

/// `σ°(ξ) = ξ∘σ`; the witness stays `J`, except that the zero functional gets the full ideal.
pub fn dual_module_morphism(
    s: &ModuleMorphism,
    xi: &ModuleSweedlerFunctional,
) -> Result<ModuleSweedlerFunctional, Error> {
    if !(Arc::ptr_eq(&s.target, &xi.module) || *s.target == *xi.module) {
        return Err(Error::Input("functional is not on the morphism target".into()));
    }
    require_surjective_beta(&s.source.algebra)?;
    if !validate_module_morphism(s)?.passed() {
        return Err(Error::Contract("dual morphism requires a validated module morphism".into()));
    }
    let coeffs = s.map.apply_left(&xi.coeffs);
    let witness = if coeffs.iter().all(Zero::is_zero) {
        IdealHandle::full(&s.source.algebra)
    } else {
        xi.witness.clone()
    };
    module_sweedler_wrap(&s.source, coeffs, &witness)
}

/// `σ*` as a morphism between the dual comodules `N* → M*`.
pub fn transposed_module_morphism(s: &ModuleMorphism) -> ComoduleMorphism {
    ComoduleMorphism {
        source: Arc::new(dual_comodule_unchecked(&s.target)),
        target: Arc::new(dual_comodule_unchecked(&s.source)),
        map: s.map.transpose(),
    }
}

/// `ρ°∘σ° = (σ°⊗Id)∘ρ'°` on one functional `ξ` over the target, plus
/// `κ°σ° = σ°κ'°` and `τ°σ° = σ°τ'°`.
pub fn dual_module_morphism_report(
    s: &ModuleMorphism,
    xi: &ModuleSweedlerFunctional,
) -> Result<ValidationReport, Error> {
    let sx = dual_module_morphism(s, xi)?;
    let mut report = ValidationReport::new("module Sweedler dual morphism");
    let lhs = module_sweedler_coaction(&sx)?.tensor();
    let pulled: Vec<(Vector, Vector)> = module_sweedler_coaction(xi)?
        .terms
        .iter()
        .map(|(l, r)| (s.map.apply_left(l.coeffs()), r.coeffs().to_vec()))
        .collect();
    let rhs = rank_one_sum(
        s.source.dim_m,
        s.source.algebra.dim(),
        pulled.iter().map(|(l, r)| (l.as_slice(), r.as_slice())),
    );
    report.record("rho° sigma° = (sigma° (x) Id) rho'°", compare_tensors(&lhs, &rhs));
    for (name, src, tgt) in [
        ("kappa", &s.source.kappa, &s.target.kappa),
        ("tau", &s.source.tau, &s.target.tau),
    ] {
        let l = src.apply_left(&sx.coeffs);
        let r = s.map.apply_left(&tgt.apply_left(&xi.coeffs));
        report.record(format!("{}° sigma° = sigma° {}'°", name, name), crate::duality::compare_coeffs(&l, &r));
    }
    Ok(report)
}

/// Zero action with identity twists over `a`.
pub fn zero_module(a: &AlgebraRef, dim_m: usize) -> FDBiHomModule {
    let id = Matrix::identity(dim_m);
    FDBiHomModule {
        algebra: a.clone(),
        dim_m,
        rho: Matrix::zeros(dim_m, dim_m * a.dim()),
        kappa: id.clone(),
        tau: id,
    }
}

/// The zero functional, whose witness can always be the full ideal.
pub fn module_sweedler_zero(m: &ModuleRef) -> ModuleSweedlerFunctional {
    ModuleSweedlerFunctional {
        module: m.clone(),
        coeffs: crate::linalg::zeros(m.dim_m),
        witness: IdealHandle::full(&m.algebra),
    }
}
