//! The polynomial BiHom-algebra `K[x_1, …, x_r]` twisted by commuting linear substitutions.
//!
//! `α(x_k) = Σ_l a_lk x_l` (column `k` of `A`), likewise `β` with `B`, and the
//! product is `x^m · x^n = α(x^m) β(x^n)`. Everything is graded by total degree,
//! so all infinite-dimensional questions are answered exactly below an explicit
//! degree bound that is recorded in every report.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Twist;
use crate::error::Error;
use crate::linalg::{Matrix, Rational};
use crate::report::{Location, ValidationReport, Witness};

/// Exponent vector `(m_1, …, m_r)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(r: usize) -> Self {
        MultiIndex(vec![0; r])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All `(i, j)` with `i + j = self` componentwise, `i` ascending.
    pub fn splittings(&self) -> Vec<(MultiIndex, MultiIndex)> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.len()];
        loop {
            let rest = self.0.iter().zip(&cur).map(|(n, i)| n - i).collect();
            out.push((MultiIndex(cur.clone()), MultiIndex(rest)));
            // odometer increment bounded by self
            let mut k = self.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < self.0[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 0;
            }
        }
    }

    /// Every multi-index of length `r` and total degree exactly `d`, in lexicographic order.
    pub fn of_degree(r: usize, d: u32) -> Vec<MultiIndex> {
        fn go(r: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == r {
                prefix.push(d);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=d).rev() {
                prefix.push(first);
                go(r, d - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if r == 0 {
            if d == 0 {
                out.push(MultiIndex(Vec::new()));
            }
            return out;
        }
        go(r, d, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Every multi-index of length `r` with total degree at most `d`.
    pub fn up_to_degree(r: usize, d: u32) -> Vec<MultiIndex> {
        (0..=d).flat_map(|k| MultiIndex::of_degree(r, k)).collect()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

/// A polynomial in `r` variables; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    r: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Poly {
    pub fn zero(r: usize) -> Self {
        Poly { r, terms: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        Poly::monomial(MultiIndex::zero(r), Rational::one())
    }

    pub fn monomial(m: MultiIndex, c: Rational) -> Self {
        let mut p = Poly::zero(m.len());
        p.add_term(m, c);
        p
    }

    /// `x_l` as a polynomial in `r` variables.
    pub fn variable(r: usize, l: usize) -> Self {
        let mut m = MultiIndex::zero(r);
        m.0[l] = 1;
        Poly::monomial(m, Rational::one())
    }

    pub fn nvars(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &MultiIndex) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut out = Poly::zero(self.r);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Ordinary commutative product.
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.r);
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.add(n), c * d);
            }
        }
        out
    }

    /// Value at `x_1 = … = x_r = 1`.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().cloned().fold(Rational::zero(), |a, b| a + b)
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(MultiIndex::degree)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*x^{}", c, m)?;
        }
        Ok(())
    }
}

/// `K[x_1, …, x_r]` with `α`, `β` given by commuting `r × r` matrices `A`, `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyBiHomAlgebra {
    r: usize,
    a: Matrix,
    b: Matrix,
}

impl PolyBiHomAlgebra {
    pub fn new(a: Matrix, b: Matrix) -> Result<Self, Error> {
        let r = a.rows();
        if !a.is_square() || b.rows() != r || b.cols() != r {
            return Err(Error::Input(format!(
                "A is {}x{} and B is {}x{}, both must be r x r",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        if a.mul(&b) != b.mul(&a) {
            return Err(Error::Precondition("A and B do not commute".into()));
        }
        Ok(PolyBiHomAlgebra { r, a, b })
    }

    pub fn nvars(&self) -> usize {
        self.r
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn matrix(&self, which: Twist) -> &Matrix {
        match which {
            Twist::Alpha => &self.a,
            Twist::Beta => &self.b,
        }
    }

    fn check_index(&self, m: &MultiIndex) -> Result<(), Error> {
        if m.len() != self.r {
            return Err(Error::Input(format!("multi-index {} has length {}, expected {}", m, m.len(), self.r)));
        }
        Ok(())
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn pow(c: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * c)
}

/// `∏_k (Σ_l P_lk x_l)^{m_k}`, expanded as a sum over matrices `(m_lk)` whose
/// column `k` sums to `m_k`; the term has exponent `p_l = Σ_k m_lk` and
/// coefficient `∏_k m_k!/∏_l m_lk! · ∏ P_lk^{m_lk}`.
pub fn twist_apply(alg: &PolyBiHomAlgebra, which: Twist, m: &MultiIndex) -> Result<Poly, Error> {
    alg.check_index(m)?;
    let p = alg.matrix(which);
    let r = alg.r;
    let mut out = Poly::zero(r);

    struct Walk<'a> {
        p: &'a Matrix,
        m: &'a MultiIndex,
        r: usize,
        exps: Vec<u32>,
        out: &'a mut Poly,
    }

    impl Walk<'_> {
        // Fill column k, row l with `left` units of m_k still to place.
        fn go(&mut self, k: usize, l: usize, left: u32, coeff: Rational) {
            if k == self.r {
                self.out.add_term(MultiIndex(self.exps.clone()), coeff);
                return;
            }
            if l + 1 == self.r {
                let c = coeff * pow(self.p.get(l, k), left) / Rational::from_integer(factorial(left));
                self.exps[l] += left;
                let next_left = if k + 1 < self.r { self.m.0[k + 1] } else { 0 };
                let c = if k + 1 < self.r { c * Rational::from_integer(factorial(next_left)) } else { c };
                self.go(k + 1, 0, next_left, c);
                self.exps[l] -= left;
                return;
            }
            for take in 0..=left {
                let entry = self.p.get(l, k);
                if take > 0 && entry.is_zero() {
                    break;
                }
                let c = &coeff * pow(entry, take) / Rational::from_integer(factorial(take));
                self.exps[l] += take;
                self.go(k, l + 1, left - take, c);
                self.exps[l] -= take;
            }
        }
    }

    if r == 0 {
        return Ok(Poly::one(0));
    }
    let first = m.0[0];
    let mut walk = Walk { p, m, r, exps: vec![0; r], out: &mut out };
    walk.go(0, 0, first, Rational::from_integer(factorial(first)));
    Ok(out)
}

/// `x^m · x^n = α(x^m) β(x^n)`.
pub fn twisted_product(alg: &PolyBiHomAlgebra, m: &MultiIndex, n: &MultiIndex) -> Result<Poly, Error> {
    Ok(twist_apply(alg, Twist::Alpha, m)?.mul(&twist_apply(alg, Twist::Beta, n)?))
}

/// The twisted product extended bilinearly.
pub fn twisted_product_poly(alg: &PolyBiHomAlgebra, p: &Poly, q: &Poly) -> Result<Poly, Error> {
    let mut out = Poly::zero(alg.r);
    for (m, c) in p.terms() {
        for (n, d) in q.terms() {
            out = out.add(&twisted_product(alg, m, n)?.scale(&(c * d)));
        }
    }
    Ok(out)
}

/// `α` or `β` extended linearly.
pub fn twist_poly(alg: &PolyBiHomAlgebra, which: Twist, p: &Poly) -> Result<Poly, Error> {
    let mut out = Poly::zero(alg.r);
    for (m, c) in p.terms() {
        out = out.add(&twist_apply(alg, which, m)?.scale(c));
    }
    Ok(out)
}

/// Cofinite monomial ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CofiniteMonomialIdeal {
    /// `span{x^n : |n| ≥ d}`.
    TotalDegree(u32),
    /// `span{x^n : n_i ≥ N_i for some i}`.
    Staircase(MultiIndex),
}

impl fmt::Display for CofiniteMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CofiniteMonomialIdeal::TotalDegree(d) => write!(f, "TotalDegree({})", d),
            CofiniteMonomialIdeal::Staircase(n) => write!(f, "Staircase{}", n),
        }
    }
}

pub fn ideal_member(spec: &CofiniteMonomialIdeal, n: &MultiIndex) -> bool {
    match spec {
        CofiniteMonomialIdeal::TotalDegree(d) => n.degree() >= *d,
        CofiniteMonomialIdeal::Staircase(big) => n.0.iter().zip(&big.0).any(|(a, b)| a >= b),
    }
}

/// The finitely many monomials (in `r` variables) outside the ideal.
pub fn ideal_complement(spec: &CofiniteMonomialIdeal, r: usize) -> Vec<MultiIndex> {
    match spec {
        CofiniteMonomialIdeal::TotalDegree(0) => Vec::new(),
        CofiniteMonomialIdeal::TotalDegree(d) => MultiIndex::up_to_degree(r, d - 1),
        CofiniteMonomialIdeal::Staircase(big) => {
            if big.0.iter().any(|&b| b == 0) {
                return Vec::new();
            }
            let top = MultiIndex(big.0.iter().map(|b| b - 1).collect());
            let mut out: Vec<_> = top.splittings().into_iter().map(|(i, _)| i).collect();
            out.sort();
            out
        }
    }
}

fn check_spec(alg: &PolyBiHomAlgebra, spec: &CofiniteMonomialIdeal) -> Result<(), Error> {
    if let CofiniteMonomialIdeal::Staircase(n) = spec {
        alg.check_index(n)?;
    }
    Ok(())
}

/// A monomial ideal that passed [`ideal_absorption_check`] for a given algebra and bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedMonomialIdeal {
    algebra: PolyBiHomAlgebra,
    spec: CofiniteMonomialIdeal,
    degree_bound: u32,
}

impl CheckedMonomialIdeal {
    pub fn algebra(&self) -> &PolyBiHomAlgebra {
        &self.algebra
    }

    pub fn spec(&self) -> &CofiniteMonomialIdeal {
        &self.spec
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }
}

fn stray_term(p: &Poly, spec: &CofiniteMonomialIdeal) -> Option<(MultiIndex, Rational)> {
    p.terms().iter().find(|(q, _)| !ideal_member(spec, q)).map(|(q, c)| (q.clone(), c.clone()))
}

/// Two-sided absorption and twist stability of a monomial ideal, checked on all
/// monomials up to `degree_bound`. Returns the checked ideal only on a pass.
pub fn ideal_absorption_check(
    alg: &PolyBiHomAlgebra,
    spec: &CofiniteMonomialIdeal,
    degree_bound: u32,
) -> Result<(ValidationReport, Option<CheckedMonomialIdeal>), Error> {
    check_spec(alg, spec)?;
    let r = alg.r;
    let mut report = ValidationReport::new("monomial ideal absorption")
        .with_parameter("ideal", spec)
        .with_parameter("degree_bound", degree_bound);
    let mons = MultiIndex::up_to_degree(r, degree_bound);
    let fail = |locs: Vec<MultiIndex>, c: Rational| Witness {
        at: Location::Monomials(locs.into_iter().map(|m| m.0).collect()),
        lhs: vec![c],
        rhs: Vec::new(),
    };

    let mut left = None;
    let mut right = None;
    'pairs: for m in &mons {
        for n in &mons {
            if m.degree() + n.degree() > degree_bound {
                continue;
            }
            let (m_in, n_in) = (ideal_member(spec, m), ideal_member(spec, n));
            if !m_in && !n_in {
                continue;
            }
            if let Some((q, c)) = stray_term(&twisted_product(alg, m, n)?, spec) {
                let w = fail(vec![m.clone(), n.clone(), q], c);
                if n_in && left.is_none() {
                    left = Some(w.clone());
                }
                if m_in && right.is_none() {
                    right = Some(w);
                }
                if left.is_some() && right.is_some() {
                    break 'pairs;
                }
            }
        }
    }
    report.record("x^m . J within J", left);
    report.record("J . x^n within J", right);
    for which in [Twist::Alpha, Twist::Beta] {
        let mut witness = None;
        for m in mons.iter().filter(|m| ideal_member(spec, m)) {
            if let Some((q, c)) = stray_term(&twist_apply(alg, which, m)?, spec) {
                witness = Some(fail(vec![m.clone(), q], c));
                break;
            }
        }
        report.record(format!("{}(J) within J", which), witness);
    }
    let checked = report.passed().then(|| CheckedMonomialIdeal {
        algebra: alg.clone(),
        spec: spec.clone(),
        degree_bound,
    });
    Ok((report, checked))
}

/// `Σ c_n d_n`, where `d_n` reads off the coefficient of `x^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFunctional {
    r: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl DualFunctional {
    pub fn zero(r: usize) -> Self {
        DualFunctional { r, terms: BTreeMap::new() }
    }

    /// `d_n`.
    pub fn coordinate(n: MultiIndex) -> Self {
        let mut f = DualFunctional::zero(n.len());
        f.add_term(n, Rational::one());
        f
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (MultiIndex, Rational)>) -> Self {
        let mut f = DualFunctional::zero(r);
        for (n, c) in terms {
            f.add_term(n, c);
        }
        f
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, n: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(n).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DualFunctional::from_terms(self.r, self.terms.iter().map(|(n, v)| (n.clone(), v * c)))
    }

    /// `⟨f, x^m⟩`.
    pub fn at(&self, m: &MultiIndex) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// `⟨f, p⟩`.
    pub fn evaluate(&self, p: &Poly) -> Rational {
        p.terms().iter().map(|(m, c)| self.at(m) * c).fold(Rational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for DualFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (n, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*d{}", c, n)?;
        }
        Ok(())
    }
}

/// `f∘α` (for `Twist::Alpha`) or `f∘β`; only monomials of the same degree as
/// the support contribute, since twists preserve degree.
pub fn twist_on_dual(
    alg: &PolyBiHomAlgebra,
    which: Twist,
    f: &DualFunctional,
) -> Result<DualFunctional, Error> {
    let mut out = DualFunctional::zero(alg.r);
    let mut degrees: Vec<u32> = f.terms.keys().map(MultiIndex::degree).collect();
    degrees.sort();
    degrees.dedup();
    for d in degrees {
        for m in MultiIndex::of_degree(alg.r, d) {
            out.add_term(m.clone(), f.evaluate(&twist_apply(alg, which, &m)?));
        }
    }
    Ok(out)
}

/// `μ(f) = f∘α`.
pub fn mu_on_dual(alg: &PolyBiHomAlgebra, f: &DualFunctional) -> Result<DualFunctional, Error> {
    twist_on_dual(alg, Twist::Alpha, f)
}

/// `η(f) = f∘β`.
pub fn eta_on_dual(alg: &PolyBiHomAlgebra, f: &DualFunctional) -> Result<DualFunctional, Error> {
    twist_on_dual(alg, Twist::Beta, f)
}

/// `Δ(d_n) = Σ_{i+j=n} μ(d_i) ⊗ η(d_j)`, with the ideal certifying every factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualDelta {
    pub witness: CofiniteMonomialIdeal,
    pub terms: Vec<(DualFunctional, DualFunctional)>,
}

impl DualDelta {
    /// `⟨Δ, x^m ⊗ x^k⟩`.
    pub fn pair(&self, m: &MultiIndex, k: &MultiIndex) -> Rational {
        self.terms
            .iter()
            .map(|(l, r)| l.at(m) * r.at(k))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Rank-one terms merged into a single coefficient table on `d_p ⊗ d_q`.
    pub fn collected(&self) -> BTreeMap<(MultiIndex, MultiIndex), Rational> {
        let mut out: BTreeMap<(MultiIndex, MultiIndex), Rational> = BTreeMap::new();
        for (l, r) in &self.terms {
            for (p, a) in l.terms() {
                for (q, b) in r.terms() {
                    *out.entry((p.clone(), q.clone())).or_insert_with(Rational::zero) += a * b;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

pub fn delta_dual(alg: &PolyBiHomAlgebra, n: &MultiIndex) -> Result<DualDelta, Error> {
    alg.check_index(n)?;
    let mut terms = Vec::new();
    for (i, j) in n.splittings() {
        let l = mu_on_dual(alg, &DualFunctional::coordinate(i))?;
        let r = eta_on_dual(alg, &DualFunctional::coordinate(j))?;
        terms.push((l, r));
    }
    Ok(DualDelta { witness: CofiniteMonomialIdeal::TotalDegree(n.degree() + 1), terms })
}

/// `Δ` extended linearly to a finite combination of coordinate functionals.
pub fn delta_of(alg: &PolyBiHomAlgebra, f: &DualFunctional) -> Result<DualDelta, Error> {
    let mut terms = Vec::new();
    let mut top = 0;
    for (n, c) in f.terms() {
        top = top.max(n.degree() + 1);
        for (l, r) in delta_dual(alg, n)?.terms {
            terms.push((l.scale(c), r));
        }
    }
    Ok(DualDelta { witness: CofiniteMonomialIdeal::TotalDegree(top), terms })
}

/// `⟨Δ(d_n), x^m ⊗ x^k⟩ = [x^n](x^m · x^k)` for all `|m| + |k| ≤ degree_bound`.
pub fn pairing_check(
    alg: &PolyBiHomAlgebra,
    n: &MultiIndex,
    degree_bound: u32,
) -> Result<ValidationReport, Error> {
    let delta = delta_dual(alg, n)?;
    let mut report = ValidationReport::new("comultiplication pairing")
        .with_parameter("n", n)
        .with_parameter("degree_bound", degree_bound);
    let mons = MultiIndex::up_to_degree(alg.r, degree_bound);
    let mut witness = None;
    'outer: for m in &mons {
        for k in &mons {
            if m.degree() + k.degree() > degree_bound {
                continue;
            }
            let lhs = delta.pair(m, k);
            let rhs = twisted_product(alg, m, k)?.coefficient(n);
            if lhs != rhs {
                witness = Some(Witness {
                    at: Location::Monomials(vec![m.0.clone(), k.0.clone()]),
                    lhs: vec![lhs],
                    rhs: vec![rhs],
                });
                break 'outer;
            }
        }
    }
    report.record("<Delta(d_n), x^m (x) x^k> = d_n(x^m x^k)", witness);
    Ok(report)
}

/// BiHom-coassociativity of `Δ(d_n)` with `φ = ·∘α`, `ψ = ·∘β`, evaluated on all
/// `x^a ⊗ x^b ⊗ x^c` with `|a| + |b| + |c| ≤ degree_bound`. The structural
/// side is also matched against `d_n(α(x^a)(x^b x^c))` computed by multiplying.
pub fn coassoc_check(
    alg: &PolyBiHomAlgebra,
    n: &MultiIndex,
    degree_bound: u32,
) -> Result<ValidationReport, Error> {
    let r = alg.r;
    let d_n = DualFunctional::coordinate(n.clone());
    let delta = delta_dual(alg, n)?;
    // (φ⊗Δ)Δ(d_n) = Σ φ(L) ⊗ Δ(R) and (Δ⊗ψ)Δ(d_n) = Σ Δ(L) ⊗ ψ(R)
    let mut left_side = Vec::new();
    let mut right_side = Vec::new();
    for (l, rt) in &delta.terms {
        left_side.push((mu_on_dual(alg, l)?, delta_of(alg, rt)?));
        right_side.push((delta_of(alg, l)?, eta_on_dual(alg, rt)?));
    }
    let mut report = ValidationReport::new("dual coassociativity")
        .with_parameter("n", n)
        .with_parameter("degree_bound", degree_bound);
    let mons = MultiIndex::up_to_degree(r, degree_bound);
    let mut structural = None;
    let mut by_product = None;
    let mut cross = None;
    for a in &mons {
        for b in &mons {
            for c in &mons {
                if a.degree() + b.degree() + c.degree() > degree_bound {
                    continue;
                }
                if structural.is_some() && by_product.is_some() && cross.is_some() {
                    break;
                }
                let at = || Location::Monomials(vec![a.0.clone(), b.0.clone(), c.0.clone()]);
                let lhs: Rational = left_side
                    .iter()
                    .map(|(f, dr)| f.at(a) * dr.pair(b, c))
                    .fold(Rational::zero(), |x, y| x + y);
                let rhs: Rational = right_side
                    .iter()
                    .map(|(dl, g)| dl.pair(a, b) * g.at(c))
                    .fold(Rational::zero(), |x, y| x + y);
                if lhs != rhs && structural.is_none() {
                    structural = Some(Witness { at: at(), lhs: vec![lhs.clone()], rhs: vec![rhs.clone()] });
                }
                let xa = Poly::monomial(a.clone(), Rational::one());
                let xb = Poly::monomial(b.clone(), Rational::one());
                let xc = Poly::monomial(c.clone(), Rational::one());
                let p_left = twisted_product_poly(
                    alg,
                    &twist_poly(alg, Twist::Alpha, &xa)?,
                    &twisted_product_poly(alg, &xb, &xc)?,
                )?;
                let p_right = twisted_product_poly(
                    alg,
                    &twisted_product_poly(alg, &xa, &xb)?,
                    &twist_poly(alg, Twist::Beta, &xc)?,
                )?;
                let (pl, pr) = (d_n.evaluate(&p_left), d_n.evaluate(&p_right));
                if pl != pr && by_product.is_none() {
                    by_product = Some(Witness { at: at(), lhs: vec![pl.clone()], rhs: vec![pr] });
                }
                if lhs != pl && cross.is_none() {
                    cross = Some(Witness { at: at(), lhs: vec![lhs], rhs: vec![pl] });
                }
            }
        }
    }
    report.record("(phi (x) Delta) Delta = (Delta (x) psi) Delta", structural);
    report.record("d_n(alpha(x^a)(x^b x^c)) = d_n((x^a x^b)beta(x^c))", by_product);
    report.record("structural side = product side", cross);
    Ok(report)
}

/// Whether `f` annihilates the checked ideal: its support must avoid the ideal.
pub fn functional_in_finite_dual(
    alg: &PolyBiHomAlgebra,
    f: &DualFunctional,
    ideal: &CheckedMonomialIdeal,
) -> Result<ValidationReport, Error> {
    if ideal.algebra != *alg {
        return Err(Error::Contract("monomial ideal was checked for a different algebra".into()));
    }
    let mut report = ValidationReport::new("finite dual membership")
        .with_parameter("ideal", &ideal.spec)
        .with_parameter("degree_bound", ideal.degree_bound);
    let witness = f.terms().iter().find(|(n, _)| ideal_member(&ideal.spec, n)).map(|(n, c)| Witness {
        at: Location::Monomials(vec![n.0.clone()]),
        lhs: vec![c.clone()],
        rhs: vec![Rational::zero()],
    });
    report.record("f vanishes on the ideal", witness);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    fn one_var(a: i64, b: i64) -> PolyBiHomAlgebra {
        PolyBiHomAlgebra::new(Matrix::from_i64(1, 1, &[a]), Matrix::from_i64(1, 1, &[b])).unwrap()
    }

    fn shear() -> PolyBiHomAlgebra {
        PolyBiHomAlgebra::new(Matrix::from_i64(2, 2, &[1, 1, 0, 1]), Matrix::identity(2)).unwrap()
    }

    #[test]
    fn splittings_count() {
        assert_eq!(mi(&[2, 1]).splittings().len(), 6);
        assert_eq!(mi(&[]).splittings().len(), 1);
        assert_eq!(MultiIndex::of_degree(2, 2), [mi(&[0, 2]), mi(&[1, 1]), mi(&[2, 0])]);
        assert_eq!(MultiIndex::up_to_degree(3, 2).len(), 10);
    }

    #[test]
    fn twist_examples() {
        let alg = one_var(2, 3);
        assert_eq!(twist_apply(&alg, Twist::Alpha, &mi(&[0])).unwrap(), Poly::one(1));
        assert_eq!(
            twist_apply(&alg, Twist::Alpha, &mi(&[3])).unwrap(),
            Poly::monomial(mi(&[3]), int(8))
        );
        let x = shear();
        let expected = Poly::variable(2, 0).add(&Poly::variable(2, 1));
        assert_eq!(twist_apply(&x, Twist::Alpha, &mi(&[0, 1])).unwrap(), expected);
    }

    #[test]
    fn product_examples() {
        let alg = one_var(2, 3);
        assert_eq!(twisted_product(&alg, &mi(&[0]), &mi(&[0])).unwrap(), Poly::one(1));
        assert_eq!(twisted_product(&alg, &mi(&[1]), &mi(&[1])).unwrap(), Poly::monomial(mi(&[2]), int(6)));
        assert_eq!(twisted_product(&alg, &mi(&[2]), &mi(&[1])).unwrap(), Poly::monomial(mi(&[3]), int(12)));
    }

    #[test]
    fn noncommuting_twists_rejected() {
        let a = Matrix::from_i64(2, 2, &[1, 1, 0, 1]);
        let b = Matrix::from_i64(2, 2, &[1, 0, 1, 1]);
        assert!(matches!(PolyBiHomAlgebra::new(a, b), Err(Error::Precondition(_))));
    }

    #[test]
    fn membership_examples() {
        assert!(ideal_member(&CofiniteMonomialIdeal::TotalDegree(0), &mi(&[0, 0])));
        assert!(ideal_member(&CofiniteMonomialIdeal::Staircase(mi(&[2, 2])), &mi(&[0, 3])));
        assert!(!ideal_member(&CofiniteMonomialIdeal::TotalDegree(3), &mi(&[1, 1])));
        assert_eq!(ideal_complement(&CofiniteMonomialIdeal::Staircase(mi(&[2, 3])), 2).len(), 6);
        assert_eq!(ideal_complement(&CofiniteMonomialIdeal::TotalDegree(2), 2).len(), 3);
        assert!(ideal_complement(&CofiniteMonomialIdeal::TotalDegree(0), 2).is_empty());
    }

    #[test]
    fn dual_twist_examples() {
        let alg = one_var(2, 3);
        let d0 = DualFunctional::coordinate(mi(&[0]));
        assert_eq!(mu_on_dual(&alg, &d0).unwrap(), d0);
        for i in 0..5 {
            let di = DualFunctional::coordinate(mi(&[i]));
            assert_eq!(mu_on_dual(&alg, &di).unwrap(), di.scale(&int(1 << i)));
        }
        let x = shear();
        let f = mu_on_dual(&x, &DualFunctional::coordinate(mi(&[1, 0]))).unwrap();
        let expected = DualFunctional::from_terms(2, [(mi(&[1, 0]), int(1)), (mi(&[0, 1]), int(1))]);
        assert_eq!(f, expected);
    }

    #[test]
    fn delta_examples() {
        let alg = one_var(2, 3);
        let d = delta_dual(&alg, &mi(&[0])).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.terms[0].0, DualFunctional::coordinate(mi(&[0])));
        let d = delta_dual(&alg, &mi(&[2])).unwrap();
        assert_eq!(d.witness, CofiniteMonomialIdeal::TotalDegree(3));
        let c = d.collected();
        assert_eq!(c.len(), 3);
        assert_eq!(c[&(mi(&[0]), mi(&[2]))], int(9));
        assert_eq!(c[&(mi(&[1]), mi(&[1]))], int(6));
        assert_eq!(c[&(mi(&[2]), mi(&[0]))], int(4));
        let classical = one_var(1, 1);
        let c = delta_dual(&classical, &mi(&[3])).unwrap().collected();
        assert_eq!(c.len(), 4);
        assert!(c.values().all(|v| *v == int(1)));
    }

    #[test]
    fn pairing_and_coassociativity() {
        let alg = one_var(2, 3);
        assert!(pairing_check(&alg, &mi(&[0]), 4).unwrap().passed());
        assert!(pairing_check(&alg, &mi(&[2]), 5).unwrap().passed());
        assert_eq!(delta_dual(&alg, &mi(&[2])).unwrap().pair(&mi(&[1]), &mi(&[1])), int(6));
        assert!(coassoc_check(&alg, &mi(&[0]), 3).unwrap().passed());
        assert!(coassoc_check(&alg, &mi(&[3]), 6).unwrap().passed());
        let commuting = PolyBiHomAlgebra::new(
            Matrix::from_i64(2, 2, &[1, 1, 0, 1]),
            Matrix::from_i64(2, 2, &[1, 2, 0, 1]),
        )
        .unwrap();
        assert!(coassoc_check(&commuting, &mi(&[1, 1]), 5).unwrap().passed());
    }

    #[test]
    fn absorption_examples() {
        let alg = one_var(2, 3);
        let (r, checked) = ideal_absorption_check(&alg, &CofiniteMonomialIdeal::Staircase(mi(&[2])), 8).unwrap();
        assert!(r.passed());
        assert!(checked.is_some());
        let (r, _) = ideal_absorption_check(&shear(), &CofiniteMonomialIdeal::TotalDegree(2), 6).unwrap();
        assert!(r.passed());
        let swap = PolyBiHomAlgebra::new(Matrix::from_i64(2, 2, &[0, 1, 1, 0]), Matrix::identity(2)).unwrap();
        let (r, checked) = ideal_absorption_check(&swap, &CofiniteMonomialIdeal::Staircase(mi(&[1, 3])), 6).unwrap();
        assert!(!r.passed());
        assert!(checked.is_none());
    }

    #[test]
    fn finite_dual_membership() {
        let alg = one_var(2, 3);
        let (_, td1) = ideal_absorption_check(&alg, &CofiniteMonomialIdeal::TotalDegree(1), 4).unwrap();
        let td1 = td1.unwrap();
        let d0 = DualFunctional::coordinate(mi(&[0]));
        assert!(functional_in_finite_dual(&alg, &d0, &td1).unwrap().passed());
        let (_, td2) = ideal_absorption_check(&alg, &CofiniteMonomialIdeal::TotalDegree(2), 4).unwrap();
        let d2 = DualFunctional::coordinate(mi(&[2]));
        assert!(!functional_in_finite_dual(&alg, &d2, &td2.unwrap()).unwrap().passed());
        let (_, st) = ideal_absorption_check(&alg, &CofiniteMonomialIdeal::Staircase(mi(&[2])), 4).unwrap();
        let f = DualFunctional::from_terms(1, [(mi(&[1]), int(1)), (mi(&[0]), int(1))]);
        assert!(functional_in_finite_dual(&alg, &f, &st.unwrap()).unwrap().passed());
        let other = one_var(5, 5);
        assert!(matches!(
            functional_in_finite_dual(&other, &d0, &td1),
            Err(Error::Contract(_))
        ));
    }
}
