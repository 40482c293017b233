//! Seeded instance generators and the randomized property suites.
//!
//! Every suite draws from a `ChaCha8Rng` seeded with the caller's seed, so a
//! run is reproducible from `(seed, count, max_dim)`.

use std::sync::Arc;

use bihom_core::algebra::{
    ideal_closure, quotient_algebra, validate_algebra, validate_morphism, AlgebraMorphism,
};
use bihom_core::coalgebra::{validate_coalgebra, validate_coalgebra_morphism};
use bihom_core::duality::{dual_algebra_morphism, dual_coalgebra, pairing_report, tensor_quotient_kernel};
use bihom_core::fixtures::yau_block_algebra;
use bihom_core::linalg::{int, Rational, Vector};
use bihom_core::report::{Location, ValidationReport, Witness};
use bihom_core::{FDBiHomAlgebra, Matrix, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    let e: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-2..=2)).collect();
    Matrix::from_i64(rows, cols, &e)
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Vector {
    (0..n).map(|_| int(rng.gen_range(-2..=2))).collect()
}

/// Unimodular-ish change of basis: a random matrix if it happens to be invertible,
/// otherwise a random unit upper triangular one.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let m = random_matrix(rng, n, n);
    if m.rank() == n {
        return m;
    }
    let mut u = Matrix::identity(n);
    for r in 0..n {
        for c in r + 1..n {
            u.set(r, c, int(rng.gen_range(-2..=2)));
        }
    }
    u
}

/// A composition of `n` into positive parts.
fn random_blocks<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut left = n;
    while left > 0 {
        let k = rng.gen_range(1..=left);
        out.push(k);
        left -= k;
    }
    out
}

fn random_scalar<R: Rng>(rng: &mut R) -> Option<Rational> {
    if rng.gen_ratio(1, 6) {
        None
    } else {
        let num: i64 = rng.gen_range(-3..=3);
        let den: i64 = if rng.gen_ratio(1, 4) { 2 } else { 1 };
        Some(Rational::new(num.into(), den.into()))
    }
}

/// Yau twist of a random product of truncated polynomial algebras, with
/// commuting diagonal twists, written in a random basis.
pub fn random_yau_algebra<R: Rng>(rng: &mut R, max_dim: usize) -> FDBiHomAlgebra {
    let n = rng.gen_range(1..=max_dim.max(1));
    let blocks = random_blocks(rng, n);
    let alpha: Vec<_> = blocks.iter().map(|_| random_scalar(rng)).collect();
    let beta: Vec<_> = blocks.iter().map(|_| random_scalar(rng)).collect();
    let q = random_invertible(rng, n);
    yau_block_algebra(&blocks, &alpha, &beta, Some(&q)).expect("block family with invertible basis change")
}

/// Subspace of `K^n` spanned by up to `n` random vectors, sometimes zero or everything.
pub fn random_subspace<R: Rng>(rng: &mut R, n: usize) -> Subspace {
    match rng.gen_range(0..8) {
        0 => Subspace::zero(n),
        1 => Subspace::full(n),
        _ => {
            let k = rng.gen_range(0..=n);
            let vs: Vec<_> = (0..k).map(|_| random_vector(rng, n)).collect();
            Subspace::span(n, &vs).expect("vectors have the ambient length")
        }
    }
}

/// Linear maps between random algebras, mixing arbitrary matrices with maps
/// that are known to be morphisms (zero, identity, twists, quotient maps).
pub fn random_linear_map<R: Rng>(rng: &mut R, max_dim: usize) -> AlgebraMorphism {
    let a = Arc::new(random_yau_algebra(rng, max_dim));
    let n = a.dim();
    match rng.gen_range(0..7) {
        0 => {
            let b = Arc::new(random_yau_algebra(rng, max_dim));
            let m = random_matrix(rng, b.dim(), n);
            AlgebraMorphism::new(a, b, m).expect("shape")
        }
        1 => {
            let b = Arc::new(random_yau_algebra(rng, max_dim));
            AlgebraMorphism::zero(&a, &b)
        }
        2 => AlgebraMorphism::identity(&a),
        3 => AlgebraMorphism::new(a.clone(), a.clone(), a.alpha().clone()).expect("shape"),
        4 => AlgebraMorphism::new(a.clone(), a.clone(), a.beta().mul(a.alpha())).expect("shape"),
        5 => {
            let j = ideal_closure(&a, &[random_vector(rng, n)]).expect("closure of a vector");
            quotient_algebra(&a, &j).expect("quotient by an ideal").1
        }
        _ => {
            let m = random_matrix(rng, n, n);
            AlgebraMorphism::new(a.clone(), a, m).expect("shape")
        }
    }
}

fn instance_witness(i: usize) -> Witness {
    Witness { at: Location::Basis(vec![i]), lhs: Vec::new(), rhs: Vec::new() }
}

/// Random Yau twists validate, dualize to valid coalgebras, and pair correctly.
pub fn property_yau(seed: u64, count: usize, max_dim: usize) -> ValidationReport {
    let mut rng = rng(seed);
    let (mut alg, mut coalg, mut pairing) = (None, None, None);
    for i in 0..count {
        let a = random_yau_algebra(&mut rng, max_dim);
        if alg.is_none() && !validate_algebra(&a).passed() {
            alg = Some(instance_witness(i));
        }
        match dual_coalgebra(&a) {
            Ok(c) => {
                if coalg.is_none() && !validate_coalgebra(&c).passed() {
                    coalg = Some(instance_witness(i));
                }
                if pairing.is_none() && !pairing_report(&a, &c).passed() {
                    pairing = Some(instance_witness(i));
                }
            }
            Err(_) if coalg.is_none() => coalg = Some(instance_witness(i)),
            Err(_) => {}
        }
    }
    let mut report = ValidationReport::new("random Yau twists")
        .with_parameter("seed", seed)
        .with_parameter("count", count)
        .with_parameter("max_dim", max_dim);
    report.record("every algebra validates", alg);
    report.record("every dual coalgebra validates", coalg);
    report.record("pairing identity on all basis triples", pairing);
    report
}

/// Morphism verdicts agree with the verdicts for the transposed coalgebra maps.
pub fn property_qq(seed: u64, count: usize, max_dim: usize) -> ValidationReport {
    let mut rng = rng(seed);
    let mut disagreement = None;
    let mut passing = 0usize;
    for i in 0..count {
        let f = random_linear_map(&mut rng, max_dim);
        let direct = validate_morphism(&f).passed();
        let dual = validate_coalgebra_morphism(&dual_algebra_morphism(&f)).passed();
        passing += usize::from(direct);
        if direct != dual && disagreement.is_none() {
            disagreement = Some(instance_witness(i));
        }
    }
    let mut report = ValidationReport::new("morphism duality")
        .with_parameter("seed", seed)
        .with_parameter("count", count)
        .with_parameter("max_dim", max_dim)
        .with_parameter("morphisms", passing)
        .with_parameter("non_morphisms", count - passing);
    report.record("verdicts agree", disagreement);
    report
}

/// `ker(π_A ⊗ π_B) = A⊗J + I⊗B` and the quotient dimension, on random subspace pairs.
pub fn property_zz(seed: u64, count: usize, max_dim: usize) -> ValidationReport {
    let mut rng = rng(seed);
    let (mut kernel, mut dims) = (None, None);
    for i in 0..count {
        let da = rng.gen_range(1..=max_dim.max(1));
        let db = rng.gen_range(1..=max_dim.max(1));
        let ii = random_subspace(&mut rng, da);
        let jj = random_subspace(&mut rng, db);
        let (_, r) = tensor_quotient_kernel(da, db, &ii, &jj).expect("dimensions agree");
        for c in &r.checks {
            let slot = if c.name.starts_with("ker") { &mut kernel } else { &mut dims };
            if !c.passed && slot.is_none() {
                *slot = Some(instance_witness(i));
            }
        }
    }
    let mut report = ValidationReport::new("tensor quotient kernels")
        .with_parameter("seed", seed)
        .with_parameter("count", count)
        .with_parameter("max_dim", max_dim);
    report.record("kernel equals A (x) J + I (x) B", kernel);
    report.record("quotient dimension is codim(I) * codim(J)", dims);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_reproducible() {
        let a = random_yau_algebra(&mut rng(7), 4);
        let b = random_yau_algebra(&mut rng(7), 4);
        assert_eq!(a, b);
        assert!(validate_algebra(&a).passed());
    }

    #[test]
    fn morphism_mix_has_both_verdicts() {
        let report = property_qq(1, 60, 3);
        assert!(report.passed());
        let get = |k: &str| report.parameters.iter().find(|(n, _)| n == k).unwrap().1.clone();
        assert_ne!(get("morphisms"), "0");
        assert_ne!(get("non_morphisms"), "0");
    }
}
