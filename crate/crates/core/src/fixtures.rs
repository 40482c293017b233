//! Small named instances used by tests, the CLI and the acceptance suite.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{default_labels, yau_twist, FDBiHomAlgebra};
use crate::linalg::{int, Matrix, Rational};
use crate::modules::{regular_module, FDBiHomModule};

/// Product of `K[x]/(x²)` in the basis `e0 = 1`, `e1 = x`.
pub fn dual_numbers_product() -> Matrix {
    let mut mu = Matrix::zeros(2, 4);
    mu.set(0, 0, int(1)); // 1·1 = 1
    mu.set(1, 1, int(1)); // 1·x = x
    mu.set(1, 2, int(1)); // x·1 = x
    mu
}

/// Yau twist of `K[x]/(x²)` by `α = diag(1, 2)`, `β = diag(1, 3)`:
/// `e0e0 = e0`, `e0e1 = 3e1`, `e1e0 = 2e1`, `e1e1 = 0`.
pub fn e1() -> FDBiHomAlgebra {
    yau_twist(
        default_labels("e", 2),
        &dual_numbers_product(),
        &Matrix::diagonal(&[int(1), int(2)]),
        &Matrix::diagonal(&[int(1), int(3)]),
    )
    .expect("E1 inputs are valid")
}

/// `K[x]/(x²)` itself, `α = β = Id`.
pub fn classical_dual_numbers() -> FDBiHomAlgebra {
    let id = Matrix::identity(2);
    FDBiHomAlgebra::new(default_labels("e", 2), dual_numbers_product(), id.clone(), id)
        .expect("shapes agree")
}

/// Zero multiplication, `α = β = Id`.
pub fn zero_algebra(n: usize) -> FDBiHomAlgebra {
    let id = Matrix::identity(n);
    FDBiHomAlgebra::new(default_labels("e", n), Matrix::zeros(n, n * n), id.clone(), id)
        .expect("shapes agree")
}

/// Zero multiplication on `K²` with `α = Id`, `β = diag(1, 0)`: valid, but `β` is not surjective.
pub fn singular_beta_algebra() -> FDBiHomAlgebra {
    FDBiHomAlgebra::new(
        default_labels("e", 2),
        Matrix::zeros(2, 4),
        Matrix::identity(2),
        Matrix::diagonal(&[int(1), int(0)]),
    )
    .expect("shapes agree")
}

/// A three-dimensional Yau twist of `K × K[x]/(x²)` used to exercise
/// ideals with more structure than `E1` has.
pub fn e3() -> FDBiHomAlgebra {
    // basis: f (idempotent of K), e0 = 1, e1 = x of K[x]/(x²)
    let mut core = Matrix::zeros(3, 9);
    core.set(0, 0, int(1)); // f·f = f
    core.set(1, 4, int(1)); // e0·e0 = e0
    core.set(2, 5, int(1)); // e0·e1 = e1
    core.set(2, 7, int(1)); // e1·e0 = e1
    yau_twist(
        vec!["f".into(), "e0".into(), "e1".into()],
        &core,
        &Matrix::diagonal(&[int(1), int(1), int(-1)]),
        &Matrix::diagonal(&[int(1), int(1), int(2)]),
    )
    .expect("E3 inputs are valid")
}

/// Single-entry mutations of `E1`; every one must break at least one axiom.
/// Each item is `(description, mutant)`.
pub fn e1_mutants() -> Vec<(&'static str, FDBiHomAlgebra)> {
    let base = e1();
    let set = |m: &Matrix, r: usize, c: usize, v: Rational| {
        let mut m = m.clone();
        m.set(r, c, v);
        m
    };
    vec![
        ("mu[0][1][1]: 3 -> 4", base.with_structure_constant(0, 1, 1, int(4))),
        ("mu[1][0][1]: 2 -> 5", base.with_structure_constant(1, 0, 1, int(5))),
        ("mu[1][1][0]: 0 -> 1", base.with_structure_constant(1, 1, 0, int(1))),
        ("mu[0][0][0]: 1 -> 2", base.with_structure_constant(0, 0, 0, int(2))),
        (
            "alpha[1][1]: 2 -> 5",
            base.with_twists(set(base.alpha(), 1, 1, int(5)), base.beta().clone()).unwrap(),
        ),
        (
            "beta[0][1]: 0 -> 1",
            base.with_twists(base.alpha().clone(), set(base.beta(), 0, 1, int(1))).unwrap(),
        ),
    ]
}

/// Regular module over `E1`: `M = G`, `ρ = μ`, `κ = α`, `τ = β`.
pub fn e1_regular_module() -> FDBiHomModule {
    regular_module(&Arc::new(e1()))
}

/// Associative product of `K[x]/(x^{k_1}) × … × K[x]/(x^{k_s})` in the basis
/// `1, x, …, x^{k-1}` of each block, blocks in order.
pub fn truncated_polynomial_product(blocks: &[usize]) -> Matrix {
    let n: usize = blocks.iter().sum();
    let mut mu = Matrix::zeros(n, n * n);
    let mut offset = 0;
    for &k in blocks {
        for i in 0..k {
            for j in 0..k - i {
                mu.set(offset + i + j, (offset + i) * n + offset + j, int(1));
            }
        }
        offset += k;
    }
    mu
}

/// Diagonal endomorphism of [`truncated_polynomial_product`]: block `b` has
/// `x ↦ s_b x` when `scalars[b] = Some(s_b)` and is sent to zero when it is `None`.
pub fn block_scaling(blocks: &[usize], scalars: &[Option<Rational>]) -> Matrix {
    let mut diag = Vec::new();
    for (&k, s) in blocks.iter().zip(scalars) {
        let mut power = int(1);
        for _ in 0..k {
            match s {
                Some(s) => {
                    diag.push(power.clone());
                    power *= s;
                }
                None => diag.push(int(0)),
            }
        }
    }
    Matrix::diagonal(&diag)
}

/// Transports an algebra along the invertible change of basis `q`
/// (new coordinates are `q` applied to old ones).
pub fn change_basis(a: &FDBiHomAlgebra, q: &Matrix) -> Option<FDBiHomAlgebra> {
    let inv = q.inverse()?;
    let mu = q.mul(a.mu()).mul(&crate::linalg::kronecker(&inv, &inv));
    let alpha = q.mul(a.alpha()).mul(&inv);
    let beta = q.mul(a.beta()).mul(&inv);
    FDBiHomAlgebra::new(a.labels().to_vec(), mu, alpha, beta).ok()
}

/// Yau twist of a product of truncated polynomial algebras by two block
/// scalings, optionally moved to another basis by `q`. Always a valid
/// BiHom-algebra when `q` is invertible.
pub fn yau_block_algebra(
    blocks: &[usize],
    alpha_scalars: &[Option<Rational>],
    beta_scalars: &[Option<Rational>],
    q: Option<&Matrix>,
) -> Option<FDBiHomAlgebra> {
    let n = blocks.iter().sum();
    let a = yau_twist(
        default_labels("e", n),
        &truncated_polynomial_product(blocks),
        &block_scaling(blocks, alpha_scalars),
        &block_scaling(blocks, beta_scalars),
    )
    .ok()?;
    match q {
        Some(q) => change_basis(&a, q),
        None => Some(a),
    }
}

/// Every algebra in the named fixture set.
pub fn fixture_algebras() -> Vec<(&'static str, FDBiHomAlgebra)> {
    vec![
        ("E1", e1()),
        ("E3", e3()),
        ("K[x]/(x^2)", classical_dual_numbers()),
        ("zero(2)", zero_algebra(2)),
        ("singular-beta", singular_beta_algebra()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_algebra;

    #[test]
    fn fixtures_are_valid() {
        for (name, a) in fixture_algebras() {
            assert!(validate_algebra(&a).passed(), "{}", name);
        }
    }

    #[test]
    fn every_mutant_breaks_an_axiom() {
        for (name, m) in e1_mutants() {
            let report = validate_algebra(&m);
            let failing: Vec<_> = report.failures().collect();
            assert!(!failing.is_empty(), "{}", name);
            assert!(failing.iter().all(|c| c.witness.is_some()), "{}", name);
        }
    }

    #[test]
    fn block_family_is_valid() {
        let q = Matrix::from_i64(3, 3, &[1, 1, 0, 0, 1, 2, 1, 0, 1]);
        let a = yau_block_algebra(&[1, 2], &[Some(int(1)), Some(int(3))], &[None, Some(int(-2))], Some(&q))
            .unwrap();
        assert!(validate_algebra(&a).passed());
        assert_eq!(truncated_polynomial_product(&[2]), dual_numbers_product());
    }
}
