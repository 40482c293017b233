//! Invariants of the exact linear algebra and of the duality constructions.

mod common;

use std::sync::Arc;

use bihom_core::algebra::{
    ideal_closure, intersect_ideals, is_ideal, preimage_ideal, quotient_algebra, validate_algebra,
    validate_morphism, AlgebraMorphism,
};
use bihom_core::coalgebra::{validate_coalgebra, validate_coalgebra_morphism};
use bihom_core::duality::{
    dual_algebra_morphism, dual_coalgebra, pairing_report, sweedler_delta, sweedler_wrap,
    tensor_quotient_kernel,
};
use bihom_core::linalg::{
    int, kernel_basis, kron_vector, kronecker, quotient, rref, tensor_sum_subspace, Matrix,
    Subspace,
};
use bihom_core::modules::{dual_comodule, regular_module, validate_comodule, validate_module};
use bihom_core::poly::{coassoc_check, eta_on_dual, mu_on_dual, pairing_check, DualFunctional, MultiIndex, PolyBiHomAlgebra};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| common::matrix(r, c))) {
        let (reduced, pivots) = rref(&m);
        prop_assert_eq!(pivots.len(), m.rank());
        prop_assert_eq!(rref(&reduced).0, reduced.clone());
        let k = kernel_basis(&m);
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.basis_vectors() {
            prop_assert!(m.apply(&v).iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn kronecker_mixed_product(
        a in common::matrix(2, 3), b in common::matrix(2, 2),
        c in common::matrix(3, 2), d in common::matrix(2, 3),
        x in common::vector(3), y in common::vector(2),
    ) {
        prop_assert_eq!(kronecker(&a, &b).mul(&kronecker(&c, &d)), kronecker(&a.mul(&c), &b.mul(&d)));
        prop_assert_eq!(kronecker(&a, &b).apply(&kron_vector(&x, &y)), kron_vector(&a.apply(&x), &b.apply(&y)));
    }

    #[test]
    fn quotient_round_trip(s in (1usize..6).prop_flat_map(common::subspace), v in common::vector(5)) {
        let n = s.ambient_dim();
        let v: Vec<_> = v.into_iter().take(n).collect();
        let q = quotient(&s);
        prop_assert_eq!(q.codim(), n - s.dim());
        prop_assert_eq!(q.projection.mul(&q.section), Matrix::identity(q.codim()));
        for b in s.basis_vectors() {
            prop_assert!(q.project(&b).iter().all(|x| *x == int(0)));
        }
        let back = q.lift(&q.project(&v));
        let diff: Vec<_> = v.iter().zip(&back).map(|(a, b)| a - b).collect();
        prop_assert!(s.contains(&diff));
    }

    #[test]
    fn tensor_quotient_kernel_is_the_sum(
        (i, j) in (1usize..4, 1usize..4).prop_flat_map(|(a, b)| (common::subspace(a), common::subspace(b)))
    ) {
        let (da, db) = (i.ambient_dim(), j.ambient_dim());
        let (k, report) = tensor_quotient_kernel(da, db, &i, &j).unwrap();
        prop_assert!(report.passed(), "{}", report);
        prop_assert_eq!(k, tensor_sum_subspace(da, db, &i, &j));
    }

    #[test]
    fn random_algebras_dualize(a in common::bihom_algebra(4)) {
        prop_assert!(validate_algebra(&a).passed());
        let c = dual_coalgebra(&a).unwrap();
        prop_assert!(validate_coalgebra(&c).passed());
        prop_assert!(pairing_report(&a, &c).passed());
        let m = regular_module(&Arc::new(a.clone()));
        prop_assert!(validate_module(&m).passed());
        prop_assert!(validate_comodule(&dual_comodule(&m).unwrap()).passed());
    }

    #[test]
    fn morphism_verdicts_survive_dualization(
        (a, b, f) in (common::bihom_algebra(3), common::bihom_algebra(3)).prop_flat_map(|(a, b)| {
            let (n, m) = (a.dim(), b.dim());
            (Just(a), Just(b), common::matrix(m, n))
        })
    ) {
        let (a, b) = (Arc::new(a), Arc::new(b));
        for map in [f, Matrix::zeros(b.dim(), a.dim())] {
            let f = AlgebraMorphism::new(a.clone(), b.clone(), map).unwrap();
            prop_assert_eq!(
                validate_morphism(&f).passed(),
                validate_coalgebra_morphism(&dual_algebra_morphism(&f)).passed()
            );
        }
        for map in [Matrix::identity(a.dim()), a.alpha().clone(), a.beta().clone()] {
            let f = AlgebraMorphism::new(a.clone(), a.clone(), map).unwrap();
            prop_assert_eq!(
                validate_morphism(&f).passed(),
                validate_coalgebra_morphism(&dual_algebra_morphism(&f)).passed()
            );
        }
    }

    #[test]
    fn ideal_bookkeeping(
        (a, g1, g2) in common::bihom_algebra(4).prop_flat_map(|a| {
            let n = a.dim();
            (Just(a), common::vector(n), common::vector(n))
        })
    ) {
        let a = Arc::new(a);
        let j = ideal_closure(&a, &[g1]).unwrap();
        let h = ideal_closure(&a, &[g2]).unwrap();
        let k = intersect_ideals(&j, &h).unwrap();
        prop_assert_eq!(k.codim(), h.codim() + (h.dim() - k.dim()));
        let (q, pi) = quotient_algebra(&a, &j).unwrap();
        prop_assert!(validate_algebra(&q).passed());
        prop_assert!(validate_morphism(&pi).passed());
        let id = AlgebraMorphism::identity(&a);
        let same = preimage_ideal(&id, &j).unwrap();
        prop_assert_eq!(same.subspace(), j.subspace());
        let pre = preimage_ideal(&pi, &is_ideal(&q, &Subspace::zero(q.dim())).unwrap()).unwrap();
        prop_assert_eq!(pre.subspace(), j.subspace());
    }

    #[test]
    fn sweedler_delta_factors_keep_the_witness(
        (a, g, f) in common::bihom_algebra(4).prop_flat_map(|a| {
            let n = a.dim();
            (Just(a), common::vector(n), common::vector(n))
        })
    ) {
        let a = Arc::new(a);
        let j = ideal_closure(&a, &[g]).unwrap();
        // project f onto the annihilator of J so that it is admissible
        let q = quotient(j.subspace());
        let coeffs = q.projection.apply_left(&q.section.apply_left(&f));
        let sf = sweedler_wrap(&a, coeffs.clone(), &j).unwrap();
        let d = sweedler_delta(&sf).unwrap();
        for (l, r) in &d.terms {
            prop_assert!(sweedler_wrap(&a, l.coeffs().to_vec(), &j).is_ok());
            prop_assert!(sweedler_wrap(&a, r.coeffs().to_vec(), &j).is_ok());
        }
        let n = a.dim();
        let t = d.tensor();
        for x in 0..n {
            for y in 0..n {
                let e = |i| bihom_core::linalg::unit(n, i);
                let value = bihom_core::linalg::dot(&coeffs, &a.multiply(&e(x), &e(y)));
                prop_assert_eq!(t.get(x, y), &value);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn polynomial_dual_is_coassociative(
        (e, s, t, n) in (proptest::collection::vec(-1i64..=2, 4), -1i64..=1, -1i64..=2, proptest::collection::vec(0u32..=1, 2))
    ) {
        let a = Matrix::from_i64(2, 2, &e);
        let b = a.scale(&int(s)).add(&Matrix::scalar(2, &int(t)));
        let alg = PolyBiHomAlgebra::new(a, b).unwrap();
        let n = MultiIndex(n);
        prop_assert!(pairing_check(&alg, &n, 4).unwrap().passed());
        prop_assert!(coassoc_check(&alg, &n, 3).unwrap().passed());
    }
}

#[test]
fn equal_twists_give_equal_dual_twists() {
    let a = Matrix::from_i64(2, 2, &[1, 1, 0, 2]);
    let alg = PolyBiHomAlgebra::new(a.clone(), a).unwrap();
    for n in MultiIndex::up_to_degree(2, 3) {
        let d = DualFunctional::coordinate(n);
        assert_eq!(mu_on_dual(&alg, &d).unwrap(), eta_on_dual(&alg, &d).unwrap());
    }
}
