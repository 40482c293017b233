//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic,
//! wall-clock limits enforced. Exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use bihom::random::{property_qq, property_yau, property_zz, random_linear_map, rng};
use bihom_core::algebra::{
    default_labels, intersect_ideals, is_ideal, preimage_ideal, quotient_algebra, validate_algebra,
    validate_morphism, AlgebraMorphism, AlgebraRef, IdealHandle, Twist,
};
use bihom_core::coalgebra::{validate_coalgebra, FDBiHomCoalgebra};
use bihom_core::duality::{dual_coalgebra, sweedler_delta, sweedler_wrap};
use bihom_core::fixtures::{e1, e1_mutants, e1_regular_module, fixture_algebras, singular_beta_algebra};
use bihom_core::linalg::{dot, int, unit, Rational};
use bihom_core::modules::{
    comodule_pairing_report, dual_comodule, module_sweedler_coaction, module_sweedler_wrap,
    regular_module, transposed_module_morphism, validate_comodule, validate_comodule_morphism,
    validate_module, ModuleMorphism,
};
use bihom_core::poly::{
    coassoc_check, delta_dual, ideal_absorption_check, pairing_check, CofiniteMonomialIdeal, MultiIndex,
    PolyBiHomAlgebra,
};
use bihom_core::report::ValidationReport;
use bihom_core::{Error, Matrix, Subspace};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passes(r: &ValidationReport) -> Outcome {
    ensure(r.passed(), || {
        let names: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
        format!("{}: failing {:?}", r.subject, names)
    })
}

fn mi(v: &[u32]) -> MultiIndex {
    MultiIndex(v.to_vec())
}

fn e1_axioms_and_mutants() -> Outcome {
    let report = validate_algebra(&e1());
    passes(&report)?;
    ensure(report.checks.len() == 4, || format!("expected 4 axioms, got {}", report.checks.len()))?;
    let mutants = e1_mutants();
    ensure(mutants.len() == 6, || format!("expected 6 mutants, got {}", mutants.len()))?;
    for (name, m) in mutants {
        let r = validate_algebra(&m);
        let caught = r.checks.iter().any(|c| !c.passed && c.witness.is_some());
        ensure(caught, || format!("mutant {} passes every axiom", name))?;
    }
    Ok(())
}

fn e1_dual_exact() -> Outcome {
    let c = dual_coalgebra(&e1()).map_err(|e| e.to_string())?;
    let expected = FDBiHomCoalgebra::from_structure_constants(
        default_labels("f", 2),
        &[(0, 0, 0, int(1)), (1, 0, 1, int(3)), (1, 1, 0, int(2))],
        Matrix::diagonal(&[int(1), int(3)]),
        Matrix::diagonal(&[int(1), int(2)]),
    )
    .map_err(|e| e.to_string())?;
    ensure(c.delta() == expected.delta(), || format!("Delta = {:?}", c.delta()))?;
    ensure(c.psi() == expected.psi(), || "psi differs".into())?;
    ensure(c.phi() == expected.phi(), || "phi differs".into())?;
    passes(&validate_coalgebra(&c))
}

fn yau_suite() -> Outcome {
    passes(&property_yau(2024, 200, 4))
}

fn morphism_duality() -> Outcome {
    passes(&property_qq(2024, 100, 3))
}

fn tensor_quotients() -> Outcome {
    passes(&property_zz(2024, 50, 5))
}

/// Ideals of `a` reachable from coordinate subspaces and closures of small vectors.
fn fixture_ideals(a: &AlgebraRef) -> Vec<IdealHandle> {
    let n = a.dim();
    let mut candidates = Vec::new();
    for mask in 0u32..(1 << n) {
        let vs: Vec<_> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| unit(n, i)).collect();
        candidates.push(Subspace::span(n, &vs).expect("unit vectors"));
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut v = unit(n, i);
            v[j] = int(1);
            candidates.push(Subspace::span(n, &[v]).expect("length n"));
        }
    }
    let mut out: Vec<IdealHandle> = Vec::new();
    for s in candidates {
        if let Ok(j) = is_ideal(a, &s) {
            if !out.iter().any(|h| h.subspace() == j.subspace()) {
                out.push(j);
            }
        }
    }
    out
}

fn ideal_bookkeeping() -> Outcome {
    let algebras: Vec<(&str, AlgebraRef)> = fixture_algebras().into_iter().map(|(n, a)| (n, Arc::new(a))).collect();
    let mut pairs = 0;
    let mut morphisms: Vec<AlgebraMorphism> = Vec::new();
    for (name, a) in &algebras {
        let ideals = fixture_ideals(a);
        for j in &ideals {
            for h in &ideals {
                let k = intersect_ideals(j, h).map_err(|e| e.to_string())?;
                let (lhs, rhs) = (k.codim(), h.codim() + (h.dim() - k.dim()));
                ensure(lhs == rhs, || format!("{}: {} != {}", name, lhs, rhs))?;
                pairs += 1;
            }
            morphisms.push(quotient_algebra(a, j).map_err(|e| e.to_string())?.1);
        }
        morphisms.push(AlgebraMorphism::identity(a));
        for t in [Twist::Alpha, Twist::Beta] {
            morphisms.push(AlgebraMorphism::new(a.clone(), a.clone(), a.twist(t).clone()).map_err(|e| e.to_string())?);
        }
        for (_, b) in &algebras {
            morphisms.push(AlgebraMorphism::zero(a, b));
        }
    }
    let mut g = rng(6);
    morphisms.extend((0..40).map(|_| random_linear_map(&mut g, 3)));
    let mut checked = 0;
    for f in morphisms.iter().filter(|f| validate_morphism(f).passed()) {
        for j in fixture_ideals(&f.target) {
            let pre = preimage_ideal(f, &j).map_err(|e| e.to_string())?;
            ensure(pre.codim() <= j.codim(), || format!("codim {} > {}", pre.codim(), j.codim()))?;
            checked += 1;
        }
    }
    ensure(pairs > 0 && checked > 0, || "nothing was enumerated".into())
}

fn sweedler_constructive() -> Outcome {
    let a: AlgebraRef = Arc::new(e1());
    let c = dual_coalgebra(&a).map_err(|e| e.to_string())?;
    let f = sweedler_wrap(&a, unit(2, 1), &IdealHandle::zero(&a)).map_err(|e| e.to_string())?;
    let t = sweedler_delta(&f).map_err(|e| e.to_string())?.tensor();
    for x in 0..2 {
        for y in 0..2 {
            ensure(t.get(x, y) == c.delta().get(x * 2 + y, 1), || format!("Delta(e1*) differs at ({}, {})", x, y))?;
            let pairing = dot(f.coeffs(), &a.multiply(&unit(2, x), &unit(2, y)));
            ensure(t.get(x, y) == &pairing, || format!("pairing differs at ({}, {})", x, y))?;
        }
    }
    let j = is_ideal(&a, &Subspace::span(2, &[unit(2, 1)]).expect("length 2")).map_err(|e| format!("{:?}", e))?;
    ensure(j.codim() == 1, || "quotient is not 1-dimensional".into())?;
    let f0 = sweedler_wrap(&a, unit(2, 0), &j).map_err(|e| e.to_string())?;
    let d0 = sweedler_delta(&f0).map_err(|e| e.to_string())?;
    let mut expected = Matrix::zeros(2, 2);
    expected.set(0, 0, int(1));
    ensure(d0.tensor() == expected, || format!("Delta(e0*) = {:?}", d0.tensor()))?;
    ensure(d0.terms.len() == 1, || format!("{} rank-one terms", d0.terms.len()))
}

fn poly_one_variable() -> Outcome {
    let alg = PolyBiHomAlgebra::new(Matrix::scalar(1, &int(2)), Matrix::scalar(1, &int(3))).map_err(|e| e.to_string())?;
    let d = delta_dual(&alg, &mi(&[2])).map_err(|e| e.to_string())?;
    let expected: BTreeMap<(MultiIndex, MultiIndex), Rational> = [
        ((mi(&[0]), mi(&[2])), int(9)),
        ((mi(&[1]), mi(&[1])), int(6)),
        ((mi(&[2]), mi(&[0])), int(4)),
    ]
    .into_iter()
    .collect();
    ensure(d.collected() == expected, || format!("Delta(d_2) = {:?}", d.collected()))?;
    passes(&pairing_check(&alg, &mi(&[2]), 6).map_err(|e| e.to_string())?)?;
    passes(&coassoc_check(&alg, &mi(&[3]), 6).map_err(|e| e.to_string())?)
}

fn poly_two_variables() -> Outcome {
    let a = Matrix::from_i64(2, 2, &[1, 1, 0, 1]);
    let b = Matrix::from_i64(2, 2, &[1, 2, 0, 1]);
    let alg = PolyBiHomAlgebra::new(a, b).map_err(|e| e.to_string())?;
    let n = mi(&[1, 1]);
    passes(&pairing_check(&alg, &n, 5).map_err(|e| e.to_string())?)?;
    passes(&coassoc_check(&alg, &n, 5).map_err(|e| e.to_string())?)?;
    let (r, checked) =
        ideal_absorption_check(&alg, &CofiniteMonomialIdeal::TotalDegree(3), 6).map_err(|e| e.to_string())?;
    passes(&r)?;
    ensure(checked.is_some(), || "no checked ideal token".into())
}

fn module_side() -> Outcome {
    let m = Arc::new(e1_regular_module());
    passes(&validate_module(&m))?;
    let c = dual_comodule(&m).map_err(|e| e.to_string())?;
    passes(&validate_comodule(&c))?;
    passes(&comodule_pairing_report(&m, &c))?;

    let a = m.algebra().clone();
    let xi = module_sweedler_wrap(&m, unit(2, 1), &IdealHandle::zero(&a)).map_err(|e| e.to_string())?;
    let t = module_sweedler_coaction(&xi).map_err(|e| e.to_string())?.tensor();
    for p in 0..2 {
        for j in 0..2 {
            let oracle = dot(xi.coeffs(), &m.act(&unit(2, p), &unit(2, j)));
            ensure(t.get(p, j) == &oracle, || format!("coaction differs at ({}, {})", p, j))?;
        }
    }

    let s: AlgebraRef = Arc::new(singular_beta_algebra());
    let sm = Arc::new(regular_module(&s));
    let sxi = module_sweedler_wrap(&sm, unit(2, 0), &IdealHandle::zero(&s)).map_err(|e| e.to_string())?;
    ensure(matches!(module_sweedler_coaction(&sxi), Err(Error::Precondition(_))), || {
        "singular beta was not refused".into()
    })?;

    let two = ModuleMorphism::new(m.clone(), m.clone(), Matrix::scalar(2, &int(2))).map_err(|e| e.to_string())?;
    passes(&validate_comodule_morphism(&transposed_module_morphism(&two)).map_err(|e| e.to_string())?)
}

struct Criterion {
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { title: "E1 axioms and mutation regression", limit: secs(1), run: e1_axioms_and_mutants },
        Criterion { title: "dual coalgebra of E1 is exact", limit: secs(1), run: e1_dual_exact },
        Criterion { title: "200 random Yau twists dualize", limit: secs(30), run: yau_suite },
        Criterion { title: "morphism verdicts survive transposition", limit: None, run: morphism_duality },
        Criterion { title: "tensor quotient kernels", limit: None, run: tensor_quotients },
        Criterion { title: "ideal codimension bookkeeping", limit: None, run: ideal_bookkeeping },
        Criterion { title: "Sweedler comultiplication via quotients", limit: None, run: sweedler_constructive },
        Criterion { title: "polynomial family, one variable", limit: secs(5), run: poly_one_variable },
        Criterion { title: "polynomial family, two variables", limit: secs(10), run: poly_two_variables },
        Criterion { title: "modules, comodules and module duals", limit: secs(5), run: module_side },
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(()), Some(limit)) if elapsed > limit => Err(format!("exceeded {:?}", limit)),
            (o, _) => o,
        };
        let ms = elapsed.as_secs_f64() * 1000.0;
        match outcome {
            Ok(()) => println!("[PASS] {:>2} {} ({:.0} ms)", i + 1, c.title, ms),
            Err(e) => {
                failed += 1;
                println!("[FAIL] {:>2} {} ({:.0} ms): {}", i + 1, c.title, ms, e);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
