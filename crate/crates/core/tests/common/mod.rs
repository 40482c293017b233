#![allow(dead_code)]

use bihom_core::fixtures::yau_block_algebra;
use bihom_core::linalg::{int, Matrix, Rational, Subspace, Vector};
use bihom_core::FDBiHomAlgebra;
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-3i64..=3).prop_map(int)
}

pub fn vector(n: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(small_rational(), n)
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-2i64..=2, rows * cols)
        .prop_map(move |e| Matrix::from_i64(rows, cols, &e))
}

pub fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    (0..=n).prop_flat_map(move |k| {
        proptest::collection::vec(vector(n), k).prop_map(move |vs| Subspace::span(n, &vs).unwrap())
    })
}

fn partition(n: usize) -> BoxedStrategy<Vec<usize>> {
    if n == 0 {
        return Just(Vec::new()).boxed();
    }
    (1..=n)
        .prop_flat_map(move |first| partition(n - first).prop_map(move |mut rest| {
            rest.insert(0, first);
            rest
        }))
        .boxed()
}

fn scalar_choice() -> impl Strategy<Value = Option<Rational>> {
    prop_oneof![1 => Just(None), 4 => (-2i64..=3).prop_map(|s| Some(int(s)))]
}

/// Yau-twisted products of truncated polynomial algebras in a random basis.
pub fn bihom_algebra(max_dim: usize) -> impl Strategy<Value = FDBiHomAlgebra> {
    (1..=max_dim)
        .prop_flat_map(partition)
        .prop_flat_map(|blocks| {
            let s = blocks.len();
            let n: usize = blocks.iter().sum();
            (
                Just(blocks),
                proptest::collection::vec(scalar_choice(), s),
                proptest::collection::vec(scalar_choice(), s),
                matrix(n, n),
            )
        })
        .prop_map(|(blocks, a, b, q)| {
            let n = q.rows();
            let q = if q.rank() == n { q } else { Matrix::identity(n) };
            yau_block_algebra(&blocks, &a, &b, Some(&q)).expect("block family is valid")
        })
}
