use alloc::vec::Vec;

use num_traits::Zero;

use super::matrix::{kronecker, rref, Matrix};
use super::rational::{is_zero_vector, kron_vector, unit, zeros, Rational, Vector};
use crate::error::Error;

/// A linear subspace of `K^ambient_dim`, stored by a basis in reduced row-echelon form.
///
/// Because the basis is canonical, two subspaces are equal exactly when their
/// stored matrices are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self, Error> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::Input(alloc::format!(
                "vector of length {} in a subspace of K^{}",
                v.len(),
                ambient_dim
            )));
        }
        Ok(Self::from_spanning_matrix(&Matrix::from_rows(ambient_dim, vectors)))
    }

    /// Row space of `m`.
    pub fn from_spanning_matrix(m: &Matrix) -> Self {
        let (reduced, pivots) = rref(m);
        let basis = Matrix::from_rows(m.cols(), &reduced.row_vectors()[..pivots.len()]);
        Subspace { ambient_dim: m.cols(), basis, pivots }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.dim()
    }

    /// RREF basis; rows are the basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` against the stored basis, or `None` if `v` is outside the span.
    pub fn membership(&self, v: &[Rational]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        // In RREF the coordinate on row r is the entry of v at that row's pivot.
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let recombined = self.basis.apply_left(&coords);
        (recombined.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.membership(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    /// Basis of the annihilator: rows `w` with `⟨w, v⟩ = 0` for every `v` in the subspace.
    /// `v` lies in the subspace iff every annihilator row kills it.
    pub fn annihilator(&self) -> Subspace {
        kernel_basis(&self.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        check_same_ambient(self, other)?;
        Ok(Subspace::from_spanning_matrix(&self.basis.vstack(&other.basis)))
    }

    /// Image of the subspace under a linear map `m` (a `rows × ambient_dim` matrix).
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        Subspace::from_spanning_matrix(&self.basis.mul(&m.transpose()))
    }
}

fn check_same_ambient(a: &Subspace, b: &Subspace) -> Result<(), Error> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::Input(alloc::format!(
            "subspaces live in K^{} and K^{}",
            a.ambient_dim,
            b.ambient_dim
        )));
    }
    Ok(())
}

/// Null space `{v : m·v = 0}` as a subspace of `K^cols`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let (reduced, pivots) = rref(m);
    let n = m.cols();
    let mut vectors = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = zeros(n);
        v[free] = super::one();
        for (r, &p) in pivots.iter().enumerate() {
            let x = reduced.get(r, free);
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        vectors.push(v);
    }
    Subspace::from_spanning_matrix(&Matrix::from_rows(n, &vectors))
}

/// Coordinates of `v` in `s`, if it lies there.
pub fn membership(s: &Subspace, v: &[Rational]) -> Option<Vector> {
    s.membership(v)
}

/// `s1 ∩ s2`, computed as the common kernel of both annihilators.
pub fn intersect(s1: &Subspace, s2: &Subspace) -> Result<Subspace, Error> {
    check_same_ambient(s1, s2)?;
    let stacked = s1.annihilator().basis.vstack(&s2.annihilator().basis);
    Ok(kernel_basis(&stacked))
}

/// Projection onto and section from `K^n / s`.
///
/// The complement is spanned by the standard vectors at the non-pivot columns of
/// the RREF basis, so `section` picks those as representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    pub ambient_dim: usize,
    pub subspace: Subspace,
    /// `codim × ambient_dim`.
    pub projection: Matrix,
    /// `ambient_dim × codim`.
    pub section: Matrix,
    /// Ambient coordinates whose standard vectors represent the quotient basis.
    pub representatives: Vec<usize>,
}

impl QuotientData {
    pub fn codim(&self) -> usize {
        self.representatives.len()
    }

    pub fn project(&self, v: &[Rational]) -> Vector {
        self.projection.apply(v)
    }

    pub fn lift(&self, v: &[Rational]) -> Vector {
        self.section.apply(v)
    }
}

pub fn quotient(s: &Subspace) -> QuotientData {
    let n = s.ambient_dim;
    let representatives: Vec<usize> = (0..n).filter(|c| !s.pivots.contains(c)).collect();
    let codim = representatives.len();
    let mut projection = Matrix::zeros(codim, n);
    for k in 0..n {
        // Reduce e_k modulo the subspace; what is left sits on the representative coordinates.
        let mut residual = unit(n, k);
        for (r, &p) in s.pivots.iter().enumerate() {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, x) in s.basis.row(r).iter().enumerate() {
                if !x.is_zero() {
                    residual[j] -= &c * x;
                }
            }
        }
        for (i, &rep) in representatives.iter().enumerate() {
            projection.set(i, k, residual[rep].clone());
        }
    }
    let section =
        Matrix::from_columns(n, &representatives.iter().map(|&rep| unit(n, rep)).collect::<Vec<_>>());
    QuotientData { ambient_dim: n, subspace: s.clone(), projection, section, representatives }
}

/// `A ⊗ J + I ⊗ B` inside `A ⊗ B`, spanned by tensors of basis vectors.
pub fn tensor_sum_subspace(dim_a: usize, dim_b: usize, i: &Subspace, j: &Subspace) -> Subspace {
    let mut spanning = Vec::new();
    for a in 0..dim_a {
        let ea = unit(dim_a, a);
        for jv in j.basis_vectors() {
            spanning.push(kron_vector(&ea, &jv));
        }
    }
    for iv in i.basis_vectors() {
        for b in 0..dim_b {
            spanning.push(kron_vector(&iv, &unit(dim_b, b)));
        }
    }
    spanning.retain(|v| !is_zero_vector(v));
    Subspace::from_spanning_matrix(&Matrix::from_rows(dim_a * dim_b, &spanning))
}

/// Kernel of `π_A ⊗ π_B : A ⊗ B → (A/I) ⊗ (B/J)`.
pub fn tensor_projection_kernel(i: &QuotientData, j: &QuotientData) -> Subspace {
    kernel_basis(&kronecker(&i.projection, &j.projection))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use alloc::vec;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn kernel_of_single_relation() {
        let k = kernel_basis(&Matrix::from_i64(1, 2, &[1, 1]));
        assert_eq!(k, Subspace::span(2, &[v(&[1, -1])]).unwrap());
        assert_eq!(kernel_basis(&Matrix::identity(2)), Subspace::zero(2));
    }

    #[test]
    fn kernel_rows_are_annihilated() {
        let m = Matrix::from_i64(1, 3, &[1, 2, 3]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 2);
        for row in k.basis_vectors() {
            assert!(is_zero_vector(&m.apply(&row)));
        }
    }

    #[test]
    fn kernel_of_zero_row_matrix_is_everything() {
        assert_eq!(kernel_basis(&Matrix::zeros(0, 3)), Subspace::full(3));
    }

    #[test]
    fn membership_examples() {
        let s = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        assert_eq!(membership(&s, &v(&[3, 0])), Some(v(&[3])));
        assert_eq!(membership(&s, &v(&[0, 1])), None);
    }

    #[test]
    fn membership_coordinates_solve_the_system() {
        // The stored basis is canonical (RREF), so coordinates are taken against it;
        // recombining the original spanning vectors with the hand solution (2,1) gives v too.
        let span = [v(&[1, 1]), v(&[0, 2])];
        let s = Subspace::span(2, &span).unwrap();
        let target = v(&[2, 4]);
        let coords = membership(&s, &target).unwrap();
        assert_eq!(s.basis().apply_left(&coords), target);
        let hand = crate::linalg::add_vectors(
            &crate::linalg::scale_vector(&int(2), &span[0]),
            &crate::linalg::scale_vector(&int(1), &span[1]),
        );
        assert_eq!(hand, target);
    }

    #[test]
    fn intersection_examples() {
        let e1 = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        let e2 = Subspace::span(2, &[v(&[0, 1])]).unwrap();
        assert_eq!(intersect(&e1, &e2).unwrap(), Subspace::zero(2));
        assert_eq!(intersect(&e1, &e1).unwrap(), e1);
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(intersect(&a, &b).unwrap(), Subspace::span(3, &[v(&[0, 1, 0])]).unwrap());
        assert!(intersect(&a, &e1).is_err());
    }

    #[test]
    fn quotient_examples() {
        let q = quotient(&Subspace::zero(2));
        assert_eq!(q.projection, Matrix::identity(2));
        let q = quotient(&Subspace::full(2));
        assert_eq!(q.codim(), 0);
        assert_eq!(q.projection.rows(), 0);
        let s = Subspace::span(2, &[v(&[1, 1])]).unwrap();
        let q = quotient(&s);
        assert_eq!(q.codim(), 1);
        assert!(is_zero_vector(&q.project(&v(&[1, 1]))));
        assert_eq!(q.projection.mul(&q.section), Matrix::identity(1));
    }

    #[test]
    fn span_rejects_wrong_length() {
        assert!(Subspace::span(2, &[vec![int(1)]]).is_err());
    }

    #[test]
    fn tensor_kernel_small_cases() {
        let zero = Subspace::zero(2);
        let q0 = quotient(&zero);
        assert_eq!(tensor_projection_kernel(&q0, &q0), Subspace::zero(4));
        let full = Subspace::full(2);
        let qf = quotient(&full);
        assert_eq!(tensor_projection_kernel(&qf, &q0), Subspace::full(4));
        let a1 = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        let q1 = quotient(&a1);
        let k = tensor_projection_kernel(&q1, &q1);
        assert_eq!(k.dim(), 3);
        assert_eq!(k, tensor_sum_subspace(2, 2, &a1, &a1));
    }
}
