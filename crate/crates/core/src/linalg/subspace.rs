use serde::{Deserialize, Serialize};

use super::matrix::{axpy, dot, is_zero_vec, Matrix};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A linear subspace of ℚ(i)^ambient_dim stored by its reduced row-echelon
/// basis. The echelon form is canonical, so equality of subspaces is
/// equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
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

    /// Span of the given vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        Subspace::row_space(&Matrix::from_rows(vectors.to_vec(), ambient_dim))
    }

    pub fn row_space(m: &Matrix) -> Self {
        let e = m.rref();
        Subspace { ambient_dim: m.cols(), basis: e.matrix, pivots: e.pivots }
    }

    pub fn column_space(m: &Matrix) -> Self {
        Subspace::row_space(&m.transpose())
    }

    /// `{v : m·v = 0}`.
    pub fn kernel(m: &Matrix) -> Self {
        let vs = m.null_vectors();
        Subspace::span(m.cols(), &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Basis matrix, one basis vector per row, in reduced echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; the unit vectors at these indices
    /// span a complement of the subspace.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut used = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            used[p] = true;
        }
        (0..self.ambient_dim).filter(|&i| !used[i]).collect()
    }

    /// Canonical representative of `v` modulo the subspace: the unique vector
    /// congruent to `v` that vanishes on every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim, "vector length must match ambient dimension");
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if !c.is_zero() {
                axpy(&-c, self.basis.row(i), &mut out);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// `{c : c·w = 0 for all w}` under the bilinear pairing `Σ cᵢwᵢ`.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient_dim);
        }
        Subspace::kernel(&self.basis)
    }

    /// Image under a linear map with `m.cols() == ambient_dim`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        let vs: Vec<Vec<Scalar>> = self.basis_vectors().iter().map(|b| m.mul_vec(b)).collect();
        Subspace::span(m.rows(), &vs)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        span_sum(&[self.clone(), other.clone()])
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        intersect(&[self.clone(), other.clone()])
    }
}

fn common_ambient(subspaces: &[Subspace]) -> Result<Option<usize>> {
    let Some(first) = subspaces.first() else {
        return Ok(None);
    };
    let d = first.ambient_dim;
    if let Some(bad) = subspaces.iter().find(|s| s.ambient_dim != d) {
        return Err(Error::DimensionMismatch { expected: d, found: bad.ambient_dim });
    }
    Ok(Some(d))
}

/// Sum of subspaces. An empty list has no ambient dimension and is rejected.
pub fn span_sum(subspaces: &[Subspace]) -> Result<Subspace> {
    let d = common_ambient(subspaces)?
        .ok_or_else(|| Error::Invalid("span_sum of an empty list".into()))?;
    let vs: Vec<Vec<Scalar>> = subspaces.iter().flat_map(|s| s.basis_vectors()).collect();
    Ok(Subspace::span(d, &vs))
}

/// Intersection computed as the kernel of the stacked annihilator systems.
pub fn intersect(subspaces: &[Subspace]) -> Result<Subspace> {
    let d = common_ambient(subspaces)?
        .ok_or_else(|| Error::Invalid("intersect of an empty list".into()))?;
    let rows: Vec<Vec<Scalar>> =
        subspaces.iter().flat_map(|s| s.annihilator().basis_vectors()).collect();
    if rows.is_empty() {
        return Ok(Subspace::full(d));
    }
    Ok(Subspace::kernel(&Matrix::from_rows(rows, d)))
}

/// Coordinates in a quotient `W / F` with `F ⊆ W`, using a fixed set of
/// representatives of a basis of the quotient.
#[derive(Clone, Debug)]
pub struct Quotient {
    sub: Subspace,
    reps: Vec<Vec<Scalar>>,
    solver: Matrix,
}

impl Quotient {
    /// Builds `whole / sub`; the representatives are taken from the echelon
    /// basis of `whole`, keeping those independent modulo `sub`.
    pub fn new(whole: &Subspace, sub: &Subspace) -> Result<Quotient> {
        if !whole.contains_subspace(sub) {
            return Err(Error::Invalid("quotient by a subspace that is not contained".into()));
        }
        let mut acc = sub.clone();
        let mut reps = Vec::new();
        for b in whole.basis_vectors() {
            if !acc.contains(&b) {
                acc = Subspace::span(whole.ambient_dim(), &{
                    let mut vs = acc.basis_vectors();
                    vs.push(b.clone());
                    vs
                });
                reps.push(b);
            }
        }
        let mut cols = reps.clone();
        cols.extend(sub.basis_vectors());
        let solver = Matrix::from_columns(&cols, whole.ambient_dim());
        Ok(Quotient { sub: sub.clone(), reps, solver })
    }

    /// Quotient of the whole ambient space.
    pub fn of_ambient(sub: &Subspace) -> Result<Quotient> {
        Quotient::new(&Subspace::full(sub.ambient_dim()), sub)
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[Vec<Scalar>] {
        &self.reps
    }

    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.sub.ambient_dim()];
        for (c, r) in coords.iter().zip(&self.reps) {
            axpy(c, r, &mut out);
        }
        out
    }

    /// Coordinates of the class of `v`; `None` when `v` is outside the
    /// whole space.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let x = self.solver.solve(v)?;
        Some(x[..self.reps.len()].to_vec())
    }
}

/// Serializable view of a subspace: dimension plus echelon basis rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceRecord {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Scalar>>,
}

impl From<&Subspace> for SubspaceRecord {
    fn from(s: &Subspace) -> Self {
        SubspaceRecord { ambient_dim: s.ambient_dim, basis: s.basis_vectors() }
    }
}

impl From<&SubspaceRecord> for Subspace {
    fn from(r: &SubspaceRecord) -> Self {
        Subspace::span(r.ambient_dim, &r.basis)
    }
}

/// `Σ cᵢ vᵢ`.
pub fn combine(coeffs: &[Scalar], vectors: &[Vec<Scalar>], dim: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); dim];
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(c, v, &mut out);
    }
    out
}

/// Pairing used for annihilators; exposed for tests.
pub fn pair(c: &[Scalar], w: &[Scalar]) -> Scalar {
    dot(c, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::int_vector;
    use proptest::prelude::*;

    #[test]
    fn kernel_examples() {
        let k = Subspace::kernel(&Matrix::from_ints(&[&[1, 0], &[0, 0]]));
        assert_eq!(k, Subspace::span(2, &[int_vector(&[0, 1])]));
        assert!(Subspace::kernel(&Matrix::identity(3)).is_zero());
        let k = Subspace::kernel(&Matrix::from_ints(&[&[1, 1]]));
        assert_eq!(k, Subspace::span(2, &[int_vector(&[1, -1])]));
    }

    #[test]
    fn sum_and_intersection_examples() {
        let p1 = Subspace::span(3, &[int_vector(&[1, 0, 0]), int_vector(&[0, 1, 0])]);
        let p2 = Subspace::span(3, &[int_vector(&[1, 1, 1]), int_vector(&[0, 1, 0])]);
        let line = intersect(&[p1.clone(), p2.clone()]).unwrap();
        assert_eq!(line, Subspace::span(3, &[int_vector(&[0, 1, 0])]));
        assert_eq!(intersect(&[p1.clone(), p1.clone()]).unwrap(), p1);
        let l = Subspace::span(3, &[int_vector(&[0, 0, 1])]);
        assert!(span_sum(&[l, p1.clone()]).unwrap().is_full());
        let bad = Subspace::zero(2);
        assert!(matches!(
            intersect(&[p1, bad]),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn quotient_coordinates() {
        let whole = Subspace::full(3);
        let sub = Subspace::span(3, &[int_vector(&[1, 1, 0])]);
        let q = Quotient::new(&whole, &sub).unwrap();
        assert_eq!(q.dim(), 2);
        let c = q.coords(&int_vector(&[1, 1, 0])).unwrap();
        assert!(is_zero_vec(&c));
        let v = int_vector(&[2, 5, 7]);
        let back = q.lift(&q.coords(&v).unwrap());
        assert!(sub.contains(&back.iter().zip(&v).map(|(a, b)| a - b).collect::<Vec<_>>()));
    }

    fn arb_subspace(d: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(-2i64..3, d), 0..4)
            .prop_map(move |vs| Subspace::span(d, &vs.iter().map(|v| int_vector(v)).collect::<Vec<_>>()))
    }

    proptest! {
        #[test]
        fn containment_laws(a in arb_subspace(4), b in arb_subspace(4)) {
            let i = a.intersection(&b).unwrap();
            let s = a.sum(&b).unwrap();
            prop_assert!(a.contains_subspace(&i) && b.contains_subspace(&i));
            prop_assert!(s.contains_subspace(&a) && s.contains_subspace(&b));
            prop_assert_eq!(i.dim() + s.dim(), a.dim() + b.dim());
        }

        #[test]
        fn canonical_basis_is_syntactic(a in arb_subspace(4)) {
            let shuffled: Vec<Vec<Scalar>> = a.basis_vectors().into_iter().rev()
                .map(|v| v.iter().map(|x| x * &Scalar::from_int(3)).collect()).collect();
            prop_assert_eq!(Subspace::span(4, &shuffled), a);
        }
    }
}
