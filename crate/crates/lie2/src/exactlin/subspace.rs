//! Subspaces of a named ambient space, plus quotients and membership solving.

use super::linmap::LinMap;
use super::mat::{vec_is_zero, Mat, Vector};
use super::space::FinSpace;
use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

/// A subspace given by a spanning list of vectors in the ambient space.
/// Not required to be independent on construction; computations reduce first.
#[derive(Clone, Debug)]
pub struct Subspace<R> {
    ambient: FinSpace,
    basis: Vec<Vector<R>>,
}

impl<R: Ring> Subspace<R> {
    pub fn new(ambient: FinSpace, spanning: Vec<Vector<R>>) -> Self {
        for v in &spanning {
            assert_eq!(v.len(), ambient.dim(), "vector does not live in {ambient}");
        }
        Subspace { ambient, basis: spanning }
    }

    pub fn zero(ambient: FinSpace) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: FinSpace) -> Self {
        let basis = (0..ambient.dim())
            .map(|i| super::mat::unit_vec(ambient.dim(), i))
            .collect();
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> &FinSpace {
        &self.ambient
    }

    pub fn basis(&self) -> &[Vector<R>] {
        &self.basis
    }

    /// Matrix whose columns are the spanning vectors.
    pub fn as_matrix(&self) -> Mat<R> {
        Mat::from_cols(self.basis.clone(), self.ambient.dim())
    }
}

impl<R: Field> Subspace<R> {
    /// Replaces the spanning set by an independent one (pivot columns).
    pub fn reduced(&self) -> Subspace<R> {
        if self.basis.is_empty() {
            return self.clone();
        }
        Subspace {
            ambient: self.ambient.clone(),
            basis: self.as_matrix().column_space_basis(),
        }
    }

    pub fn dim(&self) -> usize {
        if self.basis.is_empty() {
            0
        } else {
            self.as_matrix().rank()
        }
    }

    /// Coordinates of `v` in the spanning set, or `None` if `v` is outside.
    pub fn solve_membership(&self, v: &[R]) -> Option<Vector<R>> {
        assert_eq!(v.len(), self.ambient.dim(), "dimension mismatch");
        if self.basis.is_empty() {
            return vec_is_zero(v).then(Vec::new);
        }
        self.as_matrix().solve(v)
    }

    pub fn contains(&self, v: &[R]) -> bool {
        self.solve_membership(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace<R>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn equals(&self, other: &Subspace<R>) -> bool {
        self.contains_subspace(other) && other.contains_subspace(self)
    }

    /// Quotient of the ambient space by this subspace.
    ///
    /// Returns the quotient space (with labels `q1..qk` qualified by `name`),
    /// the projection, and a linear section of it. The section sends the
    /// chosen complement basis vectors (non-pivot coordinates) back into the
    /// ambient space, so `projection . section = id`.
    pub fn quotient(&self, name: &str) -> Result<(FinSpace, LinMap<R>, LinMap<R>)> {
        let n = self.ambient.dim();
        let reduced = self.reduced();
        let k = reduced.basis.len();
        if k > n {
            return Err(Error::shape("subspace larger than ambient".to_string()));
        }
        // Columns: subspace basis, then all ambient basis vectors. Pivot
        // columns beyond the first k pick the complement.
        let mut cols = reduced.basis.clone();
        for i in 0..n {
            cols.push(super::mat::unit_vec(n, i));
        }
        let m = Mat::from_cols(cols, n);
        let rref = m.rref();
        let mut complement: Vec<usize> = Vec::new();
        for &p in &rref.pivots {
            if p >= k {
                complement.push(p - k);
            }
        }
        let qdim = n - k;
        if complement.len() != qdim {
            return Err(Error::Internal(format!(
                "quotient rank mismatch: expected {} complement pivots, got {}",
                qdim,
                complement.len()
            )));
        }
        let qspace = FinSpace::new(
            name,
            complement
                .iter()
                .map(|&i| format!("[{}]", self.ambient.label(i)))
                .collect(),
        );
        // Basis adapted to ambient = sub (+) complement; expressing a vector in
        // it gives the projection as the complement coordinates.
        let mut adapted_cols = reduced.basis.clone();
        for &i in &complement {
            adapted_cols.push(super::mat::unit_vec(n, i));
        }
        let adapted = Mat::from_cols(adapted_cols, n);
        let adapted_inv = adapted
            .inverse()
            .ok_or_else(|| Error::Internal("adapted basis not invertible".into()))?;
        let proj_mat = Mat::from_fn(qdim, n, |i, j| adapted_inv[(k + i, j)].clone());
        let projection = LinMap::new(self.ambient.clone(), qspace.clone(), proj_mat)?;
        let section = LinMap::from_images(
            qspace.clone(),
            self.ambient.clone(),
            complement
                .iter()
                .map(|&i| super::mat::unit_vec(n, i))
                .collect(),
        )?;
        Ok((qspace, projection, section))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::mat::unit_vec;
    use crate::scalar::Scalar;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn membership_examples() {
        let v2 = FinSpace::numbered("V", "v", 2);
        let span = Subspace::new(v2.clone(), vec![vec![q(1), q(0)]]);
        // zero vector: all-zero coordinates
        assert_eq!(span.solve_membership(&[q(0), q(0)]).unwrap(), vec![q(0)]);
        // first spanning vector: unit coordinates
        assert_eq!(span.solve_membership(&[q(1), q(0)]).unwrap(), vec![q(1)]);
        // outside
        assert!(span.solve_membership(&[q(0), q(1)]).is_none());
    }

    #[test]
    fn quotient_examples() {
        let v2 = FinSpace::numbered("V", "v", 2);

        // by the zero subspace: projection is (a relabeling of) the identity
        let (qs, proj, sect) = Subspace::<Scalar>::zero(v2.clone()).quotient("Q").unwrap();
        assert_eq!(qs.dim(), 2);
        assert_eq!(*proj.mat(), Mat::identity(2));
        assert_eq!(*proj.compose(&sect).unwrap().mat(), Mat::identity(2));

        // by the diagonal: 1-dim quotient killing (1,1)
        let diag = Subspace::new(v2.clone(), vec![vec![q(1), q(1)]]);
        let (qs, proj, sect) = diag.quotient("Q").unwrap();
        assert_eq!(qs.dim(), 1);
        assert!(vec_is_zero(&proj.apply(&[q(1), q(1)])));
        assert_eq!(proj.compose(&sect).unwrap(), LinMap::identity(qs));
        // kernel(projection) = sub
        assert!(proj.kernel().equals(&diag));

        // Q^3 by a 2-dim subspace
        let v3 = FinSpace::numbered("W", "w", 3);
        let sub = Subspace::new(v3.clone(), vec![unit_vec::<Scalar>(3, 0), unit_vec(3, 1)]);
        let (qs, _, _) = sub.quotient("Q").unwrap();
        assert_eq!(qs.dim(), 1);
    }
}
