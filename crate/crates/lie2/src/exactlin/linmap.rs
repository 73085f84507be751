//! Linear maps between named spaces.

use super::mat::{Mat, Vector};
use super::space::FinSpace;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

/// A linear map, stored as a `dim(target) x dim(source)` matrix; column `j` is
/// the image of the `j`-th source basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct LinMap<R> {
    pub source: FinSpace,
    pub target: FinSpace,
    mat: Mat<R>,
}

impl<R: Ring> LinMap<R> {
    pub fn new(source: FinSpace, target: FinSpace, mat: Mat<R>) -> Result<Self> {
        if mat.rows() != target.dim() || mat.cols() != source.dim() {
            return Err(Error::shape(format!(
                "map {}x{} does not fit {} -> {}",
                mat.rows(),
                mat.cols(),
                source,
                target
            )));
        }
        Ok(LinMap { source, target, mat })
    }

    pub fn zero(source: FinSpace, target: FinSpace) -> Self {
        let mat = Mat::zero(target.dim(), source.dim());
        LinMap { source, target, mat }
    }

    pub fn identity(space: FinSpace) -> Self {
        let mat = Mat::identity(space.dim());
        LinMap {
            source: space.clone(),
            target: space,
            mat,
        }
    }

    pub fn from_fn(source: FinSpace, target: FinSpace, f: impl FnMut(usize, usize) -> R) -> Self {
        let mat = Mat::from_fn(target.dim(), source.dim(), f);
        LinMap { source, target, mat }
    }

    /// Build from images of the source basis vectors.
    pub fn from_images(source: FinSpace, target: FinSpace, images: Vec<Vector<R>>) -> Result<Self> {
        if images.len() != source.dim() || images.iter().any(|v| v.len() != target.dim()) {
            return Err(Error::shape(format!(
                "expected {} images of length {}",
                source.dim(),
                target.dim()
            )));
        }
        let mat = Mat::from_cols(images, target.dim());
        Ok(LinMap { source, target, mat })
    }

    pub fn mat(&self) -> &Mat<R> {
        &self.mat
    }

    pub fn apply(&self, v: &[R]) -> Vector<R> {
        self.mat.mul_vec(v)
    }

    pub fn apply_basis(&self, j: usize) -> Vector<R> {
        self.mat.col(j)
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// `self` after `other`; requires `other.target == self.source`.
    pub fn compose(&self, other: &LinMap<R>) -> Result<Self> {
        if !self.source.compatible(&other.target) {
            return Err(Error::shape(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(LinMap {
            source: other.source.clone(),
            target: self.target.clone(),
            mat: self.mat.mul(&other.mat),
        })
    }

    pub fn add(&self, other: &LinMap<R>) -> LinMap<R> {
        assert!(self.source.compatible(&other.source) && self.target.compatible(&other.target));
        LinMap {
            source: self.source.clone(),
            target: self.target.clone(),
            mat: self.mat.add(&other.mat),
        }
    }

    pub fn sub(&self, other: &LinMap<R>) -> LinMap<R> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LinMap<R> {
        LinMap {
            source: self.source.clone(),
            target: self.target.clone(),
            mat: self.mat.neg(),
        }
    }

    pub fn scale(&self, c: &R) -> LinMap<R> {
        LinMap {
            source: self.source.clone(),
            target: self.target.clone(),
            mat: self.mat.scale(c),
        }
    }

    /// Unit-pivot inversion; `Err(Singular)` names the map when it fails.
    pub fn inverse(&self) -> Result<LinMap<R>> {
        if self.source.dim() != self.target.dim() {
            return Err(Error::Singular(format!(
                "{} -> {} is not square",
                self.source, self.target
            )));
        }
        let inv = self.mat.inverse().ok_or_else(|| {
            Error::Singular(format!("map {} -> {} is not invertible", self.source, self.target))
        })?;
        Ok(LinMap {
            source: self.target.clone(),
            target: self.source.clone(),
            mat: inv,
        })
    }

    pub fn map_ring<S: Ring>(&self, f: impl Fn(&R) -> S) -> LinMap<S> {
        LinMap {
            source: self.source.clone(),
            target: self.target.clone(),
            mat: self.mat.map(f),
        }
    }
}

impl<R: Field> LinMap<R> {
    /// Basis of the kernel as a subspace of the source.
    pub fn kernel(&self) -> Subspace<R> {
        Subspace::new(self.source.clone(), self.mat.kernel_basis())
    }

    /// Basis of the image as a subspace of the target.
    pub fn image(&self) -> Subspace<R> {
        Subspace::new(self.target.clone(), self.mat.column_space_basis())
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn solve(&self, b: &[R]) -> Option<Vector<R>> {
        self.mat.solve(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn kernel_examples() {
        let v3 = FinSpace::numbered("V", "v", 3);
        // identity: trivial kernel
        let id = LinMap::<Scalar>::identity(v3.clone());
        assert_eq!(id.kernel().dim(), 0);

        // zero map on a 2-dim space: full kernel
        let v2 = FinSpace::numbered("W", "w", 2);
        let z = LinMap::<Scalar>::zero(v2.clone(), v2.clone());
        assert_eq!(z.kernel().dim(), 2);

        // [[1,2],[2,4]]: one kernel vector proportional to (2,-1)
        let m = LinMap::new(
            v2.clone(),
            v2.clone(),
            Mat::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]),
        )
        .unwrap();
        let ker = m.kernel();
        assert_eq!(ker.dim(), 1);
        let v = &ker.basis()[0];
        assert_eq!(v[0].mul(&q(-1)), v[1].mul(&q(2)));
        // rank-nullity
        assert_eq!(m.rank() + ker.dim(), 2);
    }
}
