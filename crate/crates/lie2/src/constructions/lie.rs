//! Ordinary Lie algebras with named bases, plus the classical gadgets the
//! factory needs: Jacobi verification, the Killing form, derivation algebras,
//! and the view of a Lie algebra as a Lie 2-algebra concentrated in degree 0.

use crate::error::{Error, Result};
use crate::exactlin::mat::{unit_vec, vec_add, Mat, Vector};
use crate::exactlin::tensor::increasing_tuples;
use crate::exactlin::{FinSpace, LinMap, MultiTensor, Symmetry};
use crate::lie2core::algebra::{l2_01_shape, l3_shape, Lie2Candidate};
use crate::lie2core::{AxiomReport, Lie2Algebra};
use crate::ring::{Field, Ring};

/// A Lie algebra: a space with an alternating bracket satisfying Jacobi.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<R> {
    space: FinSpace,
    bracket: MultiTensor<R>,
}

impl<R: Ring> LieAlgebra<R> {
    pub fn new(space: FinSpace, bracket: MultiTensor<R>) -> Result<Self> {
        let want = [
            (space.clone(), Symmetry::Alt),
            (space.clone(), Symmetry::Alt),
        ];
        if bracket.inputs() != want || !bracket.output().compatible(&space) {
            return Err(Error::shape("bracket has wrong signature".to_string()));
        }
        let candidate = LieAlgebra { space, bracket };
        let report = candidate.verify_jacobi();
        if !report.passed() {
            return Err(Error::math(format!("Jacobi fails: {}", report.summary())));
        }
        Ok(candidate)
    }

    pub fn abelian(space: FinSpace) -> Self {
        let bracket = MultiTensor::new(
            vec![
                (space.clone(), Symmetry::Alt),
                (space.clone(), Symmetry::Alt),
            ],
            space.clone(),
        );
        LieAlgebra { space, bracket }
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn bracket(&self) -> &MultiTensor<R> {
        &self.bracket
    }

    pub fn bracket_vec(&self, x: &[R], y: &[R]) -> Vector<R> {
        self.bracket.eval(&[x, y])
    }

    pub fn verify_jacobi(&self) -> AxiomReport<R> {
        let mut report = AxiomReport::new();
        let n = self.space.dim();
        for t in increasing_tuples(n, 3, true) {
            let (x, y, z) = (t[0], t[1], t[2]);
            let mut defect: Vector<R> = crate::exactlin::mat::zero_vec(n);
            for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
                let inner = self.bracket.eval_basis(&[p, q]);
                defect = vec_add(&defect, &self.bracket.eval(&[&inner, &unit_vec(n, r)]));
            }
            report.record(
                "jacobi",
                t.iter().map(|&i| self.space.label(i).to_string()).collect(),
                defect,
            );
        }
        report.finish()
    }

    /// `ad_x` as a matrix.
    pub fn ad(&self, x: &[R]) -> Mat<R> {
        let n = self.space.dim();
        Mat::from_cols(
            (0..n)
                .map(|j| self.bracket_vec(x, &unit_vec(n, j)))
                .collect(),
            n,
        )
    }

    /// Killing form `kappa(x, y) = tr(ad_x ad_y)` as a symmetric matrix.
    pub fn killing_form(&self) -> Mat<R> {
        let n = self.space.dim();
        let ads: Vec<Mat<R>> = (0..n).map(|i| self.ad(&unit_vec(n, i))).collect();
        Mat::from_fn(n, n, |i, j| {
            let prod = ads[i].mul(&ads[j]);
            let mut tr = R::zero();
            for k in 0..n {
                tr.add_assign(&prod[(k, k)]);
            }
            tr
        })
    }

    /// The Lie algebra seen as a Lie 2-algebra `0 -> g`.
    pub fn as_lie2(&self) -> Lie2Algebra<R> {
        let gm1 = FinSpace::new(format!("{}.z", self.space.name()), vec![]);
        Lie2Candidate {
            g0: self.space.clone(),
            gm1: gm1.clone(),
            d: LinMap::zero(gm1.clone(), self.space.clone()),
            l2_00: self.bracket.clone(),
            l2_01: l2_01_shape(&self.space, &gm1),
            l3: l3_shape(&self.space, &gm1),
        }
        .build()
        .expect("a Lie algebra is a strict skeletal Lie 2-algebra")
    }

    pub fn map_ring<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> LieAlgebra<S> {
        LieAlgebra {
            space: self.space.clone(),
            bracket: self.bracket.map_ring(f),
        }
    }
}

impl<R: Field> LieAlgebra<R> {
    /// Basis of the derivation algebra `{X : X[a,b] = [Xa,b] + [a,Xb]}`.
    pub fn derivations(&self) -> Vec<Mat<R>> {
        let n = self.space.dim();
        if n == 0 {
            return Vec::new();
        }
        // unknowns: X entries (n^2); constraints per basis pair (i<j) and
        // output coordinate
        let pairs = increasing_tuples(n, 2, true);
        let mut rows: Vec<Vector<R>> = Vec::new();
        for t in &pairs {
            let (i, j) = (t[0], t[1]);
            let bij = self.bracket.eval_basis(&[i, j]);
            for out in 0..n {
                let mut row = crate::exactlin::mat::zero_vec::<R>(n * n);
                // X[e_i,e_j] coordinate `out` = sum_k X[out,k] * bij[k]
                for k in 0..n {
                    row[out * n + k] = row[out * n + k].add(&bij[k]);
                }
                // -[X e_i, e_j]_out = -sum_k X[k,i] [e_k, e_j]_out
                for k in 0..n {
                    let c = self.bracket.eval_basis(&[k, j])[out].clone();
                    row[k * n + i] = row[k * n + i].sub(&c);
                }
                // -[e_i, X e_j]_out = -sum_k X[k,j] [e_i, e_k]_out
                for k in 0..n {
                    let c = self.bracket.eval_basis(&[i, k])[out].clone();
                    row[k * n + j] = row[k * n + j].sub(&c);
                }
                rows.push(row);
            }
        }
        let m = if rows.is_empty() {
            Mat::zero(0, n * n)
        } else {
            Mat::from_rows(rows)
        };
        m.kernel_basis()
            .into_iter()
            .map(|flat| Mat::from_fn(n, n, |i, j| flat[i * n + j].clone()))
            .collect()
    }

    /// Center `{x : [x, y] = 0 for all y}`.
    pub fn center(&self) -> Vec<Vector<R>> {
        let n = self.space.dim();
        if n == 0 {
            return Vec::new();
        }
        let mut rows = Vec::new();
        for j in 0..n {
            for out in 0..n {
                let mut row = crate::exactlin::mat::zero_vec::<R>(n);
                for k in 0..n {
                    row[k] = self.bracket.eval_basis(&[k, j])[out].clone();
                }
                rows.push(row);
            }
        }
        Mat::from_rows(rows).kernel_basis()
    }

    /// Dimension of the derived algebra `[g, g]`.
    pub fn derived_dim(&self) -> usize {
        let n = self.space.dim();
        let mut cols = Vec::new();
        for t in increasing_tuples(n, 2, true) {
            cols.push(self.bracket.eval_basis(&t));
        }
        if cols.is_empty() {
            0
        } else {
            Mat::from_cols(cols, n).rank()
        }
    }
}

/// sl2 with basis (e, f, h): [e,f]=h, [h,e]=2e, [h,f]=-2f.
pub fn sl2<R: Ring>() -> LieAlgebra<R> {
    let space = FinSpace::new("sl2", vec!["e".into(), "f".into(), "h".into()]);
    let mut bracket = MultiTensor::new(
        vec![
            (space.clone(), Symmetry::Alt),
            (space.clone(), Symmetry::Alt),
        ],
        space.clone(),
    );
    bracket.set_coeff(&[0, 1], 2, R::one()).unwrap();
    bracket.set_coeff(&[2, 0], 0, R::from_i64(2)).unwrap();
    bracket.set_coeff(&[2, 1], 1, R::from_i64(-2)).unwrap();
    LieAlgebra::new(space, bracket).expect("sl2 satisfies Jacobi")
}

/// The 2-dimensional solvable algebra `[x1, x2] = x2`.
pub fn solvable2<R: Ring>() -> LieAlgebra<R> {
    let space = FinSpace::numbered("sol2", "x", 2);
    let mut bracket = MultiTensor::new(
        vec![
            (space.clone(), Symmetry::Alt),
            (space.clone(), Symmetry::Alt),
        ],
        space.clone(),
    );
    bracket.set_coeff(&[0, 1], 1, R::one()).unwrap();
    LieAlgebra::new(space, bracket).expect("solvable2 satisfies Jacobi")
}

/// The 3-dimensional Heisenberg algebra `[x1, x2] = x3`.
pub fn heisenberg3<R: Ring>() -> LieAlgebra<R> {
    let space = FinSpace::numbered("heis3", "x", 3);
    let mut bracket = MultiTensor::new(
        vec![
            (space.clone(), Symmetry::Alt),
            (space.clone(), Symmetry::Alt),
        ],
        space.clone(),
    );
    bracket.set_coeff(&[0, 1], 2, R::one()).unwrap();
    LieAlgebra::new(space, bracket).expect("heisenberg satisfies Jacobi")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn killing_form_of_sl2() {
        let g = sl2::<Scalar>();
        let k = g.killing_form();
        // kappa(e,f)=4, kappa(h,h)=8, others among (e,e),(f,f),(e,h),(f,h) zero
        assert_eq!(k[(0, 1)], q(4));
        assert_eq!(k[(1, 0)], q(4));
        assert_eq!(k[(2, 2)], q(8));
        assert_eq!(k[(0, 0)], q(0));
        assert_eq!(k[(0, 2)], q(0));
    }

    #[test]
    fn sl2_derivations_are_inner() {
        let g = sl2::<Scalar>();
        assert_eq!(g.derivations().len(), 3);
        assert_eq!(g.center().len(), 0);
        assert_eq!(g.derived_dim(), 3);
    }

    #[test]
    fn heisenberg_center() {
        let g = heisenberg3::<Scalar>();
        assert_eq!(g.center().len(), 1);
        assert_eq!(g.derived_dim(), 1);
        // Der(heis3) is 6-dimensional
        assert_eq!(g.derivations().len(), 6);
    }

    #[test]
    fn non_jacobi_rejected() {
        let space = FinSpace::numbered("bad", "x", 3);
        let mut bracket = MultiTensor::new(
            vec![
                (space.clone(), Symmetry::Alt),
                (space.clone(), Symmetry::Alt),
            ],
            space.clone(),
        );
        bracket.set_coeff(&[0, 1], 2, q(1)).unwrap();
        bracket.set_coeff(&[1, 2], 0, q(1)).unwrap();
        bracket.set_coeff(&[0, 2], 2, q(1)).unwrap();
        assert!(LieAlgebra::new(space, bracket).is_err());
    }
}
