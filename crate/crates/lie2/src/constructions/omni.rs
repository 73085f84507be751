//! The omni-Lie algebra `gl(V) + V` and its Lie 2-algebra.

use super::leibniz::LeibnizAlgebra;
use crate::error::Result;
use crate::exactlin::mat::unit_vec;
use crate::exactlin::{FinSpace, LinMap, MultiTensor, Symmetry};
use crate::lie2core::algebra::{l2_00_shape, l2_01_shape, l3_shape, Lie2Candidate};
use crate::lie2core::Lie2Algebra;
use crate::ring::Ring;

/// Basis bookkeeping for `gl(V) + V` with `V = Q^n`: first the elementary
/// matrices `E_ij` (row-major), then the vectors `v_1..v_n`.
pub struct OmniBasis {
    pub n: usize,
    pub space: FinSpace,
}

impl OmniBasis {
    pub fn new(n: usize) -> Self {
        let mut labels = Vec::with_capacity(n * n + n);
        for i in 0..n {
            for j in 0..n {
                labels.push(format!("E{}{}", i + 1, j + 1));
            }
        }
        for k in 0..n {
            labels.push(format!("v{}", k + 1));
        }
        OmniBasis {
            n,
            space: FinSpace::new(format!("omni({n})"), labels),
        }
    }

    pub fn mat_index(&self, i: usize, j: usize) -> usize {
        i * self.n + j
    }

    pub fn vec_index(&self, k: usize) -> usize {
        self.n * self.n + k
    }

    pub fn dim(&self) -> usize {
        self.n * self.n + self.n
    }

    /// Split a coordinate vector into the matrix part and the vector part.
    pub fn split<R: Ring>(&self, v: &[R]) -> (crate::exactlin::Mat<R>, Vec<R>) {
        let a = crate::exactlin::Mat::from_fn(self.n, self.n, |i, j| v[self.mat_index(i, j)].clone());
        let u = (0..self.n).map(|k| v[self.vec_index(k)].clone()).collect();
        (a, u)
    }

    pub fn join<R: Ring>(&self, a: &crate::exactlin::Mat<R>, u: &[R]) -> Vec<R> {
        let mut out = crate::exactlin::mat::zero_vec::<R>(self.dim());
        for i in 0..self.n {
            for j in 0..self.n {
                out[self.mat_index(i, j)] = a[(i, j)].clone();
            }
        }
        for k in 0..self.n {
            out[self.vec_index(k)] = u[k].clone();
        }
        out
    }
}

/// The omni-Lie Leibniz bracket `{A+u, B+v} = [A,B] + Av`.
pub fn omni_leibniz<R: Ring>(n: usize) -> Result<LeibnizAlgebra<R>> {
    assert!(n >= 1, "omni-Lie needs n >= 1");
    let basis = OmniBasis::new(n);
    let mut bracket = MultiTensor::new(
        vec![
            (basis.space.clone(), Symmetry::Plain),
            (basis.space.clone(), Symmetry::Plain),
        ],
        basis.space.clone(),
    );
    let dim = basis.dim();
    for p in 0..dim {
        for q in 0..dim {
            let (a, _u) = basis.split::<R>(&unit_vec(dim, p));
            let (b, v) = basis.split::<R>(&unit_vec(dim, q));
            let comm = a.mul(&b).sub(&b.mul(&a));
            let av = a.mul_vec(&v);
            bracket.set_entry(&[p, q], basis.join(&comm, &av))?;
        }
    }
    LeibnizAlgebra::new(basis.space.clone(), bracket)
}

/// The omni-Lie Lie 2-algebra `V -> gl(V) + V` with the half- and quarter-
/// weighted brackets.
pub fn omni_lie<R: Ring>(n: usize) -> Result<Lie2Algebra<R>> {
    assert!(n >= 1, "omni-Lie needs n >= 1");
    let basis = OmniBasis::new(n);
    let g0 = basis.space.clone();
    let gm1 = FinSpace::numbered("V", "v", n);
    let dim = basis.dim();
    let half = R::from_ratio(1, 2);
    let quarter = R::from_ratio(-1, 4);

    // d : V -> gl(V)+V is the inclusion
    let d = LinMap::from_images(
        gm1.clone(),
        g0.clone(),
        (0..n).map(|k| unit_vec(dim, basis.vec_index(k))).collect(),
    )?;

    let mut l2_00 = l2_00_shape::<R>(&g0);
    for t in crate::exactlin::tensor::increasing_tuples(dim, 2, true) {
        let (a, u) = basis.split::<R>(&unit_vec(dim, t[0]));
        let (b, v) = basis.split::<R>(&unit_vec(dim, t[1]));
        let comm = a.mul(&b).sub(&b.mul(&a));
        let av = a.mul_vec(&v);
        let bu = b.mul_vec(&u);
        let vec_part: Vec<R> = av.iter().zip(&bu).map(|(x, y)| half.mul(&x.sub(y))).collect();
        l2_00.set_entry(&t, basis.join(&comm, &vec_part))?;
    }

    let mut l2_01 = l2_01_shape::<R>(&g0, &gm1);
    for p in 0..dim {
        let (a, _) = basis.split::<R>(&unit_vec(dim, p));
        for k in 0..n {
            let av = a.mul_vec(&unit_vec(n, k));
            l2_01.set_entry(&[p, k], av.iter().map(|x| half.mul(x)).collect())?;
        }
    }

    let mut l3 = l3_shape::<R>(&g0, &gm1);
    for t in crate::exactlin::tensor::increasing_tuples(dim, 3, true) {
        let (a, u) = basis.split::<R>(&unit_vec(dim, t[0]));
        let (b, v) = basis.split::<R>(&unit_vec(dim, t[1]));
        let (c, w) = basis.split::<R>(&unit_vec(dim, t[2]));
        // -1/4 ([A,B]w + [B,C]u + [C,A]v)
        let mut val = a.mul(&b).sub(&b.mul(&a)).mul_vec(&w);
        val = crate::exactlin::mat::vec_add(&val, &b.mul(&c).sub(&c.mul(&b)).mul_vec(&u));
        val = crate::exactlin::mat::vec_add(&val, &c.mul(&a).sub(&a.mul(&c)).mul_vec(&v));
        l3.set_entry(&t, val.iter().map(|x| quarter.mul(x)).collect())?;
    }

    Lie2Candidate {
        g0,
        gm1,
        d,
        l2_00,
        l2_01,
        l3,
    }
    .build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::leibniz::skew_symmetrize;
    use crate::ring::Ring;
    use crate::scalar::Scalar;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn omni_one_has_zero_l3() {
        let l = omni_lie::<Scalar>(1).unwrap();
        assert!(l.l3().is_zero());
        assert_eq!(l.g0().dim(), 2);
        assert_eq!(l.gm1().dim(), 1);
    }

    #[test]
    fn omni_two_commutator() {
        let l = omni_lie::<Scalar>(2).unwrap();
        let basis = OmniBasis::new(2);
        // l2^0(E12, E21) = E11 - E22 (no vector part)
        let val = l
            .l2_00()
            .eval_basis(&[basis.mat_index(0, 1), basis.mat_index(1, 0)]);
        assert_eq!(val[basis.mat_index(0, 0)], q(1));
        assert_eq!(val[basis.mat_index(1, 1)], q(-1));
        assert_eq!(val[basis.vec_index(0)], q(0));
    }

    #[test]
    fn skew_symmetrization_matches_omni() {
        for n in [1usize, 2] {
            let leib = omni_leibniz::<Scalar>(n).unwrap();
            let skewed = skew_symmetrize(&leib).unwrap();
            let direct = omni_lie::<Scalar>(n).unwrap();
            // the left center comes out as the V-block unit vectors, so the
            // structure tensors must agree entry for entry
            let basis = OmniBasis::new(n);
            for k in 0..n {
                let col = skewed.center_inclusion.apply_basis(k);
                assert_eq!(col, unit_vec::<Scalar>(basis.dim(), basis.vec_index(k)));
            }
            assert_eq!(skewed.algebra.l2_00(), direct.l2_00());
            assert_eq!(
                skewed.algebra.d().mat(),
                direct.d().mat()
            );
            // compare l2_01 and l3 entrywise (spaces have different labels)
            for p in 0..basis.dim() {
                for k in 0..n {
                    assert_eq!(
                        skewed.algebra.l2_01().eval_basis(&[p, k]),
                        direct.l2_01().eval_basis(&[p, k])
                    );
                }
            }
            for t in crate::exactlin::tensor::increasing_tuples(basis.dim(), 3, true) {
                assert_eq!(
                    skewed.algebra.l3().eval_basis(&t),
                    direct.l3().eval_basis(&t)
                );
            }
        }
    }

    #[test]
    fn left_center_of_omni_is_v() {
        let leib = omni_leibniz::<Scalar>(2).unwrap();
        let z = leib.left_center();
        assert_eq!(z.dim(), 2);
        let basis = OmniBasis::new(2);
        assert!(z.contains(&unit_vec::<Scalar>(basis.dim(), basis.vec_index(0))));
        assert!(z.contains(&unit_vec::<Scalar>(basis.dim(), basis.vec_index(1))));
    }
}
