//! Leibniz algebras, their left centers, and the Lie 2-algebra obtained by
//! skew-symmetrizing the Leibniz bracket.

use crate::error::{Error, Result};
use crate::exactlin::mat::{unit_vec, vec_scale, vec_sub, Mat, Vector};
use crate::exactlin::tensor::increasing_tuples;
use crate::exactlin::{FinSpace, LinMap, MultiTensor, Subspace, Symmetry};
use crate::lie2core::algebra::{l2_00_shape, l2_01_shape, l3_shape, Lie2Candidate};
use crate::lie2core::{AxiomReport, Lie2Algebra};
use crate::ring::{Field, Ring};

/// A bilinear bracket subject to the left Leibniz rule
/// `{x,{y,z}} = {{x,y},z} + {y,{x,z}}` (no symmetry).
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizAlgebra<R> {
    space: FinSpace,
    bracket: MultiTensor<R>,
}

impl<R: Ring> LeibnizAlgebra<R> {
    pub fn new(space: FinSpace, bracket: MultiTensor<R>) -> Result<Self> {
        let want = [
            (space.clone(), Symmetry::Plain),
            (space.clone(), Symmetry::Plain),
        ];
        if bracket.inputs() != want || !bracket.output().compatible(&space) {
            return Err(Error::shape("Leibniz bracket has wrong signature".to_string()));
        }
        let alg = LeibnizAlgebra { space, bracket };
        let report = alg.verify_leibniz();
        if !report.passed() {
            return Err(Error::math(format!("Leibniz rule fails: {}", report.summary())));
        }
        Ok(alg)
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }

    pub fn bracket(&self) -> &MultiTensor<R> {
        &self.bracket
    }

    pub fn br(&self, x: &[R], y: &[R]) -> Vector<R> {
        self.bracket.eval(&[x, y])
    }

    pub fn verify_leibniz(&self) -> AxiomReport<R> {
        let mut report = AxiomReport::new();
        let n = self.space.dim();
        for t in crate::exactlin::tensor::tuples(&[n, n, n]) {
            let x = unit_vec::<R>(n, t[0]);
            let y = unit_vec::<R>(n, t[1]);
            let z = unit_vec::<R>(n, t[2]);
            let lhs = self.br(&x, &self.br(&y, &z));
            let rhs = crate::exactlin::mat::vec_add(&self.br(&self.br(&x, &y), &z), &self.br(&y, &self.br(&x, &z)));
            report.record(
                "leibniz",
                t.iter().map(|&i| self.space.label(i).to_string()).collect(),
                vec_sub(&lhs, &rhs),
            );
        }
        report.finish()
    }
}

impl<R: Field> LeibnizAlgebra<R> {
    /// The left center `Z = {x : {x, y} = 0 for all y}`.
    pub fn left_center(&self) -> Subspace<R> {
        let n = self.space.dim();
        if n == 0 {
            return Subspace::zero(self.space.clone());
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
        Subspace::new(self.space.clone(), Mat::from_rows(rows).kernel_basis())
    }
}

/// Everything `skew_symmetrize` returns: the Lie 2-algebra on
/// `Z(g) -> g` and the inclusion identifying `gm1` with the left center.
#[derive(Clone, Debug)]
pub struct SkewSymmetrization<R> {
    pub algebra: Lie2Algebra<R>,
    pub center_inclusion: LinMap<R>,
}

/// The Lie 2-algebra of a Leibniz algebra: `Z(g) -> g` with the
/// skew-symmetrized bracket, half-bracket on the center, and the Jacobiator
/// as `l3`. Asserts `J_{x,y,z}` lands in the left center on all basis triples.
pub fn skew_symmetrize<R: Field>(l: &LeibnizAlgebra<R>) -> Result<SkewSymmetrization<R>> {
    let n = l.space().dim();
    let z = l.left_center();
    let zdim = z.dim();
    let gm1 = FinSpace::numbered(format!("Z({})", l.space().name()), "z", zdim);
    let z_basis = z.reduced();
    let incl = LinMap::from_images(gm1.clone(), l.space().clone(), z_basis.basis().to_vec())?;

    let half = R::from_ratio(1, 2);
    let skew = |x: &[R], y: &[R]| -> Vector<R> { vec_scale(&half, &vec_sub(&l.br(x, y), &l.br(y, x))) };

    let mut l2_00 = l2_00_shape::<R>(l.space());
    for t in increasing_tuples(n, 2, true) {
        let x = unit_vec::<R>(n, t[0]);
        let y = unit_vec::<R>(n, t[1]);
        l2_00.set_entry(&t, skew(&x, &y))?;
    }

    let mut l2_01 = l2_01_shape::<R>(l.space(), &gm1);
    for i in 0..n {
        for a in 0..zdim {
            let x = unit_vec::<R>(n, i);
            let c = incl.apply_basis(a);
            // [x, c] = (1/2){x, c}; {c, x} = 0 for c in the left center
            let val = vec_scale(&half, &l.br(&x, &c));
            let coords = z_basis.solve_membership(&val).ok_or_else(|| {
                Error::math(format!(
                    "bracket [{}, z{}] leaves the left center",
                    l.space().label(i),
                    a + 1
                ))
            })?;
            l2_01.set_entry(&[i, a], coords)?;
        }
    }

    let mut l3 = l3_shape::<R>(l.space(), &gm1);
    for t in increasing_tuples(n, 3, true) {
        let x = unit_vec::<R>(n, t[0]);
        let y = unit_vec::<R>(n, t[1]);
        let zv = unit_vec::<R>(n, t[2]);
        let mut jac = skew(&x, &skew(&y, &zv));
        jac = crate::exactlin::mat::vec_add(&jac, &skew(&y, &skew(&zv, &x)));
        jac = crate::exactlin::mat::vec_add(&jac, &skew(&zv, &skew(&x, &y)));
        let coords = z_basis.solve_membership(&jac).ok_or_else(|| {
            Error::math(format!(
                "Jacobiator at ({}, {}, {}) is not in the left center",
                l.space().label(t[0]),
                l.space().label(t[1]),
                l.space().label(t[2])
            ))
        })?;
        l3.set_entry(&t, coords)?;
    }

    let algebra = Lie2Candidate {
        g0: l.space().clone(),
        gm1,
        d: incl.clone(),
        l2_00,
        l2_01,
        l3,
    }
    .build()?;
    Ok(SkewSymmetrization {
        algebra,
        center_inclusion: incl,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lie::sl2;
    use crate::scalar::Scalar;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn lie_algebra_as_leibniz() {
        // a Lie algebra seen as Leibniz: Z = center, l3 = 0
        let g = sl2::<Scalar>();
        let n = g.dim();
        let mut bracket = MultiTensor::new(
            vec![
                (g.space().clone(), Symmetry::Plain),
                (g.space().clone(), Symmetry::Plain),
            ],
            g.space().clone(),
        );
        for i in 0..n {
            for j in 0..n {
                bracket
                    .set_entry(&[i, j], g.bracket().eval_basis(&[i, j]))
                    .unwrap();
            }
        }
        let l = LeibnizAlgebra::new(g.space().clone(), bracket).unwrap();
        let s = skew_symmetrize(&l).unwrap();
        assert_eq!(s.algebra.gm1().dim(), 0); // sl2 has trivial center
        assert!(s.algebra.l3().is_zero());
        assert_eq!(s.algebra.l2_00(), g.bracket());
    }

    #[test]
    fn two_dim_nilpotent_leibniz() {
        // {e1,e1} = e2, everything else zero
        let space = FinSpace::numbered("L", "e", 2);
        let mut bracket = MultiTensor::new(
            vec![
                (space.clone(), Symmetry::Plain),
                (space.clone(), Symmetry::Plain),
            ],
            space.clone(),
        );
        bracket.set_coeff(&[0, 0], 1, q(1)).unwrap();
        let l = LeibnizAlgebra::new(space, bracket).unwrap();
        let z = l.left_center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&[q(0), q(1)]));
        let s = skew_symmetrize(&l).unwrap();
        // the skew bracket vanishes: {e1,e1} is symmetric
        assert!(s.algebra.l2_00().is_zero());
        assert!(s.algebra.l2_01().is_zero());
        assert!(s.algebra.l3().is_zero());
    }

    #[test]
    fn leibniz_rule_rejected() {
        let space = FinSpace::numbered("L", "e", 2);
        let mut bracket = MultiTensor::new(
            vec![
                (space.clone(), Symmetry::Plain),
                (space.clone(), Symmetry::Plain),
            ],
            space.clone(),
        );
        bracket.set_coeff(&[0, 1], 0, q(1)).unwrap();
        bracket.set_coeff(&[1, 0], 1, q(1)).unwrap();
        assert!(LeibnizAlgebra::new(space, bracket).is_err());
    }
}
