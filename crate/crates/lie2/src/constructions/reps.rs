//! 2-term representations up to homotopy of a Lie algebra, and the semidirect
//! product Lie 2-algebra they induce.

use super::complex2::{gl_of_complex, GlComplex, TwoComplex};
use super::lie::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::mat::{unit_vec, vec_add, vec_neg, Mat, Vector};
use crate::exactlin::tensor::increasing_tuples;
use crate::exactlin::{LinMap, MultiTensor, Symmetry};
use crate::lie2core::algebra::{l2_00_shape, l2_01_shape, l3_shape, Lie2Candidate};
use crate::lie2core::hom::phi2_shape;
use crate::lie2core::{Hom2, Lie2Algebra};
use crate::ring::{Field, Ring};

/// A 2-term representation up to homotopy: actions of `g` on both layers of
/// the complex plus the homotopy `act2 : g ^ g -> Hom(V0, V-1)` stored as a
/// tensor `g ^ g (x) V0 -> V-1`.
#[derive(Clone, Debug)]
pub struct RepUTH<R> {
    pub g: LieAlgebra<R>,
    pub v: TwoComplex<R>,
    pub act_v0: MultiTensor<R>,
    pub act_vm1: MultiTensor<R>,
    pub act2: MultiTensor<R>,
}

impl<R: Ring> RepUTH<R> {
    pub fn new(
        g: LieAlgebra<R>,
        v: TwoComplex<R>,
        act_v0: MultiTensor<R>,
        act_vm1: MultiTensor<R>,
        act2: MultiTensor<R>,
    ) -> Result<Self> {
        let gs = g.space().clone();
        let w0 = [(gs.clone(), Symmetry::Plain), (v.v0.clone(), Symmetry::Plain)];
        let wm1 = [(gs.clone(), Symmetry::Plain), (v.vm1.clone(), Symmetry::Plain)];
        let w2 = [
            (gs.clone(), Symmetry::Alt),
            (gs.clone(), Symmetry::Alt),
            (v.v0.clone(), Symmetry::Plain),
        ];
        if act_v0.inputs() != w0 || !act_v0.output().compatible(&v.v0) {
            return Err(Error::shape("act_v0 has wrong signature".to_string()));
        }
        if act_vm1.inputs() != wm1 || !act_vm1.output().compatible(&v.vm1) {
            return Err(Error::shape("act_vm1 has wrong signature".to_string()));
        }
        if act2.inputs() != w2 || !act2.output().compatible(&v.vm1) {
            return Err(Error::shape("act2 has wrong signature".to_string()));
        }
        Ok(RepUTH {
            g,
            v,
            act_v0,
            act_vm1,
            act2,
        })
    }

    /// A strict representation (`act2 = 0`) from matrices per basis element.
    pub fn strict(
        g: LieAlgebra<R>,
        v: TwoComplex<R>,
        rho0: &[Mat<R>],
        rho1: &[Mat<R>],
    ) -> Result<Self> {
        let gs = g.space().clone();
        let mut act_v0 = MultiTensor::new(
            vec![(gs.clone(), Symmetry::Plain), (v.v0.clone(), Symmetry::Plain)],
            v.v0.clone(),
        );
        let mut act_vm1 = MultiTensor::new(
            vec![(gs.clone(), Symmetry::Plain), (v.vm1.clone(), Symmetry::Plain)],
            v.vm1.clone(),
        );
        for i in 0..gs.dim() {
            for a in 0..v.v0.dim() {
                act_v0.set_entry(&[i, a], rho0[i].col(a))?;
            }
            for a in 0..v.vm1.dim() {
                act_vm1.set_entry(&[i, a], rho1[i].col(a))?;
            }
        }
        let act2 = MultiTensor::new(
            vec![
                (gs.clone(), Symmetry::Alt),
                (gs.clone(), Symmetry::Alt),
                (v.v0.clone(), Symmetry::Plain),
            ],
            v.vm1.clone(),
        );
        RepUTH::new(g, v, act_v0, act_vm1, act2)
    }

    /// Trivial action on a complex.
    pub fn trivial(g: LieAlgebra<R>, v: TwoComplex<R>) -> Self {
        let gs = g.space().clone();
        let zero0 = vec![Mat::zero(v.v0.dim(), v.v0.dim()); gs.dim()];
        let zero1 = vec![Mat::zero(v.vm1.dim(), v.vm1.dim()); gs.dim()];
        RepUTH::strict(g, v, &zero0, &zero1).expect("trivial shapes")
    }

    pub fn act0(&self, x: &[R], u: &[R]) -> Vector<R> {
        self.act_v0.eval(&[x, u])
    }

    pub fn act1(&self, x: &[R], m: &[R]) -> Vector<R> {
        self.act_vm1.eval(&[x, m])
    }

    pub fn act2_eval(&self, x: &[R], y: &[R], u: &[R]) -> Vector<R> {
        self.act2.eval(&[x, y, u])
    }
}

impl<R: Field> RepUTH<R> {
    /// Package as a Lie 2-algebra homomorphism `(0 -> g) -> gl(V)` and verify.
    pub fn as_hom_into_gl(&self) -> Result<(Hom2<R>, GlComplex<R>)> {
        let gl = gl_of_complex(&self.v)?;
        let g2 = self.g.as_lie2();
        let n = self.g.dim();
        let mut phi0_cols: Vec<Vector<R>> = Vec::new();
        for i in 0..n {
            let x = unit_vec::<R>(n, i);
            let a0 = Mat::from_cols(
                (0..self.v.v0.dim()).map(|a| self.act0(&x, &unit_vec(self.v.v0.dim(), a))).collect(),
                self.v.v0.dim(),
            );
            let a1 = Mat::from_cols(
                (0..self.v.vm1.dim()).map(|a| self.act1(&x, &unit_vec(self.v.vm1.dim(), a))).collect(),
                self.v.vm1.dim(),
            );
            let coords = gl.gl0_coords(&a0, &a1).ok_or_else(|| {
                Error::math(format!(
                    "action of {} is not a chain map",
                    self.g.space().label(i)
                ))
            })?;
            phi0_cols.push(coords);
        }
        let phi0 = LinMap::from_images(self.g.space().clone(), gl.algebra.g0().clone(), phi0_cols)?;
        let phi1 = LinMap::zero(g2.gm1().clone(), gl.algebra.gm1().clone());
        let mut phi2 = phi2_shape::<R>(self.g.space(), gl.algebra.gm1());
        for t in increasing_tuples(n, 2, true) {
            let x = unit_vec::<R>(n, t[0]);
            let y = unit_vec::<R>(n, t[1]);
            let dmat = Mat::from_cols(
                (0..self.v.v0.dim())
                    .map(|a| self.act2_eval(&x, &y, &unit_vec(self.v.v0.dim(), a)))
                    .collect(),
                self.v.vm1.dim(),
            );
            phi2.set_entry(&t, gl.glm1_coords(&dmat))?;
        }
        let hom = Hom2::verified(g2, gl.algebra.clone(), phi0, phi1, phi2)
            .map_err(|e| Error::math(format!("not a representation up to homotopy: {e}")))?;
        Ok((hom, gl))
    }

    pub fn verify(&self) -> Result<()> {
        self.as_hom_into_gl().map(|_| ())
    }
}

/// The semidirect product `g x V : V-1 -> g + V0`.
pub fn semidirect<R: Field>(rep: &RepUTH<R>) -> Result<Lie2Algebra<R>> {
    rep.verify()?;
    let gs = rep.g.space();
    let ng = gs.dim();
    let _n0 = rep.v.v0.dim();
    let nm1 = rep.v.vm1.dim();
    let g0 = gs.direct_sum(&rep.v.v0, format!("{}+{}", gs.name(), rep.v.v0.name()));
    let gm1 = rep.v.vm1.clone();

    // split/join for the direct sum coordinates
    let split = |v: &[R]| -> (Vector<R>, Vector<R>) {
        (v[..ng].to_vec(), v[ng..].to_vec())
    };
    let join = |x: &[R], u: &[R]| -> Vector<R> {
        let mut out = x.to_vec();
        out.extend_from_slice(u);
        out
    };

    let d = LinMap::from_images(
        gm1.clone(),
        g0.clone(),
        (0..nm1)
            .map(|a| join(&crate::exactlin::mat::zero_vec::<R>(ng), &rep.v.partial.apply_basis(a)))
            .collect(),
    )?;

    let mut l2_00 = l2_00_shape::<R>(&g0);
    for t in increasing_tuples(g0.dim(), 2, true) {
        let (x, u) = split(&unit_vec::<R>(g0.dim(), t[0]));
        let (y, v) = split(&unit_vec::<R>(g0.dim(), t[1]));
        let gpart = rep.g.bracket_vec(&x, &y);
        let vpart = crate::exactlin::mat::vec_sub(&rep.act0(&x, &v), &rep.act0(&y, &u));
        l2_00.set_entry(&t, join(&gpart, &vpart))?;
    }

    let mut l2_01 = l2_01_shape::<R>(&g0, &gm1);
    for p in 0..g0.dim() {
        let (x, _u) = split(&unit_vec::<R>(g0.dim(), p));
        for a in 0..nm1 {
            l2_01.set_entry(&[p, a], rep.act1(&x, &unit_vec(nm1, a)))?;
        }
    }

    let mut l3 = l3_shape::<R>(&g0, &gm1);
    for t in increasing_tuples(g0.dim(), 3, true) {
        let (x, u) = split(&unit_vec::<R>(g0.dim(), t[0]));
        let (y, v) = split(&unit_vec::<R>(g0.dim(), t[1]));
        let (z, w) = split(&unit_vec::<R>(g0.dim(), t[2]));
        let mut val = vec_neg(&rep.act2_eval(&x, &y, &w));
        val = vec_add(&val, &vec_neg(&rep.act2_eval(&y, &z, &u)));
        val = vec_add(&val, &vec_neg(&rep.act2_eval(&z, &x, &v)));
        l3.set_entry(&t, val)?;
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
    use crate::constructions::lie::sl2;
    use crate::exactlin::FinSpace;
    use crate::scalar::Scalar;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    /// sl2 acting on its adjoint complex 0 -> sl2.
    fn adjoint_rep_uth() -> RepUTH<Scalar> {
        let g = sl2::<Scalar>();
        let v = TwoComplex::concentrated(FinSpace::new(
            "ad",
            vec!["ae".into(), "af".into(), "ah".into()],
        ));
        let rho0: Vec<Mat<Scalar>> = (0..3).map(|i| g.ad(&unit_vec(3, i))).collect();
        let rho1 = vec![Mat::zero(0, 0); 3];
        RepUTH::strict(g, v, &rho0, &rho1).unwrap()
    }

    #[test]
    fn adjoint_action_is_a_rep() {
        assert!(adjoint_rep_uth().verify().is_ok());
    }

    #[test]
    fn semidirect_with_trivial_action_is_direct_sum() {
        let g = sl2::<Scalar>();
        let v0 = FinSpace::numbered("V0", "u", 2);
        let vm1 = FinSpace::numbered("Vm1", "m", 1);
        let partial = LinMap::zero(vm1.clone(), v0.clone());
        let v = TwoComplex::new(v0, vm1, partial).unwrap();
        let rep = RepUTH::trivial(g, v);
        let sd = semidirect(&rep).unwrap();
        assert!(sd.l3().is_zero());
        assert_eq!(sd.g0().dim(), 5);
        // bracket of a V0 element with anything vanishes
        let val = sd.l2_00().eval_basis(&[0, 3]);
        assert!(crate::exactlin::mat::vec_is_zero(&val));
    }

    #[test]
    fn semidirect_adjoint_passes() {
        let rep = adjoint_rep_uth();
        let sd = semidirect(&rep).unwrap();
        assert!(sd.is_strict());
        assert_eq!(sd.g0().dim(), 6);
        assert_eq!(sd.gm1().dim(), 0);
        // [x+0, 0+v] has both a g-part ([x,y]) and an action part
        let val = sd.l2_00().eval_basis(&[2, 3]); // h against ad-e
        assert_eq!(val[3], q(2)); // h . ae = 2 ae
        let _ = q(0);
    }
}
