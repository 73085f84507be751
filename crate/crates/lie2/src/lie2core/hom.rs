//! Homomorphisms between Lie 2-algebras, their composition and inversion, and
//! 2-morphisms (chain homotopies) between homomorphisms.

use super::algebra::Lie2Algebra;
use super::report::AxiomReport;
use crate::error::{Error, Result};
use crate::exactlin::mat::{unit_vec, vec_add, vec_sub};
use crate::exactlin::tensor::increasing_tuples;
use crate::exactlin::{FinSpace, LinMap, MultiTensor, Symmetry};
use crate::ring::Ring;

/// A Lie 2-algebra homomorphism `(phi0, phi1, phi2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hom2<R> {
    pub source: Lie2Algebra<R>,
    pub target: Lie2Algebra<R>,
    pub phi0: LinMap<R>,
    pub phi1: LinMap<R>,
    pub phi2: MultiTensor<R>,
}

pub fn phi2_shape<R: Ring>(src_g0: &FinSpace, tgt_gm1: &FinSpace) -> MultiTensor<R> {
    MultiTensor::new(
        vec![(src_g0.clone(), Symmetry::Alt), (src_g0.clone(), Symmetry::Alt)],
        tgt_gm1.clone(),
    )
}

impl<R: Ring> Hom2<R> {
    /// Shape-checks only; use [`Hom2::verify`] to test the homomorphism laws.
    pub fn new(
        source: Lie2Algebra<R>,
        target: Lie2Algebra<R>,
        phi0: LinMap<R>,
        phi1: LinMap<R>,
        phi2: MultiTensor<R>,
    ) -> Result<Self> {
        if !phi0.source.compatible(source.g0()) || !phi0.target.compatible(target.g0()) {
            return Err(Error::shape("phi0 does not map g0 -> h0".to_string()));
        }
        if !phi1.source.compatible(source.gm1()) || !phi1.target.compatible(target.gm1()) {
            return Err(Error::shape("phi1 does not map g-1 -> h-1".to_string()));
        }
        let want = phi2_shape::<R>(source.g0(), target.gm1());
        if phi2.inputs() != want.inputs() || !phi2.output().compatible(want.output()) {
            return Err(Error::shape("phi2 has wrong signature".to_string()));
        }
        Ok(Hom2 {
            source,
            target,
            phi0,
            phi1,
            phi2,
        })
    }

    /// Builds and insists the laws hold.
    pub fn verified(
        source: Lie2Algebra<R>,
        target: Lie2Algebra<R>,
        phi0: LinMap<R>,
        phi1: LinMap<R>,
        phi2: MultiTensor<R>,
    ) -> Result<Self> {
        let hom = Hom2::new(source, target, phi0, phi1, phi2)?;
        let report = hom.verify();
        if !report.passed() {
            return Err(Error::math(format!("not a homomorphism: {}", report.summary())));
        }
        Ok(hom)
    }

    pub fn identity(l: &Lie2Algebra<R>) -> Self {
        Hom2 {
            source: l.clone(),
            target: l.clone(),
            phi0: LinMap::identity(l.g0().clone()),
            phi1: LinMap::identity(l.gm1().clone()),
            phi2: phi2_shape(l.g0(), l.gm1()),
        }
    }

    pub fn is_strict(&self) -> bool {
        self.phi2.is_zero()
    }

    /// Chain-map law plus conditions (1)-(3), on all canonical basis tuples.
    pub fn verify(&self) -> AxiomReport<R> {
        let mut report = AxiomReport::new();
        let g = &self.source;
        let h = &self.target;
        let n0 = g.g0().dim();
        let n1 = g.gm1().dim();
        let lab0 = |i: usize| g.g0().label(i).to_string();
        let lab1 = |i: usize| g.gm1().label(i).to_string();
        let e0 = |i: usize| unit_vec::<R>(n0, i);

        // chain map: phi0 . d_g = d_h . phi1
        for a in 0..n1 {
            let lhs = self.phi0.apply(&g.d().apply_basis(a));
            let rhs = h.d().apply(&self.phi1.apply_basis(a));
            report.record("hom.chain", vec![lab1(a)], vec_sub(&lhs, &rhs));
        }

        // (1) phi0 [x,y] - [phi0 x, phi0 y] = d_h phi2(x,y)
        for t in increasing_tuples(n0, 2, true) {
            let (x, y) = (t[0], t[1]);
            let lhs = self.phi0.apply(&g.l2_00().eval_basis(&[x, y]));
            let px = self.phi0.apply_basis(x);
            let py = self.phi0.apply_basis(y);
            let mid = h.bracket00(&px, &py);
            let rhs = h.d().apply(&self.phi2.eval_basis(&[x, y]));
            report.record(
                "hom.1",
                vec![lab0(x), lab0(y)],
                vec_sub(&vec_sub(&lhs, &mid), &rhs),
            );
        }

        // (2) phi1 [x,a] - [phi0 x, phi1 a] = phi2(x, d a)
        for x in 0..n0 {
            for a in 0..n1 {
                let lhs = self.phi1.apply(&g.l2_01().eval_basis(&[x, a]));
                let mid = h.bracket01(&self.phi0.apply_basis(x), &self.phi1.apply_basis(a));
                let rhs = self.phi2.eval(&[&e0(x), &g.d().apply_basis(a)]);
                report.record(
                    "hom.2",
                    vec![lab0(x), lab1(a)],
                    vec_sub(&vec_sub(&lhs, &mid), &rhs),
                );
            }
        }

        // (3) phi1 l3(x,y,z) - l3(phi0 x, phi0 y, phi0 z)
        //     = [phi0 x, phi2(y,z)] + c.p. - phi2([x,y],z) - c.p.
        for t in increasing_tuples(n0, 3, true) {
            let (x, y, z) = (t[0], t[1], t[2]);
            let mut defect = self.phi1.apply(&g.l3().eval_basis(&[x, y, z]));
            let p = [
                self.phi0.apply_basis(x),
                self.phi0.apply_basis(y),
                self.phi0.apply_basis(z),
            ];
            defect = vec_sub(&defect, &h.l3_eval(&p[0], &p[1], &p[2]));
            for (i, j, k) in [(x, y, z), (y, z, x), (z, x, y)] {
                let pi = self.phi0.apply(&e0(i));
                let p2 = self.phi2.eval(&[&e0(j), &e0(k)]);
                defect = vec_sub(&defect, &h.bracket01(&pi, &p2));
                let br = g.l2_00().eval_basis(&[i, j]);
                defect = vec_add(&defect, &self.phi2.eval(&[&br, &e0(k)]));
            }
            report.record("hom.3", vec![lab0(x), lab0(y), lab0(z)], defect);
        }

        report.finish()
    }

    pub fn map_ring<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> Hom2<S> {
        Hom2 {
            source: self.source.map_ring(f),
            target: self.target.map_ring(f),
            phi0: self.phi0.map_ring(f),
            phi1: self.phi1.map_ring(f),
            phi2: self.phi2.map_ring(f),
        }
    }
}

/// `psi` after `phi`; `(psi . phi)_2 = psi2 (phi0 x phi0) + psi1 . phi2`.
pub fn compose<R: Ring>(psi: &Hom2<R>, phi: &Hom2<R>) -> Result<Hom2<R>> {
    if psi.source != phi.target {
        return Err(Error::shape("compose: middle algebra mismatch".to_string()));
    }
    let phi2_part = psi.phi2.precompose(&[&phi.phi0, &phi.phi0])?;
    let psi1_part = phi.phi2.postcompose(&psi.phi1)?;
    Hom2::new(
        phi.source.clone(),
        psi.target.clone(),
        psi.phi0.compose(&phi.phi0)?,
        psi.phi1.compose(&phi.phi1)?,
        phi2_part.add(&psi1_part),
    )
}

/// Inverse of a homomorphism with invertible `phi0`, `phi1`:
/// `(phi0^-1, phi1^-1, -phi1^-1 . phi2 . (phi0^-1 x phi0^-1))`.
pub fn invert<R: Ring>(phi: &Hom2<R>) -> Result<Hom2<R>> {
    let phi0_inv = phi
        .phi0
        .inverse()
        .map_err(|_| Error::Singular("phi0 is not invertible".to_string()))?;
    let phi1_inv = phi
        .phi1
        .inverse()
        .map_err(|_| Error::Singular("phi1 is not invertible".to_string()))?;
    let phi2 = phi
        .phi2
        .precompose(&[&phi0_inv, &phi0_inv])?
        .postcompose(&phi1_inv)?
        .neg();
    Hom2::new(
        phi.target.clone(),
        phi.source.clone(),
        phi0_inv,
        phi1_inv,
        phi2,
    )
}

/// A 2-morphism `tau: from => to` between homomorphisms with equal endpoints.
#[derive(Clone, Debug)]
pub struct TwoMorphism<R> {
    pub from: Hom2<R>,
    pub to: Hom2<R>,
    pub tau: LinMap<R>,
}

impl<R: Ring> TwoMorphism<R> {
    pub fn new(from: Hom2<R>, to: Hom2<R>, tau: LinMap<R>) -> Result<Self> {
        if from.source != to.source || from.target != to.target {
            return Err(Error::shape("2-morphism endpoints mismatch".to_string()));
        }
        if !tau.source.compatible(from.source.g0()) || !tau.target.compatible(from.target.gm1()) {
            return Err(Error::shape("tau must map g0 -> h-1".to_string()));
        }
        Ok(TwoMorphism { from, to, tau })
    }

    /// The zero homotopy between equal homomorphisms.
    pub fn zero(hom: &Hom2<R>) -> Self {
        TwoMorphism {
            from: hom.clone(),
            to: hom.clone(),
            tau: LinMap::zero(hom.source.g0().clone(), hom.target.gm1().clone()),
        }
    }

    /// Homotopy law (1) and the bracket law (2).
    pub fn verify(&self) -> AxiomReport<R> {
        let mut report = AxiomReport::new();
        let g = &self.from.source;
        let h = &self.from.target;
        let phi = &self.from;
        let psi = &self.to;
        let n0 = g.g0().dim();
        let n1 = g.gm1().dim();
        let lab0 = |i: usize| g.g0().label(i).to_string();
        let lab1 = |i: usize| g.gm1().label(i).to_string();

        // (1) psi0 - phi0 = d_h . tau  and  psi1 - phi1 = tau . d_g
        for x in 0..n0 {
            let lhs = vec_sub(&psi.phi0.apply_basis(x), &phi.phi0.apply_basis(x));
            let rhs = h.d().apply(&self.tau.apply_basis(x));
            report.record("2mor.1a", vec![lab0(x)], vec_sub(&lhs, &rhs));
        }
        for a in 0..n1 {
            let lhs = vec_sub(&psi.phi1.apply_basis(a), &phi.phi1.apply_basis(a));
            let rhs = self.tau.apply(&g.d().apply_basis(a));
            report.record("2mor.1b", vec![lab1(a)], vec_sub(&lhs, &rhs));
        }

        // (2) psi2(x,y) - phi2(x,y) = tau([x,y]) - [phi0 x, tau y] - [tau x, psi0 y]
        for t in increasing_tuples(n0, 2, true) {
            let (x, y) = (t[0], t[1]);
            let lhs = vec_sub(&psi.phi2.eval_basis(&[x, y]), &phi.phi2.eval_basis(&[x, y]));
            let mut rhs = self.tau.apply(&g.l2_00().eval_basis(&[x, y]));
            rhs = vec_sub(
                &rhs,
                &h.bracket01(&phi.phi0.apply_basis(x), &self.tau.apply_basis(y)),
            );
            // [tau x, psi0 y] = -[psi0 y, tau x]
            rhs = vec_add(
                &rhs,
                &h.bracket01(&psi.phi0.apply_basis(y), &self.tau.apply_basis(x)),
            );
            report.record("2mor.2", vec![lab0(x), lab0(y)], vec_sub(&lhs, &rhs));
        }

        report.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testfix::string_sl2_by_hand;
    use crate::scalar::Scalar;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn identity_is_a_homomorphism() {
        let l = string_sl2_by_hand();
        let id = Hom2::identity(&l);
        assert!(id.verify().passed());
        // unit laws of composition
        let c = compose(&id, &id).unwrap();
        assert_eq!(c, id);
    }

    #[test]
    fn zero_hom_into_abelian() {
        let l = string_sl2_by_hand();
        let a = Lie2Algebra::abelian(
            FinSpace::numbered("a0", "x", 3),
            FinSpace::numbered("am1", "u", 1),
            LinMap::zero(FinSpace::numbered("am1", "u", 1), FinSpace::numbered("a0", "x", 3)),
        )
        .unwrap();
        let z = Hom2::new(
            l.clone(),
            a.clone(),
            LinMap::zero(l.g0().clone(), a.g0().clone()),
            LinMap::zero(l.gm1().clone(), a.gm1().clone()),
            phi2_shape(l.g0(), a.gm1()),
        )
        .unwrap();
        assert!(z.verify().passed());
    }

    #[test]
    fn doubled_l3_breaks_condition_3() {
        let l = string_sl2_by_hand();
        let mut cand = l.candidate();
        cand.l3 = cand.l3.scale(&q(2));
        let l2 = cand.build().unwrap(); // doubled Cartan form is still a cocycle
        let not_hom = Hom2::new(
            l.clone(),
            l2.clone(),
            LinMap::identity(l.g0().clone()),
            LinMap::identity(l.gm1().clone()),
            phi2_shape(l.g0(), l.gm1()),
        )
        .unwrap();
        let report = not_hom.verify();
        assert!(!report.passed());
        assert!(report.failures().iter().all(|f| f.law == "hom.3"));
    }

    #[test]
    fn zero_two_morphism_between_equal_homs() {
        let l = string_sl2_by_hand();
        let id = Hom2::identity(&l);
        let t = TwoMorphism::zero(&id);
        assert!(t.verify().passed());
    }
}
