//! Equivalence invariants: the skeletal quadruple of an algebra with the
//! class of the transferred `l3` tested against coboundaries.

use super::skeletal::{skeletalize, Skeletalization};
use crate::cecohom::{ce_is_coboundary, LieRep};
use crate::constructions::lie::LieAlgebra;
use crate::error::Result;
use crate::exactlin::{MultiTensor, Symmetry};
use crate::lie2core::Lie2Algebra;
use crate::ring::Field;

/// Data certifying (in)equivalence: two algebras whose tuples differ are
/// inequivalent; the quadruple itself is the classifying data.
#[derive(Clone, Debug)]
pub struct EquivalenceInvariants<R> {
    pub skeletalization: Skeletalization<R>,
    /// the Lie algebra on `coker d`
    pub coker_algebra: LieAlgebra<R>,
    /// the module structure of `ker d` over it
    pub module: LieRep<R>,
    pub dim_coker: usize,
    pub dim_ker: usize,
    pub coker_derived_dim: usize,
    pub coker_center_dim: usize,
    pub coker_killing_rank: usize,
    /// whether the transferred `l3` is a classical coboundary
    pub l3_class_is_zero: bool,
}

impl<R: Field> EquivalenceInvariants<R> {
    /// The comparable fingerprint (equal fingerprints are necessary for
    /// equivalence; different fingerprints certify inequivalence, except that
    /// the boolean compares class triviality only).
    pub fn fingerprint(&self) -> (usize, usize, usize, usize, usize, bool) {
        (
            self.dim_coker,
            self.dim_ker,
            self.coker_derived_dim,
            self.coker_center_dim,
            self.coker_killing_rank,
            self.l3_class_is_zero,
        )
    }
}

pub fn equivalence_invariants<R: Field>(l: &Lie2Algebra<R>) -> Result<EquivalenceInvariants<R>> {
    let sk = skeletalize(l)?;
    let skel = &sk.skel;
    let coker_algebra = LieAlgebra::new(skel.g0().clone(), skel.l2_00().clone())?;
    // module action from l2_01 (already plain x plain)
    let mut action = MultiTensor::new(
        vec![
            (skel.g0().clone(), Symmetry::Plain),
            (skel.gm1().clone(), Symmetry::Plain),
        ],
        skel.gm1().clone(),
    );
    for i in 0..skel.g0().dim() {
        for a in 0..skel.gm1().dim() {
            action.set_entry(&[i, a], skel.l2_01().eval_basis(&[i, a]))?;
        }
    }
    let module = LieRep::new(coker_algebra.clone(), skel.gm1().clone(), action)?;
    let l3_class_is_zero = if skel.l3().is_zero() {
        true
    } else {
        ce_is_coboundary(&module, skel.l3()).is_some()
    };
    let kf = coker_algebra.killing_form();
    Ok(EquivalenceInvariants {
        dim_coker: skel.g0().dim(),
        dim_ker: skel.gm1().dim(),
        coker_derived_dim: coker_algebra.derived_dim(),
        coker_center_dim: coker_algebra.center().len(),
        coker_killing_rank: kf.rank(),
        l3_class_is_zero,
        coker_algebra,
        module,
        skeletalization: sk,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lie::sl2;
    use crate::constructions::quadruple::string_killing;
    use crate::exactlin::{FinSpace, LinMap};
    use crate::scalar::Scalar;

    #[test]
    fn string_class_is_nonzero() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let inv = equivalence_invariants(&l).unwrap();
        assert!(!inv.l3_class_is_zero);
        assert_eq!(inv.dim_coker, 3);
        assert_eq!(inv.dim_ker, 1);
    }

    #[test]
    fn abelian_invariants_are_zero() {
        let g0 = FinSpace::numbered("g0", "x", 2);
        let gm1 = FinSpace::numbered("gm1", "a", 2);
        let l = Lie2Algebra::<Scalar>::abelian(
            g0.clone(),
            gm1.clone(),
            LinMap::zero(gm1, g0),
        )
        .unwrap();
        let inv = equivalence_invariants(&l).unwrap();
        assert!(inv.l3_class_is_zero);
        assert_eq!(inv.coker_derived_dim, 0);
        assert_eq!(inv.coker_center_dim, 2);
    }
}
