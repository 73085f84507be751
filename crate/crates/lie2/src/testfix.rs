//! Hand-built fixtures shared by unit tests. The constructions module builds
//! these properly; the by-hand copies here keep low-level tests independent.

use crate::exactlin::{FinSpace, LinMap, MultiTensor};
use crate::lie2core::algebra::{l2_00_shape, l2_01_shape, l3_shape, Lie2Algebra, Lie2Candidate};
use crate::ring::Ring;
use crate::scalar::Scalar;

fn q(n: i64) -> Scalar {
    Scalar::from_i64(n)
}

/// sl2 with basis (e, f, h): [e,f]=h, [h,e]=2e, [h,f]=-2f.
pub fn sl2_bracket(g: &FinSpace) -> MultiTensor<Scalar> {
    let mut t = l2_00_shape::<Scalar>(g);
    t.set_coeff(&[0, 1], 2, q(1)).unwrap();
    t.set_coeff(&[2, 0], 0, q(2)).unwrap();
    t.set_coeff(&[2, 1], 1, q(-2)).unwrap();
    t
}

pub fn sl2_space() -> FinSpace {
    FinSpace::new("sl2", vec!["e".into(), "f".into(), "h".into()])
}

/// String(sl2) built by hand: Q -> sl2 with d = 0 and l3 the Cartan 3-form of
/// the Killing form; l3(e,f,h) = kappa(e,[f,h]) = 8.
pub fn string_sl2_by_hand() -> Lie2Algebra<Scalar> {
    let g0 = sl2_space();
    let gm1 = FinSpace::new("R", vec!["c".into()]);
    let d = LinMap::zero(gm1.clone(), g0.clone());
    let l2_00 = sl2_bracket(&g0);
    let l2_01 = l2_01_shape::<Scalar>(&g0, &gm1);
    let mut l3 = l3_shape::<Scalar>(&g0, &gm1);
    l3.set_coeff(&[0, 1, 2], 0, q(8)).unwrap();
    Lie2Candidate {
        g0,
        gm1,
        d,
        l2_00,
        l2_01,
        l3,
    }
    .build()
    .unwrap()
}
