//! Abelian extensions of a Lie 2-algebra by a module, classified by degree-2
//! cocycles.

use crate::cohomology::{coboundary, Cochain, Rep2};
use crate::error::{Error, Result};
use crate::exactlin::mat::{unit_vec, vec_add, vec_sub, Vector};
use crate::exactlin::tensor::increasing_tuples;
use crate::exactlin::{LinMap, Mat};
use crate::lie2core::algebra::{l2_00_shape, l2_01_shape, l3_shape, Lie2Candidate};
use crate::lie2core::hom::phi2_shape;
use crate::lie2core::{compose, Hom2, Lie2Algebra};
use crate::ring::Field;

/// A verified abelian extension `0 -> h -> ext -> g -> 0` with its strict
/// structure maps.
#[derive(Clone, Debug)]
pub struct AbelianExtension<R> {
    pub algebra: Lie2Algebra<R>,
    /// the module viewed as an abelian Lie 2-algebra `h-1 -> h0`
    pub h: Lie2Algebra<R>,
    pub i: Hom2<R>,
    pub p: Hom2<R>,
}

/// Build the extension of `rep.algebra` by the module of `rep`, twisted by
/// the degree-2 cochain `c2`. Rejects non-cocycles, naming the failed axiom.
pub fn abelian_extension<R: Field>(rep: &Rep2<R>, c2: &Cochain<R>) -> Result<AbelianExtension<R>> {
    if c2.degree != 2 {
        return Err(Error::shape("extension cochain must have degree 2".to_string()));
    }
    let g = &rep.algebra;
    let h0 = rep.v0().clone();
    let hm1 = rep.vm1().clone();
    let ng0 = g.g0().dim();
    let ngm1 = g.gm1().dim();
    let e0 = g.g0().direct_sum(&h0, format!("{}+{}", g.g0().name(), h0.name()));
    let em1 = g.gm1().direct_sum(&hm1, format!("{}+{}", g.gm1().name(), hm1.name()));

    let split0 = |v: &[R]| -> (Vector<R>, Vector<R>) { (v[..ng0].to_vec(), v[ng0..].to_vec()) };
    let splitm1 = |v: &[R]| -> (Vector<R>, Vector<R>) { (v[..ngm1].to_vec(), v[ngm1..].to_vec()) };
    let join0 = |x: &[R], u: &[R]| -> Vector<R> {
        let mut out = x.to_vec();
        out.extend_from_slice(u);
        out
    };
    let joinm1 = join0;

    let nu = c2.component((0, 1, 0));
    let om2 = c2.component((2, 0, 0));
    let om11 = c2.component((1, 1, -1));
    let om3 = c2.component((3, 0, -1));

    // twisted differential
    let mut d_cols = Vec::with_capacity(em1.dim());
    for idx in 0..em1.dim() {
        let (a, m) = splitm1(&unit_vec::<R>(em1.dim(), idx));
        let gpart = g.d().apply(&a);
        let mut hpart = rep.complex.partial.apply(&m);
        if let Some(nu) = nu {
            hpart = vec_add(&hpart, &nu.eval(&[&a]));
        }
        d_cols.push(join0(&gpart, &hpart));
    }
    let d = LinMap::from_images(em1.clone(), e0.clone(), d_cols)?;

    let mut l2_00 = l2_00_shape::<R>(&e0);
    for t in increasing_tuples(e0.dim(), 2, true) {
        let (x, u) = split0(&unit_vec::<R>(e0.dim(), t[0]));
        let (y, v) = split0(&unit_vec::<R>(e0.dim(), t[1]));
        let gpart = g.bracket00(&x, &y);
        let mut hpart = vec_sub(&rep.act0_v0(&x, &v), &rep.act0_v0(&y, &u));
        if let Some(om2) = om2 {
            hpart = vec_add(&hpart, &om2.eval(&[&x, &y]));
        }
        l2_00.set_entry(&t, join0(&gpart, &hpart))?;
    }

    let mut l2_01 = l2_01_shape::<R>(&e0, &em1);
    for p0 in 0..e0.dim() {
        let (x, u) = split0(&unit_vec::<R>(e0.dim(), p0));
        for q0 in 0..em1.dim() {
            let (a, m) = splitm1(&unit_vec::<R>(em1.dim(), q0));
            let gpart = g.bracket01(&x, &a);
            let mut hpart = vec_sub(&rep.act0_vm1(&x, &m), &rep.act1(&a, &u));
            if let Some(om11) = om11 {
                hpart = vec_add(&hpart, &om11.eval(&[&x, &a]));
            }
            l2_01.set_entry(&[p0, q0], joinm1(&gpart, &hpart))?;
        }
    }

    let mut l3 = l3_shape::<R>(&e0, &em1);
    for t in increasing_tuples(e0.dim(), 3, true) {
        let (x, u) = split0(&unit_vec::<R>(e0.dim(), t[0]));
        let (y, v) = split0(&unit_vec::<R>(e0.dim(), t[1]));
        let (z, w) = split0(&unit_vec::<R>(e0.dim(), t[2]));
        let gpart = g.l3_eval(&x, &y, &z);
        let mut hpart = crate::exactlin::mat::vec_neg(&rep.act2_eval(&x, &y, &w));
        hpart = vec_sub(&hpart, &rep.act2_eval(&y, &z, &u));
        hpart = vec_sub(&hpart, &rep.act2_eval(&z, &x, &v));
        if let Some(om3) = om3 {
            hpart = vec_add(&hpart, &om3.eval(&[&x, &y, &z]));
        }
        l3.set_entry(&t, joinm1(&gpart, &hpart))?;
    }

    let candidate = Lie2Candidate {
        g0: e0.clone(),
        gm1: em1.clone(),
        d,
        l2_00,
        l2_01,
        l3,
    };
    let report = candidate.verify()?;
    if !report.passed() {
        return Err(Error::math(format!(
            "extension cochain is not a cocycle: {}",
            report.summary()
        )));
    }
    debug_assert!(coboundary(rep, c2).is_zero());
    let algebra = candidate.build()?;

    // the module as an abelian Lie 2-algebra
    let h = Lie2Algebra::abelian(h0.clone(), hm1.clone(), rep.complex.partial.clone())?;

    // strict injections and projections
    let i0 = LinMap::from_images(
        h0.clone(),
        e0.clone(),
        (0..h0.dim())
            .map(|u| join0(&crate::exactlin::mat::zero_vec::<R>(ng0), &unit_vec(h0.dim(), u)))
            .collect(),
    )?;
    let i1 = LinMap::from_images(
        hm1.clone(),
        em1.clone(),
        (0..hm1.dim())
            .map(|m| joinm1(&crate::exactlin::mat::zero_vec::<R>(ngm1), &unit_vec(hm1.dim(), m)))
            .collect(),
    )?;
    let i = Hom2::verified(h.clone(), algebra.clone(), i0, i1, phi2_shape(h.g0(), algebra.gm1()))
        .map_err(|e| Error::Internal(format!("inclusion is not a homomorphism: {e}")))?;

    let p0 = LinMap::new(
        e0.clone(),
        g.g0().clone(),
        Mat::from_fn(ng0, e0.dim(), |r, c| {
            if r == c {
                R::one()
            } else {
                R::zero()
            }
        }),
    )?;
    let p1 = LinMap::new(
        em1.clone(),
        g.gm1().clone(),
        Mat::from_fn(ngm1, em1.dim(), |r, c| {
            if r == c {
                R::one()
            } else {
                R::zero()
            }
        }),
    )?;
    let p = Hom2::verified(
        algebra.clone(),
        g.clone(),
        p0,
        p1,
        phi2_shape(algebra.g0(), g.gm1()),
    )
    .map_err(|e| Error::Internal(format!("projection is not a homomorphism: {e}")))?;

    // exactness: im i = ker p degreewise, ker i = 0, im p = g
    let exact0 = p.phi0.kernel().equals(&i.phi0.image());
    let exact1 = p.phi1.kernel().equals(&i.phi1.image());
    let inj = i.phi0.kernel().dim() == 0 && i.phi1.kernel().dim() == 0;
    let surj = p.phi0.rank() == ng0 && p.phi1.rank() == ngm1;
    if !(exact0 && exact1 && inj && surj) {
        return Err(Error::Internal("extension sequence is not exact".to_string()));
    }

    Ok(AbelianExtension { algebra, h, i, p })
}

/// For cohomologous cocycles `c2` and `c2 + D b`, the equivalence
/// `F : ext(c2 + D b) -> ext(c2)` with `F . i = i'`, `p' . F = p`.
pub fn extension_equivalence<R: Field>(
    rep: &Rep2<R>,
    c2: &Cochain<R>,
    b: &Cochain<R>,
) -> Result<(AbelianExtension<R>, AbelianExtension<R>, Hom2<R>)> {
    if b.degree != 1 {
        return Err(Error::shape("equivalence primitive must have degree 1".to_string()));
    }
    let shifted = c2.add(&coboundary(rep, b));
    let ext_a = abelian_extension(rep, &shifted)?;
    let ext_b = abelian_extension(rep, c2)?;
    let g = &rep.algebra;
    let ng0 = g.g0().dim();
    let ngm1 = g.gm1().dim();
    let e0 = ext_a.algebra.g0().clone();
    let em1 = ext_a.algebra.gm1().clone();

    let b0 = b.component((1, 0, 0));
    let b1 = b.component((0, 1, -1));
    let lb = b.component((2, 0, -1));

    // F0(x+u) = x + (u + B0 x), F1(a+m) = a + (m + B1 a), F2 = lB on g-parts
    let f0 = LinMap::from_images(
        e0.clone(),
        ext_b.algebra.g0().clone(),
        (0..e0.dim())
            .map(|idx| {
                let mut out = unit_vec::<R>(e0.dim(), idx);
                if idx < ng0 {
                    if let Some(b0) = b0 {
                        let corr = b0.eval_basis(&[idx]);
                        for (t, c) in corr.iter().enumerate() {
                            out[ng0 + t] = out[ng0 + t].add(c);
                        }
                    }
                }
                out
            })
            .collect(),
    )?;
    let f1 = LinMap::from_images(
        em1.clone(),
        ext_b.algebra.gm1().clone(),
        (0..em1.dim())
            .map(|idx| {
                let mut out = unit_vec::<R>(em1.dim(), idx);
                if idx < ngm1 {
                    if let Some(b1) = b1 {
                        let corr = b1.eval_basis(&[idx]);
                        for (t, c) in corr.iter().enumerate() {
                            out[ngm1 + t] = out[ngm1 + t].add(c);
                        }
                    }
                }
                out
            })
            .collect(),
    )?;
    let mut f2 = phi2_shape::<R>(&e0, ext_b.algebra.gm1());
    if let Some(lb) = lb {
        for t in increasing_tuples(e0.dim(), 2, true) {
            if t[0] < ng0 && t[1] < ng0 {
                let val = lb.eval_basis(&[t[0], t[1]]);
                let mut full = crate::exactlin::mat::zero_vec::<R>(em1.dim());
                for (i, c) in val.iter().enumerate() {
                    full[ngm1 + i] = c.clone();
                }
                f2.set_entry(&t, full)?;
            }
        }
    }
    let f = Hom2::verified(ext_a.algebra.clone(), ext_b.algebra.clone(), f0, f1, f2)
        .map_err(|e| Error::Internal(format!("extension equivalence failed: {e}")))?;

    // F . i_a = i_b and p_b . F = p_a
    let fi = compose(&f, &ext_a.i)?;
    let pf = compose(&ext_b.p, &f)?;
    if fi != ext_b.i || pf != ext_a.p {
        return Err(Error::Internal(
            "equivalence does not commute with the extension maps".to_string(),
        ));
    }

    Ok((ext_a, ext_b, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Rep2;
    use crate::constructions::lie::sl2;
    use crate::constructions::quadruple::string_killing;
    use crate::constructions::TwoComplex;
    use crate::exactlin::FinSpace;
    use crate::sample::{random_cochain, rng_from_seed};
    use crate::scalar::Scalar;

    fn trivial_rep() -> Rep2<Scalar> {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let v0 = FinSpace::numbered("h0", "u", 1);
        let vm1 = FinSpace::numbered("hm1", "m", 1);
        let partial = LinMap::zero(vm1.clone(), v0.clone());
        Rep2::trivial(l, TwoComplex::new(v0, vm1, partial).unwrap())
    }

    #[test]
    fn zero_cochain_gives_direct_sum() {
        let rep = trivial_rep();
        let ext = abelian_extension(&rep, &Cochain::zero(2)).unwrap();
        assert_eq!(ext.algebra.g0().dim(), 4);
        assert_eq!(ext.algebra.gm1().dim(), 2);
    }

    #[test]
    fn extension_rejects_non_cocycles_and_accepts_cocycles() {
        let rep = trivial_rep();
        let mut rng = rng_from_seed(3);
        let mut saw_reject = false;
        for _ in 0..10 {
            let c2 = random_cochain(&mut rng, &rep, 2, 2);
            let closed = coboundary(&rep, &c2).is_zero();
            let out = abelian_extension(&rep, &c2);
            assert_eq!(out.is_ok(), closed);
            saw_reject |= !closed;
        }
        assert!(saw_reject);
    }

    #[test]
    fn cohomologous_cocycles_give_equivalent_extensions() {
        let rep = trivial_rep();
        let mut rng = rng_from_seed(9);
        let c2 = crate::sample::random_cocycle(&mut rng, &rep, 2, 2);
        let b = random_cochain(&mut rng, &rep, 1, 2);
        let (_, _, f) = extension_equivalence(&rep, &c2, &b).unwrap();
        assert!(f.verify().passed());
    }
}
