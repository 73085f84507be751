//! Lie algebra crossed modules and the correspondence with strict Lie
//! 2-algebras.

use super::lie::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::mat::{unit_vec, vec_add, vec_sub, Mat, Vector};
use crate::exactlin::tensor::increasing_tuples;
use crate::exactlin::{FinSpace, LinMap, MultiTensor, Symmetry};
use crate::lie2core::algebra::{l2_00_shape, l3_shape, Lie2Candidate};
use crate::lie2core::{AxiomReport, Lie2Algebra};
use crate::ring::{Field, Ring};

/// A Lie algebra crossed module `(m, g, varphi, action)`: `varphi: m -> g` is
/// a homomorphism and `g` acts on `m` by derivations with equivariance and
/// the Peiffer identity.
#[derive(Clone, Debug)]
pub struct LieCrossedModule<R> {
    pub m: LieAlgebra<R>,
    pub g: LieAlgebra<R>,
    pub varphi: LinMap<R>,
    /// `g (plain) x m (plain) -> m`
    pub action: MultiTensor<R>,
}

impl<R: Ring> LieCrossedModule<R> {
    pub fn new(
        m: LieAlgebra<R>,
        g: LieAlgebra<R>,
        varphi: LinMap<R>,
        action: MultiTensor<R>,
    ) -> Result<Self> {
        if !varphi.source.compatible(m.space()) || !varphi.target.compatible(g.space()) {
            return Err(Error::shape("varphi must map m -> g".to_string()));
        }
        let want = [
            (g.space().clone(), Symmetry::Plain),
            (m.space().clone(), Symmetry::Plain),
        ];
        if action.inputs() != want || !action.output().compatible(m.space()) {
            return Err(Error::shape("action has wrong signature".to_string()));
        }
        let cm = LieCrossedModule {
            m,
            g,
            varphi,
            action,
        };
        let report = cm.verify();
        if !report.passed() {
            return Err(Error::math(format!("crossed module laws fail: {}", report.summary())));
        }
        Ok(cm)
    }

    pub fn act(&self, x: &[R], a: &[R]) -> Vector<R> {
        self.action.eval(&[x, a])
    }

    /// All crossed module laws on basis tuples: the action is by derivations
    /// and a homomorphism, `varphi` is equivariant, and the Peiffer identity.
    pub fn verify(&self) -> AxiomReport<R> {
        let mut report = AxiomReport::new();
        let ng = self.g.dim();
        let nm = self.m.dim();
        let lg = |i: usize| self.g.space().label(i).to_string();
        let lm = |i: usize| self.m.space().label(i).to_string();

        // varphi is a Lie algebra homomorphism
        for t in increasing_tuples(nm, 2, true) {
            let lhs = self.varphi.apply(&self.m.bracket().eval_basis(&t));
            let rhs = self.g.bracket_vec(
                &self.varphi.apply_basis(t[0]),
                &self.varphi.apply_basis(t[1]),
            );
            report.record("cm.hom", vec![lm(t[0]), lm(t[1])], vec_sub(&lhs, &rhs));
        }
        // action is by derivations: x . [a,b] = [x.a, b] + [a, x.b]
        for x in 0..ng {
            let ex = unit_vec::<R>(ng, x);
            for t in increasing_tuples(nm, 2, true) {
                let (a, b) = (t[0], t[1]);
                let ea = unit_vec::<R>(nm, a);
                let eb = unit_vec::<R>(nm, b);
                let lhs = self.act(&ex, &self.m.bracket().eval_basis(&[a, b]));
                let rhs = vec_add(
                    &self.m.bracket_vec(&self.act(&ex, &ea), &eb),
                    &self.m.bracket_vec(&ea, &self.act(&ex, &eb)),
                );
                report.record("cm.derivation", vec![lg(x), lm(a), lm(b)], vec_sub(&lhs, &rhs));
            }
        }
        // action is a homomorphism: [x,y] . a = x.(y.a) - y.(x.a)
        for t in increasing_tuples(ng, 2, true) {
            let (x, y) = (t[0], t[1]);
            let ex = unit_vec::<R>(ng, x);
            let ey = unit_vec::<R>(ng, y);
            for a in 0..nm {
                let ea = unit_vec::<R>(nm, a);
                let lhs = self.act(&self.g.bracket().eval_basis(&[x, y]), &ea);
                let rhs = vec_sub(
                    &self.act(&ex, &self.act(&ey, &ea)),
                    &self.act(&ey, &self.act(&ex, &ea)),
                );
                report.record("cm.action_hom", vec![lg(x), lg(y), lm(a)], vec_sub(&lhs, &rhs));
            }
        }
        // equivariance: varphi(x . a) = [x, varphi(a)]
        for x in 0..ng {
            let ex = unit_vec::<R>(ng, x);
            for a in 0..nm {
                let ea = unit_vec::<R>(nm, a);
                let lhs = self.varphi.apply(&self.act(&ex, &ea));
                let rhs = self.g.bracket_vec(&ex, &self.varphi.apply_basis(a));
                report.record("cm.equivariance", vec![lg(x), lm(a)], vec_sub(&lhs, &rhs));
            }
        }
        // Peiffer: varphi(a) . b = [a, b]
        for a in 0..nm {
            for b in 0..nm {
                let ea = unit_vec::<R>(nm, a);
                let eb = unit_vec::<R>(nm, b);
                let lhs = self.act(&self.varphi.apply(&ea), &eb);
                let rhs = self.m.bracket_vec(&ea, &eb);
                report.record("cm.peiffer", vec![lm(a), lm(b)], vec_sub(&lhs, &rhs));
            }
        }
        report.finish()
    }
}

/// Strict Lie 2-algebra -> crossed module: the bracket on `g-1` is
/// `[a,b] := [da, b]`, the action is the mixed bracket.
pub fn strict_to_crossed<R: Ring>(l: &Lie2Algebra<R>) -> Result<LieCrossedModule<R>> {
    if !l.is_strict() {
        return Err(Error::math("algebra is not strict (l3 != 0)".to_string()));
    }
    let nm = l.gm1().dim();
    let mut m_bracket = MultiTensor::new(
        vec![
            (l.gm1().clone(), Symmetry::Alt),
            (l.gm1().clone(), Symmetry::Alt),
        ],
        l.gm1().clone(),
    );
    for t in increasing_tuples(nm, 2, true) {
        // [a,b] := [da, b], the degree-0 element da acting on b
        let da = l.d().apply_basis(t[0]);
        m_bracket.set_entry(&t, l.bracket01(&da, &unit_vec(nm, t[1])))?;
    }
    let m = LieAlgebra::new(l.gm1().clone(), m_bracket)?;
    let g = LieAlgebra::new(l.g0().clone(), l.l2_00().clone())?;
    let mut action = MultiTensor::new(
        vec![
            (l.g0().clone(), Symmetry::Plain),
            (l.gm1().clone(), Symmetry::Plain),
        ],
        l.gm1().clone(),
    );
    for x in 0..l.g0().dim() {
        for a in 0..nm {
            action.set_entry(&[x, a], l.l2_01().eval_basis(&[x, a]))?;
        }
    }
    LieCrossedModule::new(m, g, l.d().clone(), action)
}

/// Crossed module -> strict Lie 2-algebra, inverse to [`strict_to_crossed`].
pub fn crossed_to_strict<R: Ring>(cm: &LieCrossedModule<R>) -> Result<Lie2Algebra<R>> {
    let g0 = cm.g.space().clone();
    let gm1 = cm.m.space().clone();
    let mut l2_01 = MultiTensor::new(
        vec![(g0.clone(), Symmetry::Plain), (gm1.clone(), Symmetry::Plain)],
        gm1.clone(),
    );
    for x in 0..g0.dim() {
        for a in 0..gm1.dim() {
            l2_01.set_entry(&[x, a], cm.action.eval_basis(&[x, a]))?;
        }
    }
    Lie2Candidate {
        l2_00: cm.g.bracket().clone(),
        l3: l3_shape(&g0, &gm1),
        d: cm.varphi.clone(),
        g0,
        gm1,
        l2_01,
    }
    .build()
}

/// The crossed module of an ideal inclusion `h -> g` with the adjoint action.
pub fn ideal_inclusion<R: Ring>(
    g: &LieAlgebra<R>,
    ideal_basis: &[Vector<R>],
    name: &str,
) -> Result<LieCrossedModule<R>>
where
    R: Field,
{
    let n = g.dim();
    let k = ideal_basis.len();
    let hspace = FinSpace::numbered(name, "i", k);
    let incl = LinMap::from_images(hspace.clone(), g.space().clone(), ideal_basis.to_vec())?;
    let sub = crate::exactlin::Subspace::new(g.space().clone(), ideal_basis.to_vec());
    // bracket on h by restriction
    let mut h_bracket = l2_00_shape::<R>(&hspace);
    for t in increasing_tuples(k, 2, true) {
        let val = g.bracket_vec(&incl.apply_basis(t[0]), &incl.apply_basis(t[1]));
        let coords = sub
            .solve_membership(&val)
            .ok_or_else(|| Error::math("subspace is not a subalgebra".to_string()))?;
        h_bracket.set_entry(&t, coords)?;
    }
    let h = LieAlgebra::new(hspace.clone(), h_bracket)?;
    let mut action = MultiTensor::new(
        vec![(g.space().clone(), Symmetry::Plain), (hspace.clone(), Symmetry::Plain)],
        hspace.clone(),
    );
    for x in 0..n {
        for a in 0..k {
            let val = g.bracket_vec(&unit_vec(n, x), &incl.apply_basis(a));
            let coords = sub
                .solve_membership(&val)
                .ok_or_else(|| Error::math("subspace is not an ideal".to_string()))?;
            action.set_entry(&[x, a], coords)?;
        }
    }
    LieCrossedModule::new(h, g.clone(), incl, action)
}

/// The canonical crossed module `ad : g -> Der(g)` with the natural action of
/// derivations on `g`.
pub fn ad_crossed_module<R: Field>(g: &LieAlgebra<R>) -> Result<LieCrossedModule<R>> {
    let n = g.dim();
    let ders = g.derivations();
    let der_space = FinSpace::numbered(format!("Der({})", g.space().name()), "D", ders.len());
    let flat = Mat::from_cols(
        ders.iter()
            .map(|m| {
                let mut v = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        v.push(m[(i, j)].clone());
                    }
                }
                v
            })
            .collect(),
        n * n,
    );
    let coords_of = |m: &Mat<R>| -> Result<Vector<R>> {
        let mut v = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                v.push(m[(i, j)].clone());
            }
        }
        flat.solve(&v)
            .ok_or_else(|| Error::Internal("matrix is not a derivation".to_string()))
    };
    // Der(g) bracket = commutator
    let mut der_bracket = l2_00_shape::<R>(&der_space);
    for t in increasing_tuples(ders.len(), 2, true) {
        let c = ders[t[0]].mul(&ders[t[1]]).sub(&ders[t[1]].mul(&ders[t[0]]));
        der_bracket.set_entry(&t, coords_of(&c)?)?;
    }
    let der = LieAlgebra::new(der_space.clone(), der_bracket)?;
    // ad : g -> Der(g)
    let ad = LinMap::from_images(
        g.space().clone(),
        der_space.clone(),
        (0..n)
            .map(|i| coords_of(&g.ad(&unit_vec(n, i))))
            .collect::<Result<Vec<_>>>()?,
    )?;
    // natural action of Der(g) on g
    let mut action = MultiTensor::new(
        vec![(der_space.clone(), Symmetry::Plain), (g.space().clone(), Symmetry::Plain)],
        g.space().clone(),
    );
    for d in 0..ders.len() {
        for a in 0..n {
            action.set_entry(&[d, a], ders[d].col(a))?;
        }
    }
    LieCrossedModule::new(g.clone(), der, ad, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lie::{heisenberg3, sl2};
    use crate::scalar::Scalar;

    #[test]
    fn sl2_ad_crossed_module() {
        let g = sl2::<Scalar>();
        let cm = ad_crossed_module(&g).unwrap();
        // Der(sl2) = ad(sl2), dimension 3
        assert_eq!(cm.g.dim(), 3);
        assert!(cm.verify().passed());
    }

    #[test]
    fn strict_roundtrip_is_identity() {
        let g = sl2::<Scalar>();
        let cm = ad_crossed_module(&g).unwrap();
        let strict = crossed_to_strict(&cm).unwrap();
        let back = strict_to_crossed(&strict).unwrap();
        assert_eq!(back.m.bracket(), cm.m.bracket());
        assert_eq!(back.g.bracket(), cm.g.bracket());
        assert_eq!(back.varphi.mat(), cm.varphi.mat());
        assert_eq!(&back.action, &cm.action);
    }

    #[test]
    fn ideal_inclusion_heisenberg_center() {
        let g = heisenberg3::<Scalar>();
        let center = g.center();
        let cm = ideal_inclusion(&g, &center, "z").unwrap();
        assert_eq!(cm.m.dim(), 1);
        let strict = crossed_to_strict(&cm).unwrap();
        assert!(strict.is_strict());
    }

    #[test]
    fn abelian_strict_gives_trivial_crossed_module() {
        let g0 = FinSpace::numbered("g0", "x", 2);
        let gm1 = FinSpace::numbered("gm1", "a", 1);
        let l = Lie2Algebra::<Scalar>::abelian(g0, gm1.clone(), LinMap::zero(gm1, FinSpace::numbered("g0", "x", 2))).unwrap();
        let cm = strict_to_crossed(&l).unwrap();
        assert!(cm.m.bracket().is_zero());
        assert!(cm.action.is_zero());
    }
}
