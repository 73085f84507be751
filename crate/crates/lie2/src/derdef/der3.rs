//! Strict Lie 3-algebras (3-term dg Lie algebras) and the derivation Lie
//! 3-algebra `DER(g) : g-1 -> Der-1(g) + g0 -> Der0(g)`.

use super::derivations::{build_der, DerAlgebra, Derivation0};
use crate::error::{Error, Result};
use crate::exactlin::mat::{unit_vec, vec_add, vec_sub, Vector};
use crate::exactlin::tensor::increasing_tuples;
use crate::exactlin::{FinSpace, LinMap, MultiTensor, Symmetry};
use crate::lie2core::{AxiomReport, Lie2Algebra};
use crate::ring::{Field, Ring};

/// A 3-term complex `c-2 -> c-1 -> c0` with a degree-0 graded bracket given
/// by its four nonzero degree blocks.
#[derive(Clone, Debug)]
pub struct Lie3Strict<R> {
    pub c0: FinSpace,
    pub cm1: FinSpace,
    pub cm2: FinSpace,
    /// `c-1 -> c0`
    pub d1: LinMap<R>,
    /// `c-2 -> c-1`
    pub d2: LinMap<R>,
    /// `Alt^2 c0 -> c0`
    pub b00: MultiTensor<R>,
    /// `c0 (x) c-1 -> c-1`
    pub b0m1: MultiTensor<R>,
    /// `c0 (x) c-2 -> c-2`
    pub b0m2: MultiTensor<R>,
    /// `Sym^2 c-1 -> c-2` (odd-odd brackets are symmetric)
    pub bm1m1: MultiTensor<R>,
}

/// Degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deg {
    Zero,
    M1,
    M2,
}

impl<R: Ring> Lie3Strict<R> {
    pub fn space(&self, d: Deg) -> &FinSpace {
        match d {
            Deg::Zero => &self.c0,
            Deg::M1 => &self.cm1,
            Deg::M2 => &self.cm2,
        }
    }

    fn deg_val(d: Deg) -> i64 {
        match d {
            Deg::Zero => 0,
            Deg::M1 => -1,
            Deg::M2 => -2,
        }
    }

    /// The graded bracket on homogeneous elements, extended by graded
    /// skew-symmetry from the four stored blocks.
    pub fn bracket(&self, da: Deg, a: &[R], db: Deg, b: &[R]) -> Option<(Deg, Vector<R>)> {
        use Deg::*;
        match (da, db) {
            (Zero, Zero) => Some((Zero, self.b00.eval(&[a, b]))),
            (Zero, M1) => Some((M1, self.b0m1.eval(&[a, b]))),
            (M1, Zero) => Some((M1, crate::exactlin::mat::vec_neg(&self.b0m1.eval(&[b, a])))),
            (Zero, M2) => Some((M2, self.b0m2.eval(&[a, b]))),
            (M2, Zero) => Some((M2, crate::exactlin::mat::vec_neg(&self.b0m2.eval(&[b, a])))),
            (M1, M1) => Some((M2, self.bm1m1.eval(&[a, b]))),
            _ => None, // lands below degree -2
        }
    }

    pub fn differential(&self, d: Deg, a: &[R]) -> Option<(Deg, Vector<R>)> {
        match d {
            Deg::Zero => None,
            Deg::M1 => Some((Deg::Zero, self.d1.apply(a))),
            Deg::M2 => Some((Deg::M1, self.d2.apply(a))),
        }
    }

    /// Chain condition, graded Leibniz for the differential, and graded
    /// Jacobi, all on basis tuples.
    pub fn verify(&self) -> AxiomReport<R> {
        let mut report = AxiomReport::new();
        use Deg::*;

        // d1 . d2 = 0
        for a in 0..self.cm2.dim() {
            let v = self.d1.apply(&self.d2.apply_basis(a));
            report.record("lie3.dd", vec![self.cm2.label(a).to_string()], v);
        }

        // Leibniz: d[a,b] = [da,b] + (-1)^{|a|} [a,db]
        for (da, db) in [(Zero, M1), (Zero, M2), (M1, M1), (M1, M2)] {
            let na = self.space(da).dim();
            let nb = self.space(db).dim();
            for i in 0..na {
                for j in 0..nb {
                    let ea = unit_vec::<R>(na, i);
                    let eb = unit_vec::<R>(nb, j);
                    let Some((dbr, br)) = self.bracket(da, &ea, db, &eb) else {
                        continue;
                    };
                    let lhs = self
                        .differential(dbr, &br)
                        .map(|(_, v)| v)
                        .unwrap_or_else(|| crate::exactlin::mat::zero_vec(0));
                    let mut rhs: Option<Vector<R>> = None;
                    if let Some((dda, va)) = self.differential(da, &ea) {
                        if let Some((_, t)) = self.bracket(dda, &va, db, &eb) {
                            rhs = Some(t);
                        }
                    }
                    if let Some((ddb, vb)) = self.differential(db, &eb) {
                        if let Some((_, t)) = self.bracket(da, &ea, ddb, &vb) {
                            let t = if Self::deg_val(da) % 2 != 0 {
                                crate::exactlin::mat::vec_neg(&t)
                            } else {
                                t
                            };
                            rhs = Some(match rhs {
                                None => t,
                                Some(r) => vec_add(&r, &t),
                            });
                        }
                    }
                    let rhs = rhs.unwrap_or_else(|| crate::exactlin::mat::zero_vec(lhs.len()));
                    if lhs.is_empty() && rhs.is_empty() {
                        continue;
                    }
                    report.record(
                        "lie3.leibniz",
                        vec![
                            format!("{:?}:{}", da, self.space(da).label(i)),
                            format!("{:?}:{}", db, self.space(db).label(j)),
                        ],
                        vec_sub(&lhs, &rhs),
                    );
                }
            }
        }

        // graded Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        let degs = [Zero, M1, M2];
        for &da in &degs {
            for &db in &degs {
                for &dc in &degs {
                    if Self::deg_val(da) + Self::deg_val(db) + Self::deg_val(dc) < -2 {
                        continue;
                    }
                    let (na, nb, nc) =
                        (self.space(da).dim(), self.space(db).dim(), self.space(dc).dim());
                    for i in 0..na {
                        for j in 0..nb {
                            for k in 0..nc {
                                let ea = unit_vec::<R>(na, i);
                                let eb = unit_vec::<R>(nb, j);
                                let ec = unit_vec::<R>(nc, k);
                                let lhs = self
                                    .bracket(db, &eb, dc, &ec)
                                    .and_then(|(d, v)| self.bracket(da, &ea, d, &v));
                                let t1 = self
                                    .bracket(da, &ea, db, &eb)
                                    .and_then(|(d, v)| self.bracket(d, &v, dc, &ec));
                                let t2 = self
                                    .bracket(da, &ea, dc, &ec)
                                    .and_then(|(d, v)| self.bracket(db, &eb, d, &v));
                                let sign2 = (Self::deg_val(da) * Self::deg_val(db)) % 2 != 0;
                                let mut defect: Option<Vector<R>> = lhs.map(|(_, v)| v);
                                if let Some((_, v)) = t1 {
                                    let v = crate::exactlin::mat::vec_neg(&v);
                                    defect = Some(match defect {
                                        None => v,
                                        Some(d) => vec_add(&d, &v),
                                    });
                                }
                                if let Some((_, v)) = t2 {
                                    let v = if sign2 { v } else { crate::exactlin::mat::vec_neg(&v) };
                                    defect = Some(match defect {
                                        None => v,
                                        Some(d) => vec_add(&d, &v),
                                    });
                                }
                                if let Some(d) = defect {
                                    report.record(
                                        "lie3.jacobi",
                                        vec![
                                            format!("{:?}:{}", da, self.space(da).label(i)),
                                            format!("{:?}:{}", db, self.space(db).label(j)),
                                            format!("{:?}:{}", dc, self.space(dc).label(k)),
                                        ],
                                        d,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }

        report.finish()
    }
}

/// `DER(g)`: the 3-term complex `g-1 -> Der-1(g) + g0 -> Der0(g)` with the
/// displayed differential and bracket table.
pub fn build_der3<R: Field>(l: &Lie2Algebra<R>) -> Result<(Lie3Strict<R>, DerAlgebra<R>)> {
    let der = build_der(l)?;
    let der0 = der.algebra.g0().clone();
    let derm1 = der.algebra.gm1().clone();
    let n0 = l.g0().dim();
    let n1 = l.gm1().dim();
    let cm1 = derm1.direct_sum(l.g0(), format!("Derm1+{}", l.g0().name()));
    let cm2 = l.gm1().clone();

    let split = |v: &[R]| -> (Vector<R>, Vector<R>) {
        (v[..derm1.dim()].to_vec(), v[derm1.dim()..].to_vec())
    };
    let join = |t: &[R], x: &[R]| -> Vector<R> {
        let mut out = t.to_vec();
        out.extend_from_slice(x);
        out
    };

    // extended adjoint: ad(x) = ([x,.] pair, l3(x,.,.)) as a derivation
    let adbar = |x: &[R]| -> Result<Vector<R>> {
        let x0 = LinMap::from_images(
            l.g0().clone(),
            l.g0().clone(),
            (0..n0).map(|j| l.bracket00(x, &unit_vec(n0, j))).collect(),
        )?;
        let x1 = LinMap::from_images(
            l.gm1().clone(),
            l.gm1().clone(),
            (0..n1).map(|a| l.bracket01(x, &unit_vec(n1, a))).collect(),
        )?;
        let mut lx = MultiTensor::new(
            vec![
                (l.g0().clone(), Symmetry::Alt),
                (l.g0().clone(), Symmetry::Alt),
            ],
            l.gm1().clone(),
        );
        for t in increasing_tuples(n0, 2, true) {
            lx.set_entry(
                &t,
                l.l3_eval(x, &unit_vec(n0, t[0]), &unit_vec(n0, t[1])),
            )?;
        }
        der.space
            .coords(&Derivation0 { x0, x1, lx })
            .ok_or_else(|| Error::Internal("extended adjoint is not a derivation".to_string()))
    };

    // d2(a) = ([a, .], -d a)
    let mut d2_cols = Vec::with_capacity(cm2.dim());
    for a in 0..n1 {
        let theta = LinMap::from_images(
            l.g0().clone(),
            l.gm1().clone(),
            (0..n0)
                .map(|x| l.bracket10(&unit_vec(n1, a), &unit_vec(n0, x)))
                .collect(),
        )?;
        let tcoords = der.theta_coords(&theta);
        let minus_da = crate::exactlin::mat::vec_neg(&l.d().apply_basis(a));
        d2_cols.push(join(&tcoords, &minus_da));
    }
    let d2 = LinMap::from_images(cm2.clone(), cm1.clone(), d2_cols)?;

    // d1(Theta, x) = dbar(Theta) + adbar(x)
    let mut d1_cols = Vec::with_capacity(cm1.dim());
    for idx in 0..cm1.dim() {
        let (t, x) = split(&unit_vec::<R>(cm1.dim(), idx));
        let theta = der.theta_map(&t);
        let dbar_coords = der
            .space
            .coords(&der.dbar(&theta))
            .ok_or_else(|| Error::Internal("dbar is not a derivation".to_string()))?;
        let ad_coords = adbar(&x)?;
        d1_cols.push(vec_add(&dbar_coords, &ad_coords));
    }
    let d1 = LinMap::from_images(cm1.clone(), der0.clone(), d1_cols)?;

    // bracket blocks
    let b00 = der.algebra.l2_00().clone();
    let mut b0m1 = MultiTensor::new(
        vec![(der0.clone(), Symmetry::Plain), (cm1.clone(), Symmetry::Plain)],
        cm1.clone(),
    );
    for i in 0..der0.dim() {
        let dx = &der.space.derivations[i];
        for j in 0..cm1.dim() {
            let (t, x) = split(&unit_vec::<R>(cm1.dim(), j));
            let theta = der.theta_map(&t);
            // ({(X,lX),Theta} + lX(x, .), X0 x)
            let mixed = dx
                .x1
                .compose(&theta)
                .expect("shape")
                .sub(&theta.compose(&dx.x0).expect("shape"));
            let lx_part = LinMap::from_images(
                l.g0().clone(),
                l.gm1().clone(),
                (0..n0)
                    .map(|y| dx.lx.eval(&[&x, &unit_vec(n0, y)]))
                    .collect(),
            )
            .expect("shape");
            let tpart = der.theta_coords(&mixed.add(&lx_part));
            let xpart = dx.x0.apply(&x);
            b0m1.set_entry(&[i, j], join(&tpart, &xpart))?;
        }
    }
    let mut b0m2 = MultiTensor::new(
        vec![(der0.clone(), Symmetry::Plain), (cm2.clone(), Symmetry::Plain)],
        cm2.clone(),
    );
    for i in 0..der0.dim() {
        let dx = &der.space.derivations[i];
        for a in 0..cm2.dim() {
            b0m2.set_entry(&[i, a], dx.x1.apply_basis(a))?;
        }
    }
    let mut bm1m1 = MultiTensor::new(
        vec![(cm1.clone(), Symmetry::Sym), (cm1.clone(), Symmetry::Sym)],
        cm2.clone(),
    );
    for t in increasing_tuples(cm1.dim(), 2, false) {
        let (t1, x1) = split(&unit_vec::<R>(cm1.dim(), t[0]));
        let (t2, x2) = split(&unit_vec::<R>(cm1.dim(), t[1]));
        // [(Theta,x),(Theta',x')] = -Theta x' - Theta' x
        let th1 = der.theta_map(&t1);
        let th2 = der.theta_map(&t2);
        let val = crate::exactlin::mat::vec_neg(&vec_add(&th1.apply(&x2), &th2.apply(&x1)));
        bm1m1.set_entry(&t, val)?;
    }

    let der3 = Lie3Strict {
        c0: der0,
        cm1,
        cm2,
        d1,
        d2,
        b00,
        b0m1,
        b0m2,
        bm1m1,
    };
    let report = der3.verify();
    if !report.passed() {
        return Err(Error::Internal(format!(
            "DER(g) failed verification: {}",
            report.summary()
        )));
    }
    Ok((der3, der))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lie::sl2;
    use crate::constructions::quadruple::string_killing;
    use crate::exactlin::LinMap;
    use crate::scalar::Scalar;

    #[test]
    fn der3_of_string_sl2() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let (der3, _) = build_der3(&l).unwrap();
        // middle term: Der-1 + g0 = 3 + 3
        assert_eq!(der3.cm1.dim(), 6);
        assert_eq!(der3.c0.dim(), 6);
        assert_eq!(der3.cm2.dim(), 1);
        assert!(der3.verify().passed());
    }

    #[test]
    fn der3_of_abelian() {
        let g0 = crate::exactlin::FinSpace::numbered("g0", "x", 2);
        let gm1 = crate::exactlin::FinSpace::numbered("gm1", "a", 1);
        let l = Lie2Algebra::<Scalar>::abelian(g0.clone(), gm1.clone(), LinMap::zero(gm1, g0))
            .unwrap();
        let (der3, _) = build_der3(&l).unwrap();
        assert!(der3.verify().passed());
        // abelian: the odd-odd bracket is -Theta x' - Theta' x, not zero
        assert!(!der3.bm1m1.is_zero());
    }
}
