//! The linear Courant algebroid of a Lie 2-algebra: the trivial bundle
//! `E = g-1* x (g0* + g0)` over `g-1*`, with the pairing between `g0` and
//! `g0*`, the anchor and Dorfman bracket from the structure tensors, all
//! extended over polynomial coefficients.

use super::gpoly::GradedPoly;
use crate::error::{Error, Result};
use crate::lie2core::{AxiomReport, Lie2Algebra};
use crate::ring::Ring;

/// A section of `E` with polynomial (base) coefficients per frame direction:
/// constants from `g0` and from `g0*`.
#[derive(Clone, Debug, PartialEq)]
pub struct CourantSection<R> {
    /// coefficients of the `g0`-frame
    pub g0: Vec<GradedPoly<R>>,
    /// coefficients of the `g0*`-frame
    pub g0star: Vec<GradedPoly<R>>,
}

impl<R: Ring> CourantSection<R> {
    pub fn zero(n0: usize) -> Self {
        CourantSection {
            g0: vec![GradedPoly::zero(); n0],
            g0star: vec![GradedPoly::zero(); n0],
        }
    }

    pub fn basis_g0(n0: usize, i: usize) -> Self {
        let mut s = Self::zero(n0);
        s.g0[i] = GradedPoly::one();
        s
    }

    pub fn basis_g0star(n0: usize, i: usize) -> Self {
        let mut s = Self::zero(n0);
        s.g0star[i] = GradedPoly::one();
        s
    }

    pub fn add(&self, rhs: &Self) -> Self {
        CourantSection {
            g0: self.g0.iter().zip(&rhs.g0).map(|(a, b)| a.add(b)).collect(),
            g0star: self
                .g0star
                .iter()
                .zip(&rhs.g0star)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale_poly(&GradedPoly::one().neg()))
    }

    pub fn scale_poly(&self, f: &GradedPoly<R>) -> Self {
        CourantSection {
            g0: self.g0.iter().map(|a| f.mul(a)).collect(),
            g0star: self.g0star.iter().map(|a| f.mul(a)).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        CourantSection {
            g0: self.g0.iter().map(|a| a.scale(c)).collect(),
            g0star: self.g0star.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.g0.iter().all(|p| p.is_zero()) && self.g0star.iter().all(|p| p.is_zero())
    }
}

/// A vector field on the base `g-1*` with polynomial components.
#[derive(Clone, Debug, PartialEq)]
pub struct BaseVectorField<R> {
    /// component along `d/d a_k`
    pub components: Vec<GradedPoly<R>>,
}

impl<R: Ring> BaseVectorField<R> {
    pub fn zero(n1: usize) -> Self {
        BaseVectorField {
            components: vec![GradedPoly::zero(); n1],
        }
    }

    pub fn apply(&self, f: &GradedPoly<R>) -> GradedPoly<R> {
        let mut out = GradedPoly::zero();
        for (k, comp) in self.components.iter().enumerate() {
            if comp.is_zero() {
                continue;
            }
            out = out.add(&comp.mul(&f.even_derivative(k)));
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        BaseVectorField {
            components: self
                .components
                .iter()
                .zip(&rhs.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale_poly(&self, f: &GradedPoly<R>) -> Self {
        BaseVectorField {
            components: self.components.iter().map(|c| f.mul(c)).collect(),
        }
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        let n1 = self.components.len();
        let mut components = Vec::with_capacity(n1);
        for k in 0..n1 {
            components
                .push(self.apply(&rhs.components[k]).sub(&rhs.apply(&self.components[k])));
        }
        BaseVectorField { components }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }
}

/// The Courant algebroid operations of a Lie 2-algebra.
#[derive(Clone, Debug)]
pub struct CourantData<R> {
    pub algebra: Lie2Algebra<R>,
}

impl<R: Ring> CourantData<R> {
    fn n0(&self) -> usize {
        self.algebra.g0().dim()
    }

    fn n1(&self) -> usize {
        self.algebra.gm1().dim()
    }

    /// Pairing `<x + xi, y + eta> = xi(y) + eta(x)` over the coefficients.
    pub fn pairing(&self, a: &CourantSection<R>, b: &CourantSection<R>) -> GradedPoly<R> {
        let mut out = GradedPoly::zero();
        for k in 0..self.n0() {
            out = out.add(&a.g0[k].mul(&b.g0star[k]));
            out = out.add(&a.g0star[k].mul(&b.g0[k]));
        }
        out
    }

    /// Anchor of a section, as a vector field on the base.
    pub fn anchor(&self, e: &CourantSection<R>) -> BaseVectorField<R> {
        let n0 = self.n0();
        let n1 = self.n1();
        let mut out = BaseVectorField::zero(n1);
        for i in 0..n0 {
            if !e.g0[i].is_zero() {
                // rho(x_i)(a_k) = [x_i, a_k], a linear function
                let mut comp = BaseVectorField::zero(n1);
                for k in 0..n1 {
                    let br = self.algebra.l2_01().eval_basis(&[i, k]);
                    let mut p = GradedPoly::zero();
                    for (m, c) in br.iter().enumerate() {
                        p.add_term(super::gpoly::Monomial::even_gen(m), c.clone());
                    }
                    comp.components[k] = p;
                }
                out = out.add(&comp.scale_poly(&e.g0[i]));
            }
            if !e.g0star[i].is_zero() {
                // rho(xi^i)(a_k) = <xi^i, d a_k> = d[i,k], constant
                let mut comp = BaseVectorField::zero(n1);
                for k in 0..n1 {
                    let c = self.algebra.d().mat()[(i, k)].clone();
                    comp.components[k] = GradedPoly::constant(c);
                }
                out = out.add(&comp.scale_poly(&e.g0star[i]));
            }
        }
        out
    }

    /// `D f`, defined by `<D f, e> = rho(e)(f)`.
    pub fn script_d(&self, f: &GradedPoly<R>) -> CourantSection<R> {
        let n0 = self.n0();
        let n1 = self.n1();
        let mut out = CourantSection::zero(n0);
        // g0-part from pairing with xi^j: rho(xi^j)(f)
        for j in 0..n0 {
            let mut acc = GradedPoly::zero();
            for k in 0..n1 {
                let c = self.algebra.d().mat()[(j, k)].clone();
                if !c.is_zero() {
                    acc = acc.add(&f.even_derivative(k).scale(&c));
                }
            }
            out.g0[j] = acc;
        }
        // g0*-part from pairing with e_j: rho(e_j)(f)
        for j in 0..n0 {
            out.g0star[j] = self.anchor(&CourantSection::basis_g0(n0, j)).apply(f);
        }
        out
    }

    /// Dorfman bracket on the constant frame sections; `true` = `g0` frame.
    fn dorfman_frame(&self, i: usize, ity: bool, j: usize, jty: bool) -> CourantSection<R> {
        let n0 = self.n0();
        let mut out = CourantSection::zero(n0);
        match (ity, jty) {
            (true, true) => {
                // {x,y} = [x,y] + l3(x,y,.)
                let br = self.algebra.l2_00().eval_basis(&[i, j]);
                for (k, c) in br.iter().enumerate() {
                    out.g0[k] = GradedPoly::constant(c.clone());
                }
                for k in 0..n0 {
                    let v = self.algebra.l3().eval_basis(&[i, j, k]);
                    let mut p = GradedPoly::zero();
                    for (m, c) in v.iter().enumerate() {
                        p.add_term(super::gpoly::Monomial::even_gen(m), c.clone());
                    }
                    out.g0star[k] = p;
                }
            }
            (true, false) => {
                // {x, xi} is the coadjoint action of the double:
                // <{x, xi}, y> = -<xi, [x,y]>
                for k in 0..n0 {
                    let br = self.algebra.l2_00().eval_basis(&[i, k]);
                    out.g0star[k] = GradedPoly::constant(br[j].neg());
                }
            }
            (false, true) => {
                // {xi, x} = -{x, xi} up to the constant pairing term
                for k in 0..n0 {
                    let br = self.algebra.l2_00().eval_basis(&[j, k]);
                    out.g0star[k] = GradedPoly::constant(br[i].clone());
                }
            }
            (false, false) => {}
        }
        out
    }

    /// Dorfman bracket on arbitrary polynomial-coefficient sections:
    /// `{f s, g t} = f g {s,t} + f rho(s)(g) t - g rho(t)(f) s + g <s,t> D f`.
    pub fn dorfman(&self, a: &CourantSection<R>, b: &CourantSection<R>) -> CourantSection<R> {
        let n0 = self.n0();
        let mut out = CourantSection::zero(n0);
        let frames_a: Vec<(usize, bool, GradedPoly<R>)> = (0..n0)
            .map(|i| (i, true, a.g0[i].clone()))
            .chain((0..n0).map(|i| (i, false, a.g0star[i].clone())))
            .collect();
        let frames_b: Vec<(usize, bool, GradedPoly<R>)> = (0..n0)
            .map(|j| (j, true, b.g0[j].clone()))
            .chain((0..n0).map(|j| (j, false, b.g0star[j].clone())))
            .collect();
        for (i, ity, f) in &frames_a {
            if f.is_zero() {
                continue;
            }
            let s = if *ity {
                CourantSection::basis_g0(n0, *i)
            } else {
                CourantSection::basis_g0star(n0, *i)
            };
            let rho_s = self.anchor(&s);
            for (j, jty, g) in &frames_b {
                if g.is_zero() {
                    continue;
                }
                let t = if *jty {
                    CourantSection::basis_g0(n0, *j)
                } else {
                    CourantSection::basis_g0star(n0, *j)
                };
                let core = self.dorfman_frame(*i, *ity, *j, *jty);
                out = out.add(&core.scale_poly(&f.mul(g)));
                out = out.add(&t.scale_poly(&f.mul(&rho_s.apply(g))));
                let rho_t = self.anchor(&t);
                out = out.sub(&s.scale_poly(&g.mul(&rho_t.apply(f))));
                let pair = self.pairing(&s, &t);
                if !pair.is_zero() {
                    out = out.add(&self.script_d(f).scale_poly(&g.mul(&pair)));
                }
            }
        }
        out
    }

    /// The skew Courant bracket `[[a,b]] = ({a,b} - {b,a}) / 2`.
    pub fn courant_bracket(
        &self,
        a: &CourantSection<R>,
        b: &CourantSection<R>,
    ) -> CourantSection<R> {
        let half = R::from_ratio(1, 2);
        self.dorfman(a, b).sub(&self.dorfman(b, a)).scale(&half)
    }

    /// `T(e1,e2,e3) = (1/6) sum_cyc <[[e1,e2]], e3>`.
    pub fn t_form(
        &self,
        e1: &CourantSection<R>,
        e2: &CourantSection<R>,
        e3: &CourantSection<R>,
    ) -> GradedPoly<R> {
        let sixth = R::from_ratio(1, 6);
        let mut acc = self.pairing(&self.courant_bracket(e1, e2), e3);
        acc = acc.add(&self.pairing(&self.courant_bracket(e2, e3), e1));
        acc = acc.add(&self.pairing(&self.courant_bracket(e3, e1), e2));
        acc.scale(&sixth)
    }

    /// All frame sections (constant `g0` then constant `g0*`).
    pub fn frame(&self) -> Vec<CourantSection<R>> {
        let n0 = self.n0();
        (0..n0)
            .map(|i| CourantSection::basis_g0(n0, i))
            .chain((0..n0).map(|i| CourantSection::basis_g0star(n0, i)))
            .collect()
    }

    /// Courant axioms (1)-(5) on all constant-frame triples and on a
    /// generator set of linear-coefficient sections.
    pub fn verify(&self) -> AxiomReport<R> {
        let mut report = AxiomReport::new();
        let frame = self.frame();
        let n1 = self.n1();
        let name = |k: usize| -> String {
            if k < self.n0() {
                format!("x{}", k + 1)
            } else {
                format!("xi{}", k - self.n0() + 1)
            }
        };

        // (4) rho . D = 0, i.e. <D f, D g> = 0 on function generators
        let mut fun_gens: Vec<(String, GradedPoly<R>)> = vec![("1".into(), GradedPoly::one())];
        for k in 0..n1 {
            fun_gens.push((format!("a{}", k + 1), GradedPoly::even_gen(k)));
        }
        if n1 >= 2 {
            fun_gens.push((
                "a1*a2".into(),
                GradedPoly::even_gen(0).mul(&GradedPoly::even_gen(1)),
            ));
        }
        for (nf, f) in &fun_gens {
            for (ng, g) in &fun_gens {
                let val = self.pairing(&self.script_d(f), &self.script_d(g));
                report.record("courant.4", vec![nf.clone(), ng.clone()], poly_defect(&val));
            }
        }

        for (i, e1) in frame.iter().enumerate() {
            for (j, e2) in frame.iter().enumerate() {
                // (2) rho[[e1,e2]] = [rho e1, rho e2]
                let lhs = self.anchor(&self.courant_bracket(e1, e2));
                let rhs = self.anchor(e1).commutator(&self.anchor(e2));
                let mut defect = Vec::new();
                for k in 0..n1 {
                    defect.extend(poly_defect(&lhs.components[k].sub(&rhs.components[k])));
                }
                report.record("courant.2", vec![name(i), name(j)], defect);

                // (3) [[e1, f e2]] = f [[e1,e2]] + rho(e1)(f) e2 - (1/2)<e1,e2> D f
                for (nf, f) in fun_gens.iter() {
                    let lhs = self.courant_bracket(e1, &e2.scale_poly(f));
                    let mut rhs = self.courant_bracket(e1, e2).scale_poly(f);
                    rhs = rhs.add(&e2.scale_poly(&self.anchor(e1).apply(f)));
                    let mhalf = R::from_ratio(-1, 2);
                    let pair = self.pairing(e1, e2);
                    rhs = rhs.add(&self.script_d(f).scale_poly(&pair).scale(&mhalf));
                    report.record(
                        "courant.3",
                        vec![name(i), name(j), nf.clone()],
                        section_defect(&lhs.sub(&rhs)),
                    );
                }

                for (k, e3) in frame.iter().enumerate() {
                    // (1) sum_cyc [[[[e1,e2]],e3]] = D T(e1,e2,e3)
                    let mut lhs = self.courant_bracket(&self.courant_bracket(e1, e2), e3);
                    lhs = lhs.add(&self.courant_bracket(&self.courant_bracket(e2, e3), e1));
                    lhs = lhs.add(&self.courant_bracket(&self.courant_bracket(e3, e1), e2));
                    let rhs = self.script_d(&self.t_form(e1, e2, e3));
                    report.record(
                        "courant.1",
                        vec![name(i), name(j), name(k)],
                        section_defect(&lhs.sub(&rhs)),
                    );

                    // (5) rho(e1)<e2,e3> = <[[e1,e2]] + (1/2) D<e1,e2>, e3>
                    //                     + <e2, [[e1,e3]] + (1/2) D<e1,e3>>
                    let lhs5 = self.anchor(e1).apply(&self.pairing(e2, e3));
                    let half = R::from_ratio(1, 2);
                    let t1 = self
                        .courant_bracket(e1, e2)
                        .add(&self.script_d(&self.pairing(e1, e2)).scale(&half));
                    let t2 = self
                        .courant_bracket(e1, e3)
                        .add(&self.script_d(&self.pairing(e1, e3)).scale(&half));
                    let rhs5 = self.pairing(&t1, e3).add(&self.pairing(e2, &t2));
                    report.record(
                        "courant.5",
                        vec![name(i), name(j), name(k)],
                        poly_defect(&lhs5.sub(&rhs5)),
                    );
                }
            }
        }

        // axiom (1) spot checks with one linear-coefficient section
        if n1 >= 1 {
            let a0 = GradedPoly::even_gen(0);
            for (i, e1) in frame.iter().enumerate().take(3) {
                for (j, e2) in frame.iter().enumerate().take(3) {
                    let e3 = frame[(i + j) % frame.len()].scale_poly(&a0);
                    let mut lhs = self.courant_bracket(&self.courant_bracket(e1, e2), &e3);
                    lhs = lhs.add(&self.courant_bracket(&self.courant_bracket(e2, &e3), e1));
                    lhs = lhs.add(&self.courant_bracket(&self.courant_bracket(&e3, e1), e2));
                    let rhs = self.script_d(&self.t_form(e1, e2, &e3));
                    report.record(
                        "courant.1lin",
                        vec![
                            name(i),
                            name(j),
                            format!("a1*{}", name((i + j) % frame.len())),
                        ],
                        section_defect(&lhs.sub(&rhs)),
                    );
                }
            }
        }

        report.finish()
    }
}

fn poly_defect<R: Ring>(p: &GradedPoly<R>) -> Vec<R> {
    if p.is_zero() {
        Vec::new()
    } else {
        p.terms().map(|(_, c)| c.clone()).collect()
    }
}

fn section_defect<R: Ring>(s: &CourantSection<R>) -> Vec<R> {
    let mut out = Vec::new();
    for p in s.g0.iter().chain(s.g0star.iter()) {
        out.extend(poly_defect(p));
    }
    out
}

/// Build and verify the Courant structure of a verified Lie 2-algebra.
pub fn build_courant<R: Ring>(l: &Lie2Algebra<R>) -> Result<CourantData<R>> {
    let data = CourantData { algebra: l.clone() };
    let report = data.verify();
    if !report.passed() {
        return Err(Error::Internal(format!(
            "Courant axioms failed: {}",
            report.summary()
        )));
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lie::sl2;
    use crate::constructions::quadruple::string_killing;
    use crate::sample::{random_verified_algebra, rng_from_seed};
    use crate::scalar::Scalar;

    #[test]
    fn courant_axioms_for_string_sl2() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let c = build_courant(&l).unwrap();
        let f = c.frame();
        let n0 = 3;
        let xi = &f[n0];
        let eta = &f[n0 + 1];
        // table (iv): {xi, eta} = 0
        assert!(c.dorfman(xi, eta).is_zero());
        // {h, xi_e}: <{h, xi_e}, e> = -<xi_e, [h,e]> = -2
        let x_h = &f[2];
        let br = c.dorfman(x_h, xi);
        assert_eq!(br.g0star[0], GradedPoly::constant(Scalar::from_i64(-2)));
    }

    #[test]
    fn courant_axioms_for_random_algebras() {
        let mut rng = rng_from_seed(99);
        for _ in 0..2 {
            let l = random_verified_algebra(&mut rng, 2);
            build_courant(&l).unwrap();
        }
    }

    #[test]
    fn abelian_algebra_anchor() {
        let g0 = crate::exactlin::FinSpace::numbered("g0", "x", 2);
        let gm1 = crate::exactlin::FinSpace::numbered("gm1", "a", 1);
        let d = crate::exactlin::LinMap::from_fn(gm1.clone(), g0.clone(), |i, _| {
            Scalar::from_i64(if i == 0 { 1 } else { 0 })
        });
        let l = Lie2Algebra::abelian(g0, gm1, d).unwrap();
        let c = build_courant(&l).unwrap();
        let f = c.frame();
        // no brackets: anchors of g0-sections vanish, anchor of xi^1 is d*
        assert!(c.anchor(&f[0]).is_zero());
        let rho_xi = c.anchor(&f[2]);
        assert_eq!(rho_xi.components[0], GradedPoly::one());
    }
}
