//! Algebraic integration: the star monoid on `Hom(g0, g-1)`, the
//! automorphism 2-group `Aut(g)` as a group crossed module, strict 2-group
//! structure maps, and exact first-order differentiation over dual numbers.

use crate::derdef::Derivation0;
use crate::error::{Error, Result};
use crate::exactlin::mat::unit_vec;
use crate::exactlin::tensor::increasing_tuples;
use crate::exactlin::{LinMap, MultiTensor};
use crate::lie2core::hom::phi2_shape;
use crate::lie2core::{compose, invert, Hom2, Lie2Algebra};
use crate::ring::{Dual, Ring};
use rand::Rng;
use std::fmt::Debug;

/// An element of the star monoid: a linear map `g0 -> g-1`.
#[derive(Clone, Debug, PartialEq)]
pub struct StarElement<R> {
    pub tau: LinMap<R>,
}

/// A Lie 2-algebra automorphism: a verified homomorphism `g -> g` with
/// invertible chain maps.
#[derive(Clone, Debug, PartialEq)]
pub struct Aut0Element<R> {
    pub hom: Hom2<R>,
}

impl<R: Ring> Aut0Element<R> {
    pub fn new(hom: Hom2<R>) -> Result<Self> {
        if hom.source != hom.target {
            return Err(Error::shape("automorphisms are endomorphisms".to_string()));
        }
        let report = hom.verify();
        if !report.passed() {
            return Err(Error::math(format!("not a homomorphism: {}", report.summary())));
        }
        hom.phi0.inverse()?;
        hom.phi1.inverse()?;
        Ok(Aut0Element { hom })
    }

    pub fn identity(l: &Lie2Algebra<R>) -> Self {
        Aut0Element {
            hom: Hom2::identity(l),
        }
    }
}

/// Operations of `Aut(g)` over a fixed algebra.
#[derive(Clone, Debug)]
pub struct AutContext<R> {
    pub algebra: Lie2Algebra<R>,
}

impl<R: Ring> AutContext<R> {
    pub fn new(algebra: Lie2Algebra<R>) -> Self {
        AutContext { algebra }
    }

    pub fn zero_tau(&self) -> StarElement<R> {
        StarElement {
            tau: LinMap::zero(self.algebra.g0().clone(), self.algebra.gm1().clone()),
        }
    }

    /// `tau * tau' = tau + tau' + tau . d . tau'`.
    pub fn star(&self, t1: &StarElement<R>, t2: &StarElement<R>) -> StarElement<R> {
        let composite = t1
            .tau
            .compose(self.algebra.d())
            .expect("shape")
            .compose(&t2.tau)
            .expect("shape");
        StarElement {
            tau: t1.tau.add(&t2.tau).add(&composite),
        }
    }

    /// Unit test: `tau` is invertible iff `id + d . tau` is; returns the
    /// star-inverse when it exists.
    pub fn is_unit(&self, t: &StarElement<R>) -> Option<StarElement<R>> {
        let n1 = self.algebra.gm1().dim();
        let id1 = LinMap::identity(self.algebra.gm1().clone());
        // (id + tau d) sigma = -tau  <=>  sigma = -(id + tau d)^-1 tau
        let tau_d = t.tau.compose(self.algebra.d()).expect("shape");
        let m = id1.add(&LinMap::new(
            self.algebra.gm1().clone(),
            self.algebra.gm1().clone(),
            tau_d.mat().clone(),
        ).expect("shape"));
        let _ = n1;
        let inv = m.inverse().ok()?;
        let sigma = inv.compose(&t.tau).expect("shape").neg();
        Some(StarElement { tau: sigma })
    }

    /// `id + d . tau` as a map on `g0` (invertible iff `tau` is a unit).
    pub fn one_plus_d_tau(&self, t: &StarElement<R>) -> LinMap<R> {
        LinMap::identity(self.algebra.g0().clone())
            .add(&self.algebra.d().compose(&t.tau).expect("shape"))
    }

    /// `partial(tau) = (id + d tau, id + tau d, l_tau)` with
    /// `l_tau(x,y) = tau[x,y] - [x, tau y] - [tau x, y] - [tau x, d tau y]`.
    pub fn partial_map(&self, t: &StarElement<R>) -> Result<Aut0Element<R>> {
        if self.one_plus_d_tau(t).inverse().is_err() {
            return Err(Error::math("tau is not a unit of the star monoid".to_string()));
        }
        let l = &self.algebra;
        let n0 = l.g0().dim();
        let phi0 = self.one_plus_d_tau(t);
        let phi1 = LinMap::identity(l.gm1().clone())
            .add(&t.tau.compose(l.d()).expect("shape"));
        let mut phi2 = phi2_shape::<R>(l.g0(), l.gm1());
        for tu in increasing_tuples(n0, 2, true) {
            let ex = unit_vec::<R>(n0, tu[0]);
            let ey = unit_vec::<R>(n0, tu[1]);
            let tx = t.tau.apply(&ex);
            let ty = t.tau.apply(&ey);
            let mut val = t.tau.apply(&l.bracket00(&ex, &ey));
            val = crate::exactlin::mat::vec_sub(&val, &l.bracket01(&ex, &ty));
            // [tau x, y] = -[y, tau x]
            val = crate::exactlin::mat::vec_add(&val, &l.bracket01(&ey, &tx));
            // [tau x, d tau y] uses the g-1 x g-1 pairing through d:
            // [a, b'] with a = tau x in degree -1 and d tau y in degree 0:
            // [tau x, d tau y] = -[d tau y, tau x]
            let dty = l.d().apply(&ty);
            val = crate::exactlin::mat::vec_add(&val, &l.bracket01(&dty, &tx));
            phi2.set_entry(&tu, val)?;
        }
        let hom = Hom2::verified(l.clone(), l.clone(), phi0, phi1, phi2)
            .map_err(|e| Error::Internal(format!("partial(tau) is not a homomorphism: {e}")))?;
        Aut0Element::new(hom)
    }

    /// `A . tau = A1 . tau . A0^-1`.
    pub fn act(&self, a: &Aut0Element<R>, t: &StarElement<R>) -> Result<StarElement<R>> {
        let inv0 = a.hom.phi0.inverse()?;
        Ok(StarElement {
            tau: a.hom.phi1.compose(&t.tau)?.compose(&inv0)?,
        })
    }
}

/// Group crossed module interface, verified element-wise on samples.
pub trait GroupCrossedModuleOps {
    type H: Clone + PartialEq + Debug;
    type G: Clone + PartialEq + Debug;

    fn h_mul(&self, a: &Self::H, b: &Self::H) -> Self::H;
    fn h_inv(&self, a: &Self::H) -> Self::H;
    fn h_unit(&self) -> Self::H;
    fn g_mul(&self, a: &Self::G, b: &Self::G) -> Self::G;
    fn g_inv(&self, a: &Self::G) -> Self::G;
    fn g_unit(&self) -> Self::G;
    fn phi(&self, h: &Self::H) -> Self::G;
    fn act(&self, g: &Self::G, h: &Self::H) -> Self::H;
}

/// `Aut(g)` as a group crossed module: `H` the star unit group, `G` the
/// automorphism group, `Phi = partial`, action by conjugation.
pub struct AutCrossedModule<R> {
    pub ctx: AutContext<R>,
}

impl<R: Ring> GroupCrossedModuleOps for AutCrossedModule<R> {
    type H = StarElement<R>;
    type G = Aut0Element<R>;

    fn h_mul(&self, a: &StarElement<R>, b: &StarElement<R>) -> StarElement<R> {
        self.ctx.star(a, b)
    }

    fn h_inv(&self, a: &StarElement<R>) -> StarElement<R> {
        self.ctx.is_unit(a).expect("sampled elements are units")
    }

    fn h_unit(&self) -> StarElement<R> {
        self.ctx.zero_tau()
    }

    fn g_mul(&self, a: &Aut0Element<R>, b: &Aut0Element<R>) -> Aut0Element<R> {
        Aut0Element {
            hom: compose(&a.hom, &b.hom).expect("same algebra"),
        }
    }

    fn g_inv(&self, a: &Aut0Element<R>) -> Aut0Element<R> {
        Aut0Element {
            hom: invert(&a.hom).expect("automorphism"),
        }
    }

    fn g_unit(&self) -> Aut0Element<R> {
        Aut0Element::identity(&self.ctx.algebra)
    }

    fn phi(&self, h: &StarElement<R>) -> Aut0Element<R> {
        self.ctx.partial_map(h).expect("unit tau")
    }

    fn act(&self, g: &Aut0Element<R>, h: &StarElement<R>) -> StarElement<R> {
        self.ctx.act(g, h).expect("automorphism")
    }
}

/// A cell `(h, g)` of the strict 2-group `H x| G`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cell<H, G> {
    pub h: H,
    pub g: G,
}

/// Strict 2-group operations over a group crossed module.
pub struct TwoGroup<'a, T: GroupCrossedModuleOps> {
    pub cm: &'a T,
}

impl<'a, T: GroupCrossedModuleOps> TwoGroup<'a, T> {
    pub fn new(cm: &'a T) -> Self {
        TwoGroup { cm }
    }

    pub fn source(&self, c: &Cell<T::H, T::G>) -> T::G {
        c.g.clone()
    }

    pub fn target(&self, c: &Cell<T::H, T::G>) -> T::G {
        self.cm.g_mul(&self.cm.phi(&c.h), &c.g)
    }

    /// `iota(g) = (e, g)`.
    pub fn unit(&self, g: &T::G) -> Cell<T::H, T::G> {
        Cell {
            h: self.cm.h_unit(),
            g: g.clone(),
        }
    }

    /// Group product `(h1, g1) * (h2, g2) = (h1 (g1 . h2), g1 g2)`.
    pub fn gp_mul(&self, a: &Cell<T::H, T::G>, b: &Cell<T::H, T::G>) -> Cell<T::H, T::G> {
        Cell {
            h: self.cm.h_mul(&a.h, &self.cm.act(&a.g, &b.h)),
            g: self.cm.g_mul(&a.g, &b.g),
        }
    }

    pub fn gp_inv(&self, a: &Cell<T::H, T::G>) -> Cell<T::H, T::G> {
        let ginv = self.cm.g_inv(&a.g);
        Cell {
            h: self.cm.act(&ginv, &self.cm.h_inv(&a.h)),
            g: ginv,
        }
    }

    pub fn composable(&self, a: &Cell<T::H, T::G>, b: &Cell<T::H, T::G>) -> bool {
        self.source(a) == self.target(b)
    }

    /// Groupoid multiplication `(h1, g1)(h2, g2) = (h1 h2, g2)` when
    /// `g1 = Phi(h2) g2`.
    pub fn gpd_compose(
        &self,
        a: &Cell<T::H, T::G>,
        b: &Cell<T::H, T::G>,
    ) -> Result<Cell<T::H, T::G>> {
        if !self.composable(a, b) {
            return Err(Error::math("cells are not composable".to_string()));
        }
        Ok(Cell {
            h: self.cm.h_mul(&a.h, &b.h),
            g: b.g.clone(),
        })
    }
}

/// Sample a unit of the star monoid (retries until `id + d tau` inverts).
pub fn sample_unit_tau<RNG: Rng>(
    ctx: &AutContext<crate::scalar::Scalar>,
    rng: &mut RNG,
) -> StarElement<crate::scalar::Scalar> {
    let n0 = ctx.algebra.g0().dim();
    let n1 = ctx.algebra.gm1().dim();
    loop {
        let tau = LinMap::new(
            ctx.algebra.g0().clone(),
            ctx.algebra.gm1().clone(),
            crate::sample::random_matrix(rng, n1, n0, 2),
        )
        .expect("shape");
        let t = StarElement { tau };
        if ctx.is_unit(&t).is_some() {
            return t;
        }
    }
}

/// Sample an automorphism: a product of `partial`-images of random units and
/// optional extra generators supplied by the caller.
pub fn sample_aut0<RNG: Rng>(
    ctx: &AutContext<crate::scalar::Scalar>,
    rng: &mut RNG,
    extra: &[Aut0Element<crate::scalar::Scalar>],
) -> Aut0Element<crate::scalar::Scalar> {
    let mut acc = Aut0Element::identity(&ctx.algebra);
    let cm = AutCrossedModule { ctx: ctx.clone() };
    let factors = rng.gen_range(0..=2usize);
    for _ in 0..factors {
        let t = sample_unit_tau(ctx, rng);
        acc = cm.g_mul(&acc, &cm.phi(&t));
    }
    if !extra.is_empty() && rng.gen_bool(0.5) {
        let pick = rng.gen_range(0..extra.len());
        acc = cm.g_mul(&acc, &extra[pick]);
    }
    acc
}

/// Known automorphisms beyond the `partial` image, per algebra shape:
/// exponentials of nilpotent inner derivations (always automorphisms when
/// they terminate, which is checked).
pub fn nilpotent_exponentials(l: &Lie2Algebra<crate::scalar::Scalar>) -> Vec<Aut0Element<crate::scalar::Scalar>> {
    use crate::scalar::Scalar;
    let n0 = l.g0().dim();
    let n1 = l.gm1().dim();
    let mut out = Vec::new();
    for i in 0..n0 {
        let x = unit_vec::<Scalar>(n0, i);
        // ad_x on both layers
        let a0 = crate::exactlin::Mat::from_cols(
            (0..n0).map(|j| l.bracket00(&x, &unit_vec(n0, j))).collect(),
            n0,
        );
        let a1 = crate::exactlin::Mat::from_cols(
            (0..n1).map(|a| l.bracket01(&x, &unit_vec(n1, a))).collect(),
            n1,
        );
        // nilpotency check: a0^n = 0
        let mut p0 = crate::exactlin::Mat::identity(n0);
        let mut nilpotent = false;
        for _ in 0..=n0 {
            p0 = p0.mul(&a0);
            if p0.is_zero() {
                nilpotent = true;
                break;
            }
        }
        if !nilpotent {
            continue;
        }
        // exp(ad_x) as a finite sum
        let expm = |m: &crate::exactlin::Mat<Scalar>, dim: usize| {
            let mut acc = crate::exactlin::Mat::identity(dim);
            let mut term = crate::exactlin::Mat::identity(dim);
            let mut k = 1i64;
            loop {
                term = term.mul(m).scale(&Scalar::from_ratio(1, k));
                if term.is_zero() {
                    break;
                }
                acc = acc.add(&term);
                k += 1;
                if k > (dim as i64 + 2) {
                    break;
                }
            }
            acc
        };
        let phi0 = LinMap::new(l.g0().clone(), l.g0().clone(), expm(&a0, n0)).expect("shape");
        let phi1 = LinMap::new(l.gm1().clone(), l.gm1().clone(), expm(&a1, n1)).expect("shape");
        let hom = Hom2::new(
            l.clone(),
            l.clone(),
            phi0,
            phi1,
            phi2_shape(l.g0(), l.gm1()),
        )
        .expect("shape");
        if hom.verify().passed() {
            if let Ok(a) = Aut0Element::new(hom) {
                out.push(a);
            }
        }
    }
    out
}

/// Exact differentiation checks over dual numbers. Returns an error naming
/// the first law that fails.
pub fn differentiation_checks(
    l: &Lie2Algebra<crate::scalar::Scalar>,
    rng: &mut impl Rng,
    samples: usize,
) -> Result<()> {
    use crate::scalar::Scalar;
    type D = Dual<Scalar>;
    type DD = Dual<Dual<Scalar>>;
    let n0 = l.g0().dim();
    let n1 = l.gm1().dim();
    let ld: Lie2Algebra<D> = l.map_ring(|x| Dual::constant(x.clone()));
    let ctx_d = AutContext::new(ld.clone());
    let der_space = crate::derdef::derivation_space(l);

    // 1. partial(eps Theta) = Id + eps dbar(Theta)
    let der_alg = crate::derdef::build_der(l)?;
    for _ in 0..samples {
        let theta = LinMap::new(
            l.g0().clone(),
            l.gm1().clone(),
            crate::sample::random_matrix(rng, n1, n0, 2),
        )?;
        let tau_eps = StarElement {
            tau: theta.map_ring(|x| D::infinitesimal(x.clone())),
        };
        let p = ctx_d.partial_map(&tau_eps)?;
        let dbar = der_alg.dbar(&theta);
        let want0 = LinMap::identity(l.g0().clone())
            .map_ring(|x: &Scalar| D::constant(x.clone()))
            .add(&dbar.x0.map_ring(|x| D::infinitesimal(x.clone())));
        let want1 = LinMap::identity(l.gm1().clone())
            .map_ring(|x: &Scalar| D::constant(x.clone()))
            .add(&dbar.x1.map_ring(|x| D::infinitesimal(x.clone())));
        let want2 = dbar.lx.map_ring(|x| D::infinitesimal(x.clone()));
        if p.hom.phi0 != want0 || p.hom.phi1 != want1 || p.hom.phi2 != want2 {
            return Err(Error::math(
                "partial(eps Theta) does not differentiate to dbar(Theta)".to_string(),
            ));
        }
    }

    // 2. Id + eps (X, lX) is a homomorphism iff (X, lX) is a derivation
    for _ in 0..samples {
        let c = crate::sample::random_cochain(rng, &der_space.rep, 1, 2);
        let der = Derivation0::from_cochain(l, &c);
        let is_derivation = der_space.coords(&der).is_some();
        let phi0 = LinMap::identity(l.g0().clone())
            .map_ring(|x: &Scalar| D::constant(x.clone()))
            .add(&der.x0.map_ring(|x| D::infinitesimal(x.clone())));
        let phi1 = LinMap::identity(l.gm1().clone())
            .map_ring(|x: &Scalar| D::constant(x.clone()))
            .add(&der.x1.map_ring(|x| D::infinitesimal(x.clone())));
        let phi2: MultiTensor<D> = der.lx.map_ring(|x| D::infinitesimal(x.clone()));
        let hom = Hom2::new(ld.clone(), ld.clone(), phi0, phi1, phi2)?;
        if hom.verify().passed() != is_derivation {
            return Err(Error::math(
                "first-order homomorphism law disagrees with the derivation conditions"
                    .to_string(),
            ));
        }
    }

    // 3. conjugation action differentiates to the mixed Der bracket
    for _ in 0..samples {
        if der_space.derivations.is_empty() {
            break;
        }
        let pick = rng.gen_range(0..der_space.derivations.len());
        let der = &der_space.derivations[pick];
        let a = Aut0Element::new(Hom2::new(
            ld.clone(),
            ld.clone(),
            LinMap::identity(l.g0().clone())
                .map_ring(|x: &Scalar| D::constant(x.clone()))
                .add(&der.x0.map_ring(|x| D::infinitesimal(x.clone()))),
            LinMap::identity(l.gm1().clone())
                .map_ring(|x: &Scalar| D::constant(x.clone()))
                .add(&der.x1.map_ring(|x| D::infinitesimal(x.clone()))),
            der.lx.map_ring(|x| D::infinitesimal(x.clone())),
        )?)?;
        let theta = LinMap::new(
            l.g0().clone(),
            l.gm1().clone(),
            crate::sample::random_matrix(rng, n1, n0, 2),
        )?;
        let t = StarElement {
            tau: theta.map_ring(|x| D::constant(x.clone())),
        };
        let moved = ctx_d.act(&a, &t)?;
        // expected: tau + eps (X1 tau - tau X0)
        let bracket = der
            .x1
            .compose(&theta)?
            .sub(&theta.compose(&der.x0)?);
        let want = theta
            .map_ring(|x| D::constant(x.clone()))
            .add(&bracket.map_ring(|x| D::infinitesimal(x.clone())));
        if moved.tau != want {
            return Err(Error::math(
                "conjugation does not differentiate to the Der bracket on Hom(g0,g-1)"
                    .to_string(),
            ));
        }
    }

    // 4. group commutator over nested duals reproduces the Der0 bracket
    let ldd: Lie2Algebra<DD> = l.map_ring(|x| Dual::constant(Dual::constant(x.clone())));
    let lam = |x: &Scalar| -> DD { Dual::infinitesimal(Dual::constant(x.clone())) };
    let mu = |x: &Scalar| -> DD { Dual::constant(Dual::infinitesimal(x.clone())) };
    let lam_mu = |x: &Scalar| -> DD { Dual::infinitesimal(Dual::infinitesimal(x.clone())) };
    for _ in 0..samples.min(8) {
        if der_space.derivations.len() < 2 {
            break;
        }
        let i = rng.gen_range(0..der_space.derivations.len());
        let j = rng.gen_range(0..der_space.derivations.len());
        let dx = &der_space.derivations[i];
        let dy = &der_space.derivations[j];
        let curve = |d: &Derivation0<Scalar>, inj: &dyn Fn(&Scalar) -> DD| -> Result<Hom2<DD>> {
            Hom2::new(
                ldd.clone(),
                ldd.clone(),
                LinMap::identity(l.g0().clone())
                    .map_ring(|x: &Scalar| DD::from_i64(0).add(&Dual::constant(Dual::constant(x.clone()))))
                    .add(&d.x0.map_ring(|x| inj(x))),
                LinMap::identity(l.gm1().clone())
                    .map_ring(|x: &Scalar| Dual::constant(Dual::constant(x.clone())))
                    .add(&d.x1.map_ring(|x| inj(x))),
                d.lx.map_ring(|x| inj(x)),
            )
        };
        let a = curve(dx, &lam)?;
        let b = curve(dy, &mu)?;
        let comm = compose(&compose(&compose(&a, &b)?, &invert(&a)?)?, &invert(&b)?)?;
        let br = dx.bracket(dy);
        let want0 = LinMap::identity(l.g0().clone())
            .map_ring(|x: &Scalar| Dual::constant(Dual::constant(x.clone())))
            .add(&br.x0.map_ring(|x| lam_mu(x)));
        let want1 = LinMap::identity(l.gm1().clone())
            .map_ring(|x: &Scalar| Dual::constant(Dual::constant(x.clone())))
            .add(&br.x1.map_ring(|x| lam_mu(x)));
        let want2 = br.lx.map_ring(|x| lam_mu(x));
        if comm.phi0 != want0 || comm.phi1 != want1 || comm.phi2 != want2 {
            return Err(Error::math(
                "group commutator does not reproduce the Der0 bracket".to_string(),
            ));
        }
    }

    Ok(())
}
