//! Representations of Lie 2-algebras and their cohomology.
//!
//! A cochain of degree `k` is a family of multilinear maps
//! `wedge^p g0 (x) sym^q g-1 -> V_s` over the admissible `(p, q, s)` with
//! `p + 2q + s = k`, `s` in `{0, -1}`. The coboundary splits into six
//! components; each is implemented exactly as displayed, and the master
//! consistency test is `D . D = 0`.

use crate::constructions::complex2::{gl_of_complex, TwoComplex};
use crate::error::{Error, Result};
use crate::exactlin::mat::{unit_vec, vec_add, vec_is_zero, vec_neg, Mat, Vector};
use crate::exactlin::tensor::increasing_tuples;
use crate::exactlin::{FinSpace, LinMap, MultiTensor, Symmetry};
use crate::lie2core::hom::phi2_shape;
use crate::lie2core::{AxiomReport, Hom2, Lie2Algebra};
use crate::ring::{Field, Ring};
use std::collections::BTreeMap;

/// Highest degree at which cochains are materialized by default; `D . D = 0`
/// is then testable through degree `K_MAX_DEFAULT - 1`.
pub const K_MAX_DEFAULT: i64 = 4;

/// A representation of a Lie 2-algebra on a 2-term complex, stored as the
/// four action tensors.
#[derive(Clone, Debug)]
pub struct Rep2<R> {
    pub algebra: Lie2Algebra<R>,
    pub complex: TwoComplex<R>,
    /// `g0 (x) V0 -> V0`
    pub act_x_v0: MultiTensor<R>,
    /// `g0 (x) V-1 -> V-1`
    pub act_x_vm1: MultiTensor<R>,
    /// `g-1 (x) V0 -> V-1`
    pub act_a_v0: MultiTensor<R>,
    /// `wedge^2 g0 (x) V0 -> V-1`
    pub act2: MultiTensor<R>,
}

impl<R: Ring> Rep2<R> {
    pub fn new(
        algebra: Lie2Algebra<R>,
        complex: TwoComplex<R>,
        act_x_v0: MultiTensor<R>,
        act_x_vm1: MultiTensor<R>,
        act_a_v0: MultiTensor<R>,
        act2: MultiTensor<R>,
    ) -> Result<Self> {
        let g0 = algebra.g0().clone();
        let gm1 = algebra.gm1().clone();
        let checks = [
            (
                &act_x_v0,
                vec![(g0.clone(), Symmetry::Plain), (complex.v0.clone(), Symmetry::Plain)],
                &complex.v0,
            ),
            (
                &act_x_vm1,
                vec![(g0.clone(), Symmetry::Plain), (complex.vm1.clone(), Symmetry::Plain)],
                &complex.vm1,
            ),
            (
                &act_a_v0,
                vec![(gm1.clone(), Symmetry::Plain), (complex.v0.clone(), Symmetry::Plain)],
                &complex.vm1,
            ),
            (
                &act2,
                vec![
                    (g0.clone(), Symmetry::Alt),
                    (g0.clone(), Symmetry::Alt),
                    (complex.v0.clone(), Symmetry::Plain),
                ],
                &complex.vm1,
            ),
        ];
        for (t, want_in, want_out) in checks {
            if t.inputs() != want_in.as_slice() || !t.output().compatible(want_out) {
                return Err(Error::shape("representation tensor has wrong signature".to_string()));
            }
        }
        Ok(Rep2 {
            algebra,
            complex,
            act_x_v0,
            act_x_vm1,
            act_a_v0,
            act2,
        })
    }

    /// Trivial representation on a complex.
    pub fn trivial(algebra: Lie2Algebra<R>, complex: TwoComplex<R>) -> Self {
        let g0 = algebra.g0().clone();
        let gm1 = algebra.gm1().clone();
        Rep2 {
            act_x_v0: MultiTensor::new(
                vec![(g0.clone(), Symmetry::Plain), (complex.v0.clone(), Symmetry::Plain)],
                complex.v0.clone(),
            ),
            act_x_vm1: MultiTensor::new(
                vec![(g0.clone(), Symmetry::Plain), (complex.vm1.clone(), Symmetry::Plain)],
                complex.vm1.clone(),
            ),
            act_a_v0: MultiTensor::new(
                vec![(gm1.clone(), Symmetry::Plain), (complex.v0.clone(), Symmetry::Plain)],
                complex.vm1.clone(),
            ),
            act2: MultiTensor::new(
                vec![
                    (g0.clone(), Symmetry::Alt),
                    (g0.clone(), Symmetry::Alt),
                    (complex.v0.clone(), Symmetry::Plain),
                ],
                complex.vm1.clone(),
            ),
            algebra,
            complex,
        }
    }

    pub fn v0(&self) -> &FinSpace {
        &self.complex.v0
    }

    pub fn vm1(&self) -> &FinSpace {
        &self.complex.vm1
    }

    pub fn space(&self, s: i8) -> &FinSpace {
        if s == 0 {
            self.v0()
        } else {
            self.vm1()
        }
    }

    /// `x . u` for `u` in V0.
    pub fn act0_v0(&self, x: &[R], u: &[R]) -> Vector<R> {
        self.act_x_v0.eval(&[x, u])
    }

    /// `x . m` for `m` in V-1.
    pub fn act0_vm1(&self, x: &[R], m: &[R]) -> Vector<R> {
        self.act_x_vm1.eval(&[x, m])
    }

    /// `a . u` (degree -1 on V0, landing in V-1).
    pub fn act1(&self, a: &[R], u: &[R]) -> Vector<R> {
        self.act_a_v0.eval(&[a, u])
    }

    /// `(x, y) . u`.
    pub fn act2_eval(&self, x: &[R], y: &[R], u: &[R]) -> Vector<R> {
        self.act2.eval(&[x, y, u])
    }

    /// Act on a value in `V_s` by a degree-0 element.
    fn act0_vs(&self, s: i8, x: &[R], v: &[R]) -> Vector<R> {
        if s == 0 {
            self.act0_v0(x, v)
        } else {
            self.act0_vm1(x, v)
        }
    }
}

impl<R: Field> Rep2<R> {
    /// Package the action tensors as a homomorphism into `gl(V)` and verify.
    pub fn verify(&self) -> Result<Hom2<R>> {
        let gl = gl_of_complex(&self.complex)?;
        let n0 = self.algebra.g0().dim();
        let n1 = self.algebra.gm1().dim();
        let mut phi0_cols: Vec<Vector<R>> = Vec::new();
        for i in 0..n0 {
            let x = unit_vec::<R>(n0, i);
            let a0 = Mat::from_cols(
                (0..self.v0().dim())
                    .map(|u| self.act0_v0(&x, &unit_vec(self.v0().dim(), u)))
                    .collect(),
                self.v0().dim(),
            );
            let a1 = Mat::from_cols(
                (0..self.vm1().dim())
                    .map(|m| self.act0_vm1(&x, &unit_vec(self.vm1().dim(), m)))
                    .collect(),
                self.vm1().dim(),
            );
            let coords = gl.gl0_coords(&a0, &a1).ok_or_else(|| {
                Error::math(format!(
                    "action of {} is not a chain map",
                    self.algebra.g0().label(i)
                ))
            })?;
            phi0_cols.push(coords);
        }
        let phi0 = LinMap::from_images(self.algebra.g0().clone(), gl.algebra.g0().clone(), phi0_cols)?;
        let mut phi1_cols: Vec<Vector<R>> = Vec::new();
        for a in 0..n1 {
            let av = unit_vec::<R>(n1, a);
            let dmat = Mat::from_cols(
                (0..self.v0().dim())
                    .map(|u| self.act1(&av, &unit_vec(self.v0().dim(), u)))
                    .collect(),
                self.vm1().dim(),
            );
            phi1_cols.push(gl.glm1_coords(&dmat));
        }
        let phi1 = LinMap::from_images(self.algebra.gm1().clone(), gl.algebra.gm1().clone(), phi1_cols)?;
        let mut phi2 = phi2_shape::<R>(self.algebra.g0(), gl.algebra.gm1());
        for t in increasing_tuples(n0, 2, true) {
            let x = unit_vec::<R>(n0, t[0]);
            let y = unit_vec::<R>(n0, t[1]);
            let dmat = Mat::from_cols(
                (0..self.v0().dim())
                    .map(|u| self.act2_eval(&x, &y, &unit_vec(self.v0().dim(), u)))
                    .collect(),
                self.vm1().dim(),
            );
            phi2.set_entry(&t, gl.glm1_coords(&dmat))?;
        }
        Hom2::verified(self.algebra.clone(), gl.algebra.clone(), phi0, phi1, phi2)
            .map_err(|e| Error::math(format!("not a representation: {e}")))
    }
}

/// The adjoint representation `ad = (ad0, ad1, ad2)` with
/// `ad2(x,y) = -l3(x,y, .)`.
pub fn adjoint_rep<R: Ring>(l: &Lie2Algebra<R>) -> Rep2<R> {
    let g0 = l.g0().clone();
    let gm1 = l.gm1().clone();
    let complex = TwoComplex {
        v0: g0.clone(),
        vm1: gm1.clone(),
        partial: l.d().clone(),
    };
    let mut act_x_v0 = MultiTensor::new(
        vec![(g0.clone(), Symmetry::Plain), (g0.clone(), Symmetry::Plain)],
        g0.clone(),
    );
    for i in 0..g0.dim() {
        for j in 0..g0.dim() {
            act_x_v0
                .set_entry(&[i, j], l.l2_00().eval_basis(&[i, j]))
                .expect("plain");
        }
    }
    let mut act_x_vm1 = MultiTensor::new(
        vec![(g0.clone(), Symmetry::Plain), (gm1.clone(), Symmetry::Plain)],
        gm1.clone(),
    );
    for i in 0..g0.dim() {
        for a in 0..gm1.dim() {
            act_x_vm1
                .set_entry(&[i, a], l.l2_01().eval_basis(&[i, a]))
                .expect("plain");
        }
    }
    let mut act_a_v0 = MultiTensor::new(
        vec![(gm1.clone(), Symmetry::Plain), (g0.clone(), Symmetry::Plain)],
        gm1.clone(),
    );
    for a in 0..gm1.dim() {
        for j in 0..g0.dim() {
            // a . x = [a, x] = -[x, a]
            let val = vec_neg(&l.l2_01().eval_basis(&[j, a]));
            act_a_v0.set_entry(&[a, j], val).expect("plain");
        }
    }
    let mut act2 = MultiTensor::new(
        vec![
            (g0.clone(), Symmetry::Alt),
            (g0.clone(), Symmetry::Alt),
            (g0.clone(), Symmetry::Plain),
        ],
        gm1.clone(),
    );
    for t in increasing_tuples(g0.dim(), 2, true) {
        for k in 0..g0.dim() {
            let val = vec_neg(&l.l3().eval_basis(&[t[0], t[1], k]));
            act2.set_entry(&[t[0], t[1], k], val).expect("tuple");
        }
    }
    Rep2 {
        algebra: l.clone(),
        complex,
        act_x_v0,
        act_x_vm1,
        act_a_v0,
        act2,
    }
}

/// Component key `(p, q, s)`, `s` in `{0, -1}`. Ordered maps keep flattening
/// deterministic.
pub type CompKey = (usize, usize, i8);

/// A cochain: all admissible components of one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<R> {
    pub degree: i64,
    components: BTreeMap<CompKey, MultiTensor<R>>,
}

/// Admissible `(p, q, s)` triples of a degree.
pub fn admissible(degree: i64) -> Vec<CompKey> {
    let mut out = Vec::new();
    for s in [0i8, -1] {
        let rest = degree - s as i64;
        if rest < 0 {
            continue;
        }
        for q in 0..=(rest / 2) {
            let p = rest - 2 * q;
            out.push((p as usize, q as usize, s));
        }
    }
    out.sort();
    out
}

pub fn component_shape<R: Ring>(rep: &Rep2<R>, key: CompKey) -> MultiTensor<R> {
    let (p, q, s) = key;
    let mut inputs = Vec::with_capacity(p + q);
    for _ in 0..p {
        inputs.push((rep.algebra.g0().clone(), Symmetry::Alt));
    }
    for _ in 0..q {
        inputs.push((rep.algebra.gm1().clone(), Symmetry::Sym));
    }
    MultiTensor::new(inputs, rep.space(s).clone())
}

impl<R: Ring> Cochain<R> {
    pub fn zero(degree: i64) -> Self {
        Cochain {
            degree,
            components: BTreeMap::new(),
        }
    }

    pub fn component(&self, key: CompKey) -> Option<&MultiTensor<R>> {
        self.components.get(&key)
    }

    pub fn set_component(&mut self, key: CompKey, t: MultiTensor<R>) -> Result<()> {
        let (p, q, s) = key;
        if p as i64 + 2 * q as i64 + s as i64 != self.degree {
            return Err(Error::shape(format!(
                "component ({p},{q},{s}) is not admissible in degree {}",
                self.degree
            )));
        }
        if t.is_zero() {
            self.components.remove(&key);
        } else {
            self.components.insert(key, t);
        }
        Ok(())
    }

    pub fn add_component(&mut self, key: CompKey, t: MultiTensor<R>) -> Result<()> {
        match self.components.get(&key) {
            None => self.set_component(key, t),
            Some(old) => {
                let sum = old.add(&t);
                self.set_component(key, sum)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(|t| t.is_zero())
    }

    pub fn components(&self) -> impl Iterator<Item = (&CompKey, &MultiTensor<R>)> {
        self.components.iter()
    }

    pub fn add(&self, rhs: &Cochain<R>) -> Cochain<R> {
        assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (k, t) in rhs.components.iter() {
            out.add_component(*k, t.clone()).expect("same degree");
        }
        out
    }

    pub fn scale(&self, c: &R) -> Cochain<R> {
        let mut out = Cochain::zero(self.degree);
        for (k, t) in self.components.iter() {
            out.set_component(*k, t.scale(c)).expect("same degree");
        }
        out
    }

    pub fn sub(&self, rhs: &Cochain<R>) -> Cochain<R> {
        self.add(&rhs.scale(&R::one().neg()))
    }
}

/// Total coordinate dimension of `C^k`.
pub fn cochain_dim<R: Ring>(rep: &Rep2<R>, degree: i64) -> usize {
    admissible(degree)
        .into_iter()
        .map(|key| component_shape(rep, key).canonical_tuples().len() * rep.space(key.2).dim())
        .sum()
}

pub fn flatten<R: Ring>(rep: &Rep2<R>, c: &Cochain<R>) -> Vector<R> {
    let mut out = Vec::new();
    for key in admissible(c.degree) {
        let shape = component_shape(rep, key);
        let vdim = rep.space(key.2).dim();
        match c.component(key) {
            Some(t) => {
                for tuple in shape.canonical_tuples() {
                    out.extend(t.eval_basis(&tuple));
                }
            }
            None => {
                out.extend(vec![R::zero(); shape.canonical_tuples().len() * vdim]);
            }
        }
    }
    out
}

pub fn unflatten<R: Ring>(rep: &Rep2<R>, degree: i64, coords: &[R]) -> Cochain<R> {
    let mut c = Cochain::zero(degree);
    let mut pos = 0;
    for key in admissible(degree) {
        let mut t = component_shape(rep, key);
        let vdim = rep.space(key.2).dim();
        for tuple in t.canonical_tuples() {
            t.set_entry(&tuple, coords[pos..pos + vdim].to_vec()).expect("canonical");
            pos += vdim;
        }
        c.set_component(key, t).expect("admissible");
    }
    assert_eq!(pos, coords.len(), "coordinate length mismatch");
    c
}

/// The six-component coboundary `D`.
pub fn coboundary<R: Ring>(rep: &Rep2<R>, c: &Cochain<R>) -> Cochain<R> {
    let mut out = Cochain::zero(c.degree + 1);
    for (&key, f) in c.components.iter() {
        for (target, image) in coboundary_of_component(rep, key, f) {
            out.add_component(target, image).expect("admissible image");
        }
    }
    out
}

/// All six differential components applied to one `(p,q,s)` tensor.
fn coboundary_of_component<R: Ring>(
    rep: &Rep2<R>,
    key: CompKey,
    f: &MultiTensor<R>,
) -> Vec<(CompKey, MultiTensor<R>)> {
    let (p, q, s) = key;
    let n0 = rep.algebra.g0().dim();
    let n1 = rep.algebra.gm1().dim();
    let l = &rep.algebra;
    let mut out = Vec::new();

    let sign_p = |v: Vector<R>| if p % 2 == 1 { vec_neg(&v) } else { v };

    // hat-d : (p,q,s) -> (p-1, q+1, s)
    if p >= 1 {
        let tkey = (p - 1, q + 1, s);
        let mut t = component_shape(rep, tkey);
        for tuple in t.canonical_tuples() {
            let (xs, aas) = tuple.split_at(p - 1);
            let mut val: Vector<R> = crate::exactlin::mat::zero_vec(rep.space(s).dim());
            for i in 0..q + 1 {
                // f(x_1..x_{p-1}, d a_i, other a's)
                let mut args: Vec<Vector<R>> = xs.iter().map(|&j| unit_vec(n0, j)).collect();
                args.push(l.d().apply_basis(aas[i]));
                for (t2, &a) in aas.iter().enumerate() {
                    if t2 != i {
                        args.push(unit_vec(n1, a));
                    }
                }
                let refs: Vec<&[R]> = args.iter().map(|v| v.as_slice()).collect();
                val = vec_add(&val, &f.eval(&refs));
            }
            t.set_entry(&tuple, sign_p(val)).expect("canonical");
        }
        if !t.is_zero() {
            out.push((tkey, t));
        }
    }

    // hat-partial : (p,q,-1) -> (p,q,0), sign (-1)^{p+2q}
    if s == -1 {
        let tkey = (p, q, 0);
        let mut t = component_shape(rep, tkey);
        for tuple in t.canonical_tuples() {
            let val = rep.complex.partial.apply(&f.eval_basis(&tuple));
            t.set_entry(&tuple, sign_p(val)).expect("canonical");
        }
        if !t.is_zero() {
            out.push((tkey, t));
        }
    }

    // d_phi^{(1,0)} : (p,q,s) -> (p+1,q,s)
    {
        let tkey = (p + 1, q, s);
        let mut t = component_shape(rep, tkey);
        for tuple in t.canonical_tuples() {
            let (xs, aas) = tuple.split_at(p + 1);
            let mut val: Vector<R> = crate::exactlin::mat::zero_vec(rep.space(s).dim());
            // sum_i (-1)^{i+1} x_i . f(..^x_i.., a's)   (1-based i)
            for i in 0..p + 1 {
                let mut args: Vec<Vector<R>> = Vec::with_capacity(p + q);
                for (t2, &j) in xs.iter().enumerate() {
                    if t2 != i {
                        args.push(unit_vec(n0, j));
                    }
                }
                for &a in aas {
                    args.push(unit_vec(n1, a));
                }
                let refs: Vec<&[R]> = args.iter().map(|v| v.as_slice()).collect();
                let inner = f.eval(&refs);
                if vec_is_zero(&inner) {
                    continue;
                }
                let term = rep.act0_vs(s, &unit_vec(n0, xs[i]), &inner);
                val = if i % 2 == 0 {
                    vec_add(&val, &term)
                } else {
                    crate::exactlin::mat::vec_sub(&val, &term)
                };
            }
            // sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..^i..^j.., a's)  (1-based)
            for i in 0..p + 1 {
                for j in i + 1..p + 1 {
                    let br = l.l2_00().eval_basis(&[xs[i], xs[j]]);
                    if vec_is_zero(&br) {
                        continue;
                    }
                    let mut args: Vec<Vector<R>> = vec![br];
                    for (t2, &x) in xs.iter().enumerate() {
                        if t2 != i && t2 != j {
                            args.push(unit_vec(n0, x));
                        }
                    }
                    for &a in aas {
                        args.push(unit_vec(n1, a));
                    }
                    let refs: Vec<&[R]> = args.iter().map(|v| v.as_slice()).collect();
                    let term = f.eval(&refs);
                    // 1-based (-1)^{i+j} = 0-based (-1)^{i+j}
                    val = if (i + j) % 2 == 0 {
                        vec_add(&val, &term)
                    } else {
                        crate::exactlin::mat::vec_sub(&val, &term)
                    };
                }
            }
            // sum_{i,j} (-1)^i f(..^x_i.., a_1..[x_i,a_j]..a_q)  (1-based i)
            for i in 0..p + 1 {
                for j in 0..q {
                    let br = l.l2_01().eval_basis(&[xs[i], aas[j]]);
                    if vec_is_zero(&br) {
                        continue;
                    }
                    let mut args: Vec<Vector<R>> = Vec::with_capacity(p + q);
                    for (t2, &x) in xs.iter().enumerate() {
                        if t2 != i {
                            args.push(unit_vec(n0, x));
                        }
                    }
                    for (t2, &a) in aas.iter().enumerate() {
                        if t2 == j {
                            args.push(br.clone());
                        } else {
                            args.push(unit_vec(n1, a));
                        }
                    }
                    let refs: Vec<&[R]> = args.iter().map(|v| v.as_slice()).collect();
                    let term = f.eval(&refs);
                    // (-1)^i with 1-based i: minus for the first slot
                    val = if i % 2 == 0 {
                        crate::exactlin::mat::vec_sub(&val, &term)
                    } else {
                        vec_add(&val, &term)
                    };
                }
            }
            t.set_entry(&tuple, val).expect("canonical");
        }
        if !t.is_zero() {
            out.push((tkey, t));
        }
    }

    // d_phi^{(0,1)} : (p,q,0) -> (p,q+1,-1), sign (-1)^p per term
    if s == 0 {
        let tkey = (p, q + 1, -1);
        let mut t = component_shape(rep, tkey);
        for tuple in t.canonical_tuples() {
            let (xs, aas) = tuple.split_at(p);
            let mut val: Vector<R> = crate::exactlin::mat::zero_vec(rep.vm1().dim());
            for i in 0..q + 1 {
                let mut args: Vec<Vector<R>> = xs.iter().map(|&j| unit_vec(n0, j)).collect();
                for (t2, &a) in aas.iter().enumerate() {
                    if t2 != i {
                        args.push(unit_vec(n1, a));
                    }
                }
                let refs: Vec<&[R]> = args.iter().map(|v| v.as_slice()).collect();
                let inner = f.eval(&refs);
                if vec_is_zero(&inner) {
                    continue;
                }
                val = vec_add(&val, &rep.act1(&unit_vec(n1, aas[i]), &inner));
            }
            t.set_entry(&tuple, sign_p(val)).expect("canonical");
        }
        if !t.is_zero() {
            out.push((tkey, t));
        }
    }

    // d_{phi2} : (p,q,0) -> (p+2,q,-1), sign (-1)^{p+2q} (-1)^sigma
    if s == 0 {
        let tkey = (p + 2, q, -1);
        let mut t = component_shape(rep, tkey);
        for tuple in t.canonical_tuples() {
            let (xs, aas) = tuple.split_at(p + 2);
            let mut val: Vector<R> = crate::exactlin::mat::zero_vec(rep.vm1().dim());
            for i in 0..p + 2 {
                for j in i + 1..p + 2 {
                    // unshuffle (i,j | rest): sign of the permutation
                    let mut perm: Vec<usize> = vec![i, j];
                    perm.extend((0..p + 2).filter(|&k| k != i && k != j));
                    let sgn = perm_parity(&perm);
                    let mut args: Vec<Vector<R>> = Vec::with_capacity(p + q);
                    for &k in &perm[2..] {
                        args.push(unit_vec(n0, xs[k]));
                    }
                    for &a in aas {
                        args.push(unit_vec(n1, a));
                    }
                    let refs: Vec<&[R]> = args.iter().map(|v| v.as_slice()).collect();
                    let inner = f.eval(&refs);
                    if vec_is_zero(&inner) {
                        continue;
                    }
                    let term =
                        rep.act2_eval(&unit_vec(n0, xs[i]), &unit_vec(n0, xs[j]), &inner);
                    val = if sgn {
                        crate::exactlin::mat::vec_sub(&val, &term)
                    } else {
                        vec_add(&val, &term)
                    };
                }
            }
            t.set_entry(&tuple, sign_p(val)).expect("canonical");
        }
        if !t.is_zero() {
            out.push((tkey, t));
        }
    }

    // d_{l3} : (p,q,s) -> (p+3,q-1,s), term -(-1)^tau f(x_{tau(4..)}, a's, l3(x_{tau(1..3)}))
    if q >= 1 {
        let tkey = (p + 3, q - 1, s);
        let mut t = component_shape(rep, tkey);
        for tuple in t.canonical_tuples() {
            let (xs, aas) = tuple.split_at(p + 3);
            let mut val: Vector<R> = crate::exactlin::mat::zero_vec(rep.space(s).dim());
            for c in increasing_tuples(p + 3, 3, true) {
                let (i, j, k) = (c[0], c[1], c[2]);
                let mut perm: Vec<usize> = vec![i, j, k];
                perm.extend((0..p + 3).filter(|&x| x != i && x != j && x != k));
                let sgn = perm_parity(&perm);
                let l3v = l.l3().eval_basis(&[xs[i], xs[j], xs[k]]);
                if vec_is_zero(&l3v) {
                    continue;
                }
                let mut args: Vec<Vector<R>> = Vec::with_capacity(p + q);
                for &x in &perm[3..] {
                    args.push(unit_vec(n0, xs[x]));
                }
                for &a in aas {
                    args.push(unit_vec(n1, a));
                }
                args.push(l3v);
                let refs: Vec<&[R]> = args.iter().map(|v| v.as_slice()).collect();
                let term = f.eval(&refs);
                // overall minus times (-1)^tau
                val = if sgn {
                    vec_add(&val, &term)
                } else {
                    crate::exactlin::mat::vec_sub(&val, &term)
                };
            }
            t.set_entry(&tuple, val).expect("canonical");
        }
        if !t.is_zero() {
            out.push((tkey, t));
        }
    }

    out
}

/// Parity of a permutation of `0..n` (true = odd).
pub fn perm_parity(perm: &[usize]) -> bool {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

/// Matrix of `D_k` in flat coordinates.
pub fn d_matrix<R: Ring>(rep: &Rep2<R>, k: i64) -> Mat<R> {
    let dom = cochain_dim(rep, k);
    let cod = cochain_dim(rep, k + 1);
    let mut cols = Vec::with_capacity(dom);
    for i in 0..dom {
        let mut e = vec![R::zero(); dom];
        e[i] = R::one();
        let c = unflatten(rep, k, &e);
        cols.push(flatten(rep, &coboundary(rep, &c)));
    }
    Mat::from_cols(cols, cod)
}

#[derive(Clone, Debug)]
pub struct CohomologyResult<R> {
    pub degree: i64,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    pub representatives: Vec<Cochain<R>>,
}

pub fn cohomology<R: Field>(rep: &Rep2<R>, k: i64) -> Result<CohomologyResult<R>> {
    cohomology_with_max(rep, k, K_MAX_DEFAULT)
}

pub fn cohomology_with_max<R: Field>(
    rep: &Rep2<R>,
    k: i64,
    k_max: i64,
) -> Result<CohomologyResult<R>> {
    if k < -1 || k > k_max {
        return Err(Error::Usage(format!(
            "degree {k} out of range [-1, {k_max}]"
        )));
    }
    let dk = d_matrix(rep, k);
    let z_basis = dk.kernel_basis();
    let dim_z = z_basis.len();
    let dim_ck = cochain_dim(rep, k);
    let (b_mat, dim_b) = if k == -1 {
        (Mat::zero(dim_ck, 0), 0)
    } else {
        let dprev = d_matrix(rep, k - 1);
        let cols = dprev.column_space_basis();
        let n = cols.len();
        (Mat::from_cols(cols, dim_ck), n)
    };
    let mut reps = Vec::new();
    let mut chosen: Vec<Vector<R>> = Vec::new();
    for zv in &z_basis {
        let red = crate::cecohom::reduce_mod(&b_mat, zv);
        if vec_is_zero(&red) {
            continue;
        }
        let mut cand = chosen.clone();
        cand.push(red.clone());
        if Mat::from_cols(cand, red.len()).rank() > chosen.len() {
            reps.push(unflatten(rep, k, &red));
            chosen.push(red);
        }
    }
    Ok(CohomologyResult {
        degree: k,
        dim_z,
        dim_b,
        dim_h: dim_z - dim_b,
        representatives: reps,
    })
}

/// Is the cocycle a coboundary? Returns a primitive cochain when it is.
pub fn is_coboundary<R: Field>(rep: &Rep2<R>, c: &Cochain<R>) -> Option<Cochain<R>> {
    if c.degree < 0 {
        return None;
    }
    let dprev = d_matrix(rep, c.degree - 1);
    dprev
        .solve(&flatten(rep, c))
        .map(|x| unflatten(rep, c.degree - 1, &x))
}

/// Direct evaluation of the four 1-cocycle conditions: an oracle for
/// membership in `Z^1` that bypasses the assembled `D`.
pub fn one_cocycle_check<R: Ring>(
    rep: &Rep2<R>,
    x0: &LinMap<R>,
    x1: &LinMap<R>,
    lx: &MultiTensor<R>,
) -> AxiomReport<R> {
    let mut report = AxiomReport::new();
    let l = &rep.algebra;
    let n0 = l.g0().dim();
    let n1 = l.gm1().dim();
    let lab0 = |i: usize| l.g0().label(i).to_string();
    let lab1 = |i: usize| l.gm1().label(i).to_string();
    let e0 = |i: usize| unit_vec::<R>(n0, i);
    let e1 = |i: usize| unit_vec::<R>(n1, i);

    // partial . X1 = X0 . d
    for a in 0..n1 {
        let lhs = rep.complex.partial.apply(&x1.apply_basis(a));
        let rhs = x0.apply(&l.d().apply_basis(a));
        report.record("z1.chain", vec![lab1(a)], crate::exactlin::mat::vec_sub(&lhs, &rhs));
    }
    // partial lX(x,y) = X0[x,y] + y.X0 x - x.X0 y
    for t in increasing_tuples(n0, 2, true) {
        let (x, y) = (t[0], t[1]);
        let lhs = rep.complex.partial.apply(&lx.eval_basis(&[x, y]));
        let mut rhs = x0.apply(&l.l2_00().eval_basis(&[x, y]));
        rhs = vec_add(&rhs, &rep.act0_v0(&e0(y), &x0.apply_basis(x)));
        rhs = crate::exactlin::mat::vec_sub(&rhs, &rep.act0_v0(&e0(x), &x0.apply_basis(y)));
        report.record("z1.pair", vec![lab0(x), lab0(y)], crate::exactlin::mat::vec_sub(&lhs, &rhs));
    }
    // lX(x, da) = X1[x,a] + a.X0 x - x.X1 a
    for x in 0..n0 {
        for a in 0..n1 {
            let lhs = lx.eval(&[&e0(x), &l.d().apply_basis(a)]);
            let mut rhs = x1.apply(&l.l2_01().eval_basis(&[x, a]));
            rhs = vec_add(&rhs, &rep.act1(&e1(a), &x0.apply_basis(x)));
            rhs = crate::exactlin::mat::vec_sub(&rhs, &rep.act0_vm1(&e0(x), &x1.apply_basis(a)));
            report.record("z1.mixed", vec![lab0(x), lab1(a)], crate::exactlin::mat::vec_sub(&lhs, &rhs));
        }
    }
    // X1 l3(x,y,z) = (lX(x,[y,z]) + x.lX(y,z) - (y,z).X0 x) + c.p.
    for t in increasing_tuples(n0, 3, true) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = x1.apply(&l.l3().eval_basis(&[x, y, z]));
        let mut rhs: Vector<R> = crate::exactlin::mat::zero_vec(rep.vm1().dim());
        for (i, j, k) in [(x, y, z), (y, z, x), (z, x, y)] {
            let br = l.l2_00().eval_basis(&[j, k]);
            rhs = vec_add(&rhs, &lx.eval(&[&e0(i), &br]));
            rhs = vec_add(&rhs, &rep.act0_vm1(&e0(i), &lx.eval_basis(&[j, k])));
            rhs = crate::exactlin::mat::vec_sub(
                &rhs,
                &rep.act2_eval(&e0(j), &e0(k), &x0.apply_basis(i)),
            );
        }
        report.record(
            "z1.l3",
            vec![lab0(x), lab0(y), lab0(z)],
            crate::exactlin::mat::vec_sub(&lhs, &rhs),
        );
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lie::sl2;
    use crate::constructions::quadruple::string_killing;
    use crate::exactlin::FinSpace;
    use crate::scalar::Scalar;

    fn dd_is_zero(rep: &Rep2<Scalar>, upto: i64) -> bool {
        for k in -1..upto {
            let dk = d_matrix(rep, k);
            let dk1 = d_matrix(rep, k + 1);
            if !dk1.mul(&dk).is_zero() {
                eprintln!("D.D != 0 at degree {k}");
                return false;
            }
        }
        true
    }

    #[test]
    fn adjoint_rep_of_string_verifies() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let rep = adjoint_rep(&l);
        assert!(rep.verify().is_ok());
    }

    #[test]
    fn dd_zero_for_string_adjoint() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let rep = adjoint_rep(&l);
        assert!(dd_is_zero(&rep, 3));
    }

    #[test]
    fn whitehead_dims_for_sl2() {
        // g = (0 -> sl2), V = (0 -> Q) trivial: H^1 = H^2 = 0, H^3 = Q
        let g = sl2::<Scalar>().as_lie2();
        let v = TwoComplex::concentrated(FinSpace::new("Q", vec!["1".into()]));
        let rep = Rep2::trivial(g, v);
        assert!(rep.verify().is_ok());
        assert!(dd_is_zero(&rep, 3));
        let h1 = cohomology(&rep, 1).unwrap();
        let h2 = cohomology(&rep, 2).unwrap();
        let h3 = cohomology(&rep, 3).unwrap();
        assert_eq!(h1.dim_h, 0);
        assert_eq!(h2.dim_h, 0);
        assert_eq!(h3.dim_h, 1);
        assert_eq!(h3.representatives.len(), 1);
    }

    #[test]
    fn string_l3_class_is_not_a_coboundary() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        // view l3 as a (3,0,-1)-cochain of degree 2; the coefficients sit in
        // degree -1, so the module complex is Q -> 0
        let g = sl2::<Scalar>().as_lie2();
        let v0 = FinSpace::new("zero", vec![]);
        let vm1 = FinSpace::new("Q", vec!["1".into()]);
        let v = TwoComplex::new(v0.clone(), vm1, LinMap::zero(FinSpace::new("Q", vec!["1".into()]), v0)).unwrap();
        let rep = Rep2::trivial(g, v);
        let mut c = Cochain::zero(2);
        let mut t = component_shape(&rep, (3, 0, -1));
        // copy entries of l3 (it maps into the 1-dim space)
        for tuple in t.canonical_tuples() {
            t.set_entry(&tuple, l.l3().eval_basis(&tuple)).unwrap();
        }
        c.set_component((3, 0, -1), t).unwrap();
        // the Cartan 3-form is closed but not exact
        assert!(coboundary(&rep, &c).is_zero());
        assert!(is_coboundary(&rep, &c).is_none());
    }

    #[test]
    fn one_cocycle_check_agrees_with_d() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let rep = adjoint_rep(&l);
        // degree-1 components: X0 at (1,0,0), X1 at (0,1,-1), lX at (2,0,-1)
        let dim1 = cochain_dim(&rep, 1);
        // sweep basis cochains and compare the two evaluators
        for i in 0..dim1 {
            let mut e = vec![Scalar::zero(); dim1];
            e[i] = Scalar::one();
            let c = unflatten(&rep, 1, &e);
            let x0 = c
                .component((1, 0, 0))
                .map(|t| t.to_linmap().unwrap())
                .unwrap_or_else(|| LinMap::zero(l.g0().clone(), l.g0().clone()));
            let x1 = c
                .component((0, 1, -1))
                .map(|t| t.to_linmap().unwrap())
                .unwrap_or_else(|| LinMap::zero(l.gm1().clone(), l.gm1().clone()));
            let lx = c
                .component((2, 0, -1))
                .cloned()
                .unwrap_or_else(|| component_shape(&rep, (2, 0, -1)));
            let direct = one_cocycle_check(&rep, &x0, &x1, &lx);
            let via_d = coboundary(&rep, &c).is_zero();
            assert_eq!(direct.passed(), via_d, "disagreement at basis cochain {i}");
        }
    }
}
