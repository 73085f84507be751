//! Classical Chevalley-Eilenberg cohomology of a Lie algebra with
//! coefficients in a module.
//!
//! This is deliberately a self-contained implementation: it serves as the
//! independent oracle for cocycle checks in the constructions, for the
//! Gerstenhaber classifier, and for cross-checking the generalized Lie
//! 2-algebra coboundary on classical inputs.

use crate::constructions::lie::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::mat::{unit_vec, vec_add, vec_is_zero, Mat, Vector};
use crate::exactlin::tensor::increasing_tuples;
use crate::exactlin::{FinSpace, MultiTensor, Symmetry};
use crate::lie2core::AxiomReport;
use crate::ring::{Field, Ring};

/// A Lie algebra module: the action tensor is `g (plain) x V (plain) -> V`.
#[derive(Clone, Debug)]
pub struct LieRep<R> {
    pub g: LieAlgebra<R>,
    pub v: FinSpace,
    pub action: MultiTensor<R>,
}

impl<R: Ring> LieRep<R> {
    pub fn new(g: LieAlgebra<R>, v: FinSpace, action: MultiTensor<R>) -> Result<Self> {
        let want = [(g.space().clone(), Symmetry::Plain), (v.clone(), Symmetry::Plain)];
        if action.inputs() != want || !action.output().compatible(&v) {
            return Err(Error::shape("module action has wrong signature".to_string()));
        }
        Ok(LieRep { g, v, action })
    }

    pub fn trivial(g: LieAlgebra<R>, v: FinSpace) -> Self {
        let action = MultiTensor::new(
            vec![(g.space().clone(), Symmetry::Plain), (v.clone(), Symmetry::Plain)],
            v.clone(),
        );
        LieRep { g, v, action }
    }

    pub fn adjoint(g: LieAlgebra<R>) -> Self {
        let space = g.space().clone();
        let mut action = MultiTensor::new(
            vec![(space.clone(), Symmetry::Plain), (space.clone(), Symmetry::Plain)],
            space.clone(),
        );
        for i in 0..space.dim() {
            for j in 0..space.dim() {
                action
                    .set_entry(&[i, j], g.bracket().eval_basis(&[i, j]))
                    .expect("plain tuple");
            }
        }
        LieRep { g, v: space, action }
    }

    pub fn act(&self, x: &[R], v: &[R]) -> Vector<R> {
        self.action.eval(&[x, v])
    }

    /// `[x,y] . v = x.(y.v) - y.(x.v)` on basis pairs.
    pub fn verify(&self) -> AxiomReport<R> {
        let mut report = AxiomReport::new();
        let n = self.g.space().dim();
        for t in increasing_tuples(n, 2, true) {
            let (i, j) = (t[0], t[1]);
            for k in 0..self.v.dim() {
                let ev = unit_vec::<R>(self.v.dim(), k);
                let lhs = self.act(&self.g.bracket().eval_basis(&[i, j]), &ev);
                let x = unit_vec::<R>(n, i);
                let y = unit_vec::<R>(n, j);
                let rhs = crate::exactlin::mat::vec_sub(
                    &self.act(&x, &self.act(&y, &ev)),
                    &self.act(&y, &self.act(&x, &ev)),
                );
                report.record(
                    "rep.bracket",
                    vec![
                        self.g.space().label(i).to_string(),
                        self.g.space().label(j).to_string(),
                        self.v.label(k).to_string(),
                    ],
                    crate::exactlin::mat::vec_sub(&lhs, &rhs),
                );
            }
        }
        report.finish()
    }
}

/// Shape of a classical `k`-cochain.
pub fn cochain_shape<R: Ring>(g: &LieAlgebra<R>, v: &FinSpace, k: usize) -> MultiTensor<R> {
    MultiTensor::new(
        (0..k).map(|_| (g.space().clone(), Symmetry::Alt)).collect(),
        v.clone(),
    )
}

/// The classical CE differential of a `k`-cochain.
pub fn ce_differential<R: Ring>(rep: &LieRep<R>, c: &MultiTensor<R>) -> MultiTensor<R> {
    let k = c.arity();
    let n = rep.g.space().dim();
    let mut out = cochain_shape(&rep.g, &rep.v, k + 1);
    for tuple in out.canonical_tuples() {
        let mut val: Vector<R> = crate::exactlin::mat::zero_vec(rep.v.dim());
        // action terms
        for i in 0..k + 1 {
            let rest: Vec<usize> = (0..k + 1).filter(|&t| t != i).map(|t| tuple[t]).collect();
            let inner = c.eval_basis(&rest);
            if !vec_is_zero(&inner) {
                let x = unit_vec::<R>(n, tuple[i]);
                let term = rep.act(&x, &inner);
                if i % 2 == 0 {
                    val = vec_add(&val, &term);
                } else {
                    val = crate::exactlin::mat::vec_sub(&val, &term);
                }
            }
        }
        // bracket terms
        for i in 0..k + 1 {
            for j in i + 1..k + 1 {
                let br = rep.g.bracket().eval_basis(&[tuple[i], tuple[j]]);
                if vec_is_zero(&br) {
                    continue;
                }
                let mut args: Vec<Vector<R>> = vec![br];
                for t in 0..k + 1 {
                    if t != i && t != j {
                        args.push(unit_vec(n, tuple[t]));
                    }
                }
                let refs: Vec<&[R]> = args.iter().map(|a| a.as_slice()).collect();
                let term = c.eval(&refs);
                if (i + j) % 2 == 1 {
                    val = crate::exactlin::mat::vec_sub(&val, &term);
                } else {
                    val = vec_add(&val, &term);
                }
            }
        }
        out.set_entry(&tuple, val).expect("canonical tuple");
    }
    out
}

/// Flatten a `k`-cochain to coordinates: canonical tuples in order, each
/// contributing `dim V` consecutive entries.
pub fn flatten_cochain<R: Ring>(g: &LieAlgebra<R>, v: &FinSpace, c: &MultiTensor<R>) -> Vector<R> {
    let shape = cochain_shape::<R>(g, v, c.arity());
    let mut out = Vec::new();
    for tuple in shape.canonical_tuples() {
        out.extend(c.eval_basis(&tuple));
    }
    out
}

pub fn unflatten_cochain<R: Ring>(
    g: &LieAlgebra<R>,
    v: &FinSpace,
    k: usize,
    coords: &[R],
) -> MultiTensor<R> {
    let mut out = cochain_shape::<R>(g, v, k);
    let tuples = out.canonical_tuples();
    assert_eq!(coords.len(), tuples.len() * v.dim(), "coordinate length mismatch");
    for (t, tuple) in tuples.iter().enumerate() {
        let val = coords[t * v.dim()..(t + 1) * v.dim()].to_vec();
        out.set_entry(tuple, val).expect("canonical tuple");
    }
    out
}

pub fn cochain_dim<R: Ring>(g: &LieAlgebra<R>, v: &FinSpace, k: usize) -> usize {
    cochain_shape::<R>(g, v, k).canonical_tuples().len() * v.dim()
}

/// Matrix of `D_k : C^k -> C^{k+1}` in flat coordinates.
pub fn ce_matrix<R: Ring>(rep: &LieRep<R>, k: usize) -> Mat<R> {
    let g = &rep.g;
    let v = &rep.v;
    let dom = cochain_dim::<R>(g, v, k);
    let cod = cochain_dim::<R>(g, v, k + 1);
    let mut cols: Vec<Vector<R>> = Vec::with_capacity(dom);
    let shape = cochain_shape::<R>(g, v, k);
    let tuples = shape.canonical_tuples();
    for tuple in &tuples {
        for out_i in 0..v.dim() {
            let mut c = cochain_shape::<R>(g, v, k);
            c.set_entry(tuple, unit_vec(v.dim(), out_i)).expect("canonical");
            cols.push(flatten_cochain(g, v, &ce_differential(rep, &c)));
        }
    }
    Mat::from_cols(cols, cod)
}

#[derive(Clone, Debug)]
pub struct CeResult<R> {
    pub degree: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    pub representatives: Vec<MultiTensor<R>>,
}

/// Exact `Z`, `B`, `H` at one degree, with reduced representatives (zero
/// projection onto the coboundary pivots).
pub fn ce_cohomology<R: Field>(rep: &LieRep<R>, k: usize) -> CeResult<R> {
    let dk = ce_matrix(rep, k);
    let z_basis = dk.kernel_basis();
    let dim_z = z_basis.len();
    let (b_mat, dim_b) = if k == 0 {
        (Mat::zero(cochain_dim::<R>(&rep.g, &rep.v, 0), 0), 0)
    } else {
        let dprev = ce_matrix(rep, k - 1);
        let cols = dprev.column_space_basis();
        let n = cols.len();
        (Mat::from_cols(cols, cochain_dim::<R>(&rep.g, &rep.v, k)), n)
    };
    // representatives: reduce each kernel vector mod B (zeroing the pivot
    // coordinates of B), then keep an independent set
    let mut reps = Vec::new();
    let mut chosen: Vec<Vector<R>> = Vec::new();
    for zv in &z_basis {
        let red = reduce_mod(&b_mat, zv);
        if vec_is_zero(&red) {
            continue;
        }
        let mut cand = chosen.clone();
        cand.push(red.clone());
        if Mat::from_cols(cand.clone(), red.len()).rank() > chosen.len() {
            reps.push(unflatten_cochain(&rep.g, &rep.v, k, &red));
            chosen.push(red);
        }
    }
    debug_assert_eq!(reps.len(), dim_z - dim_b);
    CeResult {
        degree: k,
        dim_z,
        dim_b,
        dim_h: dim_z - dim_b,
        representatives: reps,
    }
}

/// Canonical reduction of `v` modulo the column space of `b`: subtract the
/// echelonized spanning vectors so every pivot coordinate of the span becomes
/// zero. The result is the unique representative of `v + span(b)` supported
/// on the complement of the pivot coordinates.
pub fn reduce_mod<R: Field>(b: &Mat<R>, v: &[R]) -> Vector<R> {
    if b.cols() == 0 || b.is_zero() {
        return v.to_vec();
    }
    let echelon = b.transpose().rref();
    let mut out = v.to_vec();
    for (r, &c) in echelon.pivots.iter().enumerate() {
        let coef = out[c].clone();
        if coef.is_zero() {
            continue;
        }
        for j in 0..out.len() {
            let t = coef.mul(&echelon.mat[(r, j)]);
            out[j] = out[j].sub(&t);
        }
    }
    out
}

/// Is `c` a coboundary? Returns a primitive if so.
pub fn ce_is_coboundary<R: Field>(rep: &LieRep<R>, c: &MultiTensor<R>) -> Option<MultiTensor<R>> {
    let k = c.arity();
    if k == 0 {
        return None;
    }
    let dprev = ce_matrix(rep, k - 1);
    let flat = flatten_cochain(&rep.g, &rep.v, c);
    dprev
        .solve(&flat)
        .map(|x| unflatten_cochain(&rep.g, &rep.v, k - 1, &x))
}

/// Is `c` closed? Returns the defect cochain if not.
pub fn ce_is_cocycle<R: Ring>(rep: &LieRep<R>, c: &MultiTensor<R>) -> std::result::Result<(), MultiTensor<R>> {
    let d = ce_differential(rep, c);
    if d.is_zero() {
        Ok(())
    } else {
        Err(d)
    }
}
