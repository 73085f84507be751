//! 2-term chain complexes and the strict Lie 2-algebra `gl(V)` of one.
//!
//! `gl_0(V)` is the space of chain maps `(A0, A1)` (computed as a kernel),
//! `gl_{-1}(V) = Hom(V0, V_{-1})`, the differential is `delta(D) = (dD, Dd)`
//! and both brackets are commutators.

use super::lie::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::mat::{unit_vec, Mat, Vector};
use crate::exactlin::{FinSpace, LinMap, MultiTensor, Symmetry};
use crate::lie2core::algebra::{l2_00_shape, l2_01_shape, l3_shape, Lie2Candidate};
use crate::lie2core::Lie2Algebra;
use crate::ring::{Field, Ring};

/// A 2-term chain complex `vm1 -partial-> v0`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoComplex<R> {
    pub v0: FinSpace,
    pub vm1: FinSpace,
    pub partial: LinMap<R>,
}

impl<R: Ring> TwoComplex<R> {
    pub fn new(v0: FinSpace, vm1: FinSpace, partial: LinMap<R>) -> Result<Self> {
        if !partial.source.compatible(&vm1) || !partial.target.compatible(&v0) {
            return Err(Error::shape("partial must map V-1 -> V0".to_string()));
        }
        Ok(TwoComplex { v0, vm1, partial })
    }

    /// A vector space concentrated in degree 0.
    pub fn concentrated(v0: FinSpace) -> Self {
        let vm1 = FinSpace::new(format!("{}.z", v0.name()), vec![]);
        let partial = LinMap::zero(vm1.clone(), v0.clone());
        TwoComplex { v0, vm1, partial }
    }

    pub fn map_ring<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> TwoComplex<S> {
        TwoComplex {
            v0: self.v0.clone(),
            vm1: self.vm1.clone(),
            partial: self.partial.map_ring(f),
        }
    }
}

/// `gl(V)` together with the dictionaries between abstract basis coordinates
/// and concrete matrix pairs.
#[derive(Clone, Debug)]
pub struct GlComplex<R> {
    pub complex: TwoComplex<R>,
    pub algebra: Lie2Algebra<R>,
    gl0_basis: Vec<(Mat<R>, Mat<R>)>,
    gl0_flat: Mat<R>, // columns = flattened basis pairs
}

impl<R: Field> GlComplex<R> {
    pub fn gl0_dim(&self) -> usize {
        self.gl0_basis.len()
    }

    /// The pair `(A0, A1)` for abstract gl0 coordinates.
    pub fn gl0_pair(&self, coords: &[R]) -> (Mat<R>, Mat<R>) {
        let n0 = self.complex.v0.dim();
        let n1 = self.complex.vm1.dim();
        let mut a0 = Mat::zero(n0, n0);
        let mut a1 = Mat::zero(n1, n1);
        for (c, (b0, b1)) in coords.iter().zip(&self.gl0_basis) {
            a0 = a0.add(&b0.scale(c));
            a1 = a1.add(&b1.scale(c));
        }
        (a0, a1)
    }

    /// Coordinates of a chain-map pair, if it is one.
    pub fn gl0_coords(&self, a0: &Mat<R>, a1: &Mat<R>) -> Option<Vector<R>> {
        let flat = flatten_pair(a0, a1);
        self.gl0_flat.solve(&flat)
    }

    /// The map `D: V0 -> V-1` for abstract gl-1 coordinates (row-major basis).
    pub fn glm1_map(&self, coords: &[R]) -> Mat<R> {
        let n0 = self.complex.v0.dim();
        let n1 = self.complex.vm1.dim();
        Mat::from_fn(n1, n0, |i, j| coords[i * n0 + j].clone())
    }

    pub fn glm1_coords(&self, d: &Mat<R>) -> Vector<R> {
        let n0 = self.complex.v0.dim();
        let n1 = self.complex.vm1.dim();
        let mut out = Vec::with_capacity(n0 * n1);
        for i in 0..n1 {
            for j in 0..n0 {
                out.push(d[(i, j)].clone());
            }
        }
        out
    }
}

fn flatten_pair<R: Ring>(a0: &Mat<R>, a1: &Mat<R>) -> Vector<R> {
    let mut out = Vec::with_capacity(a0.rows() * a0.cols() + a1.rows() * a1.cols());
    for i in 0..a0.rows() {
        for j in 0..a0.cols() {
            out.push(a0[(i, j)].clone());
        }
    }
    for i in 0..a1.rows() {
        for j in 0..a1.cols() {
            out.push(a1[(i, j)].clone());
        }
    }
    out
}

/// The strict Lie 2-algebra of a 2-term complex.
pub fn gl_of_complex<R: Field>(v: &TwoComplex<R>) -> Result<GlComplex<R>> {
    let n0 = v.v0.dim();
    let n1 = v.vm1.dim();
    let p = v.partial.mat();

    // chain-map condition A0 . partial = partial . A1, unknowns (A0, A1)
    let unknowns = n0 * n0 + n1 * n1;
    let mut rows: Vec<Vector<R>> = Vec::new();
    for i in 0..n0 {
        for j in 0..n1 {
            let mut row = crate::exactlin::mat::zero_vec::<R>(unknowns);
            // (A0 p)[i,j] = sum_k A0[i,k] p[k,j]
            for k in 0..n0 {
                row[i * n0 + k] = row[i * n0 + k].add(&p[(k, j)]);
            }
            // -(p A1)[i,j] = -sum_k p[i,k] A1[k,j]
            for k in 0..n1 {
                let idx = n0 * n0 + k * n1 + j;
                row[idx] = row[idx].sub(&p[(i, k)]);
            }
            rows.push(row);
        }
    }
    let constraint = if rows.is_empty() {
        Mat::zero(0, unknowns)
    } else {
        Mat::from_rows(rows)
    };
    let kernel = constraint.kernel_basis();
    let gl0_basis: Vec<(Mat<R>, Mat<R>)> = kernel
        .iter()
        .map(|flat| {
            (
                Mat::from_fn(n0, n0, |i, j| flat[i * n0 + j].clone()),
                Mat::from_fn(n1, n1, |i, j| flat[n0 * n0 + i * n1 + j].clone()),
            )
        })
        .collect();

    let g0 = FinSpace::numbered(format!("gl0({})", v.v0.name()), "A", gl0_basis.len());
    let mut gm1_labels = Vec::with_capacity(n0 * n1);
    for i in 0..n1 {
        for j in 0..n0 {
            gm1_labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    let gm1 = FinSpace::new(format!("glm1({})", v.v0.name()), gm1_labels);

    let gl0_flat = Mat::from_cols(
        gl0_basis.iter().map(|(a0, a1)| flatten_pair(a0, a1)).collect(),
        unknowns,
    );

    let pair_of = |coords: &[R]| -> (Mat<R>, Mat<R>) {
        let mut a0 = Mat::zero(n0, n0);
        let mut a1 = Mat::zero(n1, n1);
        for (c, (b0, b1)) in coords.iter().zip(&gl0_basis) {
            a0 = a0.add(&b0.scale(c));
            a1 = a1.add(&b1.scale(c));
        }
        (a0, a1)
    };
    let coords_of = |a0: &Mat<R>, a1: &Mat<R>| gl0_flat.solve(&flatten_pair(a0, a1));
    let dmat_of = |coords: &[R]| Mat::from_fn(n1, n0, |i, j| coords[i * n0 + j].clone());
    let dcoords_of = |d: &Mat<R>| -> Vector<R> {
        let mut out = Vec::with_capacity(n0 * n1);
        for i in 0..n1 {
            for j in 0..n0 {
                out.push(d[(i, j)].clone());
            }
        }
        out
    };

    // d(D) = (partial . D, D . partial)
    let mut d_cols: Vec<Vector<R>> = Vec::new();
    for a in 0..gm1.dim() {
        let dmat = dmat_of(&unit_vec(gm1.dim(), a));
        let coords = coords_of(&p.mul(&dmat), &dmat.mul(p))
            .ok_or_else(|| Error::Internal("delta(D) is not a chain map".to_string()))?;
        d_cols.push(coords);
    }
    let d = LinMap::from_images(gm1.clone(), g0.clone(), d_cols)?;

    let mut l2_00 = l2_00_shape::<R>(&g0);
    for t in crate::exactlin::tensor::increasing_tuples(g0.dim(), 2, true) {
        let (a0, a1) = pair_of(&unit_vec(g0.dim(), t[0]));
        let (b0, b1) = pair_of(&unit_vec(g0.dim(), t[1]));
        let c0 = a0.mul(&b0).sub(&b0.mul(&a0));
        let c1 = a1.mul(&b1).sub(&b1.mul(&a1));
        let coords = coords_of(&c0, &c1)
            .ok_or_else(|| Error::Internal("commutator left gl0".to_string()))?;
        l2_00.set_entry(&t, coords)?;
    }

    let mut l2_01 = l2_01_shape::<R>(&g0, &gm1);
    for i in 0..g0.dim() {
        let (a0, a1) = pair_of(&unit_vec(g0.dim(), i));
        for a in 0..gm1.dim() {
            let dmat = dmat_of(&unit_vec(gm1.dim(), a));
            let res = a1.mul(&dmat).sub(&dmat.mul(&a0));
            l2_01.set_entry(&[i, a], dcoords_of(&res))?;
        }
    }

    let algebra = Lie2Candidate {
        l3: l3_shape(&g0, &gm1),
        g0,
        gm1,
        d,
        l2_00,
        l2_01,
    }
    .build()?;

    Ok(GlComplex {
        complex: v.clone(),
        algebra,
        gl0_basis,
        gl0_flat,
    })
}

/// The Lie algebra `gl(W)` of a plain space, as matrices `E_ij`.
pub fn gl_lie_algebra<R: Ring>(w: &FinSpace) -> LieAlgebra<R> {
    let n = w.dim();
    let mut labels = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    let space = FinSpace::new(format!("gl({})", w.name()), labels);
    let mut bracket = MultiTensor::new(
        vec![
            (space.clone(), Symmetry::Alt),
            (space.clone(), Symmetry::Alt),
        ],
        space.clone(),
    );
    // [E_ij, E_kl] = d_jk E_il - d_li E_kj
    let idx = |i: usize, j: usize| i * n + j;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if idx(i, j) >= idx(k, l) {
                        continue;
                    }
                    let mut val = crate::exactlin::mat::zero_vec::<R>(n * n);
                    if j == k {
                        val[idx(i, l)] = val[idx(i, l)].add(&R::one());
                    }
                    if l == i {
                        val[idx(k, j)] = val[idx(k, j)].sub(&R::one());
                    }
                    bracket
                        .set_entry(&[idx(i, j), idx(k, l)], val)
                        .expect("canonical");
                }
            }
        }
    }
    LieAlgebra::new(space, bracket).expect("gl(n) satisfies Jacobi")
}
