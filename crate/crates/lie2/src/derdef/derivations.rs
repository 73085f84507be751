//! Degree-0 derivations (adjoint 1-cocycles), inner derivations, and the
//! strict derivation Lie 2-algebra `Der(g)`.

use crate::cohomology::{adjoint_rep, cochain_dim, component_shape, d_matrix, Cochain, Rep2};
use crate::error::{Error, Result};
use crate::exactlin::mat::{unit_vec, Mat, Vector};
use crate::exactlin::tensor::increasing_tuples;
use crate::exactlin::{FinSpace, LinMap, MultiTensor, Symmetry};
use crate::lie2core::algebra::{l2_00_shape, l2_01_shape, l3_shape, Lie2Candidate};
use crate::lie2core::Lie2Algebra;
use crate::ring::{Field, Ring};

/// A degree-0 derivation `(X0, X1, l_X)` of a Lie 2-algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivation0<R> {
    pub x0: LinMap<R>,
    pub x1: LinMap<R>,
    pub lx: MultiTensor<R>,
}

impl<R: Ring> Derivation0<R> {
    pub fn zero(l: &Lie2Algebra<R>) -> Self {
        Derivation0 {
            x0: LinMap::zero(l.g0().clone(), l.g0().clone()),
            x1: LinMap::zero(l.gm1().clone(), l.gm1().clone()),
            lx: MultiTensor::new(
                vec![
                    (l.g0().clone(), Symmetry::Alt),
                    (l.g0().clone(), Symmetry::Alt),
                ],
                l.gm1().clone(),
            ),
        }
    }

    /// Flat coordinates: `X0` column-major, then `X1` column-major, then the
    /// canonical `l_X` entries. This ordering fixes the reported basis.
    pub fn flatten(&self) -> Vector<R> {
        let mut out = Vec::new();
        for j in 0..self.x0.source.dim() {
            out.extend(self.x0.apply_basis(j));
        }
        for j in 0..self.x1.source.dim() {
            out.extend(self.x1.apply_basis(j));
        }
        for tuple in self.lx.canonical_tuples() {
            out.extend(self.lx.eval_basis(&tuple));
        }
        out
    }

    pub fn unflatten(l: &Lie2Algebra<R>, coords: &[R]) -> Self {
        let n0 = l.g0().dim();
        let n1 = l.gm1().dim();
        let mut pos = 0;
        let x0 = LinMap::from_images(
            l.g0().clone(),
            l.g0().clone(),
            (0..n0)
                .map(|_| {
                    let v = coords[pos..pos + n0].to_vec();
                    pos += n0;
                    v
                })
                .collect(),
        )
        .expect("shape");
        let x1 = LinMap::from_images(
            l.gm1().clone(),
            l.gm1().clone(),
            (0..n1)
                .map(|_| {
                    let v = coords[pos..pos + n1].to_vec();
                    pos += n1;
                    v
                })
                .collect(),
        )
        .expect("shape");
        let mut lx = MultiTensor::new(
            vec![
                (l.g0().clone(), Symmetry::Alt),
                (l.g0().clone(), Symmetry::Alt),
            ],
            l.gm1().clone(),
        );
        for tuple in lx.canonical_tuples() {
            lx.set_entry(&tuple, coords[pos..pos + n1].to_vec()).expect("canonical");
            pos += n1;
        }
        assert_eq!(pos, coords.len());
        Derivation0 { x0, x1, lx }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Derivation0 {
            x0: self.x0.add(&rhs.x0),
            x1: self.x1.add(&rhs.x1),
            lx: self.lx.add(&rhs.lx),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Derivation0 {
            x0: self.x0.scale(c),
            x1: self.x1.scale(c),
            lx: self.lx.scale(c),
        }
    }

    /// As a degree-1 cochain of the adjoint representation.
    pub fn to_cochain(&self, rep: &Rep2<R>) -> Cochain<R> {
        let mut c = Cochain::zero(1);
        c.set_component((1, 0, 0), MultiTensor::from_linmap(&self.x0))
            .expect("admissible");
        let mut x1t = component_shape(rep, (0, 1, -1));
        for a in 0..self.x1.source.dim() {
            x1t.set_entry(&[a], self.x1.apply_basis(a)).expect("canonical");
        }
        c.set_component((0, 1, -1), x1t).expect("admissible");
        c.set_component((2, 0, -1), self.lx.clone()).expect("admissible");
        c
    }

    pub fn from_cochain(l: &Lie2Algebra<R>, c: &Cochain<R>) -> Self {
        assert_eq!(c.degree, 1);
        let x0 = c
            .component((1, 0, 0))
            .map(|t| t.to_linmap().expect("arity 1"))
            .unwrap_or_else(|| LinMap::zero(l.g0().clone(), l.g0().clone()));
        let x1 = c
            .component((0, 1, -1))
            .map(|t| t.to_linmap().expect("arity 1"))
            .unwrap_or_else(|| LinMap::zero(l.gm1().clone(), l.gm1().clone()));
        let lx = c.component((2, 0, -1)).cloned().unwrap_or_else(|| {
            MultiTensor::new(
                vec![
                    (l.g0().clone(), Symmetry::Alt),
                    (l.g0().clone(), Symmetry::Alt),
                ],
                l.gm1().clone(),
            )
        });
        Derivation0 { x0, x1, lx }
    }

    /// Commutator of the chain-map parts.
    pub fn commutator_maps(&self, rhs: &Self) -> (LinMap<R>, LinMap<R>) {
        let c0 = self
            .x0
            .compose(&rhs.x0)
            .unwrap()
            .sub(&rhs.x0.compose(&self.x0).unwrap());
        let c1 = self
            .x1
            .compose(&rhs.x1)
            .unwrap()
            .sub(&rhs.x1.compose(&self.x1).unwrap());
        (c0, c1)
    }

    /// `L_X(l_Y)(x,y) = X1 l_Y(x,y) - l_Y(X0 x, y) - l_Y(x, X0 y)`.
    pub fn lie_on(&self, ly: &MultiTensor<R>) -> MultiTensor<R> {
        let mut out = MultiTensor::new(ly.inputs().to_vec(), ly.output().clone());
        let n0 = self.x0.source.dim();
        for tuple in ly.canonical_tuples() {
            let (x, y) = (tuple[0], tuple[1]);
            let mut val = self.x1.apply(&ly.eval_basis(&[x, y]));
            val = crate::exactlin::mat::vec_sub(
                &val,
                &ly.eval(&[&self.x0.apply_basis(x), &unit_vec(n0, y)]),
            );
            val = crate::exactlin::mat::vec_sub(
                &val,
                &ly.eval(&[&unit_vec(n0, x), &self.x0.apply_basis(y)]),
            );
            out.set_entry(&tuple, val).expect("canonical");
        }
        out
    }

    /// The derivation bracket `{(X,lX),(Y,lY)} = ([X,Y]_C, L_X lY - L_Y lX)`.
    pub fn bracket(&self, rhs: &Self) -> Self {
        let (x0, x1) = self.commutator_maps(rhs);
        let lx = self.lie_on(&rhs.lx).sub(&rhs.lie_on(&self.lx));
        Derivation0 { x0, x1, lx }
    }
}

/// Basis of the derivation space with the inner sub-basis and `dim H^1`.
#[derive(Clone, Debug)]
pub struct DerivationSpace<R> {
    pub algebra: Lie2Algebra<R>,
    pub rep: Rep2<R>,
    pub derivations: Vec<Derivation0<R>>,
    pub inner: Vec<Derivation0<R>>,
    pub dim_h1: usize,
    /// columns = flattened derivation basis (fixed coordinate order)
    flat: Mat<R>,
}

impl<R: Field> DerivationSpace<R> {
    /// Coordinates of a derivation in the computed basis.
    pub fn coords(&self, d: &Derivation0<R>) -> Option<Vector<R>> {
        self.flat.solve(&d.flatten())
    }

    pub fn element(&self, coords: &[R]) -> Derivation0<R> {
        let mut acc = Derivation0::zero(&self.algebra);
        for (c, b) in coords.iter().zip(&self.derivations) {
            acc = acc.add(&b.scale(c));
        }
        acc
    }
}

/// Permutation sending derivation-flat coordinates to cochain-flat ones.
fn der_to_cochain_perm<R: Ring>(rep: &Rep2<R>) -> Vec<usize> {
    // cochain order: (0,1,-1) block (X1), then (1,0,0) block (X0), then
    // (2,0,-1) block (lX); derivation order: X0, X1, lX
    let n0 = rep.algebra.g0().dim();
    let n1 = rep.algebra.gm1().dim();
    let x1_len = n1 * n1;
    let x0_len = n0 * n0;
    let lx_len = cochain_dim(rep, 1) - x1_len - x0_len;
    let mut perm = Vec::with_capacity(x0_len + x1_len + lx_len);
    // derivation coordinate i lives at cochain coordinate perm[i]
    for i in 0..x0_len {
        perm.push(x1_len + i);
    }
    for i in 0..x1_len {
        perm.push(i);
    }
    for i in 0..lx_len {
        perm.push(x0_len + x1_len + i);
    }
    perm
}

/// Compute `Z^1` and `B^1` of the adjoint representation, exactly.
pub fn derivation_space<R: Field>(l: &Lie2Algebra<R>) -> DerivationSpace<R> {
    let rep = adjoint_rep(l);
    let d1 = d_matrix(&rep, 1);
    let perm = der_to_cochain_perm(&rep);
    // permute columns: derivation-order unknowns
    let d1_perm = Mat::from_fn(d1.rows(), d1.cols(), |i, j| d1[(i, perm[j])].clone());
    let z_basis = d1_perm.kernel_basis();
    let derivations: Vec<Derivation0<R>> = z_basis
        .iter()
        .map(|v| Derivation0::unflatten(l, v))
        .collect();

    let d0 = d_matrix(&rep, 0);
    let b_cols = d0.column_space_basis();
    let inner: Vec<Derivation0<R>> = b_cols
        .iter()
        .map(|v| {
            // convert cochain-flat to derivation data
            let c = crate::cohomology::unflatten(&rep, 1, v);
            Derivation0::from_cochain(l, &c)
        })
        .collect();
    let dim_h1 = z_basis.len() - b_cols.len();
    let flat = Mat::from_cols(
        derivations.iter().map(|d| d.flatten()).collect(),
        perm.len(),
    );
    DerivationSpace {
        algebra: l.clone(),
        rep,
        derivations,
        inner,
        dim_h1,
        flat,
    }
}

/// The strict derivation Lie 2-algebra `Der(g)` with its dictionaries.
#[derive(Clone, Debug)]
pub struct DerAlgebra<R> {
    pub algebra: Lie2Algebra<R>,
    pub space: DerivationSpace<R>,
    /// `Der_{-1} = Hom(g0, g-1)`; basis = elementary maps in row-major order.
    pub derm1: FinSpace,
}

impl<R: Field> DerAlgebra<R> {
    /// `Theta` as coordinates in `Der_{-1}` (row-major of the matrix).
    pub fn theta_coords(&self, theta: &LinMap<R>) -> Vector<R> {
        let n0 = self.space.algebra.g0().dim();
        let n1 = self.space.algebra.gm1().dim();
        let mut out = Vec::with_capacity(n0 * n1);
        for i in 0..n1 {
            for j in 0..n0 {
                out.push(theta.mat()[(i, j)].clone());
            }
        }
        out
    }

    pub fn theta_map(&self, coords: &[R]) -> LinMap<R> {
        let l = &self.space.algebra;
        let n0 = l.g0().dim();
        let n1 = l.gm1().dim();
        LinMap::new(
            l.g0().clone(),
            l.gm1().clone(),
            Mat::from_fn(n1, n0, |i, j| coords[i * n0 + j].clone()),
        )
        .expect("shape")
    }

    /// `d-bar(Theta) = ((d Theta, Theta d), l_{delta Theta})`.
    pub fn dbar(&self, theta: &LinMap<R>) -> Derivation0<R> {
        let l = &self.space.algebra;
        let x0 = l.d().compose(theta).expect("shape");
        let x1 = theta.compose(l.d()).expect("shape");
        let n0 = l.g0().dim();
        let mut lx = MultiTensor::new(
            vec![
                (l.g0().clone(), Symmetry::Alt),
                (l.g0().clone(), Symmetry::Alt),
            ],
            l.gm1().clone(),
        );
        for t in increasing_tuples(n0, 2, true) {
            let (x, y) = (t[0], t[1]);
            // Theta[x,y] - [x, Theta y] - [Theta x, y]
            let mut val = theta.apply(&l.l2_00().eval_basis(&[x, y]));
            val = crate::exactlin::mat::vec_sub(
                &val,
                &l.bracket01(&unit_vec(n0, x), &theta.apply_basis(y)),
            );
            val = crate::exactlin::mat::vec_add(
                &val,
                &l.bracket01(&unit_vec(n0, y), &theta.apply_basis(x)),
            );
            lx.set_entry(&t, val).expect("canonical");
        }
        Derivation0 { x0, x1, lx }
    }
}

/// Build `Der(g)` and verify it is a strict Lie 2-algebra.
pub fn build_der<R: Field>(l: &Lie2Algebra<R>) -> Result<DerAlgebra<R>> {
    let space = derivation_space(l);
    let n0 = l.g0().dim();
    let n1 = l.gm1().dim();
    let der0 = FinSpace::numbered(format!("Der0({})", l.g0().name()), "D", space.derivations.len());
    let mut labels = Vec::with_capacity(n0 * n1);
    for i in 0..n1 {
        for j in 0..n0 {
            labels.push(format!("T{}{}", i + 1, j + 1));
        }
    }
    let derm1 = FinSpace::new(format!("Derm1({})", l.g0().name()), labels);

    let shell = DerAlgebra {
        algebra: Lie2Algebra::zero(),
        space,
        derm1: derm1.clone(),
    };

    // differential
    let mut d_cols = Vec::with_capacity(derm1.dim());
    for a in 0..derm1.dim() {
        let theta = shell.theta_map(&unit_vec(derm1.dim(), a));
        let der = shell.dbar(&theta);
        let coords = shell
            .space
            .coords(&der)
            .ok_or_else(|| Error::Internal("dbar(Theta) is not a derivation".to_string()))?;
        d_cols.push(coords);
    }
    let d = LinMap::from_images(derm1.clone(), der0.clone(), d_cols)?;

    // bracket on Der0
    let mut l2_00 = l2_00_shape::<R>(&der0);
    for t in increasing_tuples(der0.dim(), 2, true) {
        let bi = &shell.space.derivations[t[0]];
        let bj = &shell.space.derivations[t[1]];
        let br = bi.bracket(bj);
        let coords = shell
            .space
            .coords(&br)
            .ok_or_else(|| Error::Internal("derivation bracket is not closed".to_string()))?;
        l2_00.set_entry(&t, coords)?;
    }

    // mixed bracket {(X,lX), Theta} = X1 Theta - Theta X0
    let mut l2_01 = l2_01_shape::<R>(&der0, &derm1);
    for i in 0..der0.dim() {
        let der = &shell.space.derivations[i];
        for a in 0..derm1.dim() {
            let theta = shell.theta_map(&unit_vec(derm1.dim(), a));
            let res = der
                .x1
                .compose(&theta)
                .expect("shape")
                .sub(&theta.compose(&der.x0).expect("shape"));
            l2_01.set_entry(&[i, a], shell.theta_coords(&res))?;
        }
    }

    let algebra = Lie2Candidate {
        l3: l3_shape(&der0, &derm1),
        g0: der0,
        gm1: derm1.clone(),
        d,
        l2_00,
        l2_01,
    }
    .build()
    .map_err(|e| Error::Internal(format!("Der(g) failed verification: {e}")))?;

    Ok(DerAlgebra { algebra, ..shell })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lie::sl2;
    use crate::constructions::quadruple::string_killing;
    use crate::scalar::Scalar;

    #[test]
    fn der_of_string_sl2_dimensions() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let der = build_der(&l).unwrap();
        // Der0 = sl2 x sl2* (dim 6), Der-1 = sl2* (dim 3)
        assert_eq!(der.algebra.g0().dim(), 6);
        assert_eq!(der.algebra.gm1().dim(), 3);
        assert!(der.algebra.is_strict());
    }

    #[test]
    fn dbar_on_string_is_zero_minus_theta() {
        // d = 0 for String, so dbar(Theta) = ((0,0), l_{delta Theta}) with
        // l(x,y) = Theta[x,y] (the brackets with g-1 vanish)
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let der = build_der(&l).unwrap();
        let theta = der.theta_map(&unit_vec(3, 0));
        let d = der.dbar(&theta);
        assert!(d.x0.is_zero());
        assert!(d.x1.is_zero());
        // l(e,f) = Theta(h): Theta = T11 sends e -> c
        assert_eq!(
            d.lx.eval_basis(&[0, 1]),
            theta.apply(&l.l2_00().eval_basis(&[0, 1]))
        );
    }

    #[test]
    fn inner_derivations_are_derivations() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let ds = derivation_space(&l);
        for inner in &ds.inner {
            assert!(ds.coords(inner).is_some());
        }
        // abelian with d=0: every (X0,X1,lX) is a derivation
        let g0 = FinSpace::numbered("g0", "x", 2);
        let gm1 = FinSpace::numbered("gm1", "a", 1);
        let ab = Lie2Algebra::<Scalar>::abelian(
            g0.clone(),
            gm1.clone(),
            LinMap::zero(gm1, g0),
        )
        .unwrap();
        let ds = derivation_space(&ab);
        assert_eq!(ds.derivations.len(), 2 * 2 + 1 * 1 + 1 * 1);
    }

    #[test]
    fn der_of_zero_algebra_is_zero() {
        let z = Lie2Algebra::<Scalar>::zero();
        let der = build_der(&z).unwrap();
        assert_eq!(der.algebra.g0().dim(), 0);
        assert_eq!(der.algebra.gm1().dim(), 0);
    }
}
