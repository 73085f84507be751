//! The homotopy Poisson brackets on polynomial functions, obtained by
//! extending `(d, l2, l3)` of a Lie 2-algebra as multiderivations.
//!
//! Each bracket is a derivation in its last argument (of the degree dictated
//! by the shift), graded skew in shifted degrees, and reproduces the
//! structure tensors on generators. The homotopy Jacobi identities are
//! checked by an explicit unshuffle-sum evaluator.

use super::gpoly::{GradedPoly, Monomial};
use crate::cohomology::perm_parity;
use crate::error::{Error, Result};
use crate::exactlin::tensor::increasing_tuples;
use crate::lie2core::Lie2Algebra;
use crate::ring::Ring;

#[derive(Clone, Debug)]
pub struct BracketFamily<R> {
    pub algebra: Lie2Algebra<R>,
}

impl<R: Ring> BracketFamily<R> {
    pub fn new(algebra: Lie2Algebra<R>) -> Self {
        BracketFamily { algebra }
    }

    /// `l1` on generators: the differential (`a -> d a`, zero on odd).
    fn l1_gen(&self, m: &Monomial) -> GradedPoly<R> {
        debug_assert_eq!(m.length(), 1);
        if let Some(&i) = m.even.first() {
            let da = self.algebra.d().apply_basis(i);
            let mut out = GradedPoly::zero();
            for (j, c) in da.iter().enumerate() {
                out.add_term(Monomial::odd_gen(j), c.clone());
            }
            out
        } else {
            GradedPoly::zero()
        }
    }

    fn poly_from_g0(&self, v: &[R]) -> GradedPoly<R> {
        let mut out = GradedPoly::zero();
        for (j, c) in v.iter().enumerate() {
            out.add_term(Monomial::odd_gen(j), c.clone());
        }
        out
    }

    fn poly_from_gm1(&self, v: &[R]) -> GradedPoly<R> {
        let mut out = GradedPoly::zero();
        for (i, c) in v.iter().enumerate() {
            out.add_term(Monomial::even_gen(i), c.clone());
        }
        out
    }

    /// `l2` on a pair of generators.
    fn l2_gen(&self, a: &Monomial, b: &Monomial) -> GradedPoly<R> {
        let n0 = self.algebra.g0().dim();
        let n1 = self.algebra.gm1().dim();
        let _ = (n0, n1);
        match (a.odd.first(), b.odd.first()) {
            (Some(&i), Some(&j)) => self.poly_from_g0(&self.algebra.l2_00().eval_basis(&[i, j])),
            (Some(&i), None) => {
                let k = b.even[0];
                self.poly_from_gm1(&self.algebra.l2_01().eval_basis(&[i, k]))
            }
            (None, Some(&j)) => {
                // l2(a, x) = -l2(x, a) by the shifted skew rule
                let k = a.even[0];
                self.poly_from_gm1(&self.algebra.l2_01().eval_basis(&[j, k])).neg()
            }
            (None, None) => GradedPoly::zero(),
        }
    }

    fn l3_gen(&self, a: &Monomial, b: &Monomial, c: &Monomial) -> GradedPoly<R> {
        match (a.odd.first(), b.odd.first(), c.odd.first()) {
            (Some(&i), Some(&j), Some(&k)) => {
                self.poly_from_gm1(&self.algebra.l3().eval_basis(&[i, j, k]))
            }
            _ => GradedPoly::zero(),
        }
    }

    /// Shifted degree of a homogeneous polynomial (function degree minus 1).
    fn shifted_degree(p: &GradedPoly<R>) -> Result<i64> {
        p.degree()
            .map(|d| d as i64 - 1)
            .ok_or_else(|| Error::math("bracket argument is not homogeneous".to_string()))
    }

    /// The `m`-ary bracket on homogeneous polynomials, extended from the
    /// generator tables by graded skewness and the Leibniz rule in the last
    /// argument (derivation of degree `3 - 2m + sum of earlier degrees`).
    pub fn bracket(&self, args: &[GradedPoly<R>]) -> Result<GradedPoly<R>> {
        let m = args.len();
        if !(1..=3).contains(&m) {
            return Err(Error::shape("brackets have arity 1..=3".to_string()));
        }
        // expand multilinearly over the terms of every argument
        let mut out = GradedPoly::zero();
        let mut expand: Vec<Vec<(Monomial, R)>> = Vec::with_capacity(m);
        for a in args {
            expand.push(a.terms().map(|(mm, c)| (mm.clone(), c.clone())).collect());
        }
        let mut idx = vec![0usize; m];
        loop {
            let mut coeff = R::one();
            let mut monos: Vec<Monomial> = Vec::with_capacity(m);
            for (k, &i) in idx.iter().enumerate() {
                if expand[k].is_empty() {
                    return Ok(GradedPoly::zero());
                }
                let (mm, c) = &expand[k][i];
                coeff = coeff.mul(c);
                monos.push(mm.clone());
            }
            let val = self.bracket_monomials(&monos)?;
            out = out.add(&val.scale(&coeff));
            // advance the multi-index
            let mut k = 0;
            loop {
                if k == m {
                    return Ok(out);
                }
                idx[k] += 1;
                if idx[k] < expand[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    fn bracket_monomials(&self, monos: &[Monomial]) -> Result<GradedPoly<R>> {
        let m = monos.len();
        // base case: all generators
        if monos.iter().all(|mm| mm.length() == 1) {
            return Ok(match m {
                1 => self.l1_gen(&monos[0]),
                2 => self.l2_gen(&monos[0], &monos[1]),
                _ => self.l3_gen(&monos[0], &monos[1], &monos[2]),
            });
        }
        // constants kill every bracket (derivation of a constant)
        if monos.iter().any(|mm| mm.length() == 0) {
            return Ok(GradedPoly::zero());
        }
        // bubble the last composite argument to the final slot using graded
        // skewness in shifted degrees; everything to its right is a generator
        let last_composite = (0..m).rev().find(|&k| monos[k].length() > 1).unwrap();
        if last_composite < m - 1 {
            let k = last_composite;
            let mut swapped = monos.to_vec();
            swapped.swap(k, k + 1);
            let da = monos[k].degree() as i64 - 1;
            let db = monos[k + 1].degree() as i64 - 1;
            let val = self.bracket_monomials(&swapped)?;
            // l(..., f, g, ...) = -(-1)^{(|f|-1)(|g|-1)} l(..., g, f, ...)
            let negate = (da * db) % 2 == 0;
            return Ok(if negate { val.neg() } else { val });
        }
        // last argument is composite: Leibniz with the declared degree
        let (head, rest) = monos[m - 1].split_leading().expect("composite");
        let mut delta: i64 = 3 - 2 * m as i64;
        for mm in &monos[..m - 1] {
            delta += mm.degree() as i64;
        }
        let mut args_head = monos[..m - 1].to_vec();
        args_head.push(head.clone());
        let mut args_rest = monos[..m - 1].to_vec();
        args_rest.push(rest.clone());
        let left = self
            .bracket_monomials(&args_head)?
            .mul(&GradedPoly::monomial(rest.clone()));
        let right = GradedPoly::monomial(head.clone()).mul(&self.bracket_monomials(&args_rest)?);
        let sign = (delta * head.degree() as i64) % 2 != 0;
        Ok(if sign { left.sub(&right) } else { left.add(&right) })
    }

    pub fn l1(&self, f: &GradedPoly<R>) -> Result<GradedPoly<R>> {
        self.bracket(std::slice::from_ref(f).to_vec().as_slice())
    }

    pub fn l2(&self, f: &GradedPoly<R>, g: &GradedPoly<R>) -> Result<GradedPoly<R>> {
        self.bracket(&[f.clone(), g.clone()])
    }

    pub fn l3(
        &self,
        f: &GradedPoly<R>,
        g: &GradedPoly<R>,
        h: &GradedPoly<R>,
    ) -> Result<GradedPoly<R>> {
        self.bracket(&[f.clone(), g.clone(), h.clone()])
    }

    /// The homotopy Jacobi identity with `n` inputs:
    /// `sum_{i+j=n+1} (-1)^{i(j-1)} sum_unshuffles chi(sigma)
    ///  l_j(l_i(...), ...) = 0`.
    pub fn jacobi_defect(&self, args: &[GradedPoly<R>]) -> Result<GradedPoly<R>> {
        let n = args.len();
        let mut degs: Vec<i64> = Vec::with_capacity(n);
        for a in args {
            degs.push(Self::shifted_degree(a)?);
        }
        let mut defect = GradedPoly::zero();
        for i in 1..=3usize.min(n) {
            let j = n + 1 - i;
            if !(1..=3).contains(&j) {
                continue;
            }
            for chosen in increasing_tuples(n, i, true) {
                let mut perm: Vec<usize> = chosen.clone();
                perm.extend((0..n).filter(|k| !chosen.contains(k)));
                // chi = sgn(sigma) * Koszul sign in shifted degrees
                let mut negate = perm_parity(&perm);
                for a in 0..n {
                    for b in a + 1..n {
                        if perm[a] > perm[b] && (degs[perm[a]] * degs[perm[b]]) % 2 != 0 {
                            negate = !negate;
                        }
                    }
                }
                // (-1)^{i(j-1)}
                if (i * (j - 1)) % 2 == 1 {
                    negate = !negate;
                }
                let inner_args: Vec<GradedPoly<R>> =
                    chosen.iter().map(|&k| args[k].clone()).collect();
                let inner = self.bracket(&inner_args)?;
                if inner.is_zero() {
                    continue;
                }
                let mut outer_args = vec![inner];
                for &k in &perm[i..] {
                    outer_args.push(args[k].clone());
                }
                let term = self.bracket(&outer_args)?;
                defect = defect.add(&if negate { term.neg() } else { term });
            }
        }
        Ok(defect)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lie::sl2;
    use crate::constructions::quadruple::string_killing;
    use crate::sample::{random_verified_algebra, rng_from_seed};
    use crate::scalar::Scalar;

    type P = GradedPoly<Scalar>;

    fn monomials_up_to(n0: usize, n1: usize, max_len: usize) -> Vec<P> {
        // generators and short products, enough for the identity sweep
        let mut gens: Vec<P> = Vec::new();
        for i in 0..n1 {
            gens.push(P::even_gen(i));
        }
        for j in 0..n0 {
            gens.push(P::odd_gen(j));
        }
        let mut out = gens.clone();
        if max_len >= 2 {
            for a in &gens {
                for b in &gens {
                    let p = a.mul(b);
                    if !p.is_zero() {
                        out.push(p);
                    }
                }
            }
        }
        if max_len >= 3 {
            for a in &gens {
                for b in &gens {
                    for c in &gens {
                        let p = a.mul(b).mul(c);
                        if !p.is_zero() {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn generators_reproduce_structure() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let f = BracketFamily::new(l.clone());
        // l3 on three odd generators returns the Cartan value
        let v = f
            .l3(&P::odd_gen(0), &P::odd_gen(1), &P::odd_gen(2))
            .unwrap();
        let expect = P::even_gen(0).scale(&Scalar::from_i64(8));
        assert_eq!(v, expect);
        // l2 on odd pair = bracket
        let b = f.l2(&P::odd_gen(2), &P::odd_gen(0)).unwrap();
        assert_eq!(b, P::odd_gen(0).scale(&Scalar::from_i64(2)));
    }

    #[test]
    fn brackets_of_linear_functions_are_linear() {
        let mut rng = rng_from_seed(71);
        let l = random_verified_algebra(&mut rng, 3);
        let f = BracketFamily::new(l.clone());
        for i in 0..l.g0().dim() {
            for j in 0..l.g0().dim() {
                let v = f.l2(&P::odd_gen(i), &P::odd_gen(j)).unwrap();
                assert!(v.length() <= 1);
            }
            for k in 0..l.gm1().dim() {
                let v = f.l2(&P::odd_gen(i), &P::even_gen(k)).unwrap();
                assert!(v.length() <= 1);
            }
        }
    }

    #[test]
    fn leibniz_rule_holds() {
        let mut rng = rng_from_seed(72);
        let l = random_verified_algebra(&mut rng, 2);
        let f = BracketFamily::new(l.clone());
        let polys = monomials_up_to(l.g0().dim(), l.gm1().dim(), 2);
        for a in polys.iter().take(6) {
            for g in polys.iter().take(6) {
                for h in polys.iter().take(6) {
                    let Some(dg) = g.degree() else { continue };
                    let lhs = f.l2(a, &g.mul(h)).unwrap();
                    let da = a.degree().unwrap() as i64 - 1;
                    let left = f.l2(a, g).unwrap().mul(h);
                    let right = g.mul(&f.l2(a, h).unwrap());
                    let rhs = if (da * dg as i64) % 2 != 0 {
                        left.sub(&right)
                    } else {
                        left.add(&right)
                    };
                    assert_eq!(lhs, rhs, "Leibniz fails");
                }
            }
        }
    }

    #[test]
    fn homotopy_jacobi_identities() {
        let mut rng = rng_from_seed(73);
        for _ in 0..3 {
            let l = random_verified_algebra(&mut rng, 2);
            let f = BracketFamily::new(l.clone());
            let polys = monomials_up_to(l.g0().dim(), l.gm1().dim(), 2);
            // n = 1: l1 l1 = 0
            for p in &polys {
                assert!(f.jacobi_defect(std::slice::from_ref(p)).unwrap().is_zero());
            }
            // n = 2, 3 on a sample of argument tuples
            for a in polys.iter().step_by(3) {
                for b in polys.iter().step_by(4) {
                    let d = f.jacobi_defect(&[a.clone(), b.clone()]).unwrap();
                    assert!(d.is_zero(), "J2 fails");
                    for c in polys.iter().step_by(5) {
                        let d = f
                            .jacobi_defect(&[a.clone(), b.clone(), c.clone()])
                            .unwrap();
                        assert!(d.is_zero(), "J3 fails");
                    }
                }
            }
        }
    }

    #[test]
    fn higher_jacobi_identities_on_generators() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let f = BracketFamily::new(l.clone());
        let gens: Vec<P> = (0..3).map(P::odd_gen).chain((0..1).map(P::even_gen)).collect();
        // n = 4 and n = 5 instances on generator tuples
        for a in &gens {
            for b in &gens {
                for c in &gens {
                    for d in &gens {
                        let defect = f
                            .jacobi_defect(&[a.clone(), b.clone(), c.clone(), d.clone()])
                            .unwrap();
                        assert!(defect.is_zero(), "J4 fails");
                    }
                }
            }
        }
        let five = [
            P::odd_gen(0),
            P::odd_gen(1),
            P::odd_gen(2),
            P::even_gen(0),
            P::odd_gen(0).mul(&P::odd_gen(1)),
        ];
        for a in &five {
            let mut args = five.to_vec();
            args[4] = a.clone();
            let defect = f.jacobi_defect(&args).unwrap();
            assert!(defect.is_zero(), "J5 fails");
        }
    }
}
