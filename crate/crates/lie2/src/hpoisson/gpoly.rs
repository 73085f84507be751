//! Polynomial functions on the shifted dual of a Lie 2-algebra.
//!
//! Generators: the basis of `g-1` in degree 0 (commuting coordinates on the
//! base `g-1*`) and the basis of `g0` in degree 1 (anticommuting). Monomials
//! are stored canonically: sorted even part, strictly sorted odd part, signs
//! normalized by the Koszul rule.

use crate::ring::Ring;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial {
    /// sorted, repeats allowed (degree-0 generators)
    pub even: Vec<usize>,
    /// strictly sorted (degree-1 generators)
    pub odd: Vec<usize>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            even: Vec::new(),
            odd: Vec::new(),
        }
    }

    pub fn even_gen(i: usize) -> Self {
        Monomial {
            even: vec![i],
            odd: Vec::new(),
        }
    }

    pub fn odd_gen(j: usize) -> Self {
        Monomial {
            even: Vec::new(),
            odd: vec![j],
        }
    }

    /// Function degree: each odd generator contributes 1.
    pub fn degree(&self) -> usize {
        self.odd.len()
    }

    /// Total number of generator factors.
    pub fn length(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    /// Product with Koszul sign; `None` if an odd generator repeats.
    pub fn mul(&self, rhs: &Monomial) -> Option<(bool, Monomial)> {
        let mut even = self.even.clone();
        even.extend_from_slice(&rhs.even);
        even.sort_unstable();
        // merge odd parts counting transpositions
        let mut odd = Vec::with_capacity(self.odd.len() + rhs.odd.len());
        let mut negate = false;
        let mut i = 0;
        let mut j = 0;
        while i < self.odd.len() && j < rhs.odd.len() {
            if self.odd[i] == rhs.odd[j] {
                return None;
            }
            if self.odd[i] < rhs.odd[j] {
                odd.push(self.odd[i]);
                i += 1;
            } else {
                // rhs.odd[j] moves past the remaining self.odd elements
                if (self.odd.len() - i) % 2 == 1 {
                    negate = !negate;
                }
                odd.push(rhs.odd[j]);
                j += 1;
            }
        }
        odd.extend_from_slice(&self.odd[i..]);
        odd.extend_from_slice(&rhs.odd[j..]);
        Some((negate, Monomial { even, odd }))
    }

    /// The leading factor and the remainder, so that
    /// `self = factor * remainder` with positive sign.
    pub fn split_leading(&self) -> Option<(Monomial, Monomial)> {
        if self.length() <= 1 {
            return None;
        }
        if !self.even.is_empty() {
            let head = Monomial::even_gen(self.even[0]);
            let rest = Monomial {
                even: self.even[1..].to_vec(),
                odd: self.odd.clone(),
            };
            Some((head, rest))
        } else {
            let head = Monomial::odd_gen(self.odd[0]);
            let rest = Monomial {
                even: Vec::new(),
                odd: self.odd[1..].to_vec(),
            };
            Some((head, rest))
        }
    }
}

/// A graded polynomial: finite sum of monomials with ring coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedPoly<R> {
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> GradedPoly<R> {
    pub fn zero() -> Self {
        GradedPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: R) -> Self {
        let mut p = GradedPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        GradedPoly::constant(R::one())
    }

    pub fn even_gen(i: usize) -> Self {
        let mut p = GradedPoly::zero();
        p.add_term(Monomial::even_gen(i), R::one());
        p
    }

    pub fn odd_gen(j: usize) -> Self {
        let mut p = GradedPoly::zero();
        p.add_term(Monomial::odd_gen(j), R::one());
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut p = GradedPoly::zero();
        p.add_term(m, R::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(R::zero);
        entry.add_assign(&c);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&R::one().neg()))
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = GradedPoly::zero();
        if c.is_zero() {
            return out;
        }
        for (m, v) in self.terms.iter() {
            out.add_term(m.clone(), c.mul(v));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&R::one().neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = GradedPoly::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in rhs.terms.iter() {
                if let Some((neg, m)) = m1.mul(m2) {
                    let c = c1.mul(c2);
                    out.add_term(m, if neg { c.neg() } else { c });
                }
            }
        }
        out
    }

    /// Homogeneous function degree, if the polynomial is homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut deg = None;
        for (m, _) in self.terms.iter() {
            match deg {
                None => deg = Some(m.degree()),
                Some(d) if d == m.degree() => {}
                _ => return None,
            }
        }
        deg
    }

    /// Largest total generator count among terms (0 for the zero polynomial).
    pub fn length(&self) -> usize {
        self.terms.keys().map(|m| m.length()).max().unwrap_or(0)
    }

    /// Partial derivative along an even generator.
    pub fn even_derivative(&self, i: usize) -> Self {
        let mut out = GradedPoly::zero();
        for (m, c) in self.terms.iter() {
            let count = m.even.iter().filter(|&&e| e == i).count();
            if count == 0 {
                continue;
            }
            let mut even = m.even.clone();
            let pos = even.iter().position(|&e| e == i).unwrap();
            even.remove(pos);
            out.add_term(
                Monomial {
                    even,
                    odd: m.odd.clone(),
                },
                c.mul(&R::from_i64(count as i64)),
            );
        }
        out
    }

    /// Evaluate the even part at a rational point of the base (odd terms must
    /// be absent).
    pub fn eval_even(&self, point: &[R]) -> Option<R> {
        let mut acc = R::zero();
        for (m, c) in self.terms.iter() {
            if !m.odd.is_empty() {
                return None;
            }
            let mut term = c.clone();
            for &i in &m.even {
                term = term.mul(&point[i]);
            }
            acc.add_assign(&term);
        }
        Some(acc)
    }
}

impl<R: Ring> fmt::Display for GradedPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for &i in &m.even {
                write!(f, "*a{}", i + 1)?;
            }
            for &j in &m.odd {
                write!(f, "*x{}", j + 1)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn odd_generators_anticommute() {
        let x = GradedPoly::<Scalar>::odd_gen(0);
        let y = GradedPoly::<Scalar>::odd_gen(1);
        assert_eq!(x.mul(&y), y.mul(&x).neg());
        assert!(x.mul(&x).is_zero());
    }

    #[test]
    fn even_generators_commute() {
        let a = GradedPoly::<Scalar>::even_gen(0);
        let b = GradedPoly::<Scalar>::even_gen(1);
        let x = GradedPoly::<Scalar>::odd_gen(0);
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&x), x.mul(&a));
    }

    #[test]
    fn associativity_with_signs() {
        let x = GradedPoly::<Scalar>::odd_gen(0);
        let y = GradedPoly::<Scalar>::odd_gen(1);
        let z = GradedPoly::<Scalar>::odd_gen(2);
        let lhs = x.mul(&y).mul(&z);
        let rhs = x.mul(&y.mul(&z));
        assert_eq!(lhs, rhs);
        // x y z = -y x z = y z x
        assert_eq!(lhs, y.mul(&z).mul(&x));
    }

    #[test]
    fn derivative_of_square() {
        let a = GradedPoly::<Scalar>::even_gen(0);
        let p = a.mul(&a).scale(&q(3));
        let dp = p.even_derivative(0);
        assert_eq!(dp, a.scale(&q(6)));
    }
}
