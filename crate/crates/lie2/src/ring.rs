//! Ring abstraction shared by the exact-rational scalar and dual-number scalars.
//!
//! Everything downstream (matrices, tensors, verifiers) is generic over [`Ring`],
//! so the same axiom checks run over `Scalar` and over `Dual<Scalar>` without a
//! second code path.

use std::fmt::{Debug, Display};

/// A commutative unital ring with decidable equality and a partial inverse.
///
/// `inv` returns `Some` exactly when the element is a unit. For the rings used
/// here (a field and dual numbers over it) that is enough to drive Gauss-Jordan
/// elimination with unit pivots.
pub trait Ring: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn from_i64(n: i64) -> Self;

    /// The image of `num/den` under the unique map from the rationals.
    ///
    /// All rings here are algebras over the rationals, so this is total for
    /// `den != 0`.
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i64(num).mul(
            &Self::from_i64(den)
                .inv()
                .expect("denominator must be invertible"),
        )
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }
}

/// Marker for rings in which every nonzero element is a unit.
///
/// Kernel and image computations require a field; inversion alone does not.
pub trait Field: Ring {}

/// Dual numbers `a + b eps` with `eps^2 = 0` over an arbitrary base ring.
///
/// Nesting (`Dual<Dual<Scalar>>`) yields two independent nilpotents, which is
/// what the exact first-order differentiation tests use to extract brackets
/// from group commutators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dual<R> {
    pub re: R,
    pub eps: R,
}

impl<R: Ring> Dual<R> {
    pub fn new(re: R, eps: R) -> Self {
        Dual { re, eps }
    }

    pub fn constant(re: R) -> Self {
        Dual {
            re,
            eps: R::zero(),
        }
    }

    /// The nilpotent generator.
    pub fn epsilon() -> Self {
        Dual {
            re: R::zero(),
            eps: R::one(),
        }
    }

    /// `eps * r`, a purely infinitesimal element.
    pub fn infinitesimal(eps: R) -> Self {
        Dual {
            re: R::zero(),
            eps,
        }
    }
}

impl<R: Ring> Display for Dual<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.eps.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})eps", self.eps)
        } else {
            write!(f, "{} + ({})eps", self.re, self.eps)
        }
    }
}

impl<R: Ring> Ring for Dual<R> {
    fn zero() -> Self {
        Dual::constant(R::zero())
    }

    fn one() -> Self {
        Dual::constant(R::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        Dual {
            re: self.re.add(&rhs.re),
            eps: self.eps.add(&rhs.eps),
        }
    }

    fn neg(&self) -> Self {
        Dual {
            re: self.re.neg(),
            eps: self.eps.neg(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        Dual {
            re: self.re.mul(&rhs.re),
            eps: self.re.mul(&rhs.eps).add(&self.eps.mul(&rhs.re)),
        }
    }

    // (a + b eps)^-1 = a^-1 - a^-1 b a^-1 eps, defined iff a is a unit.
    fn inv(&self) -> Option<Self> {
        let a_inv = self.re.inv()?;
        let eps = a_inv.mul(&self.eps).mul(&a_inv).neg();
        Some(Dual { re: a_inv, eps })
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }

    fn from_i64(n: i64) -> Self {
        Dual::constant(R::from_i64(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    type D = Dual<Scalar>;

    #[test]
    fn dual_ring_laws() {
        let a = D::new(Scalar::from_i64(2), Scalar::from_i64(3));
        let b = D::new(Scalar::from_i64(-1), Scalar::from_i64(5));
        let c = D::new(Scalar::from_ratio(1, 2), Scalar::from_i64(7));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn epsilon_squares_to_zero() {
        let eps = D::epsilon();
        assert!(eps.mul(&eps).is_zero());
    }

    #[test]
    fn dual_inverse() {
        let a = D::new(Scalar::from_i64(2), Scalar::from_i64(-3));
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv), D::one());
        // purely infinitesimal elements are not units
        assert!(D::infinitesimal(Scalar::one()).inv().is_none());
    }

    #[test]
    fn nested_duals_commute() {
        // lambda and mu are independent square-zero generators
        type DD = Dual<Dual<Scalar>>;
        let lambda: DD = Dual::infinitesimal(Dual::constant(Scalar::one()));
        let mu: DD = Dual::constant(Dual::infinitesimal(Scalar::one()));
        assert!(lambda.mul(&lambda).is_zero());
        assert!(mu.mul(&mu).is_zero());
        assert!(!lambda.mul(&mu).is_zero());
        assert_eq!(lambda.mul(&mu), mu.mul(&lambda));
    }
}
