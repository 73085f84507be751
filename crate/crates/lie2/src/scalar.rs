//! Exact rational scalars.
//!
//! The ground field everywhere is the rationals, so every identity the
//! verifiers check is a decidable equality. Values are stored in lowest terms
//! with a positive denominator; `num_rational::BigRational` maintains both.

use crate::ring::{Dual, Field, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// An arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Scalar(BigRational);

/// Rationals extended by a square-zero infinitesimal; see [`Dual`].
pub type DualScalar = Dual<Scalar>;

impl Scalar {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Scalar(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    fn one() -> Self {
        Scalar(BigRational::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        Scalar(&self.0 + &rhs.0)
    }

    fn neg(&self) -> Self {
        Scalar(-&self.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Scalar(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Scalar(&self.0 * &rhs.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn from_i64(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::new(BigInt::from(num), BigInt::from(den))
    }
}

impl Field for Scalar {}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

/// Canonical form: `p` for integers, `p/q` otherwise, `q > 0`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Error produced when a rational literal does not parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal `{}`", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `p` or `p/q` with optional leading sign on `p`; `q` must be a
    /// positive integer literal.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseScalarError(s.to_string());
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = parse_int(num_str, true).ok_or_else(bad)?;
        let den = match den_str {
            Some(d) => {
                let den = parse_int(d, false).ok_or_else(bad)?;
                if den.is_zero() || den.is_negative() {
                    return Err(bad());
                }
                den
            }
            None => BigInt::one(),
        };
        Ok(Scalar::new(num, den))
    }
}

fn parse_int(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = if allow_sign {
        s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s)
    } else {
        s
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}
