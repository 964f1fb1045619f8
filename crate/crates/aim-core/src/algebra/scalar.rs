//! Arbitrary-precision rational scalars, the base coefficient domain.
//!
//! A [`Scalar`] is always kept in canonical reduced form: the denominator is
//! positive, numerator and denominator are coprime, and zero is `0/1`. This
//! makes equality structural, which the rest of the tower relies on.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number with arbitrary-precision numerator and denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    /// Builds `num/den`, reducing to canonical form. Fails on a zero denominator.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(BigRational::new(num, den)))
    }

    /// Convenience constructor for small ratios.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "Scalar::ratio with zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Exact division; `DivisionByZero` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(&self.0 / &rhs.0))
    }

    /// Multiplicative inverse; `DivisionByZero` on zero.
    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    /// Integer power, with negative exponents allowed for nonzero values.
    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(self.0.pow(exp)))
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    /// Decimal approximation, used only for display next to exact values.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub(crate) fn from_big(r: BigRational) -> Self {
        Scalar(r)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar(BigRational::from_integer(v))
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] where the
    /// divisor is not known to be nonzero.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("Scalar division by zero")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `p` or `p/q` with an optional leading minus.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("not a rational literal: `{s}`"));
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Scalar::from(n))
            }
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                Scalar::new(n, d)
            }
        }
    }
}

/// Scales a slice of scalars by the common positive rational that maps them to
/// coprime integers: multiply by the lcm of denominators, divide by the gcd of
/// numerators. Used to keep coefficient growth in check during polynomial GCDs.
pub(crate) fn normalize_scalar_content(values: &mut [Scalar]) {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for v in values.iter() {
        if v.is_zero() {
            continue;
        }
        num_gcd = num_integer::gcd(num_gcd, v.numer().clone());
        den_lcm = num_integer::lcm(den_lcm, v.denom().clone());
    }
    if num_gcd.is_zero() {
        return; // all zero
    }
    let factor = Scalar::from_big(BigRational::new(den_lcm, num_gcd));
    for v in values.iter_mut() {
        *v = &*v * &factor;
    }
}

/// Sign of the value: -1, 0 or 1.
pub(crate) fn scalar_sign(v: &Scalar) -> i32 {
    match v.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_reduces() {
        let r = Scalar::ratio(1, 2) + Scalar::ratio(1, 3);
        assert_eq!(r, Scalar::ratio(5, 6));
    }

    #[test]
    fn construction_canonicalizes() {
        let r = Scalar::new(BigInt::from(2), BigInt::from(4)).unwrap();
        assert_eq!(r, Scalar::ratio(1, 2));
        assert_eq!(r.to_string(), "1/2");
        let neg = Scalar::new(BigInt::from(3), BigInt::from(-6)).unwrap();
        assert_eq!(neg, Scalar::ratio(-1, 2));
        assert!(neg.denom() > &BigInt::zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let r = Scalar::ratio(3, 5).checked_div(&Scalar::zero());
        assert_eq!(r, Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "5/6", "-22/7"] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!("1.5".parse::<Scalar>().is_err());
        assert!("3/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn content_normalization() {
        let mut v = vec![Scalar::ratio(2, 3), Scalar::ratio(4, 9), Scalar::zero()];
        normalize_scalar_content(&mut v);
        assert_eq!(v, vec![Scalar::from(3), Scalar::from(2), Scalar::zero()]);
    }
}
