//! Dense univariate polynomials over an exact coefficient field.
//!
//! The same generic type is used at both levels of the tower: `Poly<Scalar>`
//! is a polynomial in the spectral parameter over Q, and `Poly<ParamRat>` is a
//! polynomial in the independent variable over Q(t). Coefficients are stored
//! densely by ascending power with trailing zeros trimmed, so the zero
//! polynomial is the empty vector and the leading coefficient of anything else
//! is nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Exact field of coefficients. `inv` is only called on nonzero values.
///
/// `normalize_content` scales a coefficient vector by a common unit to keep
/// intermediate growth under control during GCD computation; any common
/// scaling is acceptable since GCDs are only defined up to units.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn of_int(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self;
    fn normalize_content(values: &mut [Self]);
    /// Monic GCD of two nonzero, nonconstant polynomials over this field.
    /// Each field supplies the remainder-sequence strategy that is exact and
    /// fast for it (integer-cleared primitive sequences in practice).
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Result<Poly<Self>>
    where
        Self: Sized;
    /// Division known to be exact; fields may override with a faster route.
    fn poly_exact_div(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self>
    where
        Self: Sized,
    {
        let (q, r) = a.divrem(b);
        debug_assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }
}

impl Coeff for super::Scalar {
    fn zero() -> Self {
        super::Scalar::zero()
    }
    fn one() -> Self {
        super::Scalar::one()
    }
    fn of_int(v: i64) -> Self {
        super::Scalar::from(v)
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        self.recip().expect("inverse of zero Scalar")
    }
    fn normalize_content(values: &mut [Self]) {
        super::scalar::normalize_scalar_content(values);
    }
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Result<Poly<Self>> {
        let g = super::zgcd::zp_gcd(&scalar_poly_to_int(a), &scalar_poly_to_int(b));
        Ok(int_to_scalar_poly(&g).monic())
    }
    /// Exact division through integer-primitive parts: with `a = A*u` and
    /// `b = B*v` (primitive integer polynomials times rational units),
    /// `b | a` over Q implies `B | A` over Z, so the quotient is one integer
    /// division plus a unit.
    fn poly_exact_div(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        if a.is_zero() {
            return Poly::zero();
        }
        let (ai, au) = scalar_poly_to_primitive_int(a);
        let (bi, bu) = scalar_poly_to_primitive_int(b);
        let q = super::zgcd::zp_divexact(&ai, &bi);
        int_to_scalar_poly(&q).scale(&(&au / &bu))
    }
}

/// Clears a rational-coefficient polynomial to integer coefficients (the
/// scalar unit dropped, which GCDs do not care about).
pub(super) fn scalar_poly_to_int(p: &Poly<super::Scalar>) -> super::zgcd::Zp {
    use num_bigint::BigInt;
    let mut lcm = BigInt::from(1);
    for c in p.coeffs() {
        if !c.is_zero() {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
    }
    p.coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}

pub(super) fn int_to_scalar_poly(p: &super::zgcd::Zp) -> Poly<super::Scalar> {
    Poly::new(p.iter().map(|c| super::Scalar::from(c.clone())).collect())
}

/// Splits a nonzero rational polynomial as `pp * unit` with `pp` integer,
/// coprime coefficients and positive leading coefficient.
pub(super) fn scalar_poly_to_primitive_int(
    p: &Poly<super::Scalar>,
) -> (super::zgcd::Zp, super::Scalar) {
    use num_bigint::BigInt;
    use num_traits::Signed;
    let mut lcm = BigInt::from(1);
    for c in p.coeffs() {
        if !c.is_zero() {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
    }
    let cleared: super::zgcd::Zp = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut content = super::zgcd::zp_int_content(&cleared);
    if cleared.last().expect("nonzero polynomial").is_negative() {
        content = -content;
    }
    let pp = cleared.iter().map(|c| c / &content).collect();
    let unit = super::Scalar::new(content, lcm).expect("lcm is nonzero");
    (pp, unit)
}

/// Dense polynomial with coefficients of type `F`, lowest power first.
#[derive(Clone, PartialEq)]
pub struct Poly<F: Coeff> {
    coeffs: Vec<F>,
}

impl<F: Coeff> Poly<F> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, F::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// `c * v^k` where `v` is this level's variable.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Poly::monomial(F::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention deg 0 = 0 for the zero polynomial.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Coefficient of power `k`, zero-extended.
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == F::one()
    }

    pub fn map<G: Coeff>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplies by `v^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Formal derivative in this level's variable.
    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&F::of_int(k as i64)));
        }
        Poly::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder by a nonzero divisor, with exact coefficient
    /// division by the divisor's leading coefficient.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = divisor.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap().mul(&lead_inv);
            if !q.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&q.mul(dc));
                }
                quot[k] = q;
            }
            rem.pop();
            while rem.last().map_or(false, F::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Division known to be exact; panics (in debug) on a nonzero remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        F::poly_exact_div(self, divisor)
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) if *l == F::one() => self.clone(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    /// Applies the coefficient field's content normalization in place.
    pub fn make_primitive(&mut self) {
        F::normalize_content(&mut self.coeffs);
    }

    /// Monic GCD. Zero and constant cases resolve immediately; the general
    /// case runs the coefficient field's integer-cleared primitive remainder
    /// sequence (content normalization at every step keeps growth in check).
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidInput(
                "gcd of two zero polynomials".to_string(),
            ));
        }
        if a.is_zero() {
            return Ok(b.monic());
        }
        if b.is_zero() {
            return Ok(a.monic());
        }
        // A nonzero constant is a unit at this level.
        if a.is_constant() || b.is_constant() {
            return Ok(Poly::one());
        }
        if a == b {
            return Ok(a.monic());
        }
        F::poly_gcd(a, b)
    }

    /// Least common multiple, monic. Zero if either input is zero.
    pub fn lcm(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Ok(Poly::zero());
        }
        let g = Self::gcd(a, b)?;
        Ok((&a.exact_div(&g) * b).monic())
    }
}

impl<F: Coeff> Add<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k);
            let b = rhs.coeffs.get(k);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(out)
    }
}

impl<F: Coeff> Sub<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self + &(-rhs)
    }
}

impl<F: Coeff> Mul<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }
}

impl<F: Coeff> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.iter().map(F::neg).collect(),
        }
    }
}

macro_rules! poly_owned_ops {
    ($trait:ident, $method:ident) => {
        impl<F: Coeff> $trait<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: Poly<F>) -> Poly<F> {
                $trait::$method(&self, &rhs)
            }
        }
        impl<F: Coeff> $trait<&Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: &Poly<F>) -> Poly<F> {
                $trait::$method(&self, rhs)
            }
        }
        impl<F: Coeff> $trait<Poly<F>> for &Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: Poly<F>) -> Poly<F> {
                $trait::$method(self, &rhs)
            }
        }
    };
}

poly_owned_ops!(Add, add);
poly_owned_ops!(Sub, sub);
poly_owned_ops!(Mul, mul);

impl<F: Coeff> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

impl<F: Coeff> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", c)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;

    fn p(coeffs: &[i64]) -> Poly<Scalar> {
        Poly::new(coeffs.iter().map(|&c| Scalar::from(c)).collect())
    }

    #[test]
    fn product_of_conjugates() {
        // (x + 1)(x - 1) = x^2 - 1
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let q = p(&[-1, 0, 2]);
        assert_eq!(&q + &Poly::zero(), q);
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn derivative_drops_degree() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert!(p(&[5]).derivative().is_zero());
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[2, -3, 0, 1, 4]);
        let b = p(&[1, 0, 2]);
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1
        let g = Poly::gcd(&p(&[-1, 0, 1]), &p(&[1, -2, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn gcd_edge_cases() {
        let q = p(&[2, 4]);
        assert_eq!(Poly::gcd(&q, &Poly::zero()).unwrap(), p(&[2, 4]).monic());
        assert_eq!(
            Poly::gcd(&p(&[1, 0, 1]), &p(&[2, 1])).unwrap(),
            Poly::one()
        );
        assert!(Poly::<Scalar>::gcd(&Poly::zero(), &Poly::zero()).is_err());
    }

    #[test]
    fn gcd_divides_both() {
        let a = &p(&[1, 2]) * &p(&[3, 0, 1]);
        let b = &p(&[1, 2]) * &p(&[-5, 1]);
        let g = Poly::gcd(&a, &b).unwrap();
        assert!(a.divrem(&g).1.is_zero());
        assert!(b.divrem(&g).1.is_zero());
        assert_eq!(g, p(&[1, 2]).monic());
    }
}
