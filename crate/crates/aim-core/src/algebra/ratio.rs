//! Reduced fractions of polynomials.
//!
//! `PolyRatio<Scalar>` is the field Q(t) of rational functions in the spectral
//! parameter; `PolyRatio<ParamRat>` is the field of rational functions in the
//! independent variable over Q(t). Canonical form at both levels: numerator
//! and denominator coprime, denominator monic and nonzero. Equality is
//! therefore structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::{Coeff, Poly};
use crate::error::{Error, Result};

/// A reduced fraction `num/den` of polynomials over `F`.
#[derive(Clone, PartialEq)]
pub struct PolyRatio<F: Coeff> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Coeff> PolyRatio<F> {
    /// Builds and reduces `num/den`. Fails when `den` is the zero polynomial.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(PolyRatio {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        if den.is_one() {
            return Ok(PolyRatio { num, den });
        }
        if den.is_constant() {
            let inv = den.coeff(0).inv();
            return Ok(PolyRatio {
                num: num.scale(&inv),
                den: Poly::one(),
            });
        }
        let g = Poly::gcd(&num, &den)?;
        let mut num = num.exact_div(&g);
        let mut den = den.exact_div(&g);
        if den.is_constant() {
            let inv = den.coeff(0).inv();
            return Ok(PolyRatio {
                num: num.scale(&inv),
                den: Poly::one(),
            });
        }
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead != F::one() {
            let lead_inv = lead.inv();
            num = num.scale(&lead_inv);
            den = den.scale(&lead_inv);
        }
        Ok(PolyRatio { num, den })
    }

    /// Assembles a value already known to satisfy the canonical-form
    /// invariants (coprime, monic denominator). The property suite checks
    /// `is_reduced` after every operation; re-checking here would double the
    /// cost of the arithmetic fast paths.
    fn from_reduced(num: Poly<F>, den: Poly<F>) -> Self {
        PolyRatio { num, den }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        PolyRatio {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        PolyRatio::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        PolyRatio::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        PolyRatio::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a polynomial (denominator one).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly<F>> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<F> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // num and den are already coprime; only the leading coefficient of
        // the new denominator needs normalizing.
        let lead = self.num.leading().unwrap().clone();
        if lead == F::one() {
            return Ok(PolyRatio::from_reduced(self.den.clone(), self.num.clone()));
        }
        let inv = lead.inv();
        Ok(PolyRatio::from_reduced(
            self.den.scale(&inv),
            self.num.scale(&inv),
        ))
    }

    /// Formal derivative by the quotient rule. With `num/den` coprime and
    /// `den` monic, the only cancellation in `(num' den - num den')/den^2`
    /// is against a single factor of `den`, so one small GCD reduces it.
    pub fn derivative(&self) -> Self {
        if self.den.is_one() {
            return PolyRatio::from_poly(self.num.derivative());
        }
        let raw = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        if raw.is_zero() {
            return PolyRatio::zero();
        }
        let h = Poly::gcd(&raw, &self.den).expect("den is nonzero");
        PolyRatio::from_reduced(raw.exact_div(&h), &self.den.exact_div(&h) * &self.den)
    }

    /// Integer power; negative exponents require a nonzero value.
    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp >= 0 {
            Ok(PolyRatio {
                num: self.num.pow(exp as u32),
                den: self.den.pow(exp as u32),
            })
        } else {
            if self.is_zero() {
                return Err(Error::DivisionByZero);
            }
            self.recip()?.pow(-exp)
        }
    }

    /// Checks the canonical-form invariants; used by tests and debug asserts.
    pub fn is_reduced(&self) -> bool {
        if self.den.is_zero() {
            return false;
        }
        if self.den.leading() != Some(&F::one()) {
            return false;
        }
        if self.num.is_zero() {
            return self.den.is_one();
        }
        Poly::gcd(&self.num, &self.den).map_or(false, |g| g.is_one())
    }
}

impl<F: Coeff> Add<&PolyRatio<F>> for &PolyRatio<F> {
    type Output = PolyRatio<F>;
    /// Addition over the lcm of the denominators: with both inputs reduced,
    /// the only factor the sum can share with `lcm(b, d)` is the gcd of the
    /// denominators, so one gcd of that size finishes the reduction.
    fn add(self, rhs: &PolyRatio<F>) -> PolyRatio<F> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return PolyRatio::from_poly(&self.num + &rhs.num);
        }
        let g = Poly::gcd(&self.den, &rhs.den).expect("denominators are nonzero");
        let b1 = self.den.exact_div(&g);
        let d1 = rhs.den.exact_div(&g);
        let raw = &(&self.num * &d1) + &(&rhs.num * &b1);
        if raw.is_zero() {
            return PolyRatio::zero();
        }
        let lcm = &(&b1 * &d1) * &g;
        if g.is_one() {
            return PolyRatio::from_reduced(raw, lcm);
        }
        let h = Poly::gcd(&raw, &g).expect("inputs are nonzero");
        if h.is_one() {
            PolyRatio::from_reduced(raw, lcm)
        } else {
            PolyRatio::from_reduced(raw.exact_div(&h), lcm.exact_div(&h))
        }
    }
}

impl<F: Coeff> Sub<&PolyRatio<F>> for &PolyRatio<F> {
    type Output = PolyRatio<F>;
    fn sub(self, rhs: &PolyRatio<F>) -> PolyRatio<F> {
        self + &(-rhs)
    }
}

impl<F: Coeff> Mul<&PolyRatio<F>> for &PolyRatio<F> {
    type Output = PolyRatio<F>;
    /// Cross-reduced product: cancel gcd(a, d) and gcd(c, b) first, after
    /// which the result is already in lowest terms.
    fn mul(self, rhs: &PolyRatio<F>) -> PolyRatio<F> {
        if self.is_zero() || rhs.is_zero() {
            return PolyRatio::zero();
        }
        let g1 = Poly::gcd(&self.num, &rhs.den).expect("nonzero");
        let g2 = Poly::gcd(&rhs.num, &self.den).expect("nonzero");
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        debug_assert!(den.leading() == Some(&F::one()) || den.is_one());
        PolyRatio::from_reduced(num, den)
    }
}

impl<F: Coeff> Div<&PolyRatio<F>> for &PolyRatio<F> {
    type Output = PolyRatio<F>;
    /// Panics on a zero divisor; use [`PolyRatio::checked_div`] otherwise.
    fn div(self, rhs: &PolyRatio<F>) -> PolyRatio<F> {
        self.checked_div(rhs).expect("PolyRatio division by zero")
    }
}

impl<F: Coeff> Neg for &PolyRatio<F> {
    type Output = PolyRatio<F>;
    fn neg(self) -> PolyRatio<F> {
        PolyRatio {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! ratio_owned_ops {
    ($trait:ident, $method:ident) => {
        impl<F: Coeff> $trait<PolyRatio<F>> for PolyRatio<F> {
            type Output = PolyRatio<F>;
            fn $method(self, rhs: PolyRatio<F>) -> PolyRatio<F> {
                $trait::$method(&self, &rhs)
            }
        }
        impl<F: Coeff> $trait<&PolyRatio<F>> for PolyRatio<F> {
            type Output = PolyRatio<F>;
            fn $method(self, rhs: &PolyRatio<F>) -> PolyRatio<F> {
                $trait::$method(&self, rhs)
            }
        }
        impl<F: Coeff> $trait<PolyRatio<F>> for &PolyRatio<F> {
            type Output = PolyRatio<F>;
            fn $method(self, rhs: PolyRatio<F>) -> PolyRatio<F> {
                $trait::$method(self, &rhs)
            }
        }
    };
}

ratio_owned_ops!(Add, add);
ratio_owned_ops!(Sub, sub);
ratio_owned_ops!(Mul, mul);
ratio_owned_ops!(Div, div);

impl<F: Coeff> Neg for PolyRatio<F> {
    type Output = PolyRatio<F>;
    fn neg(self) -> PolyRatio<F> {
        -&self
    }
}

impl<F: Coeff> fmt::Debug for PolyRatio<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

/// Elements of Q(t) form a field, so they serve as the coefficients of the
/// x-level of the tower. The GCD strategy clears everything to bivariate
/// integer polynomials and runs the primitive remainder sequence there.
impl Coeff for PolyRatio<super::Scalar> {
    fn zero() -> Self {
        PolyRatio::zero()
    }
    fn one() -> Self {
        PolyRatio::one()
    }
    fn of_int(v: i64) -> Self {
        PolyRatio::constant(super::Scalar::from(v))
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
        self.recip().expect("inverse of zero PolyRatio")
    }

    /// Joint content extraction: multiply through by the lcm of denominators,
    /// divide out the gcd of the numerators, then normalize the underlying
    /// scalars of all numerators at once.
    fn normalize_content(values: &mut [Self]) {
        if values.iter().all(|v| v.is_zero()) {
            return;
        }
        let mut den_lcm = Poly::one();
        for v in values.iter() {
            if !v.den.is_one() {
                den_lcm = Poly::lcm(&den_lcm, &v.den).expect("lcm of nonzero denominators");
            }
        }
        let mut nums: Vec<Poly<super::Scalar>> = values
            .iter()
            .map(|v| {
                if v.is_zero() {
                    Poly::zero()
                } else if den_lcm.is_one() {
                    v.num.clone()
                } else {
                    &v.num * &den_lcm.exact_div(&v.den)
                }
            })
            .collect();
        let mut num_gcd: Option<Poly<super::Scalar>> = None;
        for n in nums.iter().filter(|n| !n.is_zero()) {
            num_gcd = Some(match num_gcd {
                None => n.clone(),
                Some(g) => Poly::gcd(&g, n).expect("gcd of nonzero polynomials"),
            });
            if num_gcd.as_ref().is_some_and(Poly::is_one) {
                break;
            }
        }
        let g = num_gcd.expect("at least one nonzero value");
        if !g.is_one() {
            for n in nums.iter_mut() {
                if !n.is_zero() {
                    *n = n.exact_div(&g);
                }
            }
        }
        // Flatten one level and rescale every scalar jointly.
        let mut flat: Vec<super::Scalar> = Vec::new();
        for n in nums.iter() {
            flat.extend(n.coeffs().iter().cloned());
        }
        super::scalar::normalize_scalar_content(&mut flat);
        let mut it = flat.into_iter();
        for (v, n) in values.iter_mut().zip(nums.iter()) {
            let coeffs: Vec<super::Scalar> =
                n.coeffs().iter().map(|_| it.next().unwrap()).collect();
            *v = PolyRatio::from_poly(Poly::new(coeffs));
        }
    }

    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Result<Poly<Self>> {
        let g = super::zgcd::zp2_gcd(&xlevel_to_int(a), &xlevel_to_int(b));
        Ok(int_to_xlevel_monic(&g))
    }
}

/// Clears an x-polynomial over Q(t) to bivariate integer coefficients,
/// dropping the overall Q(t) unit (irrelevant to GCDs).
fn xlevel_to_int(p: &Poly<PolyRatio<super::Scalar>>) -> super::zgcd::Zp2 {
    let all_poly = p.coeffs().iter().all(|c| c.den.is_one());
    let cleared: Vec<Poly<super::Scalar>> = if all_poly {
        p.coeffs().iter().map(|c| c.num.clone()).collect()
    } else {
        let mut den_lcm = Poly::one();
        for c in p.coeffs() {
            if !c.is_zero() && !c.den.is_one() {
                den_lcm = Poly::lcm(&den_lcm, &c.den).expect("nonzero denominators");
            }
        }
        p.coeffs()
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Poly::zero()
                } else {
                    &c.num * &den_lcm.exact_div(&c.den)
                }
            })
            .collect()
    };
    // Joint scalar clearing across all coefficient polynomials.
    let mut lcm = num_bigint::BigInt::from(1);
    for poly in &cleared {
        for s in poly.coeffs() {
            if !s.is_zero() {
                lcm = num_integer::lcm(lcm, s.denom().clone());
            }
        }
    }
    cleared
        .iter()
        .map(|poly| {
            super::zgcd::zp_trim(
                poly.coeffs()
                    .iter()
                    .map(|s| s.numer() * (&lcm / s.denom()))
                    .collect(),
            )
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Converts a bivariate integer polynomial back to the x-level, scaled to be
/// monic in x (so its leading Q(t) coefficient is one).
fn int_to_xlevel_monic(g: &super::zgcd::Zp2) -> Poly<PolyRatio<super::Scalar>> {
    let lead = super::poly::int_to_scalar_poly(g.last().expect("nonzero gcd"));
    let coeffs: Vec<PolyRatio<super::Scalar>> = g
        .iter()
        .map(|c| {
            PolyRatio::new(super::poly::int_to_scalar_poly(c), lead.clone())
                .expect("leading coefficient is nonzero")
        })
        .collect();
    Poly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ParamPoly, ParamRat, Scalar};

    fn pp(coeffs: &[i64]) -> ParamPoly {
        Poly::new(coeffs.iter().map(|&c| Scalar::from(c)).collect())
    }

    #[test]
    fn reduction_to_canonical_form() {
        // (2t^2 - 2) / (4t - 4) = (t + 1)/2 with the constant absorbed into
        // the numerator so the denominator stays monic.
        let r = ParamRat::new(pp(&[-2, 0, 2]), pp(&[-4, 4])).unwrap();
        assert_eq!(
            r.num(),
            &ParamPoly::new(vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)])
        );
        assert!(r.den().is_one());
        assert!(r.is_reduced());
    }

    #[test]
    fn denominator_must_be_nonzero() {
        assert_eq!(
            ParamRat::new(pp(&[1]), Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn field_arithmetic() {
        let a = ParamRat::new(pp(&[1]), pp(&[0, 1])).unwrap(); // 1/t
        let b = ParamRat::new(pp(&[-1, 1]), pp(&[0, 1])).unwrap(); // (t-1)/t
        assert!((&a + &b).is_one());
        let q = &a / &b;
        assert_eq!(q, ParamRat::new(pp(&[1]), pp(&[-1, 1])).unwrap());
        assert!(a.checked_div(&ParamRat::zero()).is_err());
    }

    #[test]
    fn quotient_rule() {
        // d/dt (1/t) = -1/t^2
        let a = ParamRat::new(pp(&[1]), pp(&[0, 1])).unwrap();
        assert_eq!(
            a.derivative(),
            ParamRat::new(pp(&[-1]), pp(&[0, 0, 1])).unwrap()
        );
    }

    #[test]
    fn content_normalization_joint() {
        // [ (t+1)/2, (t^2+t)/3 ] -> common factor (t+1)/6 -> [3, 2t]
        let mut v = vec![
            ParamRat::new(pp(&[1, 1]), pp(&[2])).unwrap(),
            ParamRat::new(pp(&[0, 1, 1]), pp(&[3])).unwrap(),
        ];
        Coeff::normalize_content(&mut v);
        assert_eq!(v[0], ParamRat::from_poly(pp(&[3])));
        assert_eq!(v[1], ParamRat::from_poly(pp(&[0, 2])));
    }
}
