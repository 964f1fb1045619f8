//! The two-level exact algebra tower.
//!
//! Level one: polynomials and rational functions in the spectral parameter
//! `t` over Q ([`ParamPoly`], [`ParamRat`]). Level two: polynomials and
//! rational functions in the independent variable `x` whose coefficients live
//! in Q(t) ([`XPoly`], [`XRat`]). Every operation returns values in canonical
//! reduced form, so identity tests (in particular "is this rational function
//! identically zero") are structural.

pub mod linalg;
pub mod poly;
pub mod ratio;
pub mod roots;
pub mod scalar;
mod zgcd;

pub use poly::{Coeff, Poly};
pub use ratio::PolyRatio;
pub use roots::{param_rational_roots, RootReport};
pub use scalar::Scalar;

use crate::error::{Error, Result};

/// Polynomial in the spectral parameter over Q.
pub type ParamPoly = Poly<Scalar>;
/// Rational function in the spectral parameter: an element of Q(t).
pub type ParamRat = PolyRatio<Scalar>;
/// Polynomial in the independent variable over Q(t).
pub type XPoly = Poly<ParamRat>;
/// Rational function in the independent variable over Q(t).
pub type XRat = PolyRatio<ParamRat>;

impl ParamPoly {
    /// The spectral parameter itself as a level-one polynomial.
    pub fn t() -> ParamPoly {
        ParamPoly::var()
    }
}

impl ParamRat {
    pub fn from_scalar(v: Scalar) -> ParamRat {
        ParamRat::constant(v)
    }

    pub fn from_int(v: i64) -> ParamRat {
        ParamRat::constant(Scalar::from(v))
    }

    /// The spectral parameter as an element of Q(t).
    pub fn t() -> ParamRat {
        ParamRat::from_poly(ParamPoly::t())
    }

    /// Evaluates at a rational parameter value; fails on a pole.
    pub fn eval_scalar(&self, at: &Scalar) -> Result<Scalar> {
        let den = self.den().eval(at);
        if den.is_zero() {
            return Err(Error::PoleAtParameterValue(at.clone()));
        }
        Ok(&self.num().eval(at) / &den)
    }

    /// True when the value does not involve the parameter.
    pub fn is_param_free(&self) -> bool {
        self.num().is_constant() && self.den().is_one()
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        self.is_param_free().then(|| self.num().coeff(0))
    }
}

impl XPoly {
    /// The independent variable as a level-two polynomial.
    pub fn x() -> XPoly {
        XPoly::var()
    }

    pub fn from_scalars(coeffs: Vec<Scalar>) -> XPoly {
        XPoly::new(coeffs.into_iter().map(ParamRat::from_scalar).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> XPoly {
        XPoly::new(coeffs.iter().map(|&c| ParamRat::from_int(c)).collect())
    }

    pub fn is_param_free(&self) -> bool {
        self.coeffs().iter().all(ParamRat::is_param_free)
    }

    /// Coefficients as plain rationals; fails if any involves the parameter.
    pub fn scalar_coeffs(&self) -> Result<Vec<Scalar>> {
        self.coeffs()
            .iter()
            .map(|c| {
                c.as_scalar().ok_or_else(|| {
                    Error::InvalidInput("coefficient still involves the parameter".to_string())
                })
            })
            .collect()
    }

    /// Substitutes a rational value for the parameter in every coefficient.
    pub fn substitute_param(&self, value: &Scalar) -> Result<XPoly> {
        let coeffs = self
            .coeffs()
            .iter()
            .map(|c| Ok(ParamRat::from_scalar(c.eval_scalar(value)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(XPoly::new(coeffs))
    }

    /// Rescales by a rational unit to coprime integer scalar coefficients
    /// with a positive leading one. Only meaningful for parameter-free
    /// polynomials; parameter-carrying coefficients are left untouched.
    pub fn integer_primitive(&self) -> XPoly {
        let Ok(mut coeffs) = self.scalar_coeffs() else {
            return self.clone();
        };
        scalar::normalize_scalar_content(&mut coeffs);
        if coeffs
            .last()
            .map_or(false, |l| scalar::scalar_sign(l) < 0)
        {
            for c in coeffs.iter_mut() {
                *c = -&*c;
            }
        }
        XPoly::from_scalars(coeffs)
    }
}

impl XRat {
    pub fn from_scalar(v: Scalar) -> XRat {
        XRat::constant(ParamRat::from_scalar(v))
    }

    pub fn from_int(v: i64) -> XRat {
        XRat::from_scalar(Scalar::from(v))
    }

    /// The independent variable as a rational function.
    pub fn x() -> XRat {
        XRat::from_poly(XPoly::x())
    }

    /// The spectral parameter as a rational function constant in x.
    pub fn t() -> XRat {
        XRat::constant(ParamRat::t())
    }

    pub fn is_param_free(&self) -> bool {
        self.num().is_param_free() && self.den().is_param_free()
    }

    /// Substitutes a rational value for the parameter, re-reducing the
    /// result. Fails when the value is a pole of any coefficient.
    pub fn substitute_param(&self, value: &Scalar) -> Result<XRat> {
        XRat::new(
            self.num().substitute_param(value)?,
            self.den().substitute_param(value)?,
        )
    }
}

/// Clears denominators of a parameter-carrying polynomial's coefficients:
/// returns the level-one numerator polynomials `N_j(t)` of `p`'s coefficients
/// after multiplying through by the lcm of their denominators.
pub fn clear_param_denominators(p: &XPoly) -> Vec<ParamPoly> {
    let mut lcm = ParamPoly::one();
    for c in p.coeffs() {
        if !c.is_zero() {
            lcm = ParamPoly::lcm(&lcm, c.den()).expect("lcm of nonzero denominators");
        }
    }
    p.coeffs()
        .iter()
        .map(|c| {
            if c.is_zero() {
                ParamPoly::zero()
            } else {
                c.num() * lcm.exact_div(c.den())
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_level_arithmetic_with_parameter() {
        // d/dx (t x^2 + x) = 2t x + 1
        let p = XPoly::new(vec![
            ParamRat::from_int(0),
            ParamRat::from_int(1),
            ParamRat::t(),
        ]);
        let d = p.derivative();
        assert_eq!(
            d,
            XPoly::new(vec![
                ParamRat::from_int(1),
                &ParamRat::t() * &ParamRat::from_int(2)
            ])
        );
    }

    #[test]
    fn xrat_derivative_quotient_rule() {
        // d/dx (1/x) = -1/x^2
        let f = XRat::new(XPoly::from_ints(&[1]), XPoly::from_ints(&[0, 1])).unwrap();
        let expect = XRat::new(XPoly::from_ints(&[-1]), XPoly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(f.derivative(), expect);
    }

    #[test]
    fn xrat_sum_collapses() {
        // (1 - 1/x) + 1/x = 1
        let one_over_x = XRat::new(XPoly::from_ints(&[1]), XPoly::from_ints(&[0, 1])).unwrap();
        let f = &XRat::from_int(1) - &one_over_x;
        assert!((&f + &one_over_x).is_one());
    }

    #[test]
    fn parameter_times_x_cancels() {
        // (t/x) * x = t, constant in x
        let t_over_x = XRat::new(
            XPoly::constant(ParamRat::t()),
            XPoly::from_ints(&[0, 1]),
        )
        .unwrap();
        let prod = &t_over_x * &XRat::x();
        assert_eq!(prod, XRat::t());
        assert!(prod.num().is_constant());
    }

    #[test]
    fn substitution_and_poles() {
        // s0 = t/x at t = -2 -> -2/x
        let f = XRat::new(
            XPoly::constant(ParamRat::t()),
            XPoly::from_ints(&[0, 1]),
        )
        .unwrap();
        let g = f.substitute_param(&Scalar::from(-2)).unwrap();
        assert_eq!(
            g,
            XRat::new(XPoly::from_ints(&[-2]), XPoly::from_ints(&[0, 1])).unwrap()
        );

        // 1/(t-1) at t = 1 is a pole
        let pole = XRat::constant(
            ParamRat::new(ParamPoly::one(), ParamPoly::new(vec![Scalar::from(-1), Scalar::one()]))
                .unwrap(),
        );
        assert_eq!(
            pole.substitute_param(&Scalar::from(1)),
            Err(Error::PoleAtParameterValue(Scalar::from(1)))
        );

        // substitution in a parameter-free value is the identity
        let c = XRat::from_int(7);
        assert_eq!(c.substitute_param(&Scalar::zero()).unwrap(), c);
    }

    #[test]
    fn clearing_denominators_in_t() {
        // coefficients [t/(t-1), 1/(t-1)^2] -> N_j = [t(t-1), 1]
        let den1 = ParamPoly::new(vec![Scalar::from(-1), Scalar::one()]);
        let c0 = ParamRat::new(ParamPoly::t(), den1.clone()).unwrap();
        let c1 = ParamRat::new(ParamPoly::one(), &den1 * &den1).unwrap();
        let p = XPoly::new(vec![c0, c1]);
        let cleared = clear_param_denominators(&p);
        assert_eq!(cleared[0], &ParamPoly::t() * &den1);
        assert_eq!(cleared[1], ParamPoly::one());
    }
}
