//! Rational roots of polynomials in the spectral parameter.
//!
//! Uses the rational-root theorem on the integer-cleared primitive form:
//! every rational root p/q in lowest terms has p dividing the constant term
//! and q dividing the leading coefficient. Irrational and complex roots are
//! reported as a residual factor rather than dropped.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::scalar::{scalar_sign, Scalar};
use super::ParamPoly;
use crate::error::{Error, Result};

/// Rational roots with multiplicities plus the root-free residual factor.
#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    /// Roots sorted ascending, each with its multiplicity.
    pub roots: Vec<(Scalar, u32)>,
    /// What is left of the polynomial after dividing out all rational roots,
    /// in integer-primitive form with positive leading coefficient.
    pub residual: ParamPoly,
}

impl RootReport {
    pub fn root_values(&self) -> Vec<Scalar> {
        self.roots.iter().map(|(r, _)| r.clone()).collect()
    }

    pub fn contains(&self, value: &Scalar) -> bool {
        self.roots.iter().any(|(r, _)| r == value)
    }
}

/// All rational roots of `g` with multiplicity. Errors on the zero
/// polynomial: the caller must treat "identically zero" separately, since
/// then every parameter value is admissible.
pub fn param_rational_roots(g: &ParamPoly) -> Result<RootReport> {
    if g.is_zero() {
        return Err(Error::InvalidInput(
            "rational roots of the zero polynomial".to_string(),
        ));
    }
    let mut work = integer_primitive(g);
    let mut roots: Vec<(Scalar, u32)> = Vec::new();

    // Roots at zero: factor out t^k.
    let zero_mult = work
        .coeffs()
        .iter()
        .take_while(|c| c.is_zero())
        .count() as u32;
    if zero_mult > 0 {
        work = Poly::new(work.coeffs()[zero_mult as usize..].to_vec());
        roots.push((Scalar::zero(), zero_mult));
    }

    if work.degree_or_zero() > 0 {
        let a0 = work.coeff(0).numer().abs();
        let an = work.leading().unwrap().numer().abs();
        let mut candidates: Vec<Scalar> = Vec::new();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                let c = Scalar::new(p.clone(), q.clone()).unwrap();
                candidates.push(c.clone());
                candidates.push(-c);
            }
        }
        candidates.sort();
        candidates.dedup();
        for cand in candidates {
            let mut mult = 0u32;
            while !work.is_constant() && work.eval(&cand).is_zero() {
                let lin = Poly::new(vec![-&cand, Scalar::one()]);
                work = work.exact_div(&lin);
                mult += 1;
            }
            if mult > 0 {
                roots.push((cand, mult));
            }
            if work.is_constant() {
                break;
            }
        }
    }

    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RootReport {
        roots,
        residual: integer_primitive(&work),
    })
}

/// Rescales to coprime integer coefficients with a positive leading one.
pub fn integer_primitive(p: &ParamPoly) -> ParamPoly {
    if p.is_zero() {
        return Poly::zero();
    }
    let mut coeffs = p.coeffs().to_vec();
    super::scalar::normalize_scalar_content(&mut coeffs);
    if scalar_sign(coeffs.last().unwrap()) < 0 {
        for c in coeffs.iter_mut() {
            *c = -&*c;
        }
    }
    Poly::new(coeffs)
}

/// Positive divisors of |n| via trial-division factorization. The inputs at
/// play are products of small eigenvalue factors, so this stays fast.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    assert!(!n.is_zero(), "divisors of zero");
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut push = |p: &BigInt, n: &mut BigInt| {
        let mut e = 0u32;
        while (&*n % p).is_zero() {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
    };
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    push(&two, &mut n);
    push(&three, &mut n);
    let mut p = BigInt::from(5);
    let mut step = BigInt::from(2);
    while &p * &p <= n {
        push(&p, &mut n);
        p += &step;
        step = BigInt::from(6) - step; // alternate 5,7,11,13,...
    }
    if !n.is_one() {
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(coeffs: &[i64]) -> ParamPoly {
        Poly::new(coeffs.iter().map(|&c| Scalar::from(c)).collect())
    }

    #[test]
    fn quadratic_with_two_roots() {
        // t^2 - 3t + 2 -> {1, 2}
        let r = param_rational_roots(&pp(&[2, -3, 1])).unwrap();
        assert_eq!(
            r.roots,
            vec![(Scalar::from(1), 1), (Scalar::from(2), 1)]
        );
        assert!(r.residual.is_constant());
    }

    #[test]
    fn falling_factorial_roots() {
        // t(t-1)(t-2) -> {0, 1, 2}
        let g = &(&pp(&[0, 1]) * &pp(&[-1, 1])) * &pp(&[-2, 1]);
        let r = param_rational_roots(&g).unwrap();
        assert_eq!(r.root_values(), vec![0, 1, 2].into_iter().map(Scalar::from).collect::<Vec<_>>());
    }

    #[test]
    fn irrational_residual_is_kept() {
        // t^2 - 2 has no rational roots
        let r = param_rational_roots(&pp(&[-2, 0, 1])).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.residual, pp(&[-2, 0, 1]));
    }

    #[test]
    fn multiplicity_and_fractions() {
        // (2t - 1)^2 (t + 3)
        let g = &(&pp(&[-1, 2]) * &pp(&[-1, 2])) * &pp(&[3, 1]);
        let r = param_rational_roots(&g).unwrap();
        assert_eq!(
            r.roots,
            vec![(Scalar::from(-3), 1), (Scalar::ratio(1, 2), 2)]
        );
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert!(param_rational_roots(&ParamPoly::zero()).is_err());
    }
}
