//! The built-in family entries.
//!
//! Coefficient pairs are written as expression strings (with `t` standing
//! for whatever this family calls its spectral parameter) and parsed through
//! the same front end the CLI uses. Products for the closed-form termination
//! quantities are assembled exactly.

use crate::algebra::{ParamPoly, ParamRat, Scalar, XPoly, XRat};
use crate::error::{Error, Result};
use crate::expr::parse_xrat;

use super::{FamilyEntry, Fixture, Params, Provenance};

pub(super) fn all() -> Vec<FamilyEntry> {
    vec![
        cauchy_euler_gen(),
        hermite(),
        hermite_ab(),
        laguerre(),
        confluent(),
        hypergeometric(),
        legendre(),
        jacobi(),
        chebyshev1(),
        chebyshev2(),
        gegenbauer(),
        hyperspherical(),
        bessel(),
        gen_bessel(),
        bochner(),
        cauchy_euler(),
        eq17(),
        gen_laguerre(),
        gen_hermite(),
        theorem6(),
        kratzer(),
    ]
}

// ---- small construction helpers ----

fn s(v: i64) -> Scalar {
    Scalar::from(v)
}

/// Interpolates a rational constant into an expression string.
fn q(v: &Scalar) -> String {
    format!("({v})")
}

fn fam(text: &str, spectral: &str) -> Result<XRat> {
    parse_xrat(text, Some(spectral))
}

/// `t + c` as a level-one polynomial.
fn t_plus(c: Scalar) -> ParamPoly {
    ParamPoly::new(vec![c, Scalar::one()])
}

/// `c - t`.
fn c_minus_t(c: Scalar) -> ParamPoly {
    ParamPoly::new(vec![c, s(-1)])
}

fn product(factors: impl IntoIterator<Item = ParamPoly>) -> ParamPoly {
    factors
        .into_iter()
        .fold(ParamPoly::one(), |acc, f| &acc * &f)
}

/// A termination-quantity closed form: `sign * numer(t) / den(x)`.
fn delta_form(numer: ParamPoly, sign: i64, den: XPoly) -> Result<XRat> {
    XRat::new(
        XPoly::constant(ParamRat::from_poly(numer.scale(&s(sign)))),
        den,
    )
}

fn parity_sign(exp: u32) -> i64 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

fn poly(text: &str) -> XPoly {
    parse_xrat(text, None)
        .ok()
        .and_then(|r| r.as_poly().cloned())
        .expect("fixture text must be a polynomial")
}

fn fixture(n: u32, step: usize, spectral: Scalar, poly: XPoly, provenance: Provenance) -> Fixture {
    Fixture {
        n,
        step,
        spectral,
        poly,
        provenance,
    }
}

/// Builds a polynomial from (power, coefficient) pairs.
fn sparse(pairs: Vec<(usize, Scalar)>) -> XPoly {
    pairs
        .into_iter()
        .fold(XPoly::zero(), |acc, (k, c)| {
            &acc + &XPoly::monomial(ParamRat::from_scalar(c), k)
        })
}

fn require_positive_int(p: &Params, key: &str) -> Result<i64> {
    let v = p.get_i64(key)?;
    if v < 1 {
        return Err(Error::InvalidInput(format!(
            "`{key}` must be a positive integer, got {v}"
        )));
    }
    Ok(v)
}

fn require_nonzero(p: &Params, key: &str) -> Result<Scalar> {
    let v = p.get(key)?.clone();
    if v.is_zero() {
        return Err(Error::InvalidInput(format!("`{key}` must be nonzero")));
    }
    Ok(v)
}

// ---- the entries ----

fn cauchy_euler_gen() -> FamilyEntry {
    FamilyEntry {
        id: "cauchy_euler_gen",
        title: "Cauchy-Euler (generalized)",
        spectral_symbol: "beta",
        spectral_role: "coefficient of y in (x-a)^2 y'' = alpha (x-b) y' + beta y",
        defaults: Params::new().set_int("alpha", 3).set_int("a", 1).set_int("b", 2),
        notes: &[
            "published delta product starts at i=1; the engine's termination quantity carries the extra factor beta (the n=0, constant-solution condition)",
        ],
        build: |p| {
            let alpha = p.get("alpha")?;
            let a = p.get("a")?;
            let b = p.get("b")?;
            Ok((
                fam(&format!("{}(x - {})/(x - {})^2", q(alpha), q(b), q(a)), "t")?,
                fam(&format!("t/(x - {})^2", q(a)), "t")?,
            ))
        },
        expected: |p, n| {
            let alpha = p.get("alpha")?;
            let ni = s(n as i64);
            // beta = n(n - 1 - alpha)
            Ok(vec![(n as usize, &ni * &(&(&ni - &Scalar::one()) - alpha))])
        },
        delta_closed: Some(|p, n| {
            let alpha = p.get("alpha")?;
            let a = p.get("a")?;
            // (-1)^(n+1)/(a-x)^(2n+2) * prod_{i=1}^n (beta + i(1 - i + alpha))
            let numer = product((1..=n).map(|i| {
                let ii = s(i as i64);
                t_plus(&ii * &(&(&Scalar::one() - &ii) + alpha))
            }));
            let base = XPoly::from_scalars(vec![a.clone(), s(-1)]);
            delta_form(numer, parity_sign(n + 1), base.pow(2 * n + 2))
        }),
        fixtures: |p| {
            let alpha = p.get("alpha")?;
            let a = p.get("a")?;
            let b = p.get("b")?;
            let one = Scalar::one();
            // printed row: y2 = (alpha-1)(alpha-2)x^2 + 2(alpha-1)(2a - alpha b)x
            //              + alpha^2 b^2 - a(2b+a) alpha + 2a^2
            let am1 = alpha - &one;
            let am2 = &am1 - &one;
            let y2 = XPoly::from_scalars(vec![
                &(&(&(alpha * alpha) * &(b * b)) - &(&(a * &(&(&s(2) * b) + a)) * alpha))
                    + &(&s(2) * &(a * a)),
                &(&s(2) * &am1) * &(&(&s(2) * a) - &(alpha * b)),
                &am1 * &am2,
            ]);
            let beta = |n: i64| &s(n) * &(&s(n - 1) - alpha);
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, beta(1), XPoly::from_scalars(vec![-b, one]), Provenance::Printed),
                fixture(2, 2, beta(2), y2, Provenance::Printed),
            ])
        },
    }
}

fn hermite() -> FamilyEntry {
    FamilyEntry {
        id: "hermite",
        title: "Hermite",
        spectral_symbol: "k",
        spectral_role: "s0 = -2k; polynomial solutions at k = n",
        defaults: Params::new(),
        notes: &[
            "published delta product starts at i=1; the engine's delta_n carries the extra factor k (e.g. delta_1 = 4k(k-1), not 4(k-1))",
        ],
        build: |_| Ok((fam("2x", "t")?, fam("-2t", "t")?)),
        expected: |_, n| Ok(vec![(n as usize, s(n as i64))]),
        delta_closed: Some(|_, n| {
            // 2^(n+1) * prod_{i=1}^n (k - i)
            let numer = product((1..=n).map(|i| t_plus(s(-(i as i64)))));
            delta_form(numer, 1 << (n + 1), XPoly::one())
        }),
        fixtures: |_| {
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, s(1), poly("x"), Provenance::Printed),
                fixture(2, 2, s(2), poly("2x^2 - 1"), Provenance::Printed),
                fixture(3, 3, s(3), poly("2x^3 - 3x"), Provenance::Printed),
            ])
        },
    }
}

fn hermite_ab() -> FamilyEntry {
    FamilyEntry {
        id: "hermite_ab",
        title: "Hermite (affine argument)",
        spectral_symbol: "c",
        spectral_role: "s0 = c with lambda0 = ax + b; polynomial solutions at c = -na",
        defaults: Params::new().set_int("a", 2).set_int("b", 1),
        notes: &[],
        build: |p| {
            let a = p.get("a")?;
            let b = p.get("b")?;
            Ok((fam(&format!("{}x + {}", q(a), q(b)), "t")?, fam("t", "t")?))
        },
        expected: |p, n| {
            let a = p.get("a")?;
            Ok(vec![(n as usize, &s(-(n as i64)) * a)])
        },
        delta_closed: Some(|p, n| {
            let a = p.get("a")?;
            // (-1)^(n+1) prod_{i=0}^n (c + i a)
            let numer = product((0..=n).map(|i| t_plus(&s(i as i64) * a)));
            delta_form(numer, parity_sign(n + 1), XPoly::one())
        }),
        fixtures: |p| {
            let a = p.get("a")?;
            let b = p.get("b")?;
            let a2 = a * a;
            let b2 = b * b;
            // (ax+b)^2 - a and (ax+b)^3 - 3a(ax+b)
            let y2 = XPoly::from_scalars(vec![&b2 - a, &s(2) * &(a * b), a2.clone()]);
            let y3 = XPoly::from_scalars(vec![
                &(b * &b2) - &(&(&s(3) * a) * b),
                &(&s(3) * &(a * &b2)) - &(&s(3) * &a2),
                &s(3) * &(&a2 * b),
                &a2 * a,
            ]);
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, -a, XPoly::from_scalars(vec![b.clone(), a.clone()]), Provenance::Printed),
                fixture(2, 2, &s(-2) * a, y2, Provenance::Printed),
                fixture(3, 3, &s(-3) * a, y3, Provenance::Printed),
            ])
        },
    }
}

fn laguerre() -> FamilyEntry {
    FamilyEntry {
        id: "laguerre",
        title: "Laguerre",
        spectral_symbol: "a",
        spectral_role: "s0 = a/x; polynomial solutions at a = -n",
        defaults: Params::new(),
        notes: &[],
        build: |_| Ok((fam("1 - 1/x", "t")?, fam("t/x", "t")?)),
        expected: |_, n| Ok(vec![(n as usize, s(-(n as i64)))]),
        delta_closed: Some(|_, n| {
            // (-1)^(n+1)/x^(n+1) * prod_{i=0}^n (i + a)
            let numer = product((0..=n).map(|i| t_plus(s(i as i64))));
            delta_form(numer, parity_sign(n + 1), XPoly::x().pow(n + 1))
        }),
        fixtures: |_| {
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, s(-1), poly("x - 1"), Provenance::Printed),
                fixture(2, 2, s(-2), poly("x^2 - 4x + 2"), Provenance::Printed),
                fixture(3, 3, s(-3), poly("x^3 - 9x^2 + 18x - 6"), Provenance::Printed),
            ])
        },
    }
}

fn confluent() -> FamilyEntry {
    FamilyEntry {
        id: "confluent",
        title: "Confluent hypergeometric",
        spectral_symbol: "a",
        spectral_role: "s0 = a/x with lambda0 = b - c/x; polynomial solutions at a = -nb",
        defaults: Params::new().set_int("b", 2).set_int("c", 3),
        notes: &[],
        build: |p| {
            let b = p.get("b")?;
            let c = p.get("c")?;
            Ok((
                fam(&format!("{} - {}/x", q(b), q(c)), "t")?,
                fam("t/x", "t")?,
            ))
        },
        expected: |p, n| {
            let b = p.get("b")?;
            Ok(vec![(n as usize, &s(-(n as i64)) * b)])
        },
        delta_closed: Some(|p, n| {
            let b = p.get("b")?;
            // (-1)^(n+1)/x^(n+1) * prod_{i=0}^n (i b + a)
            let numer = product((0..=n).map(|i| t_plus(&s(i as i64) * b)));
            delta_form(numer, parity_sign(n + 1), XPoly::x().pow(n + 1))
        }),
        fixtures: |p| {
            let b = p.get("b")?;
            let c = p.get("c")?;
            let one = Scalar::one();
            let b2 = b * b;
            let c1 = c + &one;
            let c2 = c + &s(2);
            // b^2 x^2 - 2b(1+c)x + c(1+c)
            let y2 = XPoly::from_scalars(vec![c * &c1, &s(-2) * &(b * &c1), b2.clone()]);
            // b^3 x^3 - 3b^2(c+2)x^2 + 3b(c+1)(c+2)x - c(c+1)(c+2)
            let y3 = XPoly::from_scalars(vec![
                -&(&(c * &c1) * &c2),
                &s(3) * &(&(b * &c1) * &c2),
                &s(-3) * &(&b2 * &c2),
                &b2 * b,
            ]);
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, -b, XPoly::from_scalars(vec![-c, b.clone()]), Provenance::Printed),
                fixture(2, 2, &s(-2) * b, y2, Provenance::Printed),
                fixture(3, 3, &s(-3) * b, y3, Provenance::Printed),
            ])
        },
    }
}

fn hypergeometric() -> FamilyEntry {
    FamilyEntry {
        id: "hypergeometric",
        title: "Hypergeometric",
        spectral_symbol: "a",
        spectral_role: "first numerator constant; polynomial solutions at a = -n (or b = -n)",
        defaults: Params::new().set_int("b", 3).set("c", Scalar::ratio(1, 2)),
        notes: &[
            "published solution list sets both numerator constants to -n and fails the equation for generic b; fixtures are regenerated from the nullspace at the registered constants",
        ],
        build: |p| {
            let b = p.get("b")?;
            let c = p.get("c")?;
            Ok((
                fam(&format!("((t + {} + 1)x - {})/(x(1-x))", q(b), q(c)), "t")?,
                fam(&format!("t*{}/(x(1-x))", q(b)), "t")?,
            ))
        },
        expected: |_, n| Ok(vec![(n as usize, s(-(n as i64)))]),
        delta_closed: Some(|p, n| {
            let b = p.get("b")?;
            // 1/(x^(n+1)(x-1)^(n+1)) * prod_{i=0}^n (a+i)(b+i)
            let numer = product((0..=n).map(|i| t_plus(s(i as i64)).scale(&(b + &s(i as i64)))));
            let den = (&XPoly::x() * &XPoly::from_ints(&[-1, 1])).pow(n + 1);
            delta_form(numer, 1, den)
        }),
        fixtures: |p| {
            let defaults = Params::new().set_int("b", 3).set("c", Scalar::ratio(1, 2));
            let mut out = vec![fixture(0, 0, s(0), poly("1"), Provenance::Printed)];
            if *p == defaults {
                out.push(fixture(1, 1, s(-1), poly("6x - 1"), Provenance::Oracle));
                out.push(fixture(2, 2, s(-2), poly("16x^2 - 12x + 1"), Provenance::Oracle));
                out.push(fixture(
                    3,
                    3,
                    s(-3),
                    poly("32x^3 - 48x^2 + 18x - 1"),
                    Provenance::Oracle,
                ));
            }
            Ok(out)
        },
    }
}

fn legendre() -> FamilyEntry {
    FamilyEntry {
        id: "legendre",
        title: "Legendre",
        spectral_symbol: "m",
        spectral_role: "degree parameter in s0 = m(m+1)/(x^2-1); polynomial solutions at m = n",
        defaults: Params::new(),
        notes: &[
            "published y2 = x^2 - 1 does not satisfy the m = 2 equation; the solution is proportional to 3x^2 - 1",
            "published delta product (m^2 - i^2) has mirror roots m = -i; the engine's factors vanish at m = -i-1 instead, matching m(m+1) = i(i+1)",
        ],
        build: |_| Ok((fam("2x/(1-x^2)", "t")?, fam("t(t+1)/(x^2-1)", "t")?)),
        expected: |_, n| Ok(vec![(n as usize, s(n as i64))]),
        delta_closed: Some(|_, n| {
            // (-1)^n/(x^2-1)^(n+1) * prod_{i=0}^n (m^2 - i^2)
            let numer = product((0..=n).map(|i| {
                let ii = i as i64;
                ParamPoly::new(vec![s(-(ii * ii)), s(0), Scalar::one()])
            }));
            delta_form(numer, parity_sign(n), XPoly::from_ints(&[-1, 0, 1]).pow(n + 1))
        }),
        fixtures: |_| {
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, s(1), poly("x"), Provenance::Printed),
                fixture(2, 2, s(2), poly("3x^2 - 1"), Provenance::Oracle),
                fixture(3, 3, s(3), poly("5x^3 - 3x"), Provenance::Printed),
            ])
        },
    }
}

fn jacobi() -> FamilyEntry {
    FamilyEntry {
        id: "jacobi",
        title: "Jacobi",
        spectral_symbol: "gamma",
        spectral_role: "s0 = -gamma/(1-x^2); polynomial solutions at gamma = n(n+alpha+beta+1)",
        defaults: Params::new().set_int("alpha", 1).set_int("beta", 2),
        notes: &[
            "published lambda0 numerator reads (alpha+beta+2)x + beta + alpha; the published y1 solves the equation only with alpha - beta, which is what this entry uses",
            "published y2 constant term is garbled (undefined symbols); regenerated from the nullspace",
            "published delta column omits the (1-x^2) power carried by the actual termination quantity",
        ],
        build: |p| {
            let alpha = p.get("alpha")?;
            let beta = p.get("beta")?;
            let apb2 = &(alpha + beta) + &s(2);
            let amb = alpha - beta;
            Ok((
                fam(&format!("({}x + {})/(1-x^2)", q(&apb2), q(&amb)), "t")?,
                fam("-t/(1-x^2)", "t")?,
            ))
        },
        expected: |p, n| {
            let alpha = p.get("alpha")?;
            let beta = p.get("beta")?;
            let ni = s(n as i64);
            // gamma = n(n + alpha + beta + 1)
            Ok(vec![(
                n as usize,
                &ni * &(&(&(&ni + alpha) + beta) + &Scalar::one()),
            )])
        },
        delta_closed: Some(|p, n| {
            let alpha = p.get("alpha")?;
            let beta = p.get("beta")?;
            // printed: prod_{i=0}^n (i(i+1+alpha+beta) - gamma), no x-dependence
            let numer = product((0..=n).map(|i| {
                let ii = s(i as i64);
                c_minus_t(&ii * &(&(&(&ii + &Scalar::one()) + alpha) + beta))
            }));
            delta_form(numer, 1, XPoly::one())
        }),
        fixtures: |p| {
            let alpha = p.get("alpha")?;
            let beta = p.get("beta")?;
            let amb = alpha - beta;
            let apb = alpha + beta;
            let y1 = XPoly::from_scalars(vec![amb.clone(), &apb + &s(2)]);
            // (3+a+b)(4+a+b)x^2 + 2(a-b)(3+a+b)x + (a-b)^2 - 4 - a - b
            let p3 = &apb + &s(3);
            let p4 = &apb + &s(4);
            let y2 = XPoly::from_scalars(vec![
                &(&amb * &amb) - &(&apb + &s(4)),
                &s(2) * &(&amb * &p3),
                &p3 * &p4,
            ]);
            let gamma = |n: i64| &s(n) * &(&(&s(n) + &apb) + &Scalar::one());
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, gamma(1), y1, Provenance::Printed),
                fixture(2, 2, gamma(2), y2, Provenance::Oracle),
            ])
        },
    }
}

fn chebyshev1() -> FamilyEntry {
    FamilyEntry {
        id: "chebyshev1",
        title: "Chebyshev (first kind)",
        spectral_symbol: "m",
        spectral_role: "s0 = -m/(1-x^2); polynomial solutions at m = n^2",
        defaults: Params::new(),
        notes: &[],
        build: |_| Ok((fam("x/(1-x^2)", "t")?, fam("-t/(1-x^2)", "t")?)),
        expected: |_, n| Ok(vec![(n as usize, s((n as i64) * (n as i64)))]),
        delta_closed: Some(|_, n| {
            // (-1)^(n+1)/(x^2-1)^(n+1) * prod_{i=0}^n (m - i^2)
            let numer = product((0..=n).map(|i| {
                let ii = i as i64;
                t_plus(s(-(ii * ii)))
            }));
            delta_form(numer, parity_sign(n + 1), XPoly::from_ints(&[-1, 0, 1]).pow(n + 1))
        }),
        fixtures: |_| {
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, s(1), poly("x"), Provenance::Printed),
                fixture(2, 2, s(4), poly("2x^2 - 1"), Provenance::Printed),
                fixture(3, 3, s(9), poly("4x^3 - 3x"), Provenance::Printed),
            ])
        },
    }
}

fn chebyshev2() -> FamilyEntry {
    FamilyEntry {
        id: "chebyshev2",
        title: "Chebyshev (second kind)",
        spectral_symbol: "m",
        spectral_role: "s0 = -m/(1-x^2); polynomial solutions at m = n(n+2)",
        defaults: Params::new(),
        notes: &[],
        build: |_| Ok((fam("3x/(1-x^2)", "t")?, fam("-t/(1-x^2)", "t")?)),
        expected: |_, n| Ok(vec![(n as usize, s((n as i64) * (n as i64 + 2)))]),
        delta_closed: Some(|_, n| {
            // -1/(x^2-1)^(n+1) * prod_{i=0}^n (i(i+2) - m)
            let numer = product((0..=n).map(|i| {
                let ii = i as i64;
                c_minus_t(s(ii * (ii + 2)))
            }));
            delta_form(numer, -1, XPoly::from_ints(&[-1, 0, 1]).pow(n + 1))
        }),
        fixtures: |_| {
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, s(3), poly("x"), Provenance::Printed),
                fixture(2, 2, s(8), poly("4x^2 - 1"), Provenance::Printed),
                fixture(3, 3, s(15), poly("2x^3 - x"), Provenance::Printed),
            ])
        },
    }
}

fn gegenbauer() -> FamilyEntry {
    FamilyEntry {
        id: "gegenbauer",
        title: "Gegenbauer",
        spectral_symbol: "lambda",
        spectral_role: "s0 = -lambda/(1-x^2); polynomial solutions at lambda = n(n+2k)",
        defaults: Params::new().set_int("k", 1),
        notes: &[],
        build: |p| {
            let k = p.get("k")?;
            let c = &(&s(2) * k) + &Scalar::one();
            Ok((
                fam(&format!("{}x/(1-x^2)", q(&c)), "t")?,
                fam("-t/(1-x^2)", "t")?,
            ))
        },
        expected: |p, n| {
            let k = p.get("k")?;
            let ni = s(n as i64);
            Ok(vec![(n as usize, &ni * &(&ni + &(&s(2) * k)))])
        },
        delta_closed: Some(|p, n| {
            let k = p.get("k")?;
            let numer = product((0..=n).map(|i| {
                let ii = s(i as i64);
                c_minus_t(&ii * &(&ii + &(&s(2) * k)))
            }));
            delta_form(numer, -1, XPoly::from_ints(&[-1, 0, 1]).pow(n + 1))
        }),
        fixtures: |p| {
            let k = p.get("k")?;
            let lam = |n: i64| &s(n) * &(&s(n) + &(&s(2) * k));
            // y2 = 2(k+1)x^2 - 1
            let y2 = XPoly::from_scalars(vec![s(-1), s(0), &s(2) * &(k + &Scalar::one())]);
            let mut out = vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, lam(1), poly("x"), Provenance::Printed),
                fixture(2, 2, lam(2), y2, Provenance::Printed),
            ];
            if *k == Scalar::one() {
                out.push(fixture(3, 3, lam(3), poly("2x^3 - x"), Provenance::Printed));
            }
            Ok(out)
        },
    }
}

fn hyperspherical() -> FamilyEntry {
    FamilyEntry {
        id: "hyperspherical",
        title: "Hyperspherical",
        spectral_symbol: "lambda",
        spectral_role: "s0 = -lambda/(1-x^2); polynomial solutions at lambda = n(n+1+2k)",
        defaults: Params::new().set_int("k", 1),
        notes: &[],
        build: |p| {
            let k = p.get("k")?;
            let c = &s(2) * &(k + &Scalar::one());
            Ok((
                fam(&format!("{}x/(1-x^2)", q(&c)), "t")?,
                fam("-t/(1-x^2)", "t")?,
            ))
        },
        expected: |p, n| {
            let k = p.get("k")?;
            let ni = s(n as i64);
            Ok(vec![(
                n as usize,
                &ni * &(&(&ni + &Scalar::one()) + &(&s(2) * k)),
            )])
        },
        delta_closed: Some(|p, n| {
            let k = p.get("k")?;
            let numer = product((0..=n).map(|i| {
                let ii = s(i as i64);
                c_minus_t(&ii * &(&(&ii + &Scalar::one()) + &(&s(2) * k)))
            }));
            delta_form(numer, -1, XPoly::from_ints(&[-1, 0, 1]).pow(n + 1))
        }),
        fixtures: |p| {
            let k = p.get("k")?;
            let lam = |n: i64| &s(n) * &(&s(n + 1) + &(&s(2) * k));
            // y2 = (2k+3)x^2 - 1
            let y2 = XPoly::from_scalars(vec![s(-1), s(0), &(&s(2) * k) + &s(3)]);
            let mut out = vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, lam(1), poly("x"), Provenance::Printed),
                fixture(2, 2, lam(2), y2, Provenance::Printed),
            ];
            if *k == Scalar::one() {
                out.push(fixture(3, 3, lam(3), poly("7x^3 - 3x"), Provenance::Oracle));
            }
            Ok(out)
        },
    }
}

fn bessel() -> FamilyEntry {
    FamilyEntry {
        id: "bessel",
        title: "Bessel polynomials",
        spectral_symbol: "gamma",
        spectral_role: "s0 = gamma/x^2; polynomial solutions at gamma = n(n+1)",
        defaults: Params::new(),
        notes: &[],
        build: |_| Ok((fam("-2(x+1)/x^2", "t")?, fam("t/x^2", "t")?)),
        expected: |_, n| Ok(vec![(n as usize, s((n as i64) * (n as i64 + 1)))]),
        delta_closed: Some(|_, n| {
            // (-1)^(n+1)/x^(2n+2) * prod_{i=0}^n (gamma - i(i+1))
            let numer = product((0..=n).map(|i| {
                let ii = i as i64;
                t_plus(s(-(ii * (ii + 1))))
            }));
            delta_form(numer, parity_sign(n + 1), XPoly::x().pow(2 * n + 2))
        }),
        fixtures: |_| {
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, s(2), poly("1 + x"), Provenance::Printed),
                fixture(2, 2, s(6), poly("1 + 3x + 3x^2"), Provenance::Printed),
                fixture(3, 3, s(12), poly("1 + 6x + 15x^2 + 15x^3"), Provenance::Printed),
            ])
        },
    }
}

fn gen_bessel() -> FamilyEntry {
    FamilyEntry {
        id: "gen_bessel",
        title: "Generalized Bessel polynomials",
        spectral_symbol: "gamma",
        spectral_role: "s0 = gamma/x^2; polynomial solutions at gamma = n(n+a-1)",
        defaults: Params::new().set_int("a", 3).set_int("b", 2),
        notes: &[],
        build: |p| {
            let a = p.get("a")?;
            let b = p.get("b")?;
            Ok((
                fam(&format!("-({}x + {})/x^2", q(a), q(b)), "t")?,
                fam("t/x^2", "t")?,
            ))
        },
        expected: |p, n| {
            let a = p.get("a")?;
            let ni = s(n as i64);
            Ok(vec![(
                n as usize,
                &ni * &(&(&ni + a) - &Scalar::one()),
            )])
        },
        delta_closed: Some(|p, n| {
            let a = p.get("a")?;
            let numer = product((0..=n).map(|i| {
                let ii = s(i as i64);
                t_plus(-&(&ii * &(&(&ii - &Scalar::one()) + a)))
            }));
            delta_form(numer, parity_sign(n + 1), XPoly::x().pow(2 * n + 2))
        }),
        fixtures: |p| {
            let a = p.get("a")?;
            let b = p.get("b")?;
            let gam = |n: i64| &s(n) * &(&(&s(n) + a) - &Scalar::one());
            let a1 = a + &Scalar::one();
            let a2 = a + &s(2);
            let a3 = a + &s(3);
            let a4 = a + &s(4);
            // (a+1)(a+2)x^2 + 2b(a+1)x + b^2
            let y2 = XPoly::from_scalars(vec![b * b, &s(2) * &(b * &a1), &a1 * &a2]);
            // (a+2)(a+3)(a+4)x^3 + 3b(a+2)(a+3)x^2 + 3b^2(2+a)x + b^3
            let y3 = XPoly::from_scalars(vec![
                &(b * b) * b,
                &s(3) * &(&(b * b) * &a2),
                &s(3) * &(&(b * &a2) * &a3),
                &(&a2 * &a3) * &a4,
            ]);
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, gam(1), XPoly::from_scalars(vec![b.clone(), a.clone()]), Provenance::Printed),
                fixture(2, 2, gam(2), y2, Provenance::Printed),
                fixture(3, 3, gam(3), y3, Provenance::Printed),
            ])
        },
    }
}

fn bochner() -> FamilyEntry {
    FamilyEntry {
        id: "bochner",
        title: "Quadratic-coefficient eigenvalue equation",
        spectral_symbol: "mu",
        spectral_role: "(ax^2+bx+c) y'' + (dx+e) y' = mu y; polynomial solutions at mu = n(d+(n-1)a)",
        defaults: Params::new()
            .set_int("a", 1)
            .set_int("b", 2)
            .set_int("c", 1)
            .set_int("d", 3)
            .set_int("e", 1),
        notes: &[
            "published y3 constant term omits the 12abc contribution; the fixture uses the value forced by the coefficient recurrence",
        ],
        build: |p| {
            let a = p.get("a")?;
            let b = p.get("b")?;
            let c = p.get("c")?;
            let d = p.get("d")?;
            let e = p.get("e")?;
            let quad = format!("({}x^2 + {}x + {})", q(a), q(b), q(c));
            Ok((
                fam(&format!("-({}x + {})/{}", q(d), q(e), quad), "t")?,
                fam(&format!("t/{}", quad), "t")?,
            ))
        },
        expected: |p, n| {
            let a = p.get("a")?;
            let d = p.get("d")?;
            let ni = s(n as i64);
            // mu = n(d + (n-1)a)
            Ok(vec![(
                n as usize,
                &ni * &(d + &(&(&ni - &Scalar::one()) * a)),
            )])
        },
        delta_closed: Some(|p, n| {
            let a = p.get("a")?;
            let b = p.get("b")?;
            let c = p.get("c")?;
            let d = p.get("d")?;
            // -1/(ax^2+bx+c)^(n+1) * prod_{k=0}^n (k(d+(k-1)a) - mu)
            let numer = product((0..=n).map(|k| {
                let ki = s(k as i64);
                c_minus_t(&ki * &(d + &(&(&ki - &Scalar::one()) * a)))
            }));
            let den = XPoly::from_scalars(vec![c.clone(), b.clone(), a.clone()]).pow(n + 1);
            delta_form(numer, -1, den)
        }),
        fixtures: |p| {
            let a = p.get("a")?;
            let b = p.get("b")?;
            let c = p.get("c")?;
            let d = p.get("d")?;
            let e = p.get("e")?;
            let mu = |n: i64| &s(n) * &(d + &(&s(n - 1) * a));
            let y1 = XPoly::from_scalars(vec![e.clone(), d.clone()]);
            // y2 = (d+a)(d+2a)x^2 + 2(b+e)(d+a)x + e(b+e) + c(d+2a)
            let da = d + a;
            let d2a = d + &(&s(2) * a);
            let d3a = d + &(&s(3) * a);
            let d4a = d + &(&s(4) * a);
            let be = b + e;
            let y2 = XPoly::from_scalars(vec![
                &(e * &be) + &(c * &d2a),
                &s(2) * &(&be * &da),
                &da * &d2a,
            ]);
            // y3 with the exact constant term:
            //   c3 = (d+2a)(d+3a)(d+4a)
            //   c2 = 3(d+2a)(d+3a)(e+2b)
            //   c1 = 3(d+2a)((b+e)(2b+e) + c(d+4a))
            //   c0 = (2b+e)(2c(d+3a) + e(b+e)) + ce(d+4a)
            let b2e = &(&s(2) * b) + e;
            let c1 = &s(3) * &(&d2a * &(&(&be * &b2e) + &(c * &d4a)));
            let c0 = &(&b2e * &(&(&(&s(2) * c) * &d3a) + &(e * &be))) + &(&(c * e) * &d4a);
            let y3 = XPoly::from_scalars(vec![
                c0,
                c1,
                &s(3) * &(&(&d2a * &d3a) * &(&(&s(2) * b) + e)),
                &(&d2a * &d3a) * &d4a,
            ]);
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, mu(1), y1, Provenance::Printed),
                fixture(2, 2, mu(2), y2, Provenance::Printed),
                fixture(3, 3, mu(3), y3, Provenance::Oracle),
            ])
        },
    }
}

fn cauchy_euler() -> FamilyEntry {
    FamilyEntry {
        id: "cauchy_euler",
        title: "Cauchy-Euler (classic form)",
        spectral_symbol: "beta",
        spectral_role: "x^2 y'' + alpha x y' + beta y = 0; solutions y = x^n at beta = -n(n-1+alpha)",
        defaults: Params::new().set_int("alpha", 2),
        notes: &[
            "the published condition beta = n(n-1-alpha) carries the sign convention of the generalized form; substituting y = x^n into this equation forces beta = -n(n-1+alpha)",
            "published delta product starts at i=1 and transposes i-1 to 1-i inside the factors",
        ],
        build: |p| {
            let alpha = p.get("alpha")?;
            Ok((
                fam(&format!("-{}/x", q(alpha)), "t")?,
                fam("-t/x^2", "t")?,
            ))
        },
        expected: |p, n| {
            let alpha = p.get("alpha")?;
            let ni = s(n as i64);
            // beta = -n(n - 1 + alpha)
            Ok(vec![(
                n as usize,
                -&(&ni * &(&(&ni - &Scalar::one()) + alpha)),
            )])
        },
        delta_closed: Some(|p, n| {
            let alpha = p.get("alpha")?;
            // published: (-1)^(n+1)/x^(2n+2) * prod_{i=1}^n (beta + i(1-i+alpha))
            let numer = product((1..=n).map(|i| {
                let ii = s(i as i64);
                t_plus(&ii * &(&(&Scalar::one() - &ii) + alpha))
            }));
            delta_form(numer, parity_sign(n + 1), XPoly::x().pow(2 * n + 2))
        }),
        fixtures: |p| {
            let alpha = p.get("alpha")?;
            let beta = |n: i64| -&(&s(n) * &(&s(n - 1) + alpha));
            Ok((0..=4u32)
                .map(|n| {
                    fixture(
                        n,
                        n as usize,
                        beta(n as i64),
                        XPoly::monomial(ParamRat::one(), n as usize),
                        Provenance::Printed,
                    )
                })
                .collect())
        },
    }
}

fn eq17() -> FamilyEntry {
    FamilyEntry {
        id: "eq17",
        title: "Chebyshev-type family",
        spectral_symbol: "mu",
        spectral_role: "(1-x^2) y'' - a x y' + mu y = 0; polynomial solutions at mu = n(n+a-1)",
        defaults: Params::new().set_int("a", 1),
        notes: &[
            "published y3 = (a+1)x^3 - 3x fails the equation; the leading coefficient must be a+3 (at a=1 the degree-3 solution is 4x^3 - 3x)",
        ],
        build: |p| {
            let a = p.get("a")?;
            Ok((
                fam(&format!("{}x/(1-x^2)", q(a)), "t")?,
                fam("-t/(1-x^2)", "t")?,
            ))
        },
        expected: |p, n| {
            let a = p.get("a")?;
            let ni = s(n as i64);
            Ok(vec![(
                n as usize,
                &ni * &(&(&ni + a) - &Scalar::one()),
            )])
        },
        delta_closed: Some(|p, n| {
            let a = p.get("a")?;
            // -1/(x^2-1)^(n+1) * prod_{k=0}^n (k(k+a-1) - mu)
            let numer = product((0..=n).map(|k| {
                let ki = s(k as i64);
                c_minus_t(&ki * &(&(&ki + a) - &Scalar::one()))
            }));
            delta_form(numer, -1, XPoly::from_ints(&[-1, 0, 1]).pow(n + 1))
        }),
        fixtures: |p| {
            let a = p.get("a")?;
            let mu = |n: i64| &s(n) * &(&s(n - 1) + a);
            let y2 = XPoly::from_scalars(vec![s(-1), s(0), a + &Scalar::one()]);
            let y3 = XPoly::from_scalars(vec![s(0), s(-3), s(0), a + &s(3)]);
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(1, 1, mu(1), poly("x"), Provenance::Printed),
                fixture(2, 2, mu(2), y2, Provenance::Printed),
                fixture(3, 3, mu(3), y3, Provenance::Oracle),
            ])
        },
    }
}

fn gen_laguerre() -> FamilyEntry {
    FamilyEntry {
        id: "gen_laguerre",
        title: "Generalized Laguerre equation",
        spectral_symbol: "c",
        spectral_role: "u'' = (a x^N - b/x) u' - a c x^(N-1) u; terminates at c = n(N+1)",
        defaults: Params::new().set_int("N", 1).set_int("a", 1).set_int("b", 1),
        notes: &[],
        build: |p| {
            let n_exp = require_positive_int(p, "N")?;
            let a = require_nonzero(p, "a")?;
            let b = require_nonzero(p, "b")?;
            Ok((
                fam(
                    &format!("({}x^{} - {})/x", q(&a), n_exp + 1, q(&b)),
                    "t",
                )?,
                fam(&format!("-{}*t*x^{}", q(&a), n_exp - 1), "t")?,
            ))
        },
        expected: |p, n| {
            let n_exp = require_positive_int(p, "N")?;
            let step = (n as i64) * (n_exp + 1);
            Ok(vec![(step as usize, s(step))])
        },
        delta_closed: None,
        fixtures: |p| {
            let n_exp = require_positive_int(p, "N")? as usize;
            let a = p.get("a")?;
            let b = p.get("b")?;
            let np1 = n_exp + 1;
            let bn = b + &s(n_exp as i64);
            let b2n1 = b + &s(2 * n_exp as i64 + 1);
            Ok(vec![
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                // (N + b) - a x^(N+1)
                fixture(
                    1,
                    np1,
                    s(np1 as i64),
                    sparse(vec![(0, bn.clone()), (np1, -a)]),
                    Provenance::Printed,
                ),
                // (b+N)(b+2N+1) - 2a(b+2N+1) x^(N+1) + a^2 x^(2N+2)
                fixture(
                    2,
                    2 * np1,
                    s(2 * np1 as i64),
                    sparse(vec![
                        (0, &bn * &b2n1),
                        (np1, &s(-2) * &(a * &b2n1)),
                        (2 * np1, a * a),
                    ]),
                    Provenance::Printed,
                ),
            ])
        },
    }
}

fn gen_hermite() -> FamilyEntry {
    FamilyEntry {
        id: "gen_hermite",
        title: "Generalized Hermite equation",
        spectral_symbol: "c",
        spectral_role: "u'' = a x^N u' - a c x^(N-1) u; terminates at c = n(N+1) and c = n(N+1)+1",
        defaults: Params::new().set_int("N", 1).set_int("a", 1),
        notes: &[],
        build: |p| {
            let n_exp = require_positive_int(p, "N")?;
            let a = require_nonzero(p, "a")?;
            Ok((
                fam(&format!("{}x^{}", q(&a), n_exp), "t")?,
                fam(&format!("-{}*t*x^{}", q(&a), n_exp - 1), "t")?,
            ))
        },
        expected: |p, n| {
            let n_exp = require_positive_int(p, "N")?;
            let even = (n as i64) * (n_exp + 1);
            let odd = even + 1;
            Ok(vec![
                (even as usize, s(even)),
                (odd as usize, s(odd)),
            ])
        },
        delta_closed: None,
        fixtures: |p| {
            let n_exp = require_positive_int(p, "N")? as usize;
            let a = p.get("a")?;
            let np1 = n_exp + 1;
            let nn = s(n_exp as i64);
            let n2n1 = s(2 * n_exp as i64 + 1);
            let n2 = s(n_exp as i64 + 2);
            let n23 = s(2 * n_exp as i64 + 3);
            Ok(vec![
                // branch c = n(N+1): polynomials in x^(N+1)
                fixture(0, 0, s(0), poly("1"), Provenance::Printed),
                fixture(
                    1,
                    np1,
                    s(np1 as i64),
                    sparse(vec![(0, nn.clone()), (np1, -a)]),
                    Provenance::Printed,
                ),
                fixture(
                    2,
                    2 * np1,
                    s(2 * np1 as i64),
                    sparse(vec![
                        (0, &nn * &n2n1),
                        (np1, &s(-2) * &(a * &n2n1)),
                        (2 * np1, a * a),
                    ]),
                    Provenance::Printed,
                ),
                // branch c = n(N+1)+1: x times polynomials in x^(N+1)
                fixture(0, 1, s(1), poly("x"), Provenance::Oracle),
                fixture(
                    1,
                    np1 + 1,
                    s(np1 as i64 + 1),
                    sparse(vec![(1, n2.clone()), (np1 + 1, -a)]),
                    Provenance::Oracle,
                ),
                fixture(
                    2,
                    2 * np1 + 1,
                    s(2 * np1 as i64 + 1),
                    sparse(vec![
                        (1, &n2 * &n23),
                        (np1 + 1, &s(-2) * &(a * &n23)),
                        (2 * np1 + 1, a * a),
                    ]),
                    Provenance::Oracle,
                ),
            ])
        },
    }
}

fn theorem6() -> FamilyEntry {
    FamilyEntry {
        id: "theorem6",
        title: "Generalized Legendre/Chebyshev equation",
        spectral_symbol: "w",
        spectral_role: "u'' = (a x^N/(1-s x^(N+1)) - b/x) u' - w x^(N-1)/(1-s x^(N+1)) u",
        defaults: Params::new()
            .set_int("N", 1)
            .set_int("s", 1)
            .set_int("a", 2)
            .set_int("b", 0),
        notes: &[],
        build: |p| {
            let n_exp = require_positive_int(p, "N")?;
            let sval = require_nonzero(p, "s")?;
            let a = p.get("a")?;
            let b = p.get("b")?;
            let pole = format!("(1 - {}x^{})", q(&sval), n_exp + 1);
            Ok((
                fam(
                    &format!("{}x^{}/{} - {}/x", q(a), n_exp, pole, q(b)),
                    "t",
                )?,
                fam(&format!("-t*x^{}/{}", n_exp - 1, pole), "t")?,
            ))
        },
        expected: |p, n| {
            let n_exp = require_positive_int(p, "N")?;
            let sval = p.get("s")?;
            let a = p.get("a")?;
            let b = p.get("b")?;
            let step = (n as i64) * (n_exp + 1);
            // w = n(N+1)(s(b - 1 + n(N+1)) + a)
            let w = &s(step) * &(&(sval * &(&(b - &Scalar::one()) + &s(step))) + a);
            Ok(vec![(step as usize, w)])
        },
        delta_closed: None,
        fixtures: |p| {
            let known = [
                (
                    (1i64, 1i64, 2i64, 0i64),
                    vec![
                        (0u32, 0usize, 0i64, "1"),
                        (1, 2, 6, "3x^2 - 1"),
                        (2, 4, 20, "35x^4 - 30x^2 + 3"),
                    ],
                ),
                (
                    (1, 1, 1, 0),
                    vec![
                        (0, 0, 0, "1"),
                        (1, 2, 4, "2x^2 - 1"),
                        (2, 4, 16, "8x^4 - 8x^2 + 1"),
                    ],
                ),
                (
                    (2, 1, 2, 0),
                    vec![
                        (0, 0, 0, "1"),
                        (1, 3, 12, "2x^3 - 1"),
                        (2, 6, 42, "7x^6 - 7x^3 + 1"),
                    ],
                ),
            ];
            let sig = (
                p.get_i64("N")?,
                p.get_i64("s")?,
                p.get_i64("a").unwrap_or(0),
                p.get_i64("b").unwrap_or(0),
            );
            for (params, rows) in known {
                if sig == params {
                    return Ok(rows
                        .into_iter()
                        .map(|(n, step, w, text)| {
                            fixture(n, step, s(w), poly(text), Provenance::Oracle)
                        })
                        .collect());
                }
            }
            Ok(vec![fixture(0, 0, s(0), poly("1"), Provenance::Printed)])
        },
    }
}

fn kratzer() -> FamilyEntry {
    FamilyEntry {
        id: "kratzer",
        title: "Radial Coulomb-plus-centrifugal reduction",
        spectral_symbol: "alpha",
        spectral_role: "exponential decay rate; bound-state energies are E = -alpha^2",
        defaults: Params::new().set_int("A", 2).set_int("gamma", 0),
        notes: &[
            "reduced form of the radial problem for the potential -A/r + gamma(gamma+1)/r^2 under psi = r^(gamma+1) exp(-alpha r) y(r)",
        ],
        build: |p| {
            let a = p.get("A")?;
            let g1 = &(p.get("gamma")?.clone()) + &Scalar::one();
            // lambda0 = 2 alpha - 2(gamma+1)/x, s0 = (2(gamma+1) alpha - A)/x
            Ok((
                fam(&format!("2t - {}/x", q(&(&s(2) * &g1))), "t")?,
                fam(&format!("({}t - {})/x", q(&(&s(2) * &g1)), q(a)), "t")?,
            ))
        },
        expected: |p, n| {
            let a = p.get("A")?;
            let g = p.get("gamma")?;
            let shift = &(&(g + &s(n as i64)) + &Scalar::one()) * &s(2);
            if shift.is_zero() {
                return Err(Error::InadmissibleParams {
                    family: "kratzer".to_string(),
                    reason: "n + gamma + 1 must be nonzero".to_string(),
                });
            }
            Ok(vec![(n as usize, a.checked_div(&shift)?)])
        },
        delta_closed: None,
        fixtures: |p| {
            let defaults = Params::new().set_int("A", 2).set_int("gamma", 0);
            if *p != defaults {
                return Ok(vec![]);
            }
            Ok(vec![
                fixture(0, 0, s(1), poly("1"), Provenance::Oracle),
                fixture(1, 1, Scalar::ratio(1, 2), poly("x - 2"), Provenance::Oracle),
                fixture(
                    2,
                    2,
                    Scalar::ratio(1, 3),
                    poly("2x^2 - 18x + 27"),
                    Provenance::Oracle,
                ),
                fixture(
                    3,
                    3,
                    Scalar::ratio(1, 4),
                    poly("x^3 - 24x^2 + 144x - 192"),
                    Provenance::Oracle,
                ),
            ])
        },
    }
}
