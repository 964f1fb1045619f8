//! Deterministic rendering of algebra values as plain text and LaTeX.
//!
//! Text output is re-parseable: `lower(parse(render_xrat_text(f))) == f`.
//! Multiplication is always explicit on output, powers use `^`, rationals
//! stay exact. LaTeX output is a standalone math fragment.

use crate::algebra::{scalar::scalar_sign, ParamPoly, ParamRat, Scalar, XPoly, XRat};

// ---- plain text ----

fn scalar_text(v: &Scalar) -> String {
    v.to_string()
}

/// Renders a level-one polynomial in the given parameter symbol.
pub fn render_parampoly_text(p: &ParamPoly, param: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for k in (0..p.coeffs().len()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let negative = scalar_sign(&c) < 0;
        let mag = c.abs();
        if first {
            if negative {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&monomial_text(&scalar_text(&mag), param, k, mag.is_one()));
    }
    out
}

fn monomial_text(coeff: &str, sym: &str, power: usize, coeff_is_one: bool) -> String {
    match power {
        0 => coeff.to_string(),
        1 if coeff_is_one => sym.to_string(),
        1 => format!("{coeff}*{sym}"),
        _ if coeff_is_one => format!("{sym}^{power}"),
        _ => format!("{coeff}*{sym}^{power}"),
    }
}

fn paramrat_text(c: &ParamRat, param: &str) -> String {
    if let Some(v) = c.as_scalar() {
        return scalar_text(&v);
    }
    if c.is_polynomial() {
        return format!("({})", render_parampoly_text(c.num(), param));
    }
    format!(
        "(({})/({}))",
        render_parampoly_text(c.num(), param),
        render_parampoly_text(c.den(), param)
    )
}

/// Renders a level-two polynomial; coefficients may involve the parameter.
pub fn render_xpoly_text(p: &XPoly, var: &str, param: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for k in (0..p.coeffs().len()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        // Pull an overall minus sign out only for plain scalar coefficients;
        // parameter-carrying coefficients keep their sign inside parens.
        let (negative, body) = match c.as_scalar() {
            Some(v) => {
                let neg = scalar_sign(&v) < 0;
                let mag = v.abs();
                (neg, monomial_text(&scalar_text(&mag), var, k, mag.is_one()))
            }
            None => (false, monomial_text(&paramrat_text(&c, param), var, k, false)),
        };
        if first {
            if negative {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// Renders a rational function; numerator/denominator are parenthesized
/// whenever a denominator is present.
pub fn render_xrat_text(f: &XRat, var: &str, param: &str) -> String {
    if f.is_polynomial() {
        return render_xpoly_text(f.num(), var, param);
    }
    format!(
        "({})/({})",
        render_xpoly_text(f.num(), var, param),
        render_xpoly_text(f.den(), var, param)
    )
}

// ---- LaTeX ----

pub fn render_scalar_latex(v: &Scalar) -> String {
    if v.is_integer() {
        format!("{}", v.numer())
    } else if v.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", v.abs().numer(), v.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", v.numer(), v.denom())
    }
}

fn monomial_latex(coeff: &str, sym: &str, power: usize, coeff_is_one: bool) -> String {
    match power {
        0 => coeff.to_string(),
        1 if coeff_is_one => sym.to_string(),
        1 => format!("{coeff}{sym}"),
        _ if coeff_is_one => format!("{sym}^{{{power}}}"),
        _ => format!("{coeff}{sym}^{{{power}}}"),
    }
}

pub fn render_parampoly_latex(p: &ParamPoly, param: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for k in (0..p.coeffs().len()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let negative = scalar_sign(&c) < 0;
        let mag = c.abs();
        if first {
            if negative {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&monomial_latex(
            &render_scalar_latex(&mag),
            param,
            k,
            mag.is_one(),
        ));
    }
    out
}

fn paramrat_latex(c: &ParamRat, param: &str) -> String {
    if let Some(v) = c.as_scalar() {
        return render_scalar_latex(&v);
    }
    if c.is_polynomial() {
        return format!("\\left({}\\right)", render_parampoly_latex(c.num(), param));
    }
    format!(
        "\\frac{{{}}}{{{}}}",
        render_parampoly_latex(c.num(), param),
        render_parampoly_latex(c.den(), param)
    )
}

pub fn render_xpoly_latex(p: &XPoly, var: &str, param: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for k in (0..p.coeffs().len()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let (negative, body) = match c.as_scalar() {
            Some(v) => {
                let neg = scalar_sign(&v) < 0;
                let mag = v.abs();
                (
                    neg,
                    monomial_latex(&render_scalar_latex(&mag), var, k, mag.is_one()),
                )
            }
            None => (
                false,
                monomial_latex(&paramrat_latex(&c, param), var, k, false),
            ),
        };
        if first {
            if negative {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

pub fn render_xrat_latex(f: &XRat, var: &str, param: &str) -> String {
    if f.is_polynomial() {
        return render_xpoly_latex(f.num(), var, param);
    }
    format!(
        "\\frac{{{}}}{{{}}}",
        render_xpoly_latex(f.num(), var, param),
        render_xpoly_latex(f.den(), var, param)
    )
}

// ---- JSON fragments ----

/// Eigen-condition roots as a sorted array of exact rational strings.
pub fn render_eigen_json(roots: &[Scalar]) -> serde_json::Value {
    serde_json::Value::Array(
        roots
            .iter()
            .map(|r| serde_json::Value::String(r.to_string()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ParamPoly, XPoly};
    use crate::expr::parse::parse_xrat;

    fn xr(num: &[i64], den: &[i64]) -> XRat {
        XRat::new(XPoly::from_ints(num), XPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn latex_of_small_poly() {
        let p = XPoly::from_ints(&[-1, 0, 2]);
        assert_eq!(render_xpoly_latex(&p, "x", "t"), "2x^{2} - 1");
    }

    #[test]
    fn text_round_trips_through_parse() {
        let samples = [
            xr(&[0, 2], &[1, 0, -1]),
            xr(&[-1, 1], &[0, 1]),
            xr(&[2, -4, 1], &[1]),
            XRat::zero(),
            XRat::from_scalar(Scalar::ratio(-5, 6)),
        ];
        for f in samples {
            let text = render_xrat_text(&f, "x", "t");
            let back = parse_xrat(&text, Some("t")).unwrap();
            assert_eq!(back, f, "round trip failed for `{text}`");
        }
    }

    #[test]
    fn parameter_coefficients_round_trip() {
        // (t(t+1)) / (x^2 - 1) as an XRat
        let num = XPoly::constant(
            crate::algebra::ParamRat::from_poly(
                &ParamPoly::t() * &ParamPoly::new(vec![Scalar::one(), Scalar::one()]),
            ),
        );
        let f = XRat::new(num, XPoly::from_ints(&[-1, 0, 1])).unwrap();
        let text = render_xrat_text(&f, "x", "m");
        let back = parse_xrat(&text, Some("m")).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn scalar_latex_fraction() {
        assert_eq!(render_scalar_latex(&Scalar::ratio(-1, 4)), "-\\frac{1}{4}");
        assert_eq!(render_scalar_latex(&Scalar::from(3)), "3");
    }
}
