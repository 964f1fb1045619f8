//! Construction and verification of explicit polynomial solutions.
//!
//! Two independent routes are kept deliberately separate:
//!
//! - the ratio route: once the scan terminates at n, the solution satisfies
//!   `y'/y = -alpha` with `alpha = s_{n-1}/l_{n-1}`, so with `alpha = P/Q`
//!   reduced we solve the first-order equation `Q y' + P y = 0` with a
//!   polynomial ansatz;
//! - the nullspace oracle: write `y` with unknown coefficients up to a degree
//!   bound, clear denominators in `y'' - l0 y' - s0 y = 0`, and compute the
//!   exact rational nullspace of the resulting linear system.
//!
//! Every returned solution is verified by exact substitution into the
//! original equation.

use crate::algebra::linalg::QMatrix;
use crate::algebra::{ParamRat, Scalar, XPoly, XRat};
use crate::engine::{AimTrace, EquationSpec};
use crate::error::{Error, Result};

/// How a solution was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// First-order reduction through the terminating ratio `alpha`.
    AimAlpha,
    /// Brute-force nullspace of the degree-bounded linear system.
    OracleNullspace,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::AimAlpha => "aim_alpha",
            Method::OracleNullspace => "oracle_nullspace",
        }
    }
}

/// Output normalization convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Coprime integer coefficients, positive leading one (the default).
    IntegerPrimitive,
    /// Leading coefficient one.
    Monic,
}

/// A verified polynomial solution.
#[derive(Debug, Clone)]
pub struct PolySolution {
    pub y: XPoly,
    pub degree: usize,
    pub normalization: Normalization,
    pub method: Method,
    pub residual_zero: bool,
}

/// A basis of the polynomial solution space up to a degree bound.
#[derive(Debug, Clone)]
pub struct SolutionBasis {
    pub solutions: Vec<PolySolution>,
    pub dimension: usize,
}

impl SolutionBasis {
    /// True when `candidate` is a rational linear combination of the basis.
    pub fn spans(&self, candidate: &XPoly) -> bool {
        in_span(
            &self
                .solutions
                .iter()
                .map(|s| s.y.clone())
                .collect::<Vec<_>>(),
            candidate,
        )
    }
}

/// The exact residual of a candidate solution, cleared of denominators.
#[derive(Debug, Clone)]
pub struct ResidualReport {
    pub residual: XPoly,
    pub residual_zero: bool,
}

/// `alpha = s_{n-1}/l_{n-1}` at a terminating index, with the cross-check
/// that `s_n/l_n` reduces to the same value when defined.
pub fn alpha(trace: &AimTrace, n: usize) -> Result<XRat> {
    if !trace.delta(n).is_zero() {
        return Err(Error::InvalidInput(
            "alpha requested at a non-terminating index".to_string(),
        ));
    }
    let lambda_prev = trace.lambda_before(n);
    if lambda_prev.is_zero() {
        return Err(Error::SideConditionViolated(n as i64 - 1));
    }
    let a = &trace.s_before(n) / &lambda_prev;
    let lambda_n = &trace.steps[n].lambda;
    if !lambda_n.is_zero() {
        // delta_n == 0 makes the two ratios equal by cross-multiplication.
        debug_assert_eq!(&trace.steps[n].s / lambda_n, a);
    }
    Ok(a)
}

/// Solves `Q y' + P y = 0` (with `alpha = P/Q` reduced) for a nonzero
/// polynomial `y` of degree at most `degree_bound`, normalized to coprime
/// integer coefficients with positive leading coefficient.
pub fn solve_alpha_ode(alpha: &XRat, degree_bound: usize) -> Result<XPoly> {
    let p = alpha.num();
    let q = alpha.den();
    let cols = degree_bound + 1;
    let max_deg = (q.degree_or_zero() + degree_bound).max(p.degree_or_zero() + degree_bound);
    let mut matrix = QMatrix::zero(max_deg + 1, cols);
    for k in 0..cols {
        // column k: coefficients of k * Q * x^(k-1) + P * x^k
        if k > 0 {
            let term = q.scale(&ParamRat::from_int(k as i64)).shift_up(k - 1);
            add_poly_to_column(&mut matrix, k, &term)?;
        }
        let term = p.shift_up(k);
        add_poly_to_column(&mut matrix, k, &term)?;
    }
    let basis = matrix.nullspace();
    if basis.is_empty() {
        return Err(Error::NoPolynomialSolution(degree_bound));
    }
    // A first-order homogeneous equation has a solution space of dimension
    // at most one; anything else means the reduction upstream went wrong.
    if basis.len() > 1 {
        return Err(Error::InconsistentMethods(format!(
            "first-order ansatz produced a {}-dimensional space",
            basis.len()
        )));
    }
    Ok(XPoly::from_scalars(basis.into_iter().next().unwrap()).integer_primitive())
}

fn add_poly_to_column(matrix: &mut QMatrix, col: usize, poly: &XPoly) -> Result<()> {
    for (row, c) in poly.coeffs().iter().enumerate() {
        let v = c.as_scalar().ok_or_else(|| {
            Error::InvalidInput("alpha must be parameter-free".to_string())
        })?;
        let sum = &*matrix.at(row, col) + &v;
        matrix.set(row, col, sum);
    }
    Ok(())
}

/// The cleared form `A2 y'' + A1 y' + A0 y` of the equation, with all three
/// coefficients polynomial: `A2` is the lcm of the coefficient denominators.
fn cleared_operator(eq: &EquationSpec) -> Result<(XPoly, XPoly, XPoly)> {
    let l = eq.lambda0();
    let s = eq.s0();
    let d = XPoly::lcm(l.den(), s.den())?;
    let a2 = d.clone();
    let a1 = -(l.num() * d.exact_div(l.den()));
    let a0 = -(s.num() * d.exact_div(s.den()));
    Ok((a2, a1, a0))
}

/// Applies the cleared operator to a candidate polynomial.
fn apply_cleared(a2: &XPoly, a1: &XPoly, a0: &XPoly, y: &XPoly) -> XPoly {
    let y1 = y.derivative();
    let y2 = y1.derivative();
    &(&(a2 * &y2) + &(a1 * &y1)) + &(a0 * y)
}

/// Exact residual of `y` in the original equation; zero iff `y` solves it.
pub fn verify(eq: &EquationSpec, y: &XPoly) -> Result<ResidualReport> {
    if !eq.is_param_free() || !y.is_param_free() {
        return Err(Error::InvalidInput(
            "verification requires parameter-free inputs".to_string(),
        ));
    }
    let (a2, a1, a0) = cleared_operator(eq)?;
    let residual = apply_cleared(&a2, &a1, &a0, y);
    Ok(ResidualReport {
        residual_zero: residual.is_zero(),
        residual,
    })
}

/// Brute-force oracle: all polynomial solutions of degree at most
/// `degree_bound`, as a basis of the exact nullspace of the coefficient
/// system. An empty basis is a valid result.
pub fn oracle_nullspace(eq: &EquationSpec, degree_bound: usize) -> Result<SolutionBasis> {
    if !eq.is_param_free() {
        return Err(Error::InvalidInput(
            "oracle requires a parameter-free equation".to_string(),
        ));
    }
    let (a2, a1, a0) = cleared_operator(eq)?;
    let cols = degree_bound + 1;
    let max_deg = [
        a2.degree_or_zero() + degree_bound.saturating_sub(2),
        a1.degree_or_zero() + degree_bound.saturating_sub(1),
        a0.degree_or_zero() + degree_bound,
    ]
    .into_iter()
    .max()
    .unwrap();
    let mut matrix = QMatrix::zero(max_deg + 1, cols);
    for k in 0..cols {
        let mono = XPoly::monomial(ParamRat::one(), k);
        let image = apply_cleared(&a2, &a1, &a0, &mono);
        add_poly_to_column(&mut matrix, k, &image)?;
    }
    let basis = matrix.nullspace();
    let dimension = basis.len();
    let solutions = basis
        .into_iter()
        .map(|coeffs| {
            let y = XPoly::from_scalars(coeffs).integer_primitive();
            let residual_zero = verify(eq, &y).map(|r| r.residual_zero)?;
            Ok(PolySolution {
                degree: y.degree_or_zero(),
                y,
                normalization: Normalization::IntegerPrimitive,
                method: Method::OracleNullspace,
                residual_zero,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SolutionBasis {
        solutions,
        dimension,
    })
}

/// Constructs a solution at a terminating index: the ratio route when the
/// side condition holds, with the oracle as fallback. The result is always
/// verified by substitution.
pub fn construct(eq: &EquationSpec, trace: &AimTrace, n: usize) -> Result<PolySolution> {
    debug_assert!(trace.delta(n).is_zero(), "construct at a non-terminating index");
    if trace.steps[n].side_condition_ok {
        if let Ok(a) = alpha(trace, n) {
            if let Ok(y) = solve_alpha_ode(&a, n) {
                let residual_zero = verify(eq, &y)?.residual_zero;
                if residual_zero {
                    return Ok(PolySolution {
                        degree: y.degree_or_zero(),
                        y,
                        normalization: Normalization::IntegerPrimitive,
                        method: Method::AimAlpha,
                        residual_zero: true,
                    });
                }
            }
        }
    }
    // Side condition failed or the ratio route found nothing: fall back to
    // the oracle and label the verdict accordingly.
    let basis = oracle_nullspace(eq, n)?;
    basis
        .solutions
        .into_iter()
        .next()
        .ok_or(Error::NoPolynomialSolution(n))
}

/// Consistency report between the two construction routes.
#[derive(Debug, Clone)]
pub struct CrossCheck {
    pub alpha_solution: PolySolution,
    pub oracle_basis: SolutionBasis,
    pub consistent: bool,
}

/// Runs both routes at a terminating index and asserts that the ratio-route
/// solution lies in the span of the oracle basis. Disagreement is a hard
/// internal error, not a property of the equation.
pub fn cross_check(eq: &EquationSpec, trace: &AimTrace, n: usize) -> Result<CrossCheck> {
    let a = alpha(trace, n)?;
    let y = solve_alpha_ode(&a, n)?;
    let residual_zero = verify(eq, &y)?.residual_zero;
    let alpha_solution = PolySolution {
        degree: y.degree_or_zero(),
        y,
        normalization: Normalization::IntegerPrimitive,
        method: Method::AimAlpha,
        residual_zero,
    };
    let oracle_basis = oracle_nullspace(eq, n)?;
    let consistent = residual_zero && oracle_basis.spans(&alpha_solution.y);
    if !consistent {
        return Err(Error::InconsistentMethods(format!(
            "ratio-route solution not in the oracle span at n = {n}"
        )));
    }
    Ok(CrossCheck {
        alpha_solution,
        oracle_basis,
        consistent,
    })
}

/// Rank test: is `candidate` in the rational span of `basis`?
fn in_span(basis: &[XPoly], candidate: &XPoly) -> bool {
    let max_len = basis
        .iter()
        .chain(std::iter::once(candidate))
        .map(|p| p.coeffs().len())
        .max()
        .unwrap_or(0);
    let to_row = |p: &XPoly| -> Vec<Scalar> {
        let mut row = p.scalar_coeffs().expect("span test needs parameter-free polys");
        row.resize(max_len, Scalar::zero());
        row
    };
    let rows_without: Vec<Vec<Scalar>> = basis.iter().map(to_row).collect();
    let rank_without = QMatrix::from_rows(rows_without.clone()).rank();
    let mut rows_with = rows_without;
    rows_with.push(to_row(candidate));
    let rank_with = QMatrix::from_rows(rows_with).rank();
    rank_without == rank_with
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{scan_termination, trace_to, DEFAULT_DEGREE_CAP};

    fn xr(num: &[i64], den: &[i64]) -> XRat {
        XRat::new(XPoly::from_ints(num), XPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn alpha_for_x_squared_equation() {
        // x^2 y'' = 2y terminates at 2 with alpha = -2/x
        let eq = EquationSpec::new(XRat::zero(), xr(&[2], &[0, 0, 1])).unwrap();
        let trace = scan_termination(&eq, 10).unwrap();
        let a = alpha(&trace, 2).unwrap();
        assert_eq!(a, xr(&[-2], &[0, 1]));
        let y = solve_alpha_ode(&a, 2).unwrap();
        assert_eq!(y, XPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn alpha_ode_laguerre_two() {
        // alpha = -(2x-4)/(x^2-4x+2) -> y = x^2 - 4x + 2
        let a = xr(&[4, -2], &[2, -4, 1]);
        let y = solve_alpha_ode(&a, 2).unwrap();
        assert_eq!(y, XPoly::from_ints(&[2, -4, 1]));
    }

    #[test]
    fn alpha_zero_gives_constant() {
        let y = solve_alpha_ode(&XRat::zero(), 0).unwrap();
        assert_eq!(y, XPoly::one());
    }

    #[test]
    fn no_polynomial_solution_reported() {
        // y'/y = -1 has no polynomial solution
        let a = xr(&[1], &[1]);
        assert!(matches!(
            solve_alpha_ode(&a, 5),
            Err(Error::NoPolynomialSolution(5))
        ));
    }

    #[test]
    fn oracle_hermite_k2() {
        // l0 = 2x, s0 = -4: basis {2x^2 - 1}
        let eq = EquationSpec::new(xr(&[0, 2], &[1]), xr(&[-4], &[1])).unwrap();
        let basis = oracle_nullspace(&eq, 2).unwrap();
        assert_eq!(basis.dimension, 1);
        assert_eq!(basis.solutions[0].y, XPoly::from_ints(&[-1, 0, 2]));
        assert!(basis.solutions[0].residual_zero);
    }

    #[test]
    fn oracle_chebyshev2_m8() {
        // l0 = 3x/(1-x^2), s0 = -8/(1-x^2): basis {4x^2 - 1}
        let eq = EquationSpec::new(xr(&[0, 3], &[1, 0, -1]), xr(&[-8], &[1, 0, -1])).unwrap();
        let basis = oracle_nullspace(&eq, 2).unwrap();
        assert_eq!(basis.dimension, 1);
        assert_eq!(basis.solutions[0].y, XPoly::from_ints(&[-1, 0, 4]));
    }

    #[test]
    fn oracle_legendre_m3_below_degree() {
        // Legendre m = 3 has no solution of degree <= 2
        let eq = EquationSpec::new(xr(&[0, 2], &[1, 0, -1]), xr(&[12], &[-1, 0, 1])).unwrap();
        let basis = oracle_nullspace(&eq, 2).unwrap();
        assert_eq!(basis.dimension, 0);
    }

    #[test]
    fn verify_jacobi_linear() {
        // alpha=1, beta=1, gamma=4: l0 = 4x/(1-x^2), s0 = -4/(1-x^2), y = 4x
        let eq = EquationSpec::new(xr(&[0, 4], &[1, 0, -1]), xr(&[-4], &[1, 0, -1])).unwrap();
        let report = verify(&eq, &XPoly::from_ints(&[0, 4])).unwrap();
        assert!(report.residual_zero);
    }

    #[test]
    fn verify_wrong_candidate() {
        // Hermite k = 2 and y = x^2: missing the constant term
        let eq = EquationSpec::new(xr(&[0, 2], &[1]), xr(&[-4], &[1])).unwrap();
        let report = verify(&eq, &XPoly::from_ints(&[0, 0, 1])).unwrap();
        assert!(!report.residual_zero);
    }

    #[test]
    fn verify_scaling_invariance() {
        let eq = EquationSpec::new(xr(&[0, 2], &[1]), xr(&[-4], &[1])).unwrap();
        let y = XPoly::from_ints(&[-1, 0, 2]);
        let scaled = y.scale(&ParamRat::from_scalar(Scalar::ratio(-7, 3)));
        assert_eq!(
            verify(&eq, &y).unwrap().residual_zero,
            verify(&eq, &scaled).unwrap().residual_zero
        );
    }

    #[test]
    fn cross_check_bessel_n1() {
        // Bessel l0 = -2(x+1)/x^2, s0 = 2/x^2: y1 = 1 + x
        let eq = EquationSpec::new(xr(&[-2, -2], &[0, 0, 1]), xr(&[2], &[0, 0, 1])).unwrap();
        let trace = trace_to(&eq, 1, DEFAULT_DEGREE_CAP).unwrap();
        assert!(trace.delta(1).is_zero());
        let check = cross_check(&eq, &trace, 1).unwrap();
        assert!(check.consistent);
        assert_eq!(check.alpha_solution.y, XPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn two_dimensional_nullspace() {
        // y'' = 0: basis {1, x}
        let eq = EquationSpec::new(XRat::zero(), XRat::zero()).unwrap();
        let basis = oracle_nullspace(&eq, 1).unwrap();
        assert_eq!(basis.dimension, 2);
        assert!(basis.spans(&XPoly::from_ints(&[3, 5])));
    }

    #[test]
    fn construct_falls_back_to_oracle() {
        // y'' = 0 terminates at 0 with the side condition failed
        let eq = EquationSpec::new(XRat::zero(), XRat::zero()).unwrap();
        let trace = scan_termination(&eq, 5).unwrap();
        assert_eq!(trace.terminated_at, Some(0));
        assert!(!trace.steps[0].side_condition_ok);
        let sol = construct(&eq, &trace, 0).unwrap();
        assert_eq!(sol.method, Method::OracleNullspace);
        assert!(sol.residual_zero);
    }
}
