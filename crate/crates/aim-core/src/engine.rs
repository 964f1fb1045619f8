//! The coefficient iteration, its termination criterion, and
//! eigenvalue-condition extraction.
//!
//! For `y'' = l0 y' + s0 y` the iteration is
//!
//! ```text
//! l_n = l_{n-1}' + s_{n-1} + l0 * l_{n-1}
//! s_n = s_{n-1}' + s0 * l_{n-1}
//! ```
//!
//! with the convention `l_{-1} = 1`, `s_{-1} = 0`, and the termination
//! quantity `delta_n = l_n s_{n-1} - l_{n-1} s_n`. A polynomial solution of
//! degree n forces `delta_n == 0`; conversely `delta_n == 0` together with
//! the side condition that `l_n l_{n-1}` is not identically zero yields a
//! polynomial solution of degree at most n.

use crate::algebra::{
    clear_param_denominators, param_rational_roots, ParamPoly, Scalar, XRat,
};
use crate::error::{Error, Result};

/// Default maximum iteration index for termination scans.
pub const DEFAULT_N_MAX: usize = 24;
/// Default cap on numerator/denominator degrees of the iterates.
pub const DEFAULT_DEGREE_CAP: usize = 512;

/// The equation `y'' = l0 y' + s0 y` together with its symbol names.
///
/// At most one spectral parameter is supported; when `parameter` is `None`
/// both coefficients must be parameter-free.
#[derive(Debug, Clone, PartialEq)]
pub struct EquationSpec {
    lambda0: XRat,
    s0: XRat,
    parameter: Option<String>,
    variable: String,
}

impl EquationSpec {
    /// A parameter-free equation. Fails if a coefficient involves the
    /// parameter slot of the tower.
    pub fn new(lambda0: XRat, s0: XRat) -> Result<Self> {
        if !lambda0.is_param_free() || !s0.is_param_free() {
            return Err(Error::InvalidInput(
                "coefficients carry a parameter but none was declared".to_string(),
            ));
        }
        Ok(EquationSpec {
            lambda0,
            s0,
            parameter: None,
            variable: "x".to_string(),
        })
    }

    /// An equation whose coefficients may involve one named parameter.
    pub fn with_parameter(lambda0: XRat, s0: XRat, parameter: impl Into<String>) -> Self {
        EquationSpec {
            lambda0,
            s0,
            parameter: Some(parameter.into()),
            variable: "x".to_string(),
        }
    }

    pub fn rename_variable(mut self, variable: impl Into<String>) -> Self {
        self.variable = variable.into();
        self
    }

    pub fn lambda0(&self) -> &XRat {
        &self.lambda0
    }

    pub fn s0(&self) -> &XRat {
        &self.s0
    }

    pub fn parameter(&self) -> Option<&str> {
        self.parameter.as_deref()
    }

    pub fn variable(&self) -> &str {
        &self.variable
    }

    /// True when no coefficient actually involves the parameter.
    pub fn is_param_free(&self) -> bool {
        self.lambda0.is_param_free() && self.s0.is_param_free()
    }

    /// Instantiates the parameter at a rational value.
    pub fn substitute(&self, value: &Scalar) -> Result<EquationSpec> {
        Ok(EquationSpec {
            lambda0: self.lambda0.substitute_param(value)?,
            s0: self.s0.substitute_param(value)?,
            parameter: None,
            variable: self.variable.clone(),
        })
    }
}

/// One iterate: the pair `(l_k, s_k)`, the termination quantity at this
/// index, and whether the side condition `l_k l_{k-1} != 0` held.
#[derive(Debug, Clone)]
pub struct AimStep {
    pub lambda: XRat,
    pub s: XRat,
    pub delta: XRat,
    pub side_condition_ok: bool,
}

/// The iterates for k = 0..n together with the termination verdict.
#[derive(Debug, Clone)]
pub struct AimTrace {
    pub steps: Vec<AimStep>,
    /// Smallest index with `delta_n` identically zero, if the scan found one.
    pub terminated_at: Option<usize>,
}

impl AimTrace {
    pub fn delta(&self, n: usize) -> &XRat {
        &self.steps[n].delta
    }

    /// `l_{n-1}` with the virtual step `l_{-1} = 1`.
    pub fn lambda_before(&self, n: usize) -> XRat {
        if n == 0 {
            XRat::one()
        } else {
            self.steps[n - 1].lambda.clone()
        }
    }

    /// `s_{n-1}` with the virtual step `s_{-1} = 0`.
    pub fn s_before(&self, n: usize) -> XRat {
        if n == 0 {
            XRat::zero()
        } else {
            self.steps[n - 1].s.clone()
        }
    }
}

/// One application of the iteration to `(l_{n-1}, s_{n-1})`.
pub fn aim_step(prev_lambda: &XRat, prev_s: &XRat, eq: &EquationSpec) -> (XRat, XRat) {
    let lambda = &(&prev_lambda.derivative() + prev_s) + &(eq.lambda0() * prev_lambda);
    let s = &prev_s.derivative() + &(eq.s0() * prev_lambda);
    (lambda, s)
}

/// `delta_n = l_n s_{n-1} - l_{n-1} s_n`, reduced.
pub fn delta(lambda_n: &XRat, s_n: &XRat, lambda_prev: &XRat, s_prev: &XRat) -> XRat {
    &(lambda_n * s_prev) - &(lambda_prev * s_n)
}

fn check_degree_cap(value: &XRat, step: usize, cap: usize) -> Result<()> {
    let deg = value
        .num()
        .degree_or_zero()
        .max(value.den().degree_or_zero());
    if deg > cap {
        return Err(Error::IterateBlowup { step, cap });
    }
    Ok(())
}

/// Extends a trace by one step, computing `delta` and the side condition.
fn push_step(trace: &mut AimTrace, eq: &EquationSpec, cap: usize) -> Result<()> {
    let k = trace.steps.len();
    let (prev_lambda, prev_s) = if k == 0 {
        (XRat::one(), XRat::zero())
    } else {
        let last = &trace.steps[k - 1];
        (last.lambda.clone(), last.s.clone())
    };
    let (lambda, s) = if k == 0 {
        (eq.lambda0().clone(), eq.s0().clone())
    } else {
        aim_step(&prev_lambda, &prev_s, eq)
    };
    check_degree_cap(&lambda, k, cap)?;
    check_degree_cap(&s, k, cap)?;
    let d = delta(&lambda, &s, &prev_lambda, &prev_s);
    let side_condition_ok = !lambda.is_zero() && !prev_lambda.is_zero();
    trace.steps.push(AimStep {
        lambda,
        s,
        delta: d,
        side_condition_ok,
    });
    Ok(())
}

/// Builds the trace through index `n_max`, stopping early at the smallest n
/// with `delta_n` identically zero. Requires a parameter-free equation.
pub fn scan_termination(eq: &EquationSpec, n_max: usize) -> Result<AimTrace> {
    scan_termination_capped(eq, n_max, DEFAULT_DEGREE_CAP)
}

pub fn scan_termination_capped(eq: &EquationSpec, n_max: usize, cap: usize) -> Result<AimTrace> {
    if !eq.is_param_free() {
        return Err(Error::InvalidInput(
            "termination scan requires a parameter-free equation".to_string(),
        ));
    }
    let mut trace = AimTrace {
        steps: Vec::with_capacity(n_max + 1),
        terminated_at: None,
    };
    for n in 0..=n_max {
        push_step(&mut trace, eq, cap)?;
        if trace.steps[n].delta.is_zero() {
            trace.terminated_at = Some(n);
            break;
        }
    }
    Ok(trace)
}

/// Builds the trace through exactly index `n` without early termination,
/// keeping the parameter symbolic. Used for eigenvalue-condition extraction.
pub fn trace_to(eq: &EquationSpec, n: usize, cap: usize) -> Result<AimTrace> {
    let mut trace = AimTrace {
        steps: Vec::with_capacity(n + 1),
        terminated_at: None,
    };
    for k in 0..=n {
        push_step(&mut trace, eq, cap)?;
        if trace.steps[k].delta.is_zero() && trace.terminated_at.is_none() {
            trace.terminated_at = Some(k);
        }
    }
    Ok(trace)
}

/// The condition on the spectral parameter for `delta_n` to vanish
/// identically in x.
#[derive(Debug, Clone)]
pub struct EigenCondition {
    pub n: usize,
    /// Gcd of the coefficient polynomials `N_j(t)` of the x-cleared numerator
    /// of `delta_n`; integer-primitive with positive leading coefficient.
    /// Zero polynomial when `delta_n` vanishes for every parameter value.
    pub condition_poly: ParamPoly,
    /// Rational roots of `condition_poly`, ascending, without multiplicity.
    pub rational_roots: Vec<Scalar>,
    /// The root-free factor of `condition_poly` (irrational/complex content).
    pub residual_factor: ParamPoly,
    /// Set when `delta_n` is identically zero as a function of x and t.
    pub identically_satisfied: bool,
}

impl EigenCondition {
    pub fn admits(&self, value: &Scalar) -> bool {
        self.identically_satisfied || self.rational_roots.contains(value)
    }
}

/// Extracts the eigenvalue condition at index `n` for an equation with one
/// symbolic parameter: clears `delta_n`'s numerator of t-denominators,
/// takes the gcd of the coefficient polynomials `N_j(t)`, and finds its
/// rational roots. A parameter value makes `delta_n` vanish identically in x
/// exactly when it is a root of the gcd.
pub fn eigen_condition(eq: &EquationSpec, n: usize) -> Result<EigenCondition> {
    eigen_condition_capped(eq, n, DEFAULT_DEGREE_CAP)
}

pub fn eigen_condition_capped(eq: &EquationSpec, n: usize, cap: usize) -> Result<EigenCondition> {
    if eq.parameter().is_none() || eq.is_param_free() {
        return Err(Error::MultipleParameters);
    }
    let trace = trace_to(eq, n, cap)?;
    let d = trace.delta(n);
    if d.is_zero() {
        return Ok(EigenCondition {
            n,
            condition_poly: ParamPoly::zero(),
            rational_roots: Vec::new(),
            residual_factor: ParamPoly::one(),
            identically_satisfied: true,
        });
    }
    let cleared = clear_param_denominators(d.num());
    let mut gcd: Option<ParamPoly> = None;
    for nj in cleared.iter().filter(|p| !p.is_zero()) {
        gcd = Some(match gcd {
            None => nj.clone(),
            Some(g) => ParamPoly::gcd(&g, nj)?,
        });
    }
    let gcd = gcd.expect("nonzero delta has a nonzero coefficient");
    let condition_poly = crate::algebra::roots::integer_primitive(&gcd);
    if condition_poly.is_constant() {
        // No parameter value can make delta_n vanish.
        return Ok(EigenCondition {
            n,
            condition_poly: ParamPoly::one(),
            rational_roots: Vec::new(),
            residual_factor: ParamPoly::one(),
            identically_satisfied: false,
        });
    }
    let report = param_rational_roots(&condition_poly)?;
    let mut rational_roots = report.root_values();
    rational_roots.dedup();
    Ok(EigenCondition {
        n,
        condition_poly,
        rational_roots,
        residual_factor: report.residual,
        identically_satisfied: false,
    })
}

/// Structural comparison of an engine-computed `delta_n` against a closed
/// form, both as reduced rational functions.
#[derive(Debug, Clone)]
pub struct DeltaComparison {
    pub n: usize,
    pub engine: XRat,
    pub closed_form: XRat,
    pub equal: bool,
    /// Set when the two differ only by an overall sign (same vanishing set;
    /// several published rows print a fixed sign where the actual one
    /// alternates with n).
    pub equal_up_to_sign: bool,
}

/// Compares the engine's `delta_n` with a provided closed form.
pub fn compare_delta(eq: &EquationSpec, n: usize, closed_form: &XRat) -> Result<DeltaComparison> {
    let trace = trace_to(eq, n, DEFAULT_DEGREE_CAP)?;
    let engine = trace.delta(n).clone();
    let equal = engine == *closed_form;
    let equal_up_to_sign = equal || engine == -closed_form;
    Ok(DeltaComparison {
        n,
        engine,
        closed_form: closed_form.clone(),
        equal,
        equal_up_to_sign,
    })
}

/// The ratio-form termination test used when `l0 == 0`: compares
/// `l_n/s_n` with `l_{n-1}/s_{n-1}` as reduced rational functions. Returns
/// `None` when either `s` vanishes identically (test undefined there).
pub fn lambda_ratio_agrees(trace: &AimTrace, n: usize) -> Option<bool> {
    let s_n = &trace.steps[n].s;
    let s_prev = trace.s_before(n);
    if s_n.is_zero() || s_prev.is_zero() {
        return None;
    }
    let left = &trace.steps[n].lambda / s_n;
    let right = &trace.lambda_before(n) / &s_prev;
    Some(left == right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::XPoly;

    fn xr(num: &[i64], den: &[i64]) -> XRat {
        XRat::new(XPoly::from_ints(num), XPoly::from_ints(den)).unwrap()
    }

    /// l0 = 2x, s0 = -2k at k = 1: one step gives l1 = 4x^2, s1 = -4x.
    #[test]
    fn step_hermite_k1() {
        let eq = EquationSpec::new(xr(&[0, 2], &[1]), xr(&[-2], &[1])).unwrap();
        let (l1, s1) = aim_step(eq.lambda0(), eq.s0(), &eq);
        assert_eq!(l1, xr(&[0, 0, 4], &[1]));
        assert_eq!(s1, xr(&[0, -4], &[1]));
    }

    /// l0 = 0, s0 = -2/x^2: one step gives l1 = -2/x^2, s1 = 4/x^3.
    #[test]
    fn step_with_zero_lambda0() {
        let eq = EquationSpec::new(XRat::zero(), xr(&[-2], &[0, 0, 1])).unwrap();
        let (l1, s1) = aim_step(eq.lambda0(), eq.s0(), &eq);
        assert_eq!(l1, xr(&[-2], &[0, 0, 1]));
        assert_eq!(s1, xr(&[4], &[0, 0, 0, 1]));
    }

    /// s0 = 0 propagates: every subsequent s_k is zero.
    #[test]
    fn zero_s_is_preserved() {
        let eq = EquationSpec::new(xr(&[1, 3], &[1]), XRat::zero()).unwrap();
        let mut l = eq.lambda0().clone();
        let mut s = eq.s0().clone();
        for _ in 0..4 {
            let (nl, ns) = aim_step(&l, &s, &eq);
            l = nl;
            s = ns;
            assert!(s.is_zero());
        }
    }

    /// x^2 y'' - 2y = 0 (l0 = 0, s0 = 2/x^2) terminates at n = 2.
    #[test]
    fn scan_x2_equation() {
        let eq = EquationSpec::new(XRat::zero(), xr(&[2], &[0, 0, 1])).unwrap();
        let trace = scan_termination(&eq, 10).unwrap();
        assert_eq!(trace.terminated_at, Some(2));
        assert!(trace.steps[2].side_condition_ok);
        // delta_0 = -s0 by the virtual-step convention
        assert_eq!(trace.steps[0].delta, -eq.s0());
    }

    /// Laguerre l0 = 1 - 1/x, s0 = a/x at a = -1: delta_1 == 0.
    #[test]
    fn laguerre_a_minus_one_terminates_at_one() {
        let eq = EquationSpec::new(xr(&[-1, 1], &[0, 1]), xr(&[-1], &[0, 1])).unwrap();
        let trace = scan_termination(&eq, 10).unwrap();
        assert_eq!(trace.terminated_at, Some(1));
    }

    /// Laguerre at a = -2 terminates at n = 2 (and not earlier).
    #[test]
    fn laguerre_a_minus_two_terminates_at_two() {
        let eq = EquationSpec::new(xr(&[-1, 1], &[0, 1]), xr(&[-2], &[0, 1])).unwrap();
        let trace = scan_termination(&eq, 10).unwrap();
        assert_eq!(trace.terminated_at, Some(2));
    }

    /// Hermite with k = 1/2 never terminates through n_max = 10.
    #[test]
    fn hermite_half_never_terminates() {
        let eq = EquationSpec::new(xr(&[0, 2], &[1]), xr(&[-1], &[1])).unwrap();
        let trace = scan_termination(&eq, 10).unwrap();
        assert_eq!(trace.terminated_at, None);
        assert_eq!(trace.steps.len(), 11);
    }

    /// Hermite k = 1: delta_1 == 0.
    #[test]
    fn hermite_k1_delta1_zero() {
        let eq = EquationSpec::new(xr(&[0, 2], &[1]), xr(&[-2], &[1])).unwrap();
        let trace = scan_termination(&eq, 10).unwrap();
        assert_eq!(trace.terminated_at, Some(1));
    }

    /// Legendre with m = 3: delta_2 != 0 (no polynomial of degree <= 2).
    #[test]
    fn legendre_m3_delta2_nonzero() {
        // l0 = 2x/(1-x^2), s0 = 12/(x^2-1)
        let eq = EquationSpec::new(xr(&[0, 2], &[1, 0, -1]), xr(&[12], &[-1, 0, 1])).unwrap();
        let trace = trace_to(&eq, 2, DEFAULT_DEGREE_CAP).unwrap();
        assert!(!trace.delta(2).is_zero());
    }

    /// The ratio-form test agrees with delta == 0 on the l0 = 0 example.
    #[test]
    fn ratio_test_agrees() {
        let eq = EquationSpec::new(XRat::zero(), xr(&[2], &[0, 0, 1])).unwrap();
        let trace = trace_to(&eq, 2, DEFAULT_DEGREE_CAP).unwrap();
        for n in 1..=2 {
            if let Some(agrees) = lambda_ratio_agrees(&trace, n) {
                assert_eq!(agrees, trace.delta(n).is_zero(), "mismatch at n = {n}");
            }
        }
    }

    /// Degree cap converts runaway growth into a clean error.
    #[test]
    fn blowup_is_reported() {
        let eq = EquationSpec::new(xr(&[0, 2], &[1]), xr(&[-1], &[1])).unwrap();
        let err = scan_termination_capped(&eq, 24, 3).unwrap_err();
        assert!(matches!(err, Error::IterateBlowup { .. }));
    }

    /// Eigen extraction on the Laguerre family: roots {0, -1, -2} at n = 2.
    #[test]
    fn eigen_laguerre_n2() {
        let lambda0 = xr(&[-1, 1], &[0, 1]);
        let s0 = XRat::new(
            XPoly::constant(crate::algebra::ParamRat::t()),
            XPoly::from_ints(&[0, 1]),
        )
        .unwrap();
        let eq = EquationSpec::with_parameter(lambda0, s0, "a");
        let cond = eigen_condition(&eq, 2).unwrap();
        let expect: Vec<Scalar> = [-2, -1, 0].into_iter().map(Scalar::from).collect();
        assert_eq!(cond.rational_roots, expect);
        assert!(!cond.identically_satisfied);
    }
}
