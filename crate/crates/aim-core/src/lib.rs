//! Exact decision procedure for polynomial solutions of second-order linear
//! ODEs `y'' = l0(x) y' + s0(x) y` with rational-function coefficients.
//!
//! The crate is organized around an iteration on the coefficient pair
//! `(l_n, s_n)` whose termination quantity `delta_n = l_n s_{n-1} - l_{n-1} s_n`
//! vanishes identically exactly when a polynomial solution of degree at most
//! `n` exists. Everything is computed in exact rational arithmetic over a
//! two-level algebra tower, so vanishing is decided structurally, never
//! numerically.
//!
//! - [`algebra`]: rational scalars, polynomials and rational functions in the
//!   spectral parameter and in the independent variable.
//! - [`engine`]: the iteration, the termination scan and eigenvalue-condition
//!   extraction for equations with one free parameter.
//! - [`solution`]: constructs explicit polynomial solutions (via the
//!   first-order reduction and via an independent nullspace oracle) and
//!   verifies them by exact substitution.
//! - [`catalog`]: built-in registry of classical equation families with
//!   closed-form termination conditions and fixture polynomials.
//! - [`expr`]: expression parsing and text/LaTeX/JSON rendering.

pub mod algebra;
pub mod catalog;
pub mod engine;
pub mod error;
pub mod expr;
pub mod solution;

pub use algebra::{ParamPoly, ParamRat, Scalar, XPoly, XRat};
pub use engine::{AimTrace, EigenCondition, EquationSpec};
pub use error::{Error, Result};
pub use solution::{PolySolution, SolutionBasis};
