//! Surface syntax for coefficient expressions and rendering of engine
//! outputs as plain text, LaTeX and JSON.
//!
//! The grammar (implicit multiplication accepted on input, never emitted):
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ['^' integer]
//! atom   := integer | variable | parameter | '(' expr ')' | '-' atom
//! ```

mod parse;
mod render;

pub use parse::{lower, parse, parse_xrat, ExprAst};
pub use render::{
    render_eigen_json, render_parampoly_latex, render_parampoly_text, render_scalar_latex,
    render_xpoly_latex, render_xpoly_text, render_xrat_latex, render_xrat_text,
};
