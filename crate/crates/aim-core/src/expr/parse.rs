//! Recursive-descent parser for coefficient expressions, plus lowering of
//! the AST into reduced rational functions.

use num_bigint::BigInt;

use crate::algebra::{Scalar, XRat};
use crate::error::{Error, Result};

/// Abstract syntax of a coefficient expression.
#[derive(Debug, Clone, PartialEq)]
pub enum ExprAst {
    /// Integer literal (rationals arise from division).
    Int(BigInt),
    /// The independent variable.
    Var,
    /// The spectral parameter.
    Param,
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    /// Integer power, possibly negative.
    Pow(Box<ExprAst>, i32),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(v) => format!("integer `{v}`"),
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::Plus => "`+`".to_string(),
            Token::Minus => "`-`".to_string(),
            Token::Star => "`*`".to_string(),
            Token::Slash => "`/`".to_string(),
            Token::Caret => "`^`".to_string(),
            Token::LParen => "`(`".to_string(),
            Token::RParen => "`)`".to_string(),
            Token::Eof => "end of input".to_string(),
        }
    }
}

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokenize(input: &'a str) -> Result<Vec<(Token, usize)>> {
        let mut lex = Lexer {
            input: input.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        loop {
            lex.skip_ws();
            let start = lex.pos;
            let Some(&c) = lex.input.get(lex.pos) else {
                out.push((Token::Eof, start));
                return Ok(out);
            };
            let token = match c {
                b'+' => {
                    lex.pos += 1;
                    Token::Plus
                }
                b'-' => {
                    lex.pos += 1;
                    Token::Minus
                }
                b'*' => {
                    lex.pos += 1;
                    Token::Star
                }
                b'/' => {
                    lex.pos += 1;
                    Token::Slash
                }
                b'^' => {
                    lex.pos += 1;
                    Token::Caret
                }
                b'(' => {
                    lex.pos += 1;
                    Token::LParen
                }
                b')' => {
                    lex.pos += 1;
                    Token::RParen
                }
                b'0'..=b'9' => {
                    while lex.pos < lex.input.len() && lex.input[lex.pos].is_ascii_digit() {
                        lex.pos += 1;
                    }
                    let text = std::str::from_utf8(&lex.input[start..lex.pos]).unwrap();
                    Token::Int(text.parse().unwrap())
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while lex.pos < lex.input.len()
                        && (lex.input[lex.pos].is_ascii_alphanumeric()
                            || lex.input[lex.pos] == b'_')
                    {
                        lex.pos += 1;
                    }
                    let text = std::str::from_utf8(&lex.input[start..lex.pos]).unwrap();
                    Token::Ident(text.to_string())
                }
                _ => {
                    return Err(Error::SyntaxError {
                        offset: start,
                        expected: "a number, symbol, operator or parenthesis".to_string(),
                    })
                }
            };
            out.push((token, start));
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
    variable: String,
    parameter: Option<String>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.cursor].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.cursor].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.cursor].0.clone();
        if self.cursor + 1 < self.tokens.len() {
            self.cursor += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Error {
        Error::SyntaxError {
            offset: self.offset(),
            expected: format!("{expected}, found {}", self.peek().describe()),
        }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    acc = ExprAst::Add(Box::new(acc), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.bump();
                    acc = ExprAst::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Token::Star => {
                    self.bump();
                    acc = ExprAst::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Token::Slash => {
                    self.bump();
                    acc = ExprAst::Div(Box::new(acc), Box::new(self.factor()?));
                }
                // Implicit multiplication: "2x", "2(x+1)", "x y".
                Token::Int(_) | Token::Ident(_) | Token::LParen => {
                    acc = ExprAst::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ExprAst> {
        // Unary minus binds looser than `^`, so that `-x^2` reads as
        // `-(x^2)` and rendered output re-parses to the same value.
        if *self.peek() == Token::Minus {
            self.bump();
            return Ok(ExprAst::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if *self.peek() == Token::Caret {
            self.bump();
            let negative = if *self.peek() == Token::Minus {
                self.bump();
                true
            } else {
                false
            };
            let Token::Int(v) = self.peek().clone() else {
                return Err(self.error("an integer exponent"));
            };
            self.bump();
            let exp: i32 = v
                .try_into()
                .map_err(|_| Error::InvalidInput("exponent too large".to_string()))?;
            return Ok(ExprAst::Pow(
                Box::new(base),
                if negative { -exp } else { exp },
            ));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExprAst> {
        match self.peek().clone() {
            Token::Int(v) => {
                self.bump();
                Ok(ExprAst::Int(v))
            }
            Token::Ident(name) => {
                if name == self.variable {
                    self.bump();
                    Ok(ExprAst::Var)
                } else if self.parameter.as_deref() == Some(name.as_str()) {
                    self.bump();
                    Ok(ExprAst::Param)
                } else {
                    let known = match &self.parameter {
                        Some(p) => format!("the variable `{}` or the parameter `{p}`", self.variable),
                        None => format!("the variable `{}`", self.variable),
                    };
                    Err(Error::SyntaxError {
                        offset: self.offset(),
                        expected: format!("{known}, found identifier `{name}`"),
                    })
                }
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Token::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            Token::Minus => {
                self.bump();
                Ok(ExprAst::Neg(Box::new(self.atom()?)))
            }
            _ => Err(self.error("a number, symbol, `(` or `-`")),
        }
    }
}

/// Parses an expression over the variable `x` and an optional parameter.
pub fn parse(input: &str, parameter: Option<&str>) -> Result<ExprAst> {
    parse_with_variable(input, "x", parameter)
}

pub fn parse_with_variable(
    input: &str,
    variable: &str,
    parameter: Option<&str>,
) -> Result<ExprAst> {
    let tokens = Lexer::tokenize(input)?;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        variable: variable.to_string(),
        parameter: parameter.map(str::to_string),
    };
    let ast = parser.expr()?;
    if *parser.peek() != Token::Eof {
        return Err(parser.error("an operator or end of input"));
    }
    Ok(ast)
}

/// Lowers an AST to a reduced rational function. Negative exponents fold into
/// the denominator; division by an algebraically zero expression is an error.
pub fn lower(ast: &ExprAst) -> Result<XRat> {
    match ast {
        ExprAst::Int(v) => Ok(XRat::from_scalar(Scalar::from(v.clone()))),
        ExprAst::Var => Ok(XRat::x()),
        ExprAst::Param => Ok(XRat::t()),
        ExprAst::Neg(inner) => Ok(-lower(inner)?),
        ExprAst::Add(a, b) => Ok(lower(a)? + lower(b)?),
        ExprAst::Sub(a, b) => Ok(lower(a)? - lower(b)?),
        ExprAst::Mul(a, b) => Ok(lower(a)? * lower(b)?),
        ExprAst::Div(a, b) => {
            let denom = lower(b)?;
            if denom.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(lower(a)? / denom)
        }
        ExprAst::Pow(base, exp) => {
            let base = lower(base)?;
            if *exp < 0 && base.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            base.pow(*exp).map_err(|_| Error::ZeroDenominator)
        }
    }
}

/// Parse-and-lower convenience used across the CLI.
pub fn parse_xrat(input: &str, parameter: Option<&str>) -> Result<XRat> {
    lower(&parse(input, parameter)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::XPoly;

    fn xr(num: &[i64], den: &[i64]) -> XRat {
        XRat::new(XPoly::from_ints(num), XPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn legendre_lambda0() {
        // "2x/(1-x^2)"
        let v = parse_xrat("2x/(1-x^2)", None).unwrap();
        assert_eq!(v, xr(&[0, 2], &[1, 0, -1]));
    }

    #[test]
    fn laguerre_lambda0() {
        let v = parse_xrat("1 - 1/x", None).unwrap();
        assert_eq!(v, xr(&[-1, 1], &[0, 1]));
    }

    #[test]
    fn double_caret_is_a_syntax_error() {
        let err = parse("x^^2", None).unwrap_err();
        match err {
            Error::SyntaxError { offset, .. } => assert_eq!(offset, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn negative_exponent_folds_into_denominator() {
        assert_eq!(parse_xrat("x^-1", None).unwrap(), xr(&[1], &[0, 1]));
    }

    #[test]
    fn syntactic_cancellation_reduces() {
        assert_eq!(parse_xrat("(x-1)/(x-1)", None).unwrap(), XRat::one());
    }

    #[test]
    fn zero_denominator_is_detected() {
        assert_eq!(parse_xrat("1/(x-x)", None), Err(Error::ZeroDenominator));
        assert_eq!(parse_xrat("(x - x)^-2", None), Err(Error::ZeroDenominator));
    }

    #[test]
    fn parameter_symbol_is_recognized() {
        let v = parse_xrat("m(m+1)/(x^2-1)", Some("m")).unwrap();
        assert!(!v.is_param_free());
        let at2 = v.substitute_param(&Scalar::from(2)).unwrap();
        assert_eq!(at2, xr(&[6], &[-1, 0, 1]));
    }

    #[test]
    fn unknown_identifier_is_rejected() {
        assert!(matches!(
            parse("q + 1", Some("m")),
            Err(Error::SyntaxError { offset: 0, .. })
        ));
    }

    #[test]
    fn unbalanced_parenthesis() {
        assert!(matches!(
            parse("(1 + x", None),
            Err(Error::SyntaxError { .. })
        ));
    }

    #[test]
    fn implicit_multiplication_variants() {
        assert_eq!(
            parse_xrat("2(x+1)", None).unwrap(),
            xr(&[2, 2], &[1])
        );
        assert_eq!(parse_xrat("x(1-x)", None).unwrap(), xr(&[0, 1, -1], &[1]));
    }

    #[test]
    fn precedence_and_unary_minus() {
        // -x^2 + 3*2 parses as -(x^2) + 6
        assert_eq!(parse_xrat("-x^2 + 3*2", None).unwrap(), xr(&[6, 0, -1], &[1]));
        // 1/2x means (1/2)*x under left-associative `/`
        assert_eq!(parse_xrat("1/2x", None).unwrap(), xr(&[0, 1], &[2]));
    }
}
