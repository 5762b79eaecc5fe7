//! The word-expression language for certificate programs.
//!
//! Grammar (whitespace-insensitive outside tokens):
//!
//! ```text
//! program := stmt* "return" expr ("," expr)?
//! stmt    := "let" NAME "=" expr ";"
//! expr    := term term*                 -- juxtaposition is product, left-assoc
//! term    := atom | atom "^" INT | "inv(" expr ")" | "comm(" expr "," expr ")" | "(" expr ")"
//! atom    := "a" | "b" | "c" | NAME
//! ```
//!
//! `INT` may be negative and is arbitrary-precision. Later `let` bindings may
//! shadow earlier names; evaluation is strictly in declaration order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;


use super::{commutator, RationalMatrix};
use crate::{Error, Result};

/// Which product the bracket `comm(x, y)` denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CommutatorConvention {
    /// `comm(x, y) = x y x^{-1} y^{-1}`
    XyXinvYinv,
    /// `comm(x, y) = x^{-1} y^{-1} x y`
    XinvYinvXy,
}

impl fmt::Display for CommutatorConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CommutatorConvention::XyXinvYinv => "xy-xinv-yinv",
            CommutatorConvention::XinvYinvXy => "xinv-yinv-xy",
        };
        write!(f, "{s}")
    }
}

impl FromStr for CommutatorConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "xy-xinv-yinv" => Ok(CommutatorConvention::XyXinvYinv),
            "xinv-yinv-xy" => Ok(CommutatorConvention::XinvYinvXy),
            other => Err(Error::parse(
                1,
                1,
                format!("unknown commutator convention `{other}`"),
            )),
        }
    }
}

/// An expression over named atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WordExpr {
    Atom(String),
    /// `name ^ INT`; powers apply to named atoms only, per the grammar.
    Pow(String, BigInt),
    Inv(Box<WordExpr>),
    Comm(Box<WordExpr>, Box<WordExpr>),
    /// Juxtaposition product. The empty product evaluates to the identity.
    Product(Vec<WordExpr>),
}

impl WordExpr {
    pub fn atom(name: &str) -> Self {
        WordExpr::Atom(name.to_string())
    }

    pub fn pow(name: &str, exp: i64) -> Self {
        WordExpr::Pow(name.to_string(), BigInt::from(exp))
    }

    pub fn inv(e: WordExpr) -> Self {
        WordExpr::Inv(Box::new(e))
    }

    pub fn comm(x: WordExpr, y: WordExpr) -> Self {
        WordExpr::Comm(Box::new(x), Box::new(y))
    }

    pub fn product(parts: Vec<WordExpr>) -> Self {
        WordExpr::Product(parts)
    }

    /// Names of every atom referenced by the expression.
    pub fn referenced_names(&self, out: &mut Vec<String>) {
        match self {
            WordExpr::Atom(n) | WordExpr::Pow(n, _) => out.push(n.clone()),
            WordExpr::Inv(e) => e.referenced_names(out),
            WordExpr::Comm(x, y) => {
                x.referenced_names(out);
                y.referenced_names(out);
            }
            WordExpr::Product(parts) => {
                for p in parts {
                    p.referenced_names(out);
                }
            }
        }
    }

    fn fmt_as_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordExpr::Product(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }

    fn evaluate(
        &self,
        env: &HashMap<String, RationalMatrix>,
        convention: CommutatorConvention,
        dim: usize,
    ) -> Result<RationalMatrix> {
        match self {
            WordExpr::Atom(name) => env
                .get(name)
                .cloned()
                .ok_or_else(|| Error::UnboundName(name.clone())),
            WordExpr::Pow(name, exp) => {
                let base = env
                    .get(name)
                    .ok_or_else(|| Error::UnboundName(name.clone()))?;
                base.power_big(exp)
            }
            WordExpr::Inv(e) => e.evaluate(env, convention, dim)?.inverse(),
            WordExpr::Comm(x, y) => {
                let xm = x.evaluate(env, convention, dim)?;
                let ym = y.evaluate(env, convention, dim)?;
                commutator(&xm, &ym, convention)
            }
            WordExpr::Product(parts) => {
                let mut acc = RationalMatrix::identity(dim);
                for p in parts {
                    acc = acc.mul(&p.evaluate(env, convention, dim)?);
                }
                Ok(acc)
            }
        }
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordExpr::Atom(n) => write!(f, "{n}"),
            WordExpr::Pow(n, e) => write!(f, "{n}^{e}"),
            WordExpr::Inv(e) => write!(f, "inv({e})"),
            WordExpr::Comm(x, y) => write!(f, "comm({x}, {y})"),
            WordExpr::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    p.fmt_as_term(f)?;
                }
                Ok(())
            }
        }
    }
}

/// A sequence of let-bindings and one or two return expressions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordProgram {
    pub bindings: Vec<(String, WordExpr)>,
    pub returns: Vec<WordExpr>,
}

impl WordProgram {
    /// Evaluates bindings in declaration order, then the return expressions.
    /// Intermediate values are cached and reusable by later bindings.
    pub fn evaluate(
        &self,
        base: &HashMap<String, RationalMatrix>,
        convention: CommutatorConvention,
    ) -> Result<Vec<RationalMatrix>> {
        let dim = base
            .values()
            .next()
            .map(RationalMatrix::dim)
            .ok_or_else(|| Error::UnboundName("<empty environment>".into()))?;
        let mut env = base.clone();
        for (name, expr) in &self.bindings {
            let value = expr.evaluate(&env, convention, dim)?;
            env.insert(name.clone(), value);
        }
        self.returns
            .iter()
            .map(|e| e.evaluate(&env, convention, dim))
            .collect()
    }

    /// Evaluates a single bare expression against the environment.
    pub fn evaluate_expr(
        expr: &WordExpr,
        base: &HashMap<String, RationalMatrix>,
        convention: CommutatorConvention,
    ) -> Result<RationalMatrix> {
        let dim = base
            .values()
            .next()
            .map(RationalMatrix::dim)
            .ok_or_else(|| Error::UnboundName("<empty environment>".into()))?;
        expr.evaluate(base, convention, dim)
    }
}

impl fmt::Display for WordProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, expr) in &self.bindings {
            writeln!(f, "let {name} = {expr};")?;
        }
        write!(f, "return ")?;
        for (i, e) in self.returns.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Let,
    Return,
    Inv,
    Comm,
    Name(String),
    Int(BigInt),
    Caret,
    LParen,
    RParen,
    Comma,
    Semicolon,
    Equals,
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    line: usize,
    column: usize,
}

fn tokenize(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut column = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let start_col = column;
        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    name.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let token = match name.as_str() {
                "let" => Token::Let,
                "return" => Token::Return,
                "inv" => Token::Inv,
                "comm" => Token::Comm,
                _ => Token::Name(name),
            };
            out.push(Spanned {
                token,
                line,
                column: start_col,
            });
            continue;
        }
        if ch.is_ascii_digit() || ch == '-' {
            let mut digits = String::new();
            digits.push(ch);
            chars.next();
            column += 1;
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let value: BigInt = digits
                .parse()
                .map_err(|_| Error::parse(line, start_col, format!("bad integer `{digits}`")))?;
            out.push(Spanned {
                token: Token::Int(value),
                line,
                column: start_col,
            });
            continue;
        }
        let token = match ch {
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            ',' => Token::Comma,
            ';' => Token::Semicolon,
            '=' => Token::Equals,
            other => {
                return Err(Error::parse(
                    line,
                    start_col,
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        chars.next();
        column += 1;
        out.push(Spanned {
            token,
            line,
            column: start_col,
        });
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: impl Into<String>) -> Error {
        match self.tokens.get(self.pos.min(self.tokens.len().saturating_sub(1))) {
            Some(s) => Error::parse(s.line, s.column, message),
            None => Error::parse(1, 1, message),
        }
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<()> {
        match self.next() {
            Some(s) if &s.token == want => Ok(()),
            Some(s) => Err(Error::parse(
                s.line,
                s.column,
                format!("expected {what}, found {:?}", s.token),
            )),
            None => Err(Error::parse(1, 1, format!("expected {what}, found end of input"))),
        }
    }

    fn parse_program(&mut self) -> Result<WordProgram> {
        let mut bindings = Vec::new();
        loop {
            match self.peek().map(|s| s.token.clone()) {
                Some(Token::Let) => {
                    self.next();
                    let name = match self.next() {
                        Some(Spanned {
                            token: Token::Name(n),
                            ..
                        }) => n,
                        _ => return Err(self.err_here("expected a binding name after `let`")),
                    };
                    self.expect(&Token::Equals, "`=` in let binding")?;
                    let expr = self.parse_expr()?;
                    self.expect(&Token::Semicolon, "`;` after let binding")?;
                    bindings.push((name, expr));
                }
                Some(Token::Return) => {
                    self.next();
                    let first = self.parse_expr()?;
                    let mut returns = vec![first];
                    if let Some(Token::Comma) = self.peek().map(|s| s.token.clone()) {
                        self.next();
                        returns.push(self.parse_expr()?);
                    }
                    // tolerate one trailing semicolon
                    if let Some(Token::Semicolon) = self.peek().map(|s| s.token.clone()) {
                        self.next();
                    }
                    if self.peek().is_some() {
                        return Err(self.err_here("trailing input after return"));
                    }
                    return Ok(WordProgram { bindings, returns });
                }
                Some(_) => return Err(self.err_here("expected `let` or `return`")),
                None => return Err(self.err_here("missing `return` statement")),
            }
        }
    }

    fn parse_expr(&mut self) -> Result<WordExpr> {
        let mut terms = vec![self.parse_term()?];
        while let Some(s) = self.peek() {
            match s.token {
                Token::Name(_) | Token::Inv | Token::Comm | Token::LParen => {
                    terms.push(self.parse_term()?);
                }
                _ => break,
            }
        }
        if terms.len() == 1 {
            Ok(terms.pop().expect("one term"))
        } else {
            Ok(WordExpr::Product(terms))
        }
    }

    fn parse_term(&mut self) -> Result<WordExpr> {
        match self.next() {
            Some(Spanned {
                token: Token::Name(name),
                ..
            }) => {
                if let Some(Token::Caret) = self.peek().map(|s| s.token.clone()) {
                    self.next();
                    match self.next() {
                        Some(Spanned {
                            token: Token::Int(e),
                            ..
                        }) => Ok(WordExpr::Pow(name, e)),
                        _ => Err(self.err_here("expected an integer exponent after `^`")),
                    }
                } else {
                    Ok(WordExpr::Atom(name))
                }
            }
            Some(Spanned {
                token: Token::Inv, ..
            }) => {
                self.expect(&Token::LParen, "`(` after inv")?;
                let inner = self.parse_expr()?;
                self.expect(&Token::RParen, "`)` closing inv")?;
                Ok(WordExpr::Inv(Box::new(inner)))
            }
            Some(Spanned {
                token: Token::Comm, ..
            }) => {
                self.expect(&Token::LParen, "`(` after comm")?;
                let x = self.parse_expr()?;
                self.expect(&Token::Comma, "`,` between comm arguments")?;
                let y = self.parse_expr()?;
                self.expect(&Token::RParen, "`)` closing comm")?;
                Ok(WordExpr::Comm(Box::new(x), Box::new(y)))
            }
            Some(Spanned {
                token: Token::LParen,
                ..
            }) => {
                let inner = self.parse_expr()?;
                self.expect(&Token::RParen, "`)`")?;
                Ok(inner)
            }
            Some(s) => Err(Error::parse(
                s.line,
                s.column,
                format!("expected a term, found {:?}", s.token),
            )),
            None => Err(Error::parse(1, 1, "expected a term, found end of input")),
        }
    }
}

/// Parses a full word program from its textual form.
pub fn parse_program(src: &str) -> Result<WordProgram> {
    let tokens = tokenize(src)?;
    let mut parser = Parser { tokens, pos: 0 };
    parser.parse_program()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::IntPolynomial;
    use crate::exactmat::{companion, RationalMatrix};

    fn c1_env() -> HashMap<String, RationalMatrix> {
        let a = companion(&IntPolynomial::from_i64(&[1, -2, -1, 4, -1, -2, 1])).unwrap();
        let b = companion(&IntPolynomial::from_i64(&[1, 1, 2, 1, 2, 1, 1])).unwrap();
        let c = a.inverse().unwrap().mul(&b);
        HashMap::from([
            ("a".to_string(), a),
            ("b".to_string(), b),
            ("c".to_string(), c),
        ])
    }

    #[test]
    fn parse_and_print_roundtrip() {
        let src = "let w1 = comm(a, inv(b));\nlet w2 = w1^-8 (a b) c;\nreturn w2, comm(w1, w2)";
        let prog = parse_program(src).unwrap();
        let printed = prog.to_string();
        let reparsed = parse_program(&printed).unwrap();
        assert_eq!(prog, reparsed);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(parse_program(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_program("let = a; return a"), Err(Error::Parse { .. })));
        assert!(matches!(parse_program("return a $"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_program("let x = a  return x"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn whitespace_insensitivity() {
        let p1 = parse_program("return a b^2").unwrap();
        let p2 = parse_program("return   a\n\n b ^ 2").unwrap();
        assert_eq!(p1, p2);
    }

    #[test]
    fn evaluate_ba_inverse_on_c1() {
        // In the standard basis B A^{-1} = I + 3 E_{2,?}… the conjugated form
        // is checked elsewhere; here just exercise evaluation plumbing.
        let env = c1_env();
        let prog = parse_program("let q1 = b inv(a); return q1").unwrap();
        let vals = prog
            .evaluate(&env, CommutatorConvention::XyXinvYinv)
            .unwrap();
        assert_eq!(vals.len(), 1);
        let b = &env["b"];
        let a = &env["a"];
        assert_eq!(vals[0], b.mul(&a.inverse().unwrap()));
    }

    #[test]
    fn unbound_name_is_an_error_not_a_panic() {
        let env = c1_env();
        let prog = parse_program("return nonsense").unwrap();
        assert_eq!(
            prog.evaluate(&env, CommutatorConvention::XyXinvYinv),
            Err(Error::UnboundName("nonsense".into()))
        );
    }

    #[test]
    fn empty_product_is_identity() {
        let env = c1_env();
        let expr = WordExpr::Product(vec![]);
        let val =
            WordProgram::evaluate_expr(&expr, &env, CommutatorConvention::XyXinvYinv).unwrap();
        assert!(val.is_identity());
    }

    #[test]
    fn big_exponents_parse() {
        let prog = parse_program("return a^77849 b^-15570").unwrap();
        match &prog.returns[0] {
            WordExpr::Product(parts) => {
                assert_eq!(parts[0], WordExpr::pow("a", 77849));
                assert_eq!(parts[1], WordExpr::pow("b", -15570));
            }
            other => panic!("unexpected shape {other:?}"),
        }
    }

    #[test]
    fn shadowing_resolves_in_declaration_order() {
        let env = c1_env();
        let prog = parse_program("let q1 = a; let q1 = q1 q1; return q1").unwrap();
        let vals = prog
            .evaluate(&env, CommutatorConvention::XyXinvYinv)
            .unwrap();
        assert_eq!(vals[0], env["a"].mul(&env["a"]));
    }
}
