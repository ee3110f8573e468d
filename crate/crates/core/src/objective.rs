//! Arithmetic objective expressions over graph invariants.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?          right-associative
//! primary := number | ident | func '(' expr ')' | '(' expr ')'
//! ```
//!
//! Identifiers: `R`, `a`, `D`, `delta`, `kappa`, `n`, `m` and the constant
//! `pi`. Functions: `cos`, `sqrt`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::invariants::InvariantReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of negative value {0}")]
    SqrtOfNegative(f64),
    #[error("{0} is undefined for this graph")]
    Undefined(Symbol),
    #[error("non-finite result")]
    NonFinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Randic,
    AlgConn,
    Diameter,
    MinDegree,
    EdgeConn,
    Order,
    Size,
}

impl Symbol {
    fn lookup(name: &str) -> Option<Symbol> {
        Some(match name {
            "R" => Symbol::Randic,
            "a" => Symbol::AlgConn,
            "D" => Symbol::Diameter,
            "delta" => Symbol::MinDegree,
            "kappa" => Symbol::EdgeConn,
            "n" => Symbol::Order,
            "m" => Symbol::Size,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Symbol::Randic => "R",
            Symbol::AlgConn => "a",
            Symbol::Diameter => "D",
            Symbol::MinDegree => "delta",
            Symbol::EdgeConn => "kappa",
            Symbol::Order => "n",
            Symbol::Size => "m",
        }
    }

    fn value(&self, rep: &InvariantReport) -> Result<f64, EvalError> {
        Ok(match self {
            Symbol::Randic => rep.randic,
            Symbol::AlgConn => rep.alg_conn,
            Symbol::Diameter => rep.diameter.ok_or(EvalError::Undefined(*self))? as f64,
            Symbol::MinDegree => rep.min_degree as f64,
            Symbol::EdgeConn => rep.edge_conn as f64,
            Symbol::Order => rep.n as f64,
            Symbol::Size => rep.m as f64,
        })
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Cos,
    Sqrt,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Pi,
    Var(Symbol),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// A parsed objective together with its source text.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveExpr {
    pub source: String,
    pub root: Expr,
}

impl ObjectiveExpr {
    pub fn eval(&self, rep: &InvariantReport) -> Result<f64, EvalError> {
        eval_objective(self, rep)
    }
}

impl FromStr for ObjectiveExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_objective(s)
    }
}

impl fmt::Display for ObjectiveExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

pub fn parse_objective(text: &str) -> Result<ObjectiveExpr, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens: &tokens, pos: 0, end: text.len() };
    let root = p.expr()?;
    if let Some(tok) = p.peek() {
        return Err(p.error_at(tok.offset, format!("unexpected {}", tok.kind)));
    }
    Ok(ObjectiveExpr { source: text.to_owned(), root })
}

pub fn eval_objective(expr: &ObjectiveExpr, rep: &InvariantReport) -> Result<f64, EvalError> {
    let v = eval(&expr.root, rep)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::NonFinite)
    }
}

fn eval(e: &Expr, rep: &InvariantReport) -> Result<f64, EvalError> {
    let v = match e {
        Expr::Num(x) => *x,
        Expr::Pi => std::f64::consts::PI,
        Expr::Var(s) => s.value(rep)?,
        Expr::Neg(inner) => -eval(inner, rep)?,
        Expr::Binary(op, l, r) => {
            let (l, r) = (eval(l, rep)?, eval(r, rep)?);
            match op {
                BinOp::Add => l + r,
                BinOp::Sub => l - r,
                BinOp::Mul => l * r,
                BinOp::Div if r == 0.0 => return Err(EvalError::DivisionByZero),
                BinOp::Div => l / r,
                BinOp::Pow if l == 0.0 && r < 0.0 => return Err(EvalError::DivisionByZero),
                BinOp::Pow => l.powf(r),
            }
        }
        Expr::Call(Func::Cos, arg) => eval(arg, rep)?.cos(),
        Expr::Call(Func::Sqrt, arg) => {
            let x = eval(arg, rep)?;
            if x < 0.0 {
                return Err(EvalError::SqrtOfNegative(x));
            }
            x.sqrt()
        }
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::NonFinite)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Num(f64),
    Ident(String),
    Op(char),
    LParen,
    RParen,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Num(x) => write!(f, "number {x}"),
            TokenKind::Ident(s) => write!(f, "identifier '{s}'"),
            TokenKind::Op(c) => write!(f, "operator '{c}'"),
            TokenKind::LParen => f.write_str("'('"),
            TokenKind::RParen => f.write_str("')'"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    offset: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let kind = if c.is_ascii_digit() || c == '.' {
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            if i < bytes.len() && matches!(bytes[i], b'e' | b'E') {
                let mut j = i + 1;
                if j < bytes.len() && matches!(bytes[j], b'+' | b'-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let lit = &text[start..i];
            let x = lit.parse::<f64>().map_err(|_| ParseError {
                offset: start,
                message: format!("malformed number '{lit}'"),
            })?;
            TokenKind::Num(x)
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            TokenKind::Ident(text[start..i].to_owned())
        } else {
            i += c.len_utf8();
            match c {
                '+' | '-' | '*' | '/' | '^' => TokenKind::Op(c),
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                _ => {
                    return Err(ParseError {
                        offset: start,
                        message: format!("unexpected character '{c}'"),
                    })
                }
            }
        };
        tokens.push(Token { kind, offset: start });
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_op(&self) -> Option<char> {
        match self.peek()?.kind {
            TokenKind::Op(c) => Some(c),
            _ => None,
        }
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |t| t.offset)
    }

    fn error_at(&self, offset: usize, message: String) -> ParseError {
        ParseError { offset, message }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            let op = if c == '+' { BinOp::Add } else { BinOp::Sub };
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            let op = if c == '*' { BinOp::Mul } else { BinOp::Div };
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let exponent = self.unary()?;
            return Ok(Expr::Binary(BinOp::Pow, Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error_at(offset, "expected operand, found end of input".into()));
        };
        self.pos += 1;
        match tok.kind {
            TokenKind::Num(x) => Ok(Expr::Num(x)),
            TokenKind::LParen => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            TokenKind::Ident(name) => {
                if name == "pi" {
                    return Ok(Expr::Pi);
                }
                if let Some(sym) = Symbol::lookup(&name) {
                    return Ok(Expr::Var(sym));
                }
                let func = match name.as_str() {
                    "cos" => Func::Cos,
                    "sqrt" => Func::Sqrt,
                    _ => return Err(self.error_at(offset, format!("unknown identifier '{name}'"))),
                };
                if !matches!(self.peek().map(|t| &t.kind), Some(TokenKind::LParen)) {
                    let at = self.offset();
                    return Err(self.error_at(at, format!("expected '(' after {name}")));
                }
                self.pos += 1;
                let arg = self.expr()?;
                self.expect_rparen()?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            other => Err(self.error_at(offset, format!("expected operand, found {other}"))),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Some(Token { kind: TokenKind::RParen, .. }) => {
                self.pos += 1;
                Ok(())
            }
            Some(tok) => Err(self.error_at(tok.offset, format!("expected ')', found {}", tok.kind))),
            None => Err(self.error_at(self.end, "expected ')', found end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{family, FamilyKind};
    use crate::graph::Graph;
    use crate::invariants::invariant_report;

    fn rep(kind: FamilyKind) -> InvariantReport {
        invariant_report(&family(kind).unwrap()).unwrap()
    }

    fn eval_str(text: &str, r: &InvariantReport) -> Result<f64, EvalError> {
        parse_objective(text).unwrap().eval(r)
    }

    #[test]
    fn product_node() {
        let e = parse_objective("R*a").unwrap();
        assert_eq!(
            e.root,
            Expr::Binary(
                BinOp::Mul,
                Box::new(Expr::Var(Symbol::Randic)),
                Box::new(Expr::Var(Symbol::AlgConn))
            )
        );
    }

    #[test]
    fn conjecture_expression_vanishes_on_paths() {
        let text = "R/a - (n-3+2*sqrt(2))/2 / (2*(1-cos(pi/n)))";
        for n in 3..=20 {
            let v = eval_str(text, &rep(FamilyKind::Path { n })).unwrap();
            assert!(v.abs() < 1e-6, "n = {n}: {v}");
        }
    }

    #[test]
    fn dangling_operator() {
        let err = parse_objective("R +").unwrap_err();
        assert_eq!(err.offset, 3);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_objective("R * b").unwrap_err().offset, 4);
        assert_eq!(parse_objective("(R").unwrap_err().offset, 2);
        assert_eq!(parse_objective("R a").unwrap_err().offset, 2);
        assert_eq!(parse_objective("R # a").unwrap_err().offset, 2);
        assert_eq!(parse_objective("sqrt 2").unwrap_err().offset, 5);
        assert_eq!(parse_objective("").unwrap_err().offset, 0);
        assert_eq!(parse_objective("1.2.3").unwrap_err().offset, 0);
    }

    #[test]
    fn evaluation_examples() {
        let k3 = invariant_report(&Graph::complete(3).unwrap()).unwrap();
        assert!((eval_str("R*a", &k3).unwrap() - 4.5).abs() < 1e-9);
        let c7 = rep(FamilyKind::Cycle { n: 7 });
        assert_eq!(eval_str("n", &c7).unwrap(), 7.0);
        let p3 = rep(FamilyKind::Path { n: 3 });
        assert!((eval_str("R/a", &p3).unwrap() - 2f64.sqrt()).abs() < 1e-9);
        assert_eq!(eval_str("m + kappa + delta + D", &c7).unwrap(), 7.0 + 2.0 + 2.0 + 3.0);
    }

    #[test]
    fn precedence_and_associativity() {
        let r = rep(FamilyKind::Path { n: 3 });
        assert_eq!(eval_str("2^3^2", &r).unwrap(), 512.0);
        assert_eq!(eval_str("-2^2", &r).unwrap(), -4.0);
        assert_eq!(eval_str("2^-1", &r).unwrap(), 0.5);
        assert_eq!(eval_str("8/4/2", &r).unwrap(), 1.0);
        assert_eq!(eval_str("8-4-2", &r).unwrap(), 2.0);
        assert_eq!(eval_str(" 1 +2* 3 ", &r).unwrap(), 7.0);
        assert_eq!(eval_str("--3", &r).unwrap(), 3.0);
        assert_eq!(eval_str("1e2 + 2.5E-1", &r).unwrap(), 100.25);
    }

    #[test]
    fn evaluation_errors() {
        let r = rep(FamilyKind::Path { n: 3 });
        assert_eq!(eval_str("R/(n-3)", &r), Err(EvalError::DivisionByZero));
        assert_eq!(eval_str("sqrt(2-n)", &r), Err(EvalError::SqrtOfNegative(-1.0)));
        assert_eq!(eval_str("(0-n)^0.5", &r), Err(EvalError::NonFinite));
        assert_eq!(eval_str("(n-3)^-1", &r), Err(EvalError::DivisionByZero));
        let disconnected = invariant_report(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(eval_str("D", &disconnected), Err(EvalError::Undefined(Symbol::Diameter)));
    }
}
