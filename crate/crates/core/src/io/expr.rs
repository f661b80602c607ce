//! Expression syntax: `+` is `⊕`, `*` is `⊙`, `x1, x2, …` are the variables.
//!
//! ```text
//! poly   := '-inf' | term ('+' term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := 'x' index ('^' exponent)?
//! ratfn  := '(' poly ')' '/' '(' poly ')'
//! ```
//!
//! Coefficients are integers, fractions `p/q` or decimals, optionally negative.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use crate::tropical::{TropicalPolynomial, TropicalRationalFn, TropicalValue};

/// A parsed `.trop` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expression {
    Polynomial(TropicalPolynomial),
    Rational(TropicalRationalFn),
}

impl Expression {
    pub fn dim(&self) -> usize {
        match self {
            Expression::Polynomial(p) => p.dim(),
            Expression::Rational(r) => r.dim(),
        }
    }

    /// Polynomials are read as `f ⊘ 0`.
    pub fn into_rational(self) -> Result<TropicalRationalFn> {
        match self {
            Expression::Polynomial(p) => TropicalRationalFn::from_polynomial(p),
            Expression::Rational(r) => Ok(r),
        }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Polynomial(p) => p.fmt(f),
            Expression::Rational(r) => r.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(String),
    Var(usize),
    NegInf,
    Plus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Minus,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, line: l0, column: c0 });
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            push(&mut out, t);
            i += 1;
            col += 1;
            continue;
        }
        if c == '-' {
            if chars[i + 1..].starts_with(&['i', 'n', 'f']) {
                push(&mut out, Tok::NegInf);
                i += 4;
                col += 4;
            } else {
                push(&mut out, Tok::Minus);
                i += 1;
                col += 1;
            }
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            push(&mut out, Tok::Number(s));
            continue;
        }
        if c == 'x' {
            let start = i + 1;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            col += i - start + 1;
            let idx: usize = digits.parse().map_err(|_| err(l0, c0, "expected a variable index after 'x'"))?;
            if idx == 0 {
                return Err(err(l0, c0, "variables are numbered from x1"));
            }
            push(&mut out, Tok::Var(idx));
            continue;
        }
        return Err(err(line, col, format!("unexpected character {c:?}")));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        let toks = lex(text)?;
        let lines: Vec<&str> = text.split('\n').collect();
        let end = (lines.len(), lines.last().map_or(0, |l| l.chars().count()) + 1);
        Ok(Parser { toks, pos: 0, end })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |t| (t.line, t.column))
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(err(l, c, message))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    /// A coefficient literal, possibly negative and possibly a fraction.
    fn coeff(&mut self) -> Result<Rational> {
        let (l, c) = self.here();
        let neg = self.peek() == Some(&Tok::Minus);
        if neg {
            self.pos += 1;
        }
        let mut text = match self.peek() {
            Some(Tok::Number(s)) => s.clone(),
            _ => return self.fail("expected a number"),
        };
        self.pos += 1;
        if self.peek() == Some(&Tok::Slash) {
            if let Some(Tok::Number(d)) = self.toks.get(self.pos + 1).map(|t| &t.tok) {
                text = format!("{text}/{d}");
                self.pos += 2;
            }
        }
        let v = parse_rational(&text).map_err(|_| err(l, c, format!("invalid number {text:?}")))?;
        Ok(if neg { -v } else { v })
    }

    fn factor(&mut self, exps: &mut Vec<i64>) -> Result<()> {
        let idx = match self.peek() {
            Some(Tok::Var(i)) => *i,
            _ => return self.fail("expected a variable"),
        };
        self.pos += 1;
        let mut power = 1i64;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            if self.peek() == Some(&Tok::Minus) {
                return self.fail("negative exponents are not allowed in a polynomial");
            }
            power = match self.peek() {
                Some(Tok::Number(s)) if s.bytes().all(|b| b.is_ascii_digit()) => {
                    s.parse().or_else(|_| self.fail("exponent out of range"))?
                }
                _ => return self.fail("expected a nonnegative integer exponent"),
            };
            self.pos += 1;
        }
        if exps.len() < idx {
            exps.resize(idx, 0);
        }
        exps[idx - 1] = exps[idx - 1].checked_add(power).ok_or(Error::Overflow("exponent"))?;
        Ok(())
    }

    fn term(&mut self) -> Result<(Rational, Vec<i64>)> {
        let mut exps = Vec::new();
        let coeff = match self.peek() {
            Some(Tok::Var(_)) => {
                self.factor(&mut exps)?;
                Rational::from_integer(0.into())
            }
            _ => self.coeff()?,
        };
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((coeff, exps))
    }

    fn poly(&mut self) -> Result<Vec<(Rational, Vec<i64>)>> {
        if self.peek() == Some(&Tok::NegInf) {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut terms = vec![self.term()?];
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(terms)
    }
}

fn max_var(terms: &[(Rational, Vec<i64>)]) -> usize {
    terms.iter().map(|(_, e)| e.len()).max().unwrap_or(0)
}

fn build(terms: Vec<(Rational, Vec<i64>)>, dim: usize) -> Result<TropicalPolynomial> {
    TropicalPolynomial::from_terms(
        dim,
        terms.into_iter().map(|(c, mut e)| {
            e.resize(dim, 0);
            (TropicalValue::Finite(c), e)
        }),
    )
}

fn resolve_dim(found: usize, dim: Option<usize>) -> Result<usize> {
    match dim {
        Some(d) if found > d => Err(Error::Domain(format!("variable x{found} exceeds dimension {d}"))),
        Some(d) => Ok(d),
        None => Ok(found.max(1)),
    }
}

/// Parses a polynomial or a quotient `(p) / (q)`. Without an explicit `dim`
/// the dimension is the largest variable index used (at least one).
pub fn parse_expression(text: &str, dim: Option<usize>) -> Result<Expression> {
    let mut p = Parser::new(text)?;
    if p.peek() == Some(&Tok::LParen) {
        p.pos += 1;
        let num = p.poly()?;
        p.expect(Tok::RParen, "')'")?;
        p.expect(Tok::Slash, "'/'")?;
        p.expect(Tok::LParen, "'('")?;
        let den = p.poly()?;
        p.expect(Tok::RParen, "')'")?;
        if !p.at_end() {
            return p.fail("unexpected input after expression");
        }
        let d = resolve_dim(max_var(&num).max(max_var(&den)), dim)?;
        return Ok(Expression::Rational(TropicalRationalFn::new(build(num, d)?, build(den, d)?)?));
    }
    let terms = p.poly()?;
    if !p.at_end() {
        return p.fail("unexpected input after expression");
    }
    let d = resolve_dim(max_var(&terms), dim)?;
    Ok(Expression::Polynomial(build(terms, d)?))
}

pub fn parse_polynomial(text: &str, dim: Option<usize>) -> Result<TropicalPolynomial> {
    match parse_expression(text, dim)? {
        Expression::Polynomial(p) => Ok(p),
        Expression::Rational(_) => Err(err(1, 1, "expected a polynomial, found a quotient")),
    }
}

pub fn parse_rational_fn(text: &str, dim: Option<usize>) -> Result<TropicalRationalFn> {
    parse_expression(text, dim)?.into_rational()
}
