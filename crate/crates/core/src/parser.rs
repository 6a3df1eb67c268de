//! Text format for polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr    := [sign] term (sign term)*
//! term    := factor ([*] factor)*          -- `*` may be omitted before a
//!                                             variable or `(`
//! factor  := primary [^ integer]
//! primary := integer [/ integer] | variable | ( expr )
//! variable:= x1 | x2 | … | xN | x | y | z
//! ```
//!
//! `x`, `y`, `z` are aliases for `x1`, `x2`, `x3` and cannot be mixed with
//! indexed names in one expression. Products and powers of parenthesized
//! sums are expanded during parsing, so the result is always canonical.
//! Without a declared dimension, the dimension is the largest variable
//! index mentioned (at least 1).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{Coefficient, MultiIndex, Polynomial};

pub const DEFAULT_EXPONENT_CAP: u32 = 64;

/// A parse failure. `position` is a character offset into the input; it
/// equals the input length for errors at end of input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseDiagnostic {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.position, self.message)
    }
}

fn diag(position: usize, message: impl Into<String>) -> ParseDiagnostic {
    ParseDiagnostic {
        position,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    pub declared_dimension: Option<usize>,
    /// Largest exponent allowed on any variable, both in `^` literals and in
    /// the expanded result.
    pub exponent_cap: u32,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            declared_dimension: None,
            exponent_cap: DEFAULT_EXPONENT_CAP,
        }
    }
}

impl ParseOptions {
    pub fn with_dimension(dimension: usize) -> Self {
        ParseOptions {
            declared_dimension: Some(dimension),
            ..Default::default()
        }
    }
}

/// Parses `text` with default options and an optional declared dimension.
pub fn parse_polynomial(
    text: &str,
    declared_dimension: Option<usize>,
) -> Result<Polynomial, ParseDiagnostic> {
    parse_with(
        text,
        &ParseOptions {
            declared_dimension,
            ..Default::default()
        },
    )
}

pub fn parse_with(text: &str, opts: &ParseOptions) -> Result<Polynomial, ParseDiagnostic> {
    let parsed = Syntax::parse(text, opts.exponent_cap)?;
    let dimension = resolve_dimension(&parsed, opts.declared_dimension)?;
    parsed.evaluate(dimension, opts.exponent_cap)
}

/// Parses several expressions into one shared dimension: the declared one,
/// or else the largest dimension any of them needs. On failure returns the
/// position of the offending text in `texts`.
pub fn parse_many(
    texts: &[&str],
    opts: &ParseOptions,
) -> Result<Vec<Polynomial>, (usize, ParseDiagnostic)> {
    let parsed = texts
        .iter()
        .enumerate()
        .map(|(k, t)| Syntax::parse(t, opts.exponent_cap).map_err(|d| (k, d)))
        .collect::<Result<Vec<_>, _>>()?;
    let dimension = match opts.declared_dimension {
        Some(d) => d,
        None => parsed.iter().map(|p| p.max_axis + 1).max().unwrap_or(1),
    };
    parsed
        .iter()
        .enumerate()
        .map(|(k, p)| {
            resolve_dimension(p, Some(dimension))
                .and_then(|d| p.evaluate(d, opts.exponent_cap))
                .map_err(|e| (k, e))
        })
        .collect()
}

fn resolve_dimension(parsed: &Syntax, declared: Option<usize>) -> Result<usize, ParseDiagnostic> {
    match declared {
        Some(0) => Err(diag(0, "declared dimension must be positive")),
        Some(d) => {
            if let Some(&(axis, pos)) = parsed.variables.iter().find(|(a, _)| *a >= d) {
                Err(diag(
                    pos,
                    format!("variable x{} exceeds declared dimension {d}", axis + 1),
                ))
            } else {
                Ok(d)
            }
        }
        None => Ok(parsed.max_axis + 1),
    }
}

/// Renders `P` in the parser's grammar: descending graded-lex order,
/// indexed variable names, and explicit rational coefficients with the sign
/// written outside the fraction.
pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (index, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = c.abs();
        let mono = format_monomial(index);
        if mono.is_empty() {
            out.push_str(&format_magnitude(&magnitude));
        } else if magnitude.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_magnitude(&magnitude));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn format_magnitude(c: &Coefficient) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(index: &MultiIndex) -> String {
    index
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(axis, &e)| {
            if e == 1 {
                format!("x{}", axis + 1)
            } else {
                format!("x{}^{e}", axis + 1)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

// ---------------------------------------------------------------------------
// lexer

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var { axis: usize, alias: bool },
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseDiagnostic> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let pos = k;
        let tok = match c {
            c if c.is_whitespace() => {
                k += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().collect();
                out.push(Token {
                    tok: Tok::Int(digits.parse().expect("ascii digits")),
                    pos,
                });
                continue;
            }
            'x' if chars.get(k + 1).is_some_and(|d| d.is_ascii_digit()) => {
                k += 1;
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().collect();
                let index: usize = digits
                    .parse()
                    .map_err(|_| diag(pos, "variable index too large"))?;
                if index == 0 {
                    return Err(diag(pos, "variable indices start at x1"));
                }
                out.push(Token {
                    tok: Tok::Var {
                        axis: index - 1,
                        alias: false,
                    },
                    pos,
                });
                continue;
            }
            'x' | 'y' | 'z' => Tok::Var {
                axis: (c as u8 - b'x') as usize,
                alias: true,
            },
            other => return Err(diag(pos, format!("unexpected character {other:?}"))),
        };
        out.push(Token { tok, pos });
        k += 1;
    }
    out.push(Token {
        tok: Tok::End,
        pos: chars.len(),
    });
    Ok(out)
}

// ---------------------------------------------------------------------------
// syntax tree

#[derive(Debug, Clone)]
enum Node {
    Const(Coefficient),
    Var(usize),
    /// Signed summands.
    Sum(Vec<(bool, Node)>),
    /// Factors with the position of each.
    Product(Vec<(usize, Node)>),
    Power {
        base: Box<Node>,
        exponent: u32,
        pos: usize,
    },
}

struct Syntax {
    root: Node,
    /// Every variable occurrence `(axis, position)`.
    variables: Vec<(usize, usize)>,
    max_axis: usize,
}

struct Cursor {
    tokens: Vec<Token>,
    at: usize,
    exponent_cap: u32,
    variables: Vec<(usize, usize)>,
    alias_style: Option<bool>,
}

impl Syntax {
    fn parse(text: &str, exponent_cap: u32) -> Result<Syntax, ParseDiagnostic> {
        let mut cur = Cursor {
            tokens: lex(text)?,
            at: 0,
            exponent_cap,
            variables: Vec::new(),
            alias_style: None,
        };
        let root = cur.expr()?;
        let t = cur.peek();
        if t.tok != Tok::End {
            return Err(diag(t.pos, "unexpected token after expression"));
        }
        let max_axis = cur.variables.iter().map(|v| v.0).max().unwrap_or(0);
        Ok(Syntax {
            root,
            variables: cur.variables,
            max_axis,
        })
    }

    fn evaluate(&self, dimension: usize, cap: u32) -> Result<Polynomial, ParseDiagnostic> {
        eval(&self.root, dimension, cap, 0)
    }
}

impl Cursor {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if t.tok != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Node, ParseDiagnostic> {
        let mut terms = Vec::new();
        let mut negative = match self.peek().tok {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            terms.push((negative, self.term()?));
            negative = match self.peek().tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        Ok(if terms.len() == 1 && !terms[0].0 {
            terms.pop().expect("one term").1
        } else {
            Node::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Node, ParseDiagnostic> {
        let mut factors = vec![(self.peek().pos, self.factor()?)];
        loop {
            let t = self.peek().clone();
            match t.tok {
                Tok::Star => {
                    self.bump();
                    let pos = self.peek().pos;
                    factors.push((pos, self.factor()?));
                }
                Tok::Var { .. } | Tok::LParen => {
                    factors.push((t.pos, self.factor()?));
                }
                Tok::Int(_) => {
                    return Err(diag(t.pos, "a number after a factor needs an explicit `*`"));
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor").1
        } else {
            Node::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Node, ParseDiagnostic> {
        let base = self.primary()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        let Tok::Int(v) = t.tok else {
            return Err(diag(t.pos, "expected a nonnegative integer exponent"));
        };
        let exponent = u32::try_from(&v)
            .ok()
            .filter(|e| *e <= self.exponent_cap)
            .ok_or_else(|| {
                diag(
                    t.pos,
                    format!("exponent {v} exceeds the cap of {}", self.exponent_cap),
                )
            })?;
        Ok(Node::Power {
            base: Box::new(base),
            exponent,
            pos: t.pos,
        })
    }

    fn primary(&mut self) -> Result<Node, ParseDiagnostic> {
        let t = self.bump();
        match t.tok {
            Tok::Int(n) => {
                if self.peek().tok != Tok::Slash {
                    return Ok(Node::Const(Coefficient::from_integer(n)));
                }
                self.bump();
                let d = self.bump();
                match d.tok {
                    Tok::Int(den) if den.is_zero() => Err(diag(d.pos, "zero denominator")),
                    Tok::Int(den) => Ok(Node::Const(Coefficient::new(n, den))),
                    _ => Err(diag(d.pos, "expected an integer denominator")),
                }
            }
            Tok::Var { axis, alias } => {
                match self.alias_style {
                    Some(style) if style != alias => {
                        return Err(diag(
                            t.pos,
                            "cannot mix x/y/z aliases with indexed variables",
                        ));
                    }
                    _ => self.alias_style = Some(alias),
                }
                self.variables.push((axis, t.pos));
                Ok(Node::Var(axis))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(diag(close.pos, "expected `)`"));
                }
                Ok(inner)
            }
            Tok::End => Err(diag(t.pos, "unexpected end of input, expected a term")),
            _ => Err(diag(t.pos, "expected a number, variable, or `(`")),
        }
    }
}

fn max_exponent(p: &Polynomial) -> u32 {
    (0..p.dimension())
        .map(|a| p.max_exponent(a))
        .max()
        .unwrap_or(0)
}

fn eval(node: &Node, dim: usize, cap: u32, pos: usize) -> Result<Polynomial, ParseDiagnostic> {
    Ok(match node {
        Node::Const(c) => Polynomial::constant(dim, c.clone()),
        Node::Var(axis) => Polynomial::variable(dim, *axis).map_err(|_| {
            diag(
                pos,
                format!("variable x{} exceeds dimension {dim}", axis + 1),
            )
        })?,
        Node::Sum(terms) => {
            let mut acc = Polynomial::zero(dim);
            for (negative, t) in terms {
                let v = eval(t, dim, cap, pos)?;
                acc = if *negative { acc.sub(&v) } else { acc.add(&v) }.expect("same dimension");
            }
            acc
        }
        Node::Product(factors) => {
            let mut acc = Polynomial::one(dim);
            for (fpos, f) in factors {
                let v = eval(f, dim, cap, *fpos)?;
                acc = acc.multiply(&v).expect("same dimension");
                if max_exponent(&acc) > cap {
                    return Err(diag(
                        *fpos,
                        format!("product exceeds the exponent cap of {cap}"),
                    ));
                }
            }
            acc
        }
        Node::Power {
            base,
            exponent,
            pos: epos,
        } => {
            let b = eval(base, dim, cap, pos)?;
            if u64::from(max_exponent(&b)) * u64::from(*exponent) > u64::from(cap) {
                return Err(diag(
                    *epos,
                    format!("power exceeds the exponent cap of {cap}"),
                ));
            }
            b.pow(*exponent)
        }
    })
}
