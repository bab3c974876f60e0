//! Parser for polynomials typed by hand, e.g. `(1 + x1/3 + x2/3)^3`.
//!
//! Grammar (variables are 1-based, `x1 … xn`; juxtaposition multiplies):
//!
//! ```text
//! sum     = product (("+" | "-") product)*
//! product = unary (("*" | "/")? unary)*      division only by constants
//! unary   = ("-" | "+") unary | power
//! power   = atom ("^" integer)?
//! atom    = integer | "x" integer | "(" sum ")"
//! ```
//!
//! Input starting with `{` is read as the canonical polynomial JSON instead.

use pke_core::algebra::{ExactScalar, MultiPoly};

/// Largest exponent accepted after `^`; keeps typed input from exploding.
const MAX_POWER: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(String),
    Var(usize),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, String> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Token::Int(chars[start..i].iter().collect())));
        } else if c == 'x' {
            i += 1;
            if i < chars.len() && chars[i] == '_' {
                i += 1;
            }
            let digits_start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[digits_start..i].iter().collect();
            let idx: usize = digits
                .parse()
                .map_err(|_| format!("variable at position {start} needs an index, e.g. x1"))?;
            if idx == 0 {
                return Err(format!("variables are numbered from x1 (position {start})"));
            }
            out.push((start, Token::Var(idx)));
        } else if "+-*/^()".contains(c) {
            out.push((start, Token::Op(c)));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?} at position {start}"));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    nvars: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<MultiPoly, String> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc = acc + self.product()?;
            } else if self.eat('-') {
                acc = acc - self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Token::Int(_) | Token::Var(_) | Token::Op('(')))
    }

    fn product(&mut self) -> Result<MultiPoly, String> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let at = self.at();
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(format!("division at position {at} must be by a non-zero constant"));
                }
                acc = acc.scale(&(ExactScalar::from_integer(1.into()) / d.constant_term()));
            } else if self.starts_atom() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, String> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<MultiPoly, String> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.at();
        match self.peek().cloned() {
            Some(Token::Int(s)) => {
                self.pos += 1;
                let e: u32 = s
                    .parse()
                    .ok()
                    .filter(|e| *e <= MAX_POWER)
                    .ok_or_else(|| format!("exponent at position {at} must be at most {MAX_POWER}"))?;
                Ok(base.pow(e))
            }
            _ => Err(format!("expected a non-negative integer exponent at position {at}")),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, String> {
        let at = self.at();
        match self.peek().cloned() {
            Some(Token::Int(s)) => {
                self.pos += 1;
                let c: ExactScalar = ExactScalar::from_integer(s.parse().expect("digits"));
                Ok(MultiPoly::constant(self.nvars, c))
            }
            Some(Token::Var(i)) => {
                self.pos += 1;
                if i > self.nvars {
                    return Err(format!("x{i} at position {at} exceeds n = {}", self.nvars));
                }
                Ok(MultiPoly::var(self.nvars, i - 1))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(format!("missing ')' at position {}", self.at()));
                }
                Ok(inner)
            }
            Some(Token::Op(c)) => Err(format!("unexpected {c:?} at position {at}")),
            None => Err("unexpected end of input".to_string()),
        }
    }
}

/// Parses `src` as a polynomial in `nvars` variables.
pub fn parse_poly(src: &str, nvars: usize) -> Result<MultiPoly, String> {
    let trimmed = src.trim();
    if trimmed.starts_with('{') {
        let p: MultiPoly = serde_json::from_str(trimmed).map_err(|e| format!("malformed polynomial JSON: {e}"))?;
        if p.nvars() != nvars {
            return Err(format!("polynomial has {} variables, expected n = {nvars}", p.nvars()));
        }
        return Ok(p);
    }
    let tokens = tokenize(trimmed)?;
    if tokens.is_empty() {
        return Err("empty polynomial".to_string());
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        nvars,
        end: trimmed.chars().count(),
    };
    let p = parser.sum()?;
    if parser.pos != parser.tokens.len() {
        return Err(format!("unexpected input at position {}", parser.at()));
    }
    Ok(p)
}
