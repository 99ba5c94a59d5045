//! Text syntax for polynomials: `+`, `-`, `*`, `^`, integer coefficients,
//! variable names, parentheses. Example: `x^2*y + 2*z`. Whitespace is
//! ignored everywhere.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Parse a polynomial in the ring's variables.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, text, 1, 1)
}

/// Like [`parse_polynomial`] but reporting positions relative to
/// `(line, col)` — used by the scenario parser.
pub fn parse_polynomial_at(ring: &Ring, text: &str, line: usize, col: usize) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        chars: text.char_indices().collect(),
        pos: 0,
        line,
        col,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    ring: &'a Ring,
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.eat('^') {
            let e = self.natural()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat(')') {
                    Err(self.err("expected `)`"))
                } else {
                    Ok(inner)
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.natural()?;
                Ok(Polynomial::constant(self.ring, n % self.ring.p()))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.ident();
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(self.err(&format!("unknown variable `{}`", name))),
                }
            }
            Some(c) => Err(self.err(&format!("unexpected character `{}`", c))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            s.push(self.bump().unwrap());
        }
        s
    }

    fn natural(&mut self) -> Result<u64> {
        self.skip_ws();
        let mut digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        if digits.is_empty() {
            return Err(self.err("expected a number"));
        }
        digits
            .parse::<u64>()
            .map_err(|_| self.err("number literal too large"))
    }
}
