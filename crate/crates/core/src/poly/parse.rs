//! Recursive-descent parser for the polynomial expression grammar:
//!
//! ```text
//! poly   := ['-'|'+'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' nat]
//! atom   := rational | identifier | '(' poly ')'
//! ```
//!
//! Identifiers resolve to ring variables first and then to caller-supplied
//! bindings (named polynomials from a session file).

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Rational, Ring};
use crate::error::{Error, Result};

pub type Bindings<'a> = dyn Fn(&str) -> Option<Polynomial> + 'a;

pub fn parse_polynomial(text: &str, ring: &Ring, bindings: &Bindings<'_>) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
        bindings,
    };
    let out = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses `n` or `n/d` with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let syntax = || Error::Syntax {
        pos: 0,
        msg: format!("not a rational number: `{t}`"),
    };
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, t.strip_prefix('+').unwrap_or(t).trim()),
    };
    let (n, d) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (body, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| syntax())?;
    let d: BigInt = d.parse().map_err(|_| syntax())?;
    if d.is_zero() {
        return Err(syntax());
    }
    let q = Rational::new(n, d);
    Ok(if neg { -q } else { q })
}

struct Parser<'a, 'b> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
    bindings: &'a Bindings<'b>,
}

impl Parser<'_, '_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                let end = self.token_end();
                let tok = String::from_utf8_lossy(&self.src[start..end]).into_owned();
                return Err(Error::BadExponent(tok));
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let e: u32 = digits
                .parse()
                .map_err(|_| Error::BadExponent(digits.to_string()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn token_end(&self) -> usize {
        let mut end = self.pos;
        while end < self.src.len()
            && !self.src[end].is_ascii_whitespace()
            && !b"+*()".contains(&self.src[end])
        {
            end += 1;
        }
        end.max((self.pos + 1).min(self.src.len()))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer();
                let mut q = Rational::from_integer(n);
                // `n/d` literal
                let save = self.pos;
                if self.eat(b'/') {
                    self.skip_ws();
                    if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                        let d = self.integer();
                        if d.is_zero() {
                            return Err(self.error("zero denominator"));
                        }
                        q /= Rational::from_integer(d);
                    } else {
                        self.pos = save;
                        return Err(self.error("expected integer denominator after `/`"));
                    }
                }
                Ok(Polynomial::constant(self.ring, q))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric()
                        || self.src[self.pos] == b'_'
                        || self.src[self.pos] == b'\'')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(i) = self.ring.index_of(name) {
                    Ok(Polynomial::var(self.ring, i))
                } else if let Some(p) = (self.bindings)(name) {
                    p.embed(self.ring)
                } else {
                    Err(Error::UnknownIdentifier(name.to_string()))
                }
            }
            Some(_) => Err(self.error("expected a number, variable or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> BigInt {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .unwrap()
    }
}
