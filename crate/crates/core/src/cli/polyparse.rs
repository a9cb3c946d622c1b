//! Recursive-descent parser for polynomials in `t`.
//!
//! ```text
//! poly  := ws sign? term (ws ('+'|'-') ws term)* ws
//! term  := coeff (ws '*'? ws mono)? | mono
//! coeff := digits ('/' digits)?
//! mono  := 't' (ws '^' ws digits)?
//! ```
//!
//! Like terms are combined. The canonical printer is `UPoly`'s `Display`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{Rational, UPoly};

const MAX_DEGREE: usize = 10_000;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, expected: &[&str]) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
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

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Some(s.parse().expect("digits parse"))
    }

    fn coeff(&mut self) -> Result<Option<Rational>> {
        let Some(n) = self.digits() else {
            return Ok(None);
        };
        self.ws();
        if !self.eat(b'/') {
            return Ok(Some(Rational::from_integer(n)));
        }
        self.ws();
        let Some(d) = self.digits() else {
            return self.err(&["integer"]);
        };
        if d.is_zero() {
            self.pos -= 1;
            return self.err(&["nonzero denominator"]);
        }
        Ok(Some(Rational::new(n, d)))
    }

    fn mono(&mut self) -> Result<Option<usize>> {
        if !self.eat(b't') {
            return Ok(None);
        }
        let save = self.pos;
        self.ws();
        if !self.eat(b'^') {
            self.pos = save;
            return Ok(Some(1));
        }
        self.ws();
        let at = self.pos;
        let Some(e) = self.digits() else {
            return self.err(&["integer"]);
        };
        match usize::try_from(e) {
            Ok(e) if e <= MAX_DEGREE => Ok(Some(e)),
            _ => {
                self.pos = at;
                self.err(&["exponent <= 10000"])
            }
        }
    }

    fn term(&mut self) -> Result<(Rational, usize)> {
        if let Some(c) = self.coeff()? {
            let save = self.pos;
            self.ws();
            let star = self.eat(b'*');
            self.ws();
            match self.mono()? {
                Some(e) => Ok((c, e)),
                None if star => self.err(&["t"]),
                None => {
                    self.pos = save;
                    Ok((c, 0))
                }
            }
        } else if let Some(e) = self.mono()? {
            Ok((Rational::one(), e))
        } else {
            self.err(&["number", "t"])
        }
    }

    fn poly(&mut self) -> Result<UPoly> {
        let mut coeffs: Vec<Rational> = Vec::new();
        let mut add = |c: Rational, e: usize, neg: bool| {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] += if neg { -c } else { c };
        };
        self.ws();
        let mut neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            self.ws();
            let (c, e) = self.term()?;
            add(c, e, neg);
            self.ws();
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else if self.pos == self.src.len() {
                break;
            } else {
                return self.err(&["+", "-", "end of input"]);
            }
        }
        Ok(UPoly::from_coeffs(coeffs))
    }
}

/// Parses a polynomial in `t` with exact rational coefficients.
pub fn parse_poly(src: &str) -> Result<UPoly> {
    Parser {
        src: src.as_bytes(),
        pos: 0,
    }
    .poly()
}
