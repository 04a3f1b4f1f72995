//! Reader for polynomial and rational-function text in the canonical
//! rendering (`2*x3*x4*x5 - x0*x3^2`, `(x2 - x1)/(x2 - 1)`).

use alloc::string::{String, ToString};

use num_bigint::BigInt;

use super::poly::Polynomial;
use super::ratfun::RationalFunction;
use super::ring::Ring;
use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at offset {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> ParseError {
        ParseError { position, message: message.into() }
    }
}

struct Reader<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl Reader<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err(ParseError::new(at, "division by zero"));
                    }
                    acc = &acc / &d;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFunction, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let at = self.pos;
            let e = self.integer()?;
            let e: i32 = e.to_string().parse().map_err(|_| ParseError::new(at, "exponent too large"))?;
            let e = if neg { -e } else { e };
            if e < 0 && base.is_zero() {
                return Err(ParseError::new(at, "negative power of zero"));
            }
            return base.pow(e).map_err(|_| ParseError::new(at, "negative power of zero"));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(start, "expected an integer"));
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(ParseError::new(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::constant(self.ring, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.index_of(name) {
                    Some(i) => Ok(RationalFunction::var(self.ring, i)),
                    None => Err(ParseError::new(start, alloc::format!("unknown variable `{name}`"))),
                }
            }
            Some(c) => Err(ParseError::new(self.pos, alloc::format!("unexpected `{}`", c as char))),
            None => Err(ParseError::new(self.pos, "unexpected end of input")),
        }
    }
}

/// Reads a rational function whose variables are names of `ring`.
pub fn parse_rational_function(ring: &Ring, src: &str) -> Result<RationalFunction, ParseError> {
    let mut r = Reader { src: src.as_bytes(), pos: 0, ring };
    let e = r.expr()?;
    if r.peek().is_some() {
        return Err(ParseError::new(r.pos, "trailing input"));
    }
    Ok(e)
}

/// Reads a polynomial; division is allowed only by nonzero rationals.
pub fn parse_polynomial(ring: &Ring, src: &str) -> Result<Polynomial, ParseError> {
    let f = parse_rational_function(ring, src)?;
    if !f.is_polynomial() {
        return Err(ParseError::new(0, "expected a polynomial"));
    }
    Ok(f.into_parts().0)
}
