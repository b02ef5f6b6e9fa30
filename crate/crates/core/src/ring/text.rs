//! Canonical text form of polynomials and a small expression parser.
//!
//! Output lists terms in descending canonical order as `c*a0^e0*…*x1^f*x2^g`,
//! omitting unit coefficients and exponents. The parser accepts that grammar
//! plus parentheses, powers of sub-expressions and division by constants, so
//! `x1^5+x2^5+(x1+2*x2)^5` is valid input.

use alloc::string::{String, ToString};
use core::fmt::{self, Write};

use super::monomial::Var;
use super::poly::Poly;
use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().iter().rev().enumerate() {
            let neg = c.signum() < 0;
            if neg {
                f.write_char('-')?;
            } else if k > 0 {
                f.write_char('+')?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a polynomial expression over the variable universe.
pub fn parse_poly(input: &str) -> Result<Poly, ParseError> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

impl core::str::FromStr for Poly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError { position: self.pos, message: msg.to_string() }
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

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    let d = d
                        .as_constant()
                        .filter(|c| !c.is_zero())
                        .ok_or(ParseError { position: at, message: "division by a non-constant or zero".to_string() })?;
                    acc = acc.scale(&d.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("expected a nonnegative integer exponent"));
            }
            let e: u32 = core::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let q: Rational = text.parse().map_err(|_| self.error("bad number"))?;
                Ok(Poly::constant(q))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match Var::from_name(name) {
                    Some(v) => Ok(Poly::var(v)),
                    None => {
                        self.pos = start;
                        Err(self.error("unknown variable"))
                    }
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn canonical_output() {
        let p = parse_poly("x2^5 + x1^5").unwrap();
        assert_eq!(format!("{}", p), "x2^5+x1^5");
        let p = parse_poly("2*x1*x2").unwrap();
        assert_eq!(format!("{}", p), "2*x1*x2");
        let p = parse_poly("-3/5*a0*x1^2 + 7/2").unwrap();
        assert_eq!(format!("{}", p), "-3/5*a0*x1^2+7/2");
        assert_eq!(format!("{}", Poly::zero()), "0");
    }

    #[test]
    fn expressions() {
        let p = parse_poly("(x1+x2)^2 - x1*x1 - x2^2").unwrap();
        assert_eq!(p, parse_poly("2*x1*x2").unwrap());
        let p = parse_poly("x1/2 + 1/3").unwrap();
        assert_eq!(p, parse_poly("1/2*x1+1/3").unwrap());
        assert!(parse_poly("x1/x2").is_err());
        assert!(parse_poly("x1 +").is_err());
        assert!(parse_poly("zz").is_err());
        assert!(parse_poly("(x1").is_err());
        assert!(parse_poly("x1^").is_err());
    }
}
