//! Text forms of scalars and polynomials.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | '+' unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'q' | 'x' | '(' expr ')'
//! ```
//!
//! Division is only allowed by expressions free of `x`. A scalar is an
//! expression in which `x` does not occur.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Rational, Scalar};

/// Largest exponent accepted after `^`.
const MAX_EXPONENT: u32 = 4096;

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let p = parse_poly(text)?;
    match p.degree() {
        None => Ok(Scalar::zero()),
        Some(0) => Ok(p.coeff(0)),
        Some(_) => Err(Error::Parse {
            offset: text.find('x').unwrap_or(0),
            message: "scalars may not contain x".into(),
        }),
    }
}

pub fn parse_poly(text: &str) -> Result<Poly> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let rhs = self.unary()?;
            if op == b'*' {
                acc = &acc * &rhs;
            } else {
                let divisor = match rhs.degree() {
                    None => return Err(Error::DivisionByZero),
                    Some(0) => rhs.coeff(0),
                    Some(_) => {
                        return Err(Error::Parse {
                            offset: at,
                            message: "cannot divide by a polynomial in x".into(),
                        })
                    }
                };
                let inv = divisor.recip()?;
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.integer()?;
            let e: u32 = digits
                .try_into()
                .ok()
                .filter(|e| *e <= MAX_EXPONENT)
                .ok_or_else(|| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(Poly::constant(Scalar::q()))
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Poly::constant(Scalar::from_rational(Rational::from_integer(n))))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses a comma-separated list of scalars, e.g. `"2, 3, 1+q"`.
///
/// Commas inside parentheses do not split.
pub fn parse_scalar_list(text: &str) -> Result<Vec<Scalar>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut items = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                items.push(parse_scalar(&text[start..i])?);
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push(parse_scalar(&text[start..])?);
    Ok(items)
}

/// Parses a bare rational such as `-3/4`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = parse_scalar(text)?;
    s.as_rational().ok_or_else(|| Error::Parse {
        offset: 0,
        message: format!("`{text}` is not a rational number"),
    })
}
