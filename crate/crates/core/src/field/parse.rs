//! Polynomials in `t` over ℚ(ζ_m), written like `t^2-6*t+1` or
//! `t^2-(z+1)*t+1/2` where `z` stands for `ζ_m`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Field, FieldElem};
use crate::matrix::Ring;
use crate::{Error, Result};

type Poly = Vec<FieldElem>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: &'a Field,
}

fn padd(a: &Poly, b: &Poly, zero: &FieldElem) -> Poly {
    (0..a.len().max(b.len()))
        .map(|k| a.get(k).unwrap_or(zero).add(b.get(k).unwrap_or(zero)))
        .collect()
}

fn pmul(a: &Poly, b: &Poly, zero: &FieldElem) -> Poly {
    let mut out = vec![zero.clone(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(FieldElem::is_zero) {
        p.pop();
    }
    p
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::InvalidMinpoly(format!("{msg} at offset {}", self.pos))
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

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn expr(&mut self) -> Result<Poly> {
        let zero = self.field.zero();
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.iter().map(Ring::neg).collect()
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
                    acc = padd(&acc, &self.term()?, &zero);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t: Poly = self.term()?.iter().map(Ring::neg).collect();
                    acc = padd(&acc, &t, &zero);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let zero = self.field.zero();
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = pmul(&acc, &self.power()?, &zero);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = trim(self.power()?);
                    if d.len() != 1 {
                        return Err(self.err("division by a non-constant"));
                    }
                    let inv = d[0].try_inv().map_err(|_| self.err("division by zero"))?;
                    acc = acc.iter().map(|c| c.mul(&inv)).collect();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let e: u32 = self.integer()?.try_into().map_err(|_| self.err("exponent too large"))?;
        let zero = self.field.zero();
        let mut acc = vec![self.field.one()];
        for _ in 0..e {
            acc = pmul(&acc, &base, &zero);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(vec![self.field.zero(), self.field.one()])
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(vec![self.field.zeta_power(1)])
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(vec![self.field.from_rational(BigRational::from_integer(n))])
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a polynomial in `t` with coefficients in the cyclotomic field
/// `field`. Returns coefficients low to high, trailing zeros removed (the
/// zero polynomial is `[0]`).
pub fn parse_polynomial(text: &str, field: &Field) -> Result<Vec<FieldElem>> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        field,
    };
    let poly = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(trim(poly))
}
