//! Parser for the canonical polynomial text, extended with parentheses and
//! powers so that factored generators such as `y^3*(x^7 + i*y^7)` are accepted.
//!
//! Grammar:
//! ```text
//! expr   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := uint ('/' uint)? | 'i' | 'x' | 'y' | '(' expr ')'
//! ```

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{AlgebraError, GPolynomial, GaussianRational};

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> AlgebraError {
        AlgebraError::Parse { position: self.pos, message: message.to_owned() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a digit"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| self.error("bad integer"))
    }

    fn exponent(&mut self) -> Result<u32, AlgebraError> {
        let value = self.uint()?;
        u32::try_from(value).map_err(|_| self.error("exponent too large"))
    }

    fn expr(&mut self) -> Result<GPolynomial, AlgebraError> {
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<GPolynomial, AlgebraError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GPolynomial, AlgebraError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<GPolynomial, AlgebraError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(GPolynomial::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(GPolynomial::y())
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(GPolynomial::constant(GaussianRational::i()))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.uint()?;
                let denom = if self.eat(b'/') { self.uint()? } else { BigInt::from(1) };
                if denom.is_zero() {
                    return Err(AlgebraError::DivisionByZero);
                }
                Ok(GPolynomial::constant(GaussianRational::real(BigRational::new(numer, denom))))
            }
            _ => Err(self.error("unexpected input")),
        }
    }
}

impl FromStr for GPolynomial {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { bytes: s.as_bytes(), pos: 0 };
        let poly = parser.expr()?;
        if parser.peek().is_some() {
            return Err(parser.error("trailing input"));
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_factored_generators() {
        let p: GPolynomial = "y^3*(x^7 + i*y^7)".parse().unwrap();
        assert_eq!(p.to_string(), "x^7*y^3 + i*y^10");
        let q: GPolynomial = "(x^2 - y^2)^2".parse().unwrap();
        assert_eq!(q.to_string(), "x^4 - 2*x^2*y^2 + y^4");
    }

    #[test]
    fn round_trips_complex_coefficients() {
        let text = "(1 - 3/4*i)*x^2*y - 5/2*i*y + 7";
        let p: GPolynomial = text.parse().unwrap();
        assert_eq!(p.to_string(), text);
    }

    #[test]
    fn rejects_garbage() {
        assert!("x^".parse::<GPolynomial>().is_err());
        assert!("x y".parse::<GPolynomial>().is_err());
        assert!("1/0".parse::<GPolynomial>().is_err());
    }
}
