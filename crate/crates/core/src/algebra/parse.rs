use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{AlgebraError, Monomial, Polynomial, Var};

/// Parses polynomial expressions with `+ - * ^` and parentheses.
///
/// Accepts every string produced by [`Polynomial::canonical_string`] plus
/// unexpanded products such as `(A+x1-y2)*(A+x2-y1)^2`. A negative
/// exponent is only allowed on a unit monomial base (`x1^-1`).
pub fn parse_polynomial(input: &str) -> Result<Polynomial, AlgebraError> {
    let mut parser = Parser { src: input.as_bytes(), pos: 0 };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn expr(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, AlgebraError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = self.integer()?;
        let e: u32 = e
            .try_into()
            .map_err(|_| self.error("exponent too large"))?;
        if !negative {
            return Ok(base.pow(e));
        }
        match base.terms() {
            [(m, c)] if c.abs().is_one() => {
                Ok(Polynomial::term(m.inverse(), c.clone()).pow(e))
            }
            _ => Err(self.error("negative exponent on a non-monomial base")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, AlgebraError> {
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
            Some(b) if b.is_ascii_digit() => Ok(Polynomial::constant(self.integer()?)),
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let v: Var = name.parse().map_err(|_| AlgebraError::Parse {
                    pos: start,
                    msg: format!("unknown variable `{name}`"),
                })?;
                Ok(Polynomial::term(Monomial::var(v), 1))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }
}
