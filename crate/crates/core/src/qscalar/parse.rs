//! Recursive-descent parser for scalar expressions in `q`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-'? base ('^' signed-integer)?
//! base   := 'q' | unsigned-integer | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. `^` binds tighter than `/`, which binds tighter
//! than binary `-`, so `q-1/q` is `q - q^-1`.

use num_bigint::BigInt;

use super::{Rational, RatFunc, ScalarError};

pub fn parse_scalar(text: &str) -> Result<RatFunc, ScalarError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> ScalarError {
        ScalarError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn expr(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.factor()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let op_pos = self.pos;
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if c == b'*' {
                acc * rhs
            } else {
                acc.checked_div(&rhs)
                    .map_err(|_| ScalarError::DivisionByZero { pos: Some(op_pos) })?
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RatFunc, ScalarError> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let base_pos = self.pos;
        let mut value = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.signed_integer()?;
            let exp: i32 = exp
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            value = value
                .pow(exp)
                .map_err(|_| ScalarError::DivisionByZero {
                    pos: Some(base_pos),
                })?;
        }
        Ok(if negate { -value } else { value })
    }

    fn base(&mut self) -> Result<RatFunc, ScalarError> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.unsigned_integer()?;
                Ok(RatFunc::from_rational(Rational::from_integer(n)))
            }
            Some(_) => Err(self.error("expected 'q', an integer or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn unsigned_integer(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("valid decimal digits"))
    }

    fn signed_integer(&mut self) -> Result<i64, ScalarError> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let start = self.pos;
        let n = self.unsigned_integer()?;
        let n: i64 = n.try_into().map_err(|_| ScalarError::Syntax {
            pos: start,
            msg: "exponent out of range".into(),
        })?;
        Ok(if negative { -n } else { n })
    }
}
