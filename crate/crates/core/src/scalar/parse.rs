//! Scalar literal grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := '-' factor | atom ['^' ['-'] digits]
//! atom   := digits | 't' | '(' expr ')'
//! ```
//!
//! Whitespace between tokens is ignored. Values are evaluated in `Q(t)`;
//! the caller maps them into the target field.

use num_bigint::BigInt;
use thiserror::Error;

use super::ratfunc::RationalFunction;
use super::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("unexpected {found} at column {column}")]
    Unexpected { column: usize, found: String },
    #[error("division by zero in literal")]
    DivisionByZero,
    #[error("exponent out of range at column {0}")]
    Exponent(usize),
    #[error("{0}")]
    Field(ScalarError),
}

pub fn parse_literal(text: &str) -> Result<RationalFunction, LiteralError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.unexpected());
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn unexpected(&self) -> LiteralError {
        let found = match self.chars.get(self.pos) {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        LiteralError::Unexpected { column: self.pos + 1, found }
    }

    fn expr(&mut self) -> Result<RationalFunction, LiteralError> {
        let mut acc = match self.peek() {
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            Some('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, LiteralError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc.mul(&d.inv().ok_or(LiteralError::DivisionByZero)?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFunction, LiteralError> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let column = self.pos + 1;
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits = self.digits().ok_or_else(|| self.unexpected())?;
        let k: i64 = digits.parse().map_err(|_| LiteralError::Exponent(column))?;
        if k > 100_000 {
            return Err(LiteralError::Exponent(column));
        }
        base.pow(if neg { -k } else { k }).ok_or(LiteralError::DivisionByZero)
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<RationalFunction, LiteralError> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                Ok(RationalFunction::t())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let n: BigInt = d.parse().expect("ascii digits");
                Ok(RationalFunction::from_poly(super::ZPoly::constant(n)))
            }
            _ => Err(self.unexpected()),
        }
    }
}
