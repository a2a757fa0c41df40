//! Exact coefficient fields: `Q`, `Q(t)` and cyclotomic fields `Q(ζ_N)`.
//!
//! Every value is kept in a canonical form, so `==` is field equality and
//! `is_zero` is a structural test. [`Scalar`] tags a value with its field;
//! the `checked_*` methods reject mixed fields, while the operator impls
//! (used on hot paths where the field is fixed by construction) panic on a
//! mismatch.

mod cyclotomic;
mod parse;
pub mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, specialize, Cyclotomic};
pub use num_rational::BigRational;
pub use parse::{parse_literal, LiteralError};
pub use poly::{QPoly, ZPoly};
pub use ratfunc::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("pole at a primitive {order}-th root of unity: Φ_{order} divides the denominator")]
    Pole { order: u32 },
    #[error("cyclotomic order must be positive, got {0}")]
    BadOrder(u32),
    #[error("value is not a constant of the rational field")]
    NotRational,
}

/// Which coefficient field a [`Scalar`] lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Field {
    Rational,
    RationalFunction,
    Cyclotomic(u32),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("rational"),
            Field::RationalFunction => f.write_str("rational_function"),
            Field::Cyclotomic(n) => write!(f, "cyclotomic({n})"),
        }
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "rational" => Ok(Field::Rational),
            "rational_function" => Ok(Field::RationalFunction),
            other => {
                let inner = other
                    .strip_prefix("cyclotomic(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| format!("unknown field tag `{other}`"))?;
                match inner.trim().parse::<u32>() {
                    Ok(n) if n >= 1 => Ok(Field::Cyclotomic(n)),
                    _ => Err(format!("bad cyclotomic order in `{other}`")),
                }
            }
        }
    }
}

impl From<Field> for String {
    fn from(f: Field) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Field {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    RationalFunction(RationalFunction),
    Cyclotomic(Cyclotomic),
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: Field, c: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(field: Field, r: BigRational) -> Self {
        match field {
            Field::Rational => Scalar::Rational(r),
            Field::RationalFunction => Scalar::RationalFunction(RationalFunction::from_rational(&r)),
            Field::Cyclotomic(n) => Scalar::Cyclotomic(Cyclotomic::from_rational(n, r)),
        }
    }

    /// `t^k` in `Q(t)`.
    pub fn t_pow(k: i64) -> Self {
        Scalar::RationalFunction(RationalFunction::t_pow(k))
    }

    /// `ζ_N^k` in `Q(ζ_N)`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        Scalar::Cyclotomic(Cyclotomic::zeta(order).pow(k).expect("ζ is a unit"))
    }

    /// Interprets a function of `t` in `field`: constants only for `Q`,
    /// `t ↦ ζ_N` for cyclotomic fields.
    pub fn from_function(field: Field, f: &RationalFunction) -> Result<Self, ScalarError> {
        match field {
            Field::Rational => f.as_constant().map(Scalar::Rational).ok_or(ScalarError::NotRational),
            Field::RationalFunction => Ok(Scalar::RationalFunction(f.clone())),
            Field::Cyclotomic(n) => specialize(f, n).map(Scalar::Cyclotomic),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::RationalFunction(_) => Field::RationalFunction,
            Scalar::Cyclotomic(c) => Field::Cyclotomic(c.order()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::RationalFunction(f) => f.is_zero(),
            Scalar::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::RationalFunction(f) => f.is_one(),
            Scalar::Cyclotomic(c) => c.is_one(),
        }
    }

    fn same_field(&self, other: &Self) -> Result<(), ScalarError> {
        let (a, b) = (self.field(), other.field());
        if a == b {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(a, b))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::RationalFunction(a), Scalar::RationalFunction(b)) => Scalar::RationalFunction(a.add(b)),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.add(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::RationalFunction(a), Scalar::RationalFunction(b)) => Scalar::RationalFunction(a.mul(b)),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.mul(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Self {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::RationalFunction(a) => Scalar::RationalFunction(a.neg()),
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(a.neg()),
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::RationalFunction(a) => Scalar::RationalFunction(a.inv().unwrap()),
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(a.inv().unwrap()),
        })
    }

    pub fn pow(&self, k: i64) -> Result<Self, ScalarError> {
        if k < 0 && self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => {
                let e = i32::try_from(k).expect("exponent out of range");
                Scalar::Rational(if k == 0 { BigRational::one() } else { a.pow(e) })
            }
            Scalar::RationalFunction(a) => Scalar::RationalFunction(a.pow(k).unwrap()),
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(a.pow(k).unwrap()),
        })
    }

    /// Image under `t ↦ ζ_N`. Rationals embed; cyclotomic values must
    /// already have order `N`.
    pub fn specialize(&self, order: u32) -> Result<Self, ScalarError> {
        match self {
            Scalar::Rational(r) => Ok(Scalar::Cyclotomic(Cyclotomic::from_rational(order, r.clone()))),
            Scalar::RationalFunction(f) => specialize(f, order).map(Scalar::Cyclotomic),
            Scalar::Cyclotomic(c) if c.order() == order => Ok(self.clone()),
            Scalar::Cyclotomic(c) => Err(ScalarError::FieldMismatch(Field::Cyclotomic(c.order()), Field::Cyclotomic(order))),
        }
    }

    pub fn as_rational_function(&self) -> Option<&RationalFunction> {
        match self {
            Scalar::RationalFunction(f) => Some(f),
            _ => None,
        }
    }

    /// Renders the value in the literal grammar of [`parse_literal`].
    pub fn to_literal(&self) -> String {
        self.to_string()
    }

    /// Parses a literal and interprets it in `field`.
    pub fn parse_in(field: Field, text: &str) -> Result<Self, LiteralError> {
        let f = parse_literal(text)?;
        Scalar::from_function(field, &f).map_err(LiteralError::Field)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::RationalFunction(r) => write!(f, "{r}"),
            Scalar::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.field())
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar addition across fields")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar subtraction across fields")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar multiplication across fields")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn rational_add() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
    }

    #[test]
    fn ratfunc_mul_cancels() {
        let a = Scalar::parse_in(Field::RationalFunction, "(t-1)/(t^2-1)").unwrap();
        let b = Scalar::parse_in(Field::RationalFunction, "t+1").unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn negative_power_of_t() {
        let t = Scalar::t_pow(1);
        assert_eq!(t.pow(-2).unwrap(), Scalar::parse_in(Field::RationalFunction, "1/t^2").unwrap());
    }

    #[test]
    fn errors_are_explicit() {
        assert_eq!(Scalar::zero(Field::Rational).inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(Scalar::zero(Field::Rational).pow(-1), Err(ScalarError::DivisionByZero));
        assert_eq!(
            q(1, 2).checked_add(&Scalar::t_pow(1)),
            Err(ScalarError::FieldMismatch(Field::Rational, Field::RationalFunction))
        );
        assert!(Scalar::zeta_pow(3, 1).checked_mul(&Scalar::zeta_pow(4, 1)).is_err());
    }

    #[test]
    fn field_tags_round_trip() {
        for f in [Field::Rational, Field::RationalFunction, Field::Cyclotomic(12)] {
            assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        }
        assert!("cyclotomic(0)".parse::<Field>().is_err());
        assert!("complex".parse::<Field>().is_err());
    }

    #[test]
    fn pow_zero_is_one() {
        assert!(q(3, 7).pow(0).unwrap().is_one());
        assert!(Scalar::zeta_pow(5, 5).is_one());
    }
}
