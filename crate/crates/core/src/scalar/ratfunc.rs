use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::poly::ZPoly;

/// Element of `Q(t)` in canonical form.
///
/// Numerator and denominator are integer polynomials, coprime in `Z[t]`
/// (so both the polynomial gcd and the gcd of their contents are trivial),
/// and the denominator has a positive leading coefficient. Zero is `0/1`.
/// Two equal functions therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: ZPoly,
    den: ZPoly,
}

impl RationalFunction {
    /// Builds and canonicalizes `num / den`. Returns `None` if `den` is zero.
    pub fn new(num: ZPoly, den: ZPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    pub fn from_poly(p: ZPoly) -> Self {
        RationalFunction { num: p, den: ZPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(ZPoly::constant(BigInt::from(c)))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::normalize(ZPoly::constant(r.numer().clone()), ZPoly::constant(r.denom().clone()))
    }

    pub fn zero() -> Self {
        Self::from_poly(ZPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(ZPoly::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_poly(ZPoly::monomial(BigInt::one(), 1))
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        let mono = ZPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            RationalFunction { num: ZPoly::one(), den: mono }
        }
    }

    pub fn numer(&self) -> &ZPoly {
        &self.num
    }

    pub fn denom(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(c)` when the function is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            let n = self.num.coeffs().first().cloned().unwrap_or_default();
            Some(BigRational::new(n, self.den.coeffs()[0].clone()))
        } else {
            None
        }
    }

    fn normalize(num: ZPoly, den: ZPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_constant() {
            (num, den)
        } else {
            let g = poly_part_gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        RationalFunction { num, den }
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        Self::normalize(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(k.unsigned_abs()).expect("exponent out of range");
        Some(RationalFunction { num: base.num.pow(e), den: base.den.pow(e) })
    }
}

/// Polynomial gcd ignoring contents; contents are handled separately.
fn poly_part_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_monomial() || b.is_monomial() {
        let v = a.valuation().unwrap().min(b.valuation().unwrap());
        return ZPoly::monomial(BigInt::one(), v);
    }
    a.gcd(b).primitive_part()
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.is_constant() && self.num.coeffs()[0].is_positive() || self.num.is_monomial() {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if self.den.is_monomial() && self.den.leading().is_some_and(One::is_one) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
