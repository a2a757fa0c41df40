//! Dense univariate polynomials over the integers and over the rationals.
//!
//! Coefficients are stored low degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and equality is structural.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in `t` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        ZPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exponent of the lowest nonzero term (`None` for zero).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True for `c * t^k`.
    pub fn is_monomial(&self) -> bool {
        match self.valuation() {
            Some(v) => v + 1 == self.coeffs.len(),
            None => false,
        }
    }

    pub fn neg(&self) -> Self {
        ZPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o += s;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = self.coeffs.clone();
        out.resize(n, BigInt::zero());
        for (o, s) in out.iter_mut().zip(&other.coeffs) {
            *o -= s;
        }
        Self::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// Divide by `t^k`; the caller guarantees `k <= valuation`.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        ZPoly { coeffs: self.coeffs[k..].to_vec() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        ZPoly { coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Exact division in `Z[t]`; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        if dd == 0 {
            let c = &divisor.coeffs[0];
            let mut out = Vec::with_capacity(self.coeffs.len());
            for x in &self.coeffs {
                let (q, r) = x.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push(q);
            }
            return Some(ZPoly { coeffs: out });
        }
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &q * dc;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let bd = b.degree().expect("pseudo-remainder by zero");
        let lc = b.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < bd {
                break;
            }
            let rl = r.leading().unwrap().clone();
            // r <- lc*r - rl*t^(rd-bd)*b
            r = r.scale(&lc).sub(&b.scale(&rl).shift_up(rd - bd));
        }
        r
    }

    /// Greatest common divisor in `Z[t]`, normalized to positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let cont = self.content().gcd(&other.content());
        let v = self.valuation().unwrap().min(other.valuation().unwrap());
        let a = self.shift_down(self.valuation().unwrap()).primitive_part();
        let b = other.shift_down(other.valuation().unwrap()).primitive_part();
        let g = if a.is_one() || b.is_one() { Self::one() } else { primitive_prs_gcd(a, b) };
        g.scale(&cont).shift_up(v)
    }

    fn normalize_sign(&self) -> Self {
        if self.leading().is_some_and(Signed::is_negative) {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// `self(t^k)`
    pub fn compose_power(&self, k: usize) -> Self {
        if k == 1 || self.is_constant() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        ZPoly { coeffs }
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }
}

fn primitive_prs_gcd(mut a: ZPoly, mut b: ZPoly) -> ZPoly {
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    a.primitive_part()
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<BigRational> =
            self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        write_poly(f, &coeffs)
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({self})")
    }
}

/// Writes a polynomial in `t` in the literal grammar accepted by
/// [`crate::scalar::parse_literal`], highest degree first.
pub(crate) fn write_poly(f: &mut impl fmt::Write, coeffs: &[BigRational]) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_char('-')?;
            }
        } else {
            f.write_str(if neg { "-" } else { "+" })?;
        }
        first = false;
        let mon = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        if mon.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mon)?;
        } else {
            write!(f, "{abs}*{mon}")?;
        }
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}

/// Polynomial in `t` with rational coefficients. Used for residues modulo
/// cyclotomic polynomials, where inverses need a field of coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = self.coeffs.clone();
        out.resize(n, BigRational::zero());
        for (o, s) in out.iter_mut().zip(&other.coeffs) {
            *o += s;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = self.coeffs.clone();
        out.resize(n, BigRational::zero());
        for (o, s) in out.iter_mut().zip(&other.coeffs) {
            *o -= s;
        }
        Self::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] * &lc_inv;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &q * dc;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Remainder modulo a monic integer polynomial.
    pub fn rem_monic(&self, modulus: &ZPoly) -> Self {
        let dd = modulus.degree().expect("zero modulus");
        debug_assert!(modulus.leading().is_some_and(One::is_one));
        let Some(nd) = self.degree() else {
            return Self::zero();
        };
        if nd < dd {
            return self.clone();
        }
        let mut rem = self.coeffs.clone();
        for k in (0..=nd - dd).rev() {
            let q = rem[k + dd].clone();
            if q.is_zero() {
                continue;
            }
            for (j, dc) in modulus.coeffs().iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &q * BigRational::from_integer(dc.clone());
                }
            }
        }
        rem.truncate(dd);
        Self::new(rem)
    }

    /// Inverse of `self` modulo `modulus`, if `gcd(self, modulus) = 1`.
    pub fn inverse_mod(&self, modulus: &QPoly) -> Option<Self> {
        // Extended Euclid tracking only the coefficient of `self`.
        let (mut r0, mut r1) = (modulus.clone(), self.div_rem(modulus).1);
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let c = r0.coeffs[0].recip();
        Some(s0.scale(&c).div_rem(modulus).1)
    }
}
