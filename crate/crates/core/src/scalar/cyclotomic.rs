use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{write_poly, QPoly, ZPoly};
use super::ratfunc::RationalFunction;
use super::ScalarError;

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<ZPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<ZPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `t^n - 1` by
/// `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<ZPoly> {
    assert!(n >= 1, "cyclotomic polynomial order must be positive");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = ZPoly::monomial(BigInt::one(), n as usize).sub(&ZPoly::one());
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = p.div_exact(&cyclotomic_polynomial(d)).expect("Φ_d divides t^n - 1");
    }
    let p = Arc::new(p);
    phi_cache().lock().unwrap().insert(n, p.clone());
    p
}

/// Element of `Q(ζ_N)`, stored as the reduced residue modulo `Φ_N`:
/// exactly `deg Φ_N` rational coordinates in the power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coords: Vec<BigRational>,
}

impl Cyclotomic {
    fn modulus(&self) -> Arc<ZPoly> {
        cyclotomic_polynomial(self.order)
    }

    pub fn degree_of(order: u32) -> usize {
        cyclotomic_polynomial(order).degree().unwrap()
    }

    fn from_qpoly(order: u32, p: QPoly) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let mut coords = p.rem_monic(&modulus).into_coeffs();
        coords.resize(modulus.degree().unwrap(), BigRational::zero());
        Cyclotomic { order, coords }
    }

    /// Builds an element from arbitrary coordinates, reducing them modulo `Φ_N`.
    pub fn from_coords(order: u32, coords: Vec<BigRational>) -> Self {
        Self::from_qpoly(order, QPoly::new(coords))
    }

    pub fn from_rational(order: u32, r: BigRational) -> Self {
        Self::from_qpoly(order, QPoly::new(vec![r]))
    }

    pub fn zero(order: u32) -> Self {
        Self::from_rational(order, BigRational::zero())
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    /// The primitive root `ζ_N`.
    pub fn zeta(order: u32) -> Self {
        Self::from_qpoly(order, QPoly::new(vec![BigRational::zero(), BigRational::one()]))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    fn as_qpoly(&self) -> QPoly {
        QPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords.first().is_some_and(One::is_one) && self.coords[1..].iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "cyclotomic orders differ");
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { order: self.order, coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Cyclotomic { order: self.order, coords }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Cyclotomic { order: self.order, coords }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        Self::from_qpoly(self.order, self.as_qpoly().mul(&other.as_qpoly()))
    }

    pub fn inv(&self) -> Option<Self> {
        let modulus = self.modulus().to_qpoly();
        let inv = self.as_qpoly().inverse_mod(&modulus)?;
        Some(Self::from_qpoly(self.order, inv))
    }

    pub fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Some(acc)
    }

    /// Image of an integer polynomial under `t ↦ ζ_N`.
    pub fn eval_poly(order: u32, p: &ZPoly) -> Self {
        Self::from_qpoly(order, p.to_qpoly())
    }
}

/// Image of `f` under `t ↦ ζ_N`. Fails when `Φ_N` divides the denominator.
pub fn specialize(f: &RationalFunction, order: u32) -> Result<Cyclotomic, ScalarError> {
    if order == 0 {
        return Err(ScalarError::BadOrder(order));
    }
    let den = Cyclotomic::eval_poly(order, f.denom());
    let inv = den.inv().ok_or(ScalarError::Pole { order })?;
    Ok(Cyclotomic::eval_poly(order, f.numer()).mul(&inv))
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coords)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({self})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), ZPoly::from_i64s(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), ZPoly::from_i64s(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ZPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ZPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ZPoly::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_has_exact_order() {
        for n in 1..=12 {
            let z = Cyclotomic::zeta(n);
            for k in 1..n {
                assert!(!z.pow(k as i64).unwrap().is_one(), "ζ_{n}^{k} = 1");
            }
            assert!(z.pow(n as i64).unwrap().is_one());
        }
    }

    #[test]
    fn specialize_examples() {
        let t2 = RationalFunction::t_pow(2);
        let s = specialize(&t2, 4).unwrap();
        assert_eq!(s, Cyclotomic::from_rational(4, BigRational::from_integer((-1).into())));

        let f = RationalFunction::from_poly(ZPoly::from_i64s(&[1, 1, 1]));
        assert!(specialize(&f, 3).unwrap().is_zero());

        let pole = RationalFunction::new(ZPoly::one(), ZPoly::from_i64s(&[-1, 1])).unwrap();
        assert_eq!(specialize(&pole, 1), Err(ScalarError::Pole { order: 1 }));
    }

    #[test]
    fn inverse_in_q_zeta5() {
        let a = Cyclotomic::from_coords(5, vec![1.into(), 2.into(), 0.into(), (-3).into()].into_iter().map(BigRational::from_integer).collect());
        assert!(a.mul(&a.inv().unwrap()).is_one());
        assert!(Cyclotomic::zero(5).inv().is_none());
    }
}
