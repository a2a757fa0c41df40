//! Best-effort cyclotomic factor extraction for determinants in `Q(t)`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::scalar::{cyclotomic_polynomial, RationalFunction};

/// `numerator = content · t^t_power · ∏ Φ_d^mult · remainder`.
///
/// Only `Φ_d` with `d <= bound` are tried, so `remainder` may still contain
/// cyclotomic factors of larger order; nothing is claimed about it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicFactors {
    pub content: String,
    pub t_power: usize,
    /// `(d, multiplicity)` pairs, ascending in `d`.
    pub factors: Vec<(u32, u32)>,
    pub remainder: String,
    pub denominator: String,
}

pub fn cyclotomic_factors(f: &RationalFunction, bound: u32) -> CyclotomicFactors {
    let num = f.numer();
    if num.is_zero() {
        return CyclotomicFactors {
            content: "0".into(),
            t_power: 0,
            factors: Vec::new(),
            remainder: "0".into(),
            denominator: f.denom().to_string(),
        };
    }
    let t_power = num.valuation().unwrap();
    let mut rest = num.shift_down(t_power);
    let mut content: BigInt = rest.content();
    if rest.leading().is_some_and(|l| l < &BigInt::from(0)) {
        content = -content;
    }
    rest = rest.div_scalar_exact(&content);
    let mut factors = Vec::new();
    for d in 1..=bound {
        let phi = cyclotomic_polynomial(d);
        let mut mult = 0;
        while rest.degree().is_some_and(|k| k >= phi.degree().unwrap()) {
            match rest.div_exact(&phi) {
                Some(q) => {
                    rest = q;
                    mult += 1;
                }
                None => break,
            }
        }
        if mult > 0 {
            factors.push((d, mult));
        }
    }
    CyclotomicFactors {
        content: content.to_string(),
        t_power,
        factors,
        remainder: rest.to_string(),
        denominator: f.denom().to_string(),
    }
}
