//! Highest-weight modules for sl2 as a desk-scale counterpart of the quantum
//! side: Verma module, contragredient module, Shapovalov form and the
//! irreducible quotient `L_λ`.
//!
//! Vectors live in the basis `F^k v` of the Verma module, where `H v = λ v`
//! and `E v = 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Fewest levels shown by [`parallel_report`].
pub const DEFAULT_REPORT_LEVELS: usize = 8;

/// Finite combination `Σ c_k F^k v`.
pub type VermaVector = BTreeMap<usize, BigRational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VermaSl2 {
    lambda: BigRational,
}

fn add_into(acc: &mut VermaVector, k: usize, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(k).or_insert_with(BigRational::zero);
    *slot += c;
    if slot.is_zero() {
        acc.remove(&k);
    }
}

impl VermaSl2 {
    pub fn new(lambda: BigRational) -> Self {
        VermaSl2 { lambda }
    }

    pub fn lambda(&self) -> &BigRational {
        &self.lambda
    }

    pub fn basis(k: usize) -> VermaVector {
        BTreeMap::from([(k, BigRational::one())])
    }

    /// Weight `λ - 2k` of `F^k v`.
    pub fn weight(&self, k: usize) -> BigRational {
        &self.lambda - BigRational::from_integer(BigInt::from(2 * k))
    }

    pub fn apply_f(&self, x: &VermaVector) -> VermaVector {
        x.iter().map(|(&k, c)| (k + 1, c.clone())).collect()
    }

    pub fn apply_h(&self, x: &VermaVector) -> VermaVector {
        let mut out = VermaVector::new();
        for (&k, c) in x {
            add_into(&mut out, k, c * self.weight(k));
        }
        out
    }

    /// `E F^k v`, from `E F = F E + H` applied to `F^k = F · F^(k-1)`.
    pub fn e_on_basis(&self, k: usize) -> VermaVector {
        if k == 0 {
            return VermaVector::new();
        }
        let lower = Self::basis(k - 1);
        let mut out = self.apply_f(&self.e_on_basis(k - 1));
        for (j, c) in self.apply_h(&lower) {
            add_into(&mut out, j, c);
        }
        out
    }

    pub fn apply_e(&self, x: &VermaVector) -> VermaVector {
        let mut out = VermaVector::new();
        for (&k, c) in x {
            for (j, d) in self.e_on_basis(k) {
                add_into(&mut out, j, c * d);
            }
        }
        out
    }
}

/// `⟨F^k v, F^k v⟩` for the contravariant form with `⟨v, v⟩ = 1`: the
/// coefficient of `v` in `E^k F^k v`.
pub fn shapovalov_value(lambda: &BigRational, k: usize) -> BigRational {
    let m = VermaSl2::new(lambda.clone());
    let mut x = VermaSl2::basis(k);
    for _ in 0..k {
        x = m.apply_e(&x);
    }
    x.get(&0).cloned().unwrap_or_else(BigRational::zero)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dimension {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => f.write_str("infinite"),
        }
    }
}

/// Number of consecutive levels from `k = 0` with nonzero Shapovalov value.
///
/// Consecutive values differ by the factor `k(λ + 1 - k)`, which vanishes
/// only at `k = λ + 1`. So the scan stops at the first zero, and when
/// `λ + 1` is not a positive integer no level past `0` can ever vanish.
pub fn dim_l(lambda: &BigRational) -> Dimension {
    let next = lambda + BigRational::one();
    let last = if next.is_integer() && next.is_positive() { next.to_integer().to_usize() } else { None };
    let Some(last) = last else {
        return Dimension::Infinite;
    };
    let mut value = shapovalov_value(lambda, 0);
    for k in 1..=last {
        value *= level_factor(lambda, k);
        if value.is_zero() {
            debug_assert!(shapovalov_value(lambda, k).is_zero());
            return Dimension::Finite(k as u64);
        }
    }
    Dimension::Infinite
}

/// Ratio `value(k) / value(k-1)`, read off the action of `E` on `F^k v`.
pub fn level_factor(lambda: &BigRational, k: usize) -> BigRational {
    let e = VermaSl2::new(lambda.clone()).e_on_basis(k);
    e.get(&(k - 1)).cloned().unwrap_or_else(BigRational::zero)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2Level {
    pub k: usize,
    pub weight: String,
    pub verma_dim: u64,
    pub contragredient_dim: u64,
    pub shapovalov_value: String,
    pub irreducible_dim: u64,
}

/// One line of the classical/quantum dictionary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Correspondence {
    pub role: String,
    pub classical: String,
    pub quantum: String,
    pub classical_dims: String,
    pub quantum_dims: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2Report {
    pub lambda: String,
    pub dim_l: Dimension,
    pub dominant: bool,
    pub label: String,
    pub levels: Vec<Sl2Level>,
    pub correspondence: Vec<Correspondence>,
}

fn dims_text(dims: &[u64], open: bool) -> String {
    let body: Vec<String> = dims.iter().map(u64::to_string).collect();
    if open {
        format!("({},…)", body.join(","))
    } else {
        format!("({})", body.join(","))
    }
}

/// The sl2 side of the initial / final / minimal dictionary, with the
/// quantum side left as labelled placeholders to be filled by `analyze`.
pub fn parallel_report(lambda: &BigRational) -> Sl2Report {
    let dim = dim_l(lambda);
    let shown = match dim {
        Dimension::Finite(n) => (n as usize + 1).max(DEFAULT_REPORT_LEVELS),
        Dimension::Infinite => DEFAULT_REPORT_LEVELS,
    };
    let m = VermaSl2::new(lambda.clone());
    let levels: Vec<Sl2Level> = (0..shown)
        .map(|k| Sl2Level {
            k,
            weight: m.weight(k).to_string(),
            verma_dim: 1,
            contragredient_dim: 1,
            shapovalov_value: shapovalov_value(lambda, k).to_string(),
            irreducible_dim: match dim {
                Dimension::Finite(n) => u64::from((k as u64) < n),
                Dimension::Infinite => 1,
            },
        })
        .collect();
    let ones = vec![1u64; shown];
    let irreducible: Vec<u64> = levels.iter().map(|l| l.irreducible_dim).collect();
    let dominant = matches!(dim, Dimension::Finite(_));
    let label = if dominant { "dominant" } else { "not dominant" }.to_string();
    let correspondence = vec![
        Correspondence {
            role: "initial".into(),
            classical: format!("Verma module M({lambda})"),
            quantum: "free braided algebra".into(),
            classical_dims: dims_text(&ones, true),
            quantum_dims: "see analyze: block sizes".into(),
        },
        Correspondence {
            role: "final".into(),
            classical: format!("contragredient module of M({lambda})"),
            quantum: "quantum shuffle algebra".into(),
            classical_dims: dims_text(&ones, true),
            quantum_dims: "see analyze: block sizes".into(),
        },
        Correspondence {
            role: "minimal".into(),
            classical: format!("irreducible module L({lambda}), dim {dim}"),
            quantum: "image of the symmetrizer".into(),
            classical_dims: dims_text(&irreducible, !dominant),
            quantum_dims: "see analyze: ranks".into(),
        },
        Correspondence {
            role: "dominance".into(),
            classical: format!("{label}: L({lambda}) has dimension"),
            quantum: "polynomial growth of the image".into(),
            classical_dims: dim.to_string(),
            quantum_dims: "see analyze: verdict".into(),
        },
    ];
    Sl2Report { lambda: lambda.to_string(), dim_l: dim, dominant, label, levels, correspondence }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_values() {
        assert_eq!(shapovalov_value(&r(5, 7), 0), r(1, 1));
        assert_eq!(shapovalov_value(&r(1, 1), 1), r(1, 1));
        assert_eq!(shapovalov_value(&r(1, 1), 2), r(0, 1));
    }

    #[test]
    fn e_on_basis_matches_commutator() {
        // E F^2 v = (λ + λ - 2) F v
        let m = VermaSl2::new(r(3, 1));
        assert_eq!(m.e_on_basis(2), BTreeMap::from([(1, r(4, 1))]));
        assert!(m.e_on_basis(0).is_empty());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_l(&r(0, 1)), Dimension::Finite(1));
        assert_eq!(dim_l(&r(3, 1)), Dimension::Finite(4));
        assert_eq!(dim_l(&r(1, 2)), Dimension::Infinite);
        assert_eq!(dim_l(&r(-1, 1)), Dimension::Infinite);
        assert_eq!(dim_l(&r(-3, 1)), Dimension::Infinite);
    }

    #[test]
    fn report_for_two() {
        let rep = parallel_report(&r(2, 1));
        let dims: Vec<u64> = rep.levels.iter().map(|l| l.irreducible_dim).collect();
        assert_eq!(&dims[..5], &[1, 1, 1, 0, 0]);
        assert!(rep.levels.iter().all(|l| l.verma_dim == 1));
        assert_eq!(rep.label, "dominant");
        let rep = parallel_report(&r(-1, 1));
        assert_eq!(rep.dim_l, Dimension::Infinite);
        assert_eq!(rep.label, "not dominant");
    }
}
