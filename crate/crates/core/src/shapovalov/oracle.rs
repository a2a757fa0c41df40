//! Permutation-sum realization of the symmetrizer: `Σ_{σ ∈ S_n} T_σ`,
//! each `T_σ` obtained by applying [`braid_at`] along a reduced word of `σ`.
//! Independent of the factorized construction in `symmetrizer`.

use crate::datum::BraidingMatrix;
use crate::scalar::Scalar;
use crate::words::{braid_at, MultiDegree, Word};

use super::symmetrizer::{check_size, SymMatrix};
use super::ShapovalovError;

/// Default largest total degree the oracle accepts.
pub const DEFAULT_ORACLE_BOUND: usize = 5;

/// How a reduced word is read off a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReducedWordRule {
    /// Left-to-right bubble-sort passes.
    Bubble,
    /// Insertion sort: each element sinks left into the sorted prefix.
    Insertion,
}

/// Adjacent transposition positions (0-based) that sort `perm`. Every swap
/// removes exactly one inversion, so the sequence is a reduced word whose
/// length is the number of inversions of `perm`.
pub fn reduced_word(perm: &[usize], rule: ReducedWordRule) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut out = Vec::new();
    match rule {
        ReducedWordRule::Bubble => loop {
            let mut swapped = false;
            for k in 0..p.len().saturating_sub(1) {
                if p[k] > p[k + 1] {
                    p.swap(k, k + 1);
                    out.push(k);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        },
        ReducedWordRule::Insertion => {
            for i in 1..p.len() {
                let mut k = i;
                while k > 0 && p[k - 1] > p[k] {
                    p.swap(k - 1, k);
                    out.push(k - 1);
                    k -= 1;
                }
            }
        }
    }
    out
}

/// Applies `braid_at` at each position of `positions` in turn.
pub fn lift(braiding: &BraidingMatrix, w: &Word, positions: &[usize]) -> (Scalar, Word) {
    let mut coeff = Scalar::one(braiding.field());
    let mut cur = w.clone();
    for &k in positions {
        let (b, next) = braid_at(braiding, &cur, k).expect("reduced word positions are in range");
        coeff = &coeff * &b;
        cur = next;
    }
    (coeff, cur)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

pub fn permutation_sum_oracle(
    braiding: &BraidingMatrix,
    degree: &MultiDegree,
    bound: usize,
) -> Result<SymMatrix, ShapovalovError> {
    permutation_sum_with(braiding, degree, bound, ReducedWordRule::Bubble)
}

/// The oracle with an explicit reduced-word rule.
pub fn permutation_sum_with(
    braiding: &BraidingMatrix,
    degree: &MultiDegree,
    bound: usize,
    rule: ReducedWordRule,
) -> Result<SymMatrix, ShapovalovError> {
    let n = degree.total();
    if n > bound {
        return Err(ShapovalovError::OracleBound { total: n, bound });
    }
    check_size(degree, usize::MAX)?;
    let field = braiding.field();
    let words = degree.words();
    let reduced: Vec<Vec<usize>> = permutations(n).iter().map(|p| reduced_word(p, rule)).collect();
    let mut cols = Vec::with_capacity(words.len());
    for w in &words {
        let mut col = vec![Scalar::zero(field); words.len()];
        for positions in &reduced {
            let (c, target) = lift(braiding, w, positions);
            let row = words.binary_search(&target).expect("braiding preserves multidegree");
            col[row] = &col[row] + &c;
        }
        cols.push(col);
    }
    Ok(SymMatrix::from_dense_columns(degree.clone(), words, cols, field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inversions(p: &[usize]) -> usize {
        (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
    }

    #[test]
    fn reduced_words_have_inversion_length() {
        for n in 0..=5 {
            let perms = permutations(n);
            assert_eq!(perms.len(), (1..=n).product::<usize>());
            for p in perms {
                for rule in [ReducedWordRule::Bubble, ReducedWordRule::Insertion] {
                    let rw = reduced_word(&p, rule);
                    assert_eq!(rw.len(), inversions(&p));
                    let mut q = p.clone();
                    for &k in &rw {
                        q.swap(k, k + 1);
                    }
                    assert!(q.windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }

    #[test]
    fn bubble_and_insertion_differ_somewhere() {
        let differing = permutations(4)
            .iter()
            .filter(|p| reduced_word(p, ReducedWordRule::Bubble) != reduced_word(p, ReducedWordRule::Insertion))
            .count();
        assert!(differing > 0);
    }
}
