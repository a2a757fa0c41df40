//! Words in the generators, their gradings, and the two products on
//! formal linear combinations of words: concatenation (the free braided
//! algebra) and the braided shuffle (the quantum shuffle algebra).
//!
//! Letters are 0-based internally and printed 1-based.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::datum::{BraidingMatrix, Datum};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("braid position {position} out of range for a word of length {len}")]
    Position { position: usize, len: usize },
    #[error("letter {letter} out of range for {letters} letters")]
    Letter { letter: usize, letters: usize },
}

/// A finite sequence of letters; ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from 0-based letters, checking them against `letters`.
    pub fn new(letters: &[usize], alphabet: usize) -> Result<Self, WordError> {
        letters
            .iter()
            .map(|&l| {
                if l < alphabet && l < 256 {
                    Ok(l as u8)
                } else {
                    Err(WordError::Letter { letter: l + 1, letters: alphabet })
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub(crate) fn from_bytes(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn multidegree(&self, letters: usize) -> MultiDegree {
        let mut counts = vec![0u32; letters];
        for &l in &self.0 {
            counts[l as usize] += 1;
        }
        MultiDegree(counts)
    }

    /// Sum of the characters of the letters.
    pub fn weight(&self, datum: &Datum) -> Vec<i64> {
        let mut w = vec![0i64; datum.rank()];
        for &l in &self.0 {
            for (acc, e) in w.iter_mut().zip(datum.alphas()[l as usize].exponents()) {
                *acc += e;
            }
        }
        w
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", l + 1)?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{self}")
    }
}

/// Letter multiplicities. Ordered by total degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree(pub Vec<u32>);

impl MultiDegree {
    pub fn zero(letters: usize) -> Self {
        MultiDegree(vec![0; letters])
    }

    pub fn unit(letters: usize, i: usize) -> Self {
        let mut v = vec![0; letters];
        v[i] = 1;
        MultiDegree(v)
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn letters(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - e_i`, if that stays nonnegative.
    pub fn minus_letter(&self, i: usize) -> Option<Self> {
        let mut v = self.0.clone();
        v[i] = v[i].checked_sub(1)?;
        Some(MultiDegree(v))
    }

    /// Number of words with these multiplicities.
    pub fn block_size(&self) -> u128 {
        let mut acc: u128 = 1;
        let mut n: u128 = 0;
        for &c in &self.0 {
            for k in 1..=c as u128 {
                n += 1;
                // acc * n / k stays integral: acc is a product of binomials.
                acc = acc * n / k;
            }
        }
        acc
    }

    /// All words of this multidegree, in lexicographic order.
    pub fn words(&self) -> Vec<Word> {
        let mut out = Vec::new();
        let mut counts = self.0.clone();
        let mut current = Vec::with_capacity(self.total());
        fn rec(counts: &mut [u32], current: &mut Vec<u8>, remaining: usize, out: &mut Vec<Word>) {
            if remaining == 0 {
                out.push(Word(current.clone()));
                return;
            }
            for l in 0..counts.len() {
                if counts[l] > 0 {
                    counts[l] -= 1;
                    current.push(l as u8);
                    rec(counts, current, remaining - 1, out);
                    current.pop();
                    counts[l] += 1;
                }
            }
        }
        let total = self.total();
        rec(&mut counts, &mut current, total, &mut out);
        out
    }

    /// Every multidegree over `letters` letters with total at most
    /// `max_total`, in report order.
    pub fn all_up_to(letters: usize, max_total: usize) -> Vec<MultiDegree> {
        (0..=max_total).flat_map(|d| Self::with_total(letters, d)).collect()
    }

    /// Multidegrees of total exactly `total`, lexicographically ascending.
    pub fn with_total(letters: usize, total: usize) -> Vec<MultiDegree> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; letters];
        fn rec(i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
            if i + 1 == cur.len() {
                cur[i] = left as u32;
                out.push(MultiDegree(cur.clone()));
                return;
            }
            for c in 0..=left {
                cur[i] = c as u32;
                rec(i + 1, left - c, cur, out);
            }
        }
        if letters == 0 {
            if total == 0 {
                out.push(MultiDegree(Vec::new()));
            }
            return out;
        }
        rec(0, total, &mut cur, &mut out);
        out
    }
}

impl Ord for MultiDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiDegree{self}")
    }
}

/// Applies the braiding at positions `k, k+1` (0-based): returns
/// `b[w_k][w_{k+1}]` and the word with those letters swapped.
pub fn braid_at(braiding: &BraidingMatrix, w: &Word, k: usize) -> Result<(Scalar, Word), WordError> {
    if k + 1 >= w.len() {
        return Err(WordError::Position { position: k, len: w.len() });
    }
    let (x, y) = (w.0[k] as usize, w.0[k + 1] as usize);
    let mut swapped = w.0.clone();
    swapped.swap(k, k + 1);
    Ok((braiding.get(x, y).clone(), Word(swapped)))
}

/// Finite linear combination of words with nonzero coefficients, sorted by word.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn unit(field: Field) -> Self {
        Self::word(Word::empty(), Scalar::one(field))
    }

    pub fn word(w: Word, coeff: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(w, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    /// Adds `coeff * w`, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero();
        for (w, x) in self.terms() {
            out.add_term(w.clone(), x * c);
        }
        out
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})*{w}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Bilinear extension of word concatenation.
pub fn concat(u: &Element, v: &Element) -> Element {
    let mut out = Element::zero();
    for (a, x) in u.terms() {
        for (b, y) in v.terms() {
            out.add_term(a.concat(b), x * y);
        }
    }
    out
}

/// Braided shuffle product of two words.
///
/// With `u = a u'` and `v = b v'`:
/// `u ⧢ v = a (u' ⧢ v) + β b (u ⧢ v')`, where `β = ∏_{x ∈ u} b[x][b]` is the
/// scalar picked up by braiding `b` leftwards past every letter of `u`.
/// Agrees with summing the braided lifts of all `(|u|, |v|)`-shuffles.
pub fn shuffle_words(braiding: &BraidingMatrix, u: &Word, v: &Word) -> Element {
    let field = braiding.field();
    let (n, m) = (u.len(), v.len());
    // cross[i][j] = ∏_{x ∈ u[i..]} b[x][v_j]
    let cross: Vec<Vec<Scalar>> = (0..=n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    u.0[i..].iter().fold(Scalar::one(field), |acc, &x| &acc * braiding.get(x as usize, v.0[j] as usize))
                })
                .collect()
        })
        .collect();
    // table[i][j] = u[i..] ⧢ v[j..], filled from the back.
    let mut table: Vec<Vec<Element>> = vec![vec![Element::zero(); m + 1]; n + 1];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            table[i][j] = if i == n {
                Element::word(Word(v.0[j..].to_vec()), Scalar::one(field))
            } else if j == m {
                Element::word(Word(u.0[i..].to_vec()), Scalar::one(field))
            } else {
                let mut e = Element::zero();
                for (w, c) in table[i + 1][j].terms() {
                    e.add_term(prepend(u.0[i], w), c.clone());
                }
                for (w, c) in table[i][j + 1].terms() {
                    e.add_term(prepend(v.0[j], w), c * &cross[i][j]);
                }
                e
            };
        }
    }
    std::mem::take(&mut table[0][0])
}

fn prepend(letter: u8, w: &Word) -> Word {
    let mut v = Vec::with_capacity(w.len() + 1);
    v.push(letter);
    v.extend_from_slice(&w.0);
    Word(v)
}

/// Bilinear extension of [`shuffle_words`].
pub fn shuffle(braiding: &BraidingMatrix, u: &Element, v: &Element) -> Element {
    let mut out = Element::zero();
    for (a, x) in u.terms() {
        for (b, y) in v.terms() {
            let xy = x * y;
            for (w, c) in shuffle_words(braiding, a, b).terms() {
                out.add_term(w.clone(), c * &xy);
            }
        }
    }
    out
}
