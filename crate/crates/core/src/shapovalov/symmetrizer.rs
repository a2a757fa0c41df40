use std::collections::HashMap;
use std::fmt;

use crate::datum::BraidingMatrix;
use crate::scalar::{Field, Scalar};
use crate::words::{Element, MultiDegree, Word};

use super::ShapovalovError;

/// Default cap on the number of words in one multidegree block.
pub const DEFAULT_BLOCK_LIMIT: usize = 3000;

/// Matrix of the braided symmetrizer on one multidegree block.
///
/// Rows and columns are indexed by [`SymMatrix::words`] in lexicographic
/// order; column `w` holds the coefficients of `Sh(w)`. Columns are stored
/// sparsely, sorted by row, without zero entries, so `==` is exact matrix
/// equality.
#[derive(Clone, PartialEq, Eq)]
pub struct SymMatrix {
    degree: MultiDegree,
    words: Vec<Word>,
    columns: Vec<Vec<(u32, Scalar)>>,
    field: Field,
}

impl SymMatrix {
    pub(crate) fn from_columns(
        degree: MultiDegree,
        words: Vec<Word>,
        columns: Vec<Vec<(u32, Scalar)>>,
        field: Field,
    ) -> Self {
        SymMatrix { degree, words, columns, field }
    }

    pub fn degree(&self) -> &MultiDegree {
        &self.degree
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Sparse column `col`: `(row, value)` pairs sorted by row.
    pub fn column(&self, col: usize) -> &[(u32, Scalar)] {
        &self.columns[col]
    }

    /// Coefficient of `words[row]` in `Sh(words[col])`.
    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        let column = &self.columns[col];
        match column.binary_search_by_key(&(row as u32), |(r, _)| *r) {
            Ok(i) => column[i].1.clone(),
            Err(_) => Scalar::zero(self.field),
        }
    }

    /// Dense rows: `dense()[row][col]`.
    pub fn dense(&self) -> Vec<Vec<Scalar>> {
        let n = self.size();
        let mut rows = vec![vec![Scalar::zero(self.field); n]; n];
        for (c, column) in self.columns.iter().enumerate() {
            for (r, x) in column {
                rows[*r as usize][c] = x.clone();
            }
        }
        rows
    }

    /// `Sh(words[col])` as an element.
    pub fn image(&self, col: usize) -> Element {
        let mut e = Element::zero();
        for (r, x) in &self.columns[col] {
            e.add_term(self.words[*r as usize].clone(), x.clone());
        }
        e
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.words.binary_search(w).ok()
    }

    pub(crate) fn from_dense_columns(degree: MultiDegree, words: Vec<Word>, dense_cols: Vec<Vec<Scalar>>, field: Field) -> Self {
        let columns = dense_cols
            .into_iter()
            .map(|col| {
                col.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(r, x)| (r as u32, x))
                    .collect()
            })
            .collect();
        SymMatrix { degree, words, columns, field }
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymMatrix {} on {:?}", self.degree, self.words)?;
        for row in self.dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn check_size(degree: &MultiDegree, limit: usize) -> Result<usize, ShapovalovError> {
    let size = degree.block_size();
    if size > limit as u128 {
        return Err(ShapovalovError::SizeGuard { degree: degree.clone(), size, limit });
    }
    Ok(size as usize)
}

/// Builds the block of `degree` from the blocks of `degree - e_x`.
///
/// `S_n = (id ⊗ S_{n-1}) ∘ R_n` with `R_n = id + c_1 + c_1 c_2 + … + c_1⋯c_{n-1}`.
/// The term `c_1⋯c_j` brings letter `w_{j+1}` to the front, picking up
/// `∏_{i≤j} b[w_i][w_{j+1}]`, so
/// `Sh(w) = Σ_j β_j · w_{j+1} · Sh(w without position j+1)`.
pub(crate) fn build_block<'a>(
    braiding: &BraidingMatrix,
    degree: &MultiDegree,
    limit: usize,
    lower: impl Fn(&MultiDegree) -> &'a SymMatrix,
) -> Result<SymMatrix, ShapovalovError> {
    let field = braiding.field();
    check_size(degree, limit)?;
    let words = degree.words();
    let letters = degree.letters();
    if degree.total() == 0 {
        return Ok(SymMatrix::from_columns(degree.clone(), words, vec![vec![(0, Scalar::one(field))]], field));
    }
    let index: HashMap<&Word, u32> = words.iter().enumerate().map(|(i, w)| (w, i as u32)).collect();
    // For each letter x present: the sub-block and where `x·row` lands here.
    let subs: Vec<Option<(&SymMatrix, Vec<u32>)>> = (0..letters)
        .map(|x| {
            degree.minus_letter(x).map(|sub_deg| {
                let sub = lower(&sub_deg);
                let landing = sub
                    .words()
                    .iter()
                    .map(|sw| {
                        let mut v = Vec::with_capacity(sw.len() + 1);
                        v.push(x as u8);
                        v.extend_from_slice(sw.letters());
                        index[&Word::from_bytes(v)]
                    })
                    .collect();
                (sub, landing)
            })
        })
        .collect();

    let n = degree.total();
    let mut columns = Vec::with_capacity(words.len());
    let mut acc: Vec<Option<Scalar>> = vec![None; words.len()];
    for w in &words {
        let ls = w.letters();
        for j in 0..n {
            let x = ls[j] as usize;
            let beta = ls[..j].iter().fold(Scalar::one(field), |b, &y| &b * braiding.get(y as usize, x));
            let mut rest = Vec::with_capacity(n - 1);
            rest.extend_from_slice(&ls[..j]);
            rest.extend_from_slice(&ls[j + 1..]);
            let (sub, landing) = subs[x].as_ref().expect("letter occurs in word");
            let col = sub.index_of(&Word::from_bytes(rest)).expect("sub-word in sub-block");
            for (r, c) in sub.column(col) {
                let target = landing[*r as usize] as usize;
                let term = if beta.is_one() { c.clone() } else { &beta * c };
                acc[target] = Some(match acc[target].take() {
                    None => term,
                    Some(prev) => &prev + &term,
                });
            }
        }
        let column: Vec<(u32, Scalar)> = acc
            .iter_mut()
            .enumerate()
            .filter_map(|(r, slot)| slot.take().filter(|x| !x.is_zero()).map(|x| (r as u32, x)))
            .collect();
        columns.push(column);
    }
    Ok(SymMatrix::from_columns(degree.clone(), words, columns, field))
}

/// The symmetrizer block of `degree`, built through all the smaller blocks it
/// depends on.
pub fn symmetrizer(braiding: &BraidingMatrix, degree: &MultiDegree, limit: usize) -> Result<SymMatrix, ShapovalovError> {
    if degree.letters() != braiding.size() {
        return Err(ShapovalovError::LetterCount { expected: braiding.size(), found: degree.letters() });
    }
    check_size(degree, limit)?;
    // Every multidegree componentwise below `degree`, by total degree.
    let mut below: Vec<MultiDegree> = vec![MultiDegree::zero(degree.letters())];
    for (i, &c) in degree.counts().iter().enumerate() {
        let mut next = Vec::new();
        for d in &below {
            for k in 0..=c {
                let mut v = d.counts().to_vec();
                v[i] = k;
                next.push(MultiDegree(v));
            }
        }
        below = next;
    }
    below.sort();
    let mut built: HashMap<MultiDegree, SymMatrix> = HashMap::new();
    for d in below {
        let block = build_block(braiding, &d, limit, |sub| &built[sub])?;
        built.insert(d, block);
    }
    Ok(built.remove(degree).expect("target block built"))
}
