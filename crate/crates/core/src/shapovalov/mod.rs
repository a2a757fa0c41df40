//! The canonical map from the free braided algebra to the quantum shuffle
//! algebra, realized blockwise as the braided symmetrizer, and the exact
//! ranks that give the graded dimensions of its image.

mod factors;
mod linalg;
mod oracle;
mod symmetrizer;

use rayon::prelude::*;
use thiserror::Error;

use crate::datum::BraidingMatrix;
use crate::scalar::Scalar;
use crate::words::MultiDegree;

pub use factors::{cyclotomic_factors, CyclotomicFactors};
pub use linalg::{eliminate, field_elimination, rank, Elimination};
pub use oracle::{
    lift, permutation_sum_oracle, permutation_sum_with, permutations, reduced_word, ReducedWordRule,
    DEFAULT_ORACLE_BOUND,
};
pub use symmetrizer::{symmetrizer, SymMatrix, DEFAULT_BLOCK_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapovalovError {
    #[error("block {degree} has {size} words, above the limit of {limit}")]
    SizeGuard { degree: MultiDegree, size: u128, limit: usize },
    #[error("permutation oracle limited to total degree {bound}, asked for {total}")]
    OracleBound { total: usize, bound: usize },
    #[error("multidegree has {found} letters, braiding has {expected}")]
    LetterCount { expected: usize, found: usize },
}

/// Rank of one block, i.e. the dimension of that graded piece of the image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub degree: MultiDegree,
    pub block_size: usize,
    pub rank: usize,
    pub determinant: Option<Scalar>,
    pub factors: Option<CyclotomicFactors>,
}

impl RankReport {
    pub fn from_matrix(m: &SymMatrix, factor_bound: Option<u32>) -> Self {
        let e = eliminate(m);
        let factors = factor_bound
            .and_then(|b| e.determinant.as_rational_function().map(|f| cyclotomic_factors(f, b)));
        RankReport {
            degree: m.degree().clone(),
            block_size: e.size,
            rank: e.rank,
            determinant: Some(e.determinant),
            factors,
        }
    }
}

/// Knobs shared by the block computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockOptions {
    /// Largest number of words allowed in a block.
    pub max_words: usize,
    /// When set, factor determinants over `Q(t)` by `Φ_d`, `d <= bound`.
    pub factor_bound: Option<u32>,
}

impl Default for BlockOptions {
    fn default() -> Self {
        BlockOptions { max_words: DEFAULT_BLOCK_LIMIT, factor_bound: None }
    }
}

/// Rank results looked up before, and recorded after, each block
/// computation. `store` is only ever called from one thread at a time.
pub trait RankCache: Sync {
    fn lookup(&self, degree: &MultiDegree) -> Option<RankReport>;
    fn store(&self, report: &RankReport);
}

/// Determinant of the symmetrizer block: the Gram matrix of the pairing
/// between the two objects in this multidegree.
pub fn gram_determinant(
    braiding: &BraidingMatrix,
    degree: &MultiDegree,
    options: &BlockOptions,
) -> Result<RankReport, ShapovalovError> {
    let m = symmetrizer(braiding, degree, options.max_words)?;
    Ok(RankReport::from_matrix(&m, options.factor_bound))
}

/// Block kept for the next level, and report if newly computed.
type BlockOutcome = Result<(Option<SymMatrix>, Option<RankReport>), ShapovalovError>;

/// Rank reports for every multidegree of total at most `max_total`, in
/// report order.
///
/// Blocks are built one total degree at a time, each level from the one
/// below; blocks within a level run on the current rayon pool and are
/// merged in multidegree order, so the result does not depend on the
/// number of threads. Cached reports are reused and only the levels needed
/// for missing blocks are built.
pub fn rank_reports(
    braiding: &BraidingMatrix,
    max_total: usize,
    options: &BlockOptions,
    cache: Option<&dyn RankCache>,
) -> Result<Vec<RankReport>, ShapovalovError> {
    let letters = braiding.size();
    let levels: Vec<Vec<MultiDegree>> = (0..=max_total).map(|d| MultiDegree::with_total(letters, d)).collect();
    let mut found: Vec<Vec<Option<RankReport>>> = levels
        .iter()
        .map(|degs| degs.iter().map(|d| cache.and_then(|c| c.lookup(d))).collect())
        .collect();
    let top = found.iter().rposition(|lvl| lvl.iter().any(Option::is_none));

    if let Some(top) = top {
        let mut prev: Vec<SymMatrix> = Vec::new();
        let mut prev_index: std::collections::HashMap<MultiDegree, usize> = Default::default();
        for (level, degs) in levels.iter().enumerate().take(top + 1) {
            let keep = level < top;
            let results: Vec<BlockOutcome> = degs
                .par_iter()
                .zip(found[level].par_iter())
                .map(|(deg, cached)| {
                    if cached.is_some() && !keep {
                        return Ok((None, None));
                    }
                    let block = symmetrizer::build_block(braiding, deg, options.max_words, |sub| &prev[prev_index[sub]])?;
                    let report = cached.is_none().then(|| RankReport::from_matrix(&block, options.factor_bound));
                    Ok((keep.then_some(block), report))
                })
                .collect();
            let mut next = Vec::with_capacity(degs.len());
            for (i, r) in results.into_iter().enumerate() {
                let (block, report) = r?;
                if let Some(report) = report {
                    if let Some(c) = cache {
                        c.store(&report);
                    }
                    found[level][i] = Some(report);
                }
                if let Some(b) = block {
                    next.push(b);
                }
            }
            prev_index = next.iter().enumerate().map(|(i, b)| (b.degree().clone(), i)).collect();
            prev = next;
        }
    }
    Ok(found.into_iter().flatten().map(|r| r.expect("every block resolved")).collect())
}
