//! Graded dimensions of the image of the symmetrizer and a truncation-level
//! growth classification of their totals.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::datum::{BraidingMatrix, Datum};
use crate::shapovalov::{rank_reports, BlockOptions, RankCache, RankReport, ShapovalovError};
use crate::words::MultiDegree;

/// Dimensions of every multidegree piece up to a total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    pub max_total: usize,
    pub dims: BTreeMap<MultiDegree, usize>,
    /// `totals[d]` sums `dims` over multidegrees of total `d`.
    pub totals: Vec<u64>,
    pub reports: Vec<RankReport>,
}

impl HilbertTable {
    pub fn from_reports(max_total: usize, reports: Vec<RankReport>) -> Self {
        let mut totals = vec![0u64; max_total + 1];
        let mut dims = BTreeMap::new();
        for r in &reports {
            totals[r.degree.total()] += r.rank as u64;
            dims.insert(r.degree.clone(), r.rank);
        }
        HilbertTable { max_total, dims, totals, reports }
    }

    pub fn dim(&self, degree: &MultiDegree) -> Option<usize> {
        self.dims.get(degree).copied()
    }
}

pub fn hilbert_table(
    datum: &Datum,
    max_total: usize,
    options: &BlockOptions,
    cache: Option<&dyn RankCache>,
) -> Result<HilbertTable, ShapovalovError> {
    hilbert_table_for(datum.braiding_matrix(), max_total, options, cache)
}

pub fn hilbert_table_for(
    braiding: &BraidingMatrix,
    max_total: usize,
    options: &BlockOptions,
    cache: Option<&dyn RankCache>,
) -> Result<HilbertTable, ShapovalovError> {
    let reports = rank_reports(braiding, max_total, options, cache)?;
    Ok(HilbertTable::from_reports(max_total, reports))
}

/// Number of multisets of `roots` summing to `degree`, by exhaustive
/// recursion over how many copies of each root are used.
pub fn kostant_dims(roots: &[MultiDegree], degree: &MultiDegree) -> u64 {
    fn rec(roots: &[MultiDegree], rem: &mut [u32]) -> u64 {
        let Some((root, rest)) = roots.split_first() else {
            return u64::from(rem.iter().all(|&c| c == 0));
        };
        let mut total = rec(rest, rem);
        let mut used = 0;
        while root.counts().iter().zip(rem.iter()).all(|(r, m)| r <= m) {
            for (m, r) in rem.iter_mut().zip(root.counts()) {
                *m -= r;
            }
            used += 1;
            total += rec(rest, rem);
        }
        for (m, r) in rem.iter_mut().zip(root.counts()) {
            *m += r * used;
        }
        total
    }
    assert!(roots.iter().all(|r| r.total() > 0), "roots must be nonzero");
    rec(roots, &mut degree.counts().to_vec())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "degree", rename_all = "snake_case")]
pub enum GrowthKind {
    Finite,
    Polynomial(usize),
    ExponentialSuspected,
    Inconclusive,
}

impl fmt::Display for GrowthKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthKind::Finite => f.write_str("finite"),
            GrowthKind::Polynomial(k) => write!(f, "polynomial({k})"),
            GrowthKind::ExponentialSuspected => f.write_str("exponential_suspected"),
            GrowthKind::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

/// Parameters of the truncation-level growth test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GrowthParams {
    /// Number of trailing entries every test looks at.
    pub window: usize,
    /// Exponential threshold `ρ = num / den` on consecutive ratios.
    pub ratio: (u64, u64),
    /// Largest stride tried for finite differences. Stride 1 detects
    /// polynomials; stride `p` also detects quasi-polynomials of period `p`.
    pub max_period: usize,
}

impl Default for GrowthParams {
    fn default() -> Self {
        GrowthParams { window: 3, ratio: (3, 2), max_period: 2 }
    }
}

impl GrowthParams {
    pub fn with_window(window: usize) -> Self {
        GrowthParams { window, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthEvidence {
    pub window: usize,
    /// The last `window` totals.
    pub tail: Vec<u64>,
    /// Stride of the finite differences that stabilized, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stride: Option<usize>,
    /// Trailing values of the differences that stabilized.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub differences: Vec<i128>,
    /// Trailing ratios `a_d / a_(d-1)` when the exponential test ran.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ratios: Vec<String>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthVerdict {
    #[serde(flatten)]
    pub kind: GrowthKind,
    pub evidence: GrowthEvidence,
}

/// `Σ_i (-1)^i C(k,i) a_{d - i·stride}` for every `d` where it is defined.
fn strided_differences(a: &[i128], k: usize, stride: usize) -> Vec<i128> {
    let mut cur = a.to_vec();
    for _ in 0..k {
        if cur.len() <= stride {
            return Vec::new();
        }
        cur = (stride..cur.len()).map(|d| cur[d] - cur[d - stride]).collect();
    }
    cur
}

/// Truncation-level growth classification of `a_0, …, a_D`.
///
/// In order: `Finite` if the last `window` entries vanish; `Polynomial(k)`
/// for the least `k < window` whose `k`-th differences (stride 1, then the
/// larger strides up to `max_period`) are constant over the last `window`
/// entries; `ExponentialSuspected` if every trailing ratio is at least `ρ`;
/// otherwise `Inconclusive`. Needs `D >= 2·window`.
pub fn growth_classify(totals: &[u64], params: &GrowthParams) -> GrowthVerdict {
    let window = params.window.max(1);
    let tail: Vec<u64> = totals[totals.len().saturating_sub(window)..].to_vec();
    let mut evidence = GrowthEvidence {
        window,
        tail: tail.clone(),
        stride: None,
        differences: Vec::new(),
        ratios: Vec::new(),
        reason: String::new(),
    };
    let degree = totals.len().saturating_sub(1);
    if totals.is_empty() || degree < 2 * window {
        evidence.reason = format!("truncation degree {degree} is below twice the window ({})", 2 * window);
        return GrowthVerdict { kind: GrowthKind::Inconclusive, evidence };
    }
    if tail.iter().all(|&a| a == 0) {
        evidence.reason = format!("last {window} totals vanish");
        return GrowthVerdict { kind: GrowthKind::Finite, evidence };
    }
    let a: Vec<i128> = totals.iter().map(|&x| i128::from(x)).collect();
    for k in 0..window {
        let strides = if k == 0 { 1 } else { params.max_period.max(1) };
        for stride in 1..=strides {
            let diffs = strided_differences(&a, k, stride);
            if diffs.len() < window {
                continue;
            }
            let last = &diffs[diffs.len() - window..];
            if last.iter().all(|&x| x == last[0]) {
                evidence.stride = Some(stride);
                evidence.differences = last.to_vec();
                evidence.reason = format!("differences of order {k} with stride {stride} are constant over the last {window} entries");
                return GrowthVerdict { kind: GrowthKind::Polynomial(k), evidence };
            }
        }
    }
    let (num, den) = params.ratio;
    let start = totals.len() - window;
    let mut exponential = true;
    for d in start..totals.len() {
        let (prev, cur) = (totals[d - 1], totals[d]);
        evidence.ratios.push(format!("{cur}/{prev}"));
        if prev == 0 || u128::from(cur) * u128::from(den) < u128::from(num) * u128::from(prev) {
            exponential = false;
        }
    }
    if exponential {
        evidence.reason = format!("every trailing ratio is at least {num}/{den}");
        GrowthVerdict { kind: GrowthKind::ExponentialSuspected, evidence }
    } else {
        evidence.reason = "no difference stabilized and ratios stay below the threshold".into();
        GrowthVerdict { kind: GrowthKind::Inconclusive, evidence }
    }
}

/// Hilbert table plus growth verdict; always truncation-level evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceReport {
    pub table: HilbertTable,
    pub verdict: GrowthVerdict,
}

impl DominanceReport {
    /// `Some(true)` for finite or polynomial growth, `Some(false)` when
    /// exponential growth is suspected, `None` when inconclusive.
    pub fn dominant(&self) -> Option<bool> {
        match self.verdict.kind {
            GrowthKind::Finite | GrowthKind::Polynomial(_) => Some(true),
            GrowthKind::ExponentialSuspected => Some(false),
            GrowthKind::Inconclusive => None,
        }
    }

    pub fn label(&self) -> String {
        let max = self.table.max_total;
        match self.dominant() {
            Some(true) => format!("dominant (at truncation {max})"),
            Some(false) => format!("not dominant (at truncation {max})"),
            None => format!("undecided (at truncation {max})"),
        }
    }
}

pub fn dominance_verdict(
    datum: &Datum,
    max_total: usize,
    params: &GrowthParams,
    options: &BlockOptions,
    cache: Option<&dyn RankCache>,
) -> Result<DominanceReport, ShapovalovError> {
    let table = hilbert_table(datum, max_total, options, cache)?;
    let verdict = growth_classify(&table.totals, params);
    Ok(DominanceReport { table, verdict })
}
