//! The analysis result document and its JSON, CSV and table renderings.

use std::fmt::Write as _;

use hopfmin_core::datum::emit_datum;
use hopfmin_core::hilbert::{DominanceReport, GrowthVerdict};
use hopfmin_core::shapovalov::CyclotomicFactors;
use hopfmin_core::{Datum, RankReport, Scalar};
use serde::Serialize;

/// Bumped whenever a field is added, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockEntry {
    pub deg: Vec<u32>,
    pub size: usize,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub det: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<CyclotomicFactors>,
}

impl BlockEntry {
    pub fn from_report(r: &RankReport, with_det: bool) -> Self {
        BlockEntry {
            deg: r.degree.counts().to_vec(),
            size: r.block_size,
            rank: r.rank,
            det: if with_det { r.determinant.as_ref().map(Scalar::to_literal) } else { None },
            factors: r.factors.clone(),
        }
    }
}

/// Everything `analyze` reports. Contains no timings, so equal inputs give
/// byte-identical JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultDocument {
    pub schema_version: u32,
    pub tool: String,
    pub source: String,
    pub datum: serde_json::Value,
    pub q_matrix: Vec<Vec<String>>,
    pub max_total: usize,
    pub blocks: Vec<BlockEntry>,
    pub totals: Vec<u64>,
    pub verdict: GrowthVerdict,
    pub dominance: String,
    pub hash: String,
}

impl ResultDocument {
    pub fn new(source: String, datum: &Datum, report: &DominanceReport, with_det: bool) -> Self {
        let echo = serde_json::from_str(&emit_datum(datum)).expect("emitted datum is JSON");
        ResultDocument {
            schema_version: SCHEMA_VERSION,
            tool: format!("hopfmin {}", env!("CARGO_PKG_VERSION")),
            source,
            datum: echo,
            q_matrix: datum.q_matrix().rows().iter().map(|r| r.iter().map(Scalar::to_literal).collect()).collect(),
            max_total: report.table.max_total,
            blocks: report.table.reports.iter().map(|r| BlockEntry::from_report(r, with_det)).collect(),
            totals: report.table.totals.clone(),
            verdict: report.verdict.clone(),
            dominance: report.label(),
            hash: datum.content_hash(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    /// Dimension table only: one row per multidegree.
    pub fn to_csv(&self) -> String {
        let letters = self.blocks.first().map_or(0, |b| b.deg.len());
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<String> = (1..=letters).map(|i| format!("d{i}")).collect();
        header.extend(["total", "size", "rank"].map(String::from));
        w.write_record(&header).expect("in-memory write");
        for b in &self.blocks {
            let mut row: Vec<String> = b.deg.iter().map(u32::to_string).collect();
            row.push(b.deg.iter().sum::<u32>().to_string());
            row.push(b.size.to_string());
            row.push(b.rank.to_string());
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "source   {}", self.source);
        let _ = writeln!(out, "hash     {}", self.hash);
        let _ = writeln!(out, "q-matrix");
        for row in &self.q_matrix {
            let _ = writeln!(out, "  [{}]", row.join(", "));
        }
        let degs: Vec<String> = self.blocks.iter().map(|b| deg_text(&b.deg)).collect();
        let width = degs.iter().map(String::len).max().unwrap_or(3).max(3);
        let _ = writeln!(out, "{:<width$}  {:>6}  {:>6}", "deg", "size", "rank");
        for (b, d) in self.blocks.iter().zip(&degs) {
            let _ = write!(out, "{d:<width$}  {:>6}  {:>6}", b.size, b.rank);
            if let Some(det) = &b.det {
                let _ = write!(out, "  det {det}");
            }
            out.push('\n');
        }
        let totals: Vec<String> = self.totals.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "totals   {}", totals.join(" "));
        let _ = writeln!(out, "verdict  {}: {}", self.verdict.kind, self.dominance);
        let _ = writeln!(out, "evidence {}", self.verdict.evidence.reason);
        out
    }
}

pub fn deg_text(deg: &[u32]) -> String {
    let parts: Vec<String> = deg.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}
