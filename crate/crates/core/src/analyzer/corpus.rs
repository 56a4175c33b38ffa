use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{analyze, AnalyzeOptions, AnalyzerError, Classification, CoverReport};
use crate::knot::knot_from_text;

const DEFAULT_CORPUS: &str = include_str!("../../data/default_corpus.tsv");

/// One corpus row: `name<TAB>format<TAB>payload[<TAB>expected]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub format: String,
    pub payload: String,
    pub expect: Option<Classification>,
}

/// Parses a corpus; blank lines and lines starting with `#` are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, AnalyzerError> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if !(3..=4).contains(&fields.len()) {
            return Err(AnalyzerError::Corpus {
                line: line_no,
                msg: format!("expected 3 or 4 tab-separated fields, found {}", fields.len()),
            });
        }
        if fields[0].trim().is_empty() {
            return Err(AnalyzerError::Corpus { line: line_no, msg: "empty knot name".into() });
        }
        let expect = match fields.get(3).map(|s| s.trim()).filter(|s| !s.is_empty()) {
            Some(s) => Some(s.parse().map_err(|msg| AnalyzerError::Corpus { line: line_no, msg })?),
            None => None,
        };
        entries.push(CorpusEntry {
            name: fields[0].trim().to_string(),
            format: fields[1].trim().to_string(),
            payload: fields[2].trim().to_string(),
            expect,
        });
    }
    Ok(entries)
}

/// The corpus shipped with the crate.
pub fn default_corpus() -> Vec<CorpusEntry> {
    parse_corpus(DEFAULT_CORPUS).expect("shipped corpus parses")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowError {
    pub name: String,
    pub error: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub rows: usize,
    pub errors: usize,
    pub theorem_c_violations: usize,
    pub order_two_covers: usize,
    pub even_determinants: usize,
    pub expectation_mismatches: usize,
}

impl CorpusSummary {
    /// Rows contradicting the branched-cover dichotomy or their labels.
    pub fn violations(&self) -> usize {
        self.theorem_c_violations + self.order_two_covers + self.even_determinants + self.expectation_mismatches
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRun {
    pub reports: Vec<CoverReport>,
    pub errors: Vec<RowError>,
    pub summary: CorpusSummary,
}

/// Analyzes one corpus row.
pub fn analyze_entry(entry: &CorpusEntry, opts: &AnalyzeOptions) -> Result<CoverReport, AnalyzerError> {
    let k = knot_from_text(&entry.format, &entry.payload)?;
    analyze(&entry.name, &k, opts)
}

/// Analyzes every row in parallel; `row` lets callers substitute a cached
/// analysis. Output is sorted by name.
pub fn run_corpus<F>(entries: &[CorpusEntry], row: F) -> CorpusRun
where
    F: Fn(&CorpusEntry) -> Result<CoverReport, AnalyzerError> + Sync,
{
    let results: Vec<(&CorpusEntry, Result<CoverReport, AnalyzerError>)> =
        entries.par_iter().map(|e| (e, row(e))).collect();
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    let mut summary = CorpusSummary { rows: entries.len(), ..Default::default() };
    for (entry, result) in results {
        match result {
            Ok(r) => {
                summary.theorem_c_violations += usize::from(!r.theorem_c_consistent);
                summary.order_two_covers += usize::from(r.cover_order == Some(2));
                summary.even_determinants += usize::from(r.det % 2 == 0);
                summary.expectation_mismatches += usize::from(entry.expect.is_some_and(|e| e != r.classification));
                reports.push(r);
            }
            Err(e) => errors.push(RowError { name: entry.name.clone(), error: e.to_string() }),
        }
    }
    summary.errors = errors.len();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    errors.sort_by(|a, b| a.name.cmp(&b.name));
    CorpusRun { reports, errors, summary }
}

/// [`run_corpus`] without caching.
pub fn run_corpus_fresh(entries: &[CorpusEntry], opts: &AnalyzeOptions) -> CorpusRun {
    run_corpus(entries, |e| analyze_entry(e, opts))
}
