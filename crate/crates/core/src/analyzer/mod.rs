//! Knot in, branched double cover report out.

mod corpus;

pub use corpus::{
    analyze_entry, default_corpus, parse_corpus, run_corpus, run_corpus_fresh, CorpusEntry, CorpusRun, CorpusSummary,
    RowError,
};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use log::warn;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::AbelianGroup;
use crate::groups::{PermGroup, DEFAULT_GROUP_CAP};
use crate::knot::{determinant, h1_double_cover, KnotDiagram, KnotError};
use crate::presentation::{
    branched_cover_group, orbifold_quotient, todd_coxeter, wirtinger, EnumerationOutcome, PresentationError,
    DEFAULT_COSET_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzerError {
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("finite group of order {0} fits none of the cyclic, tetrahedral or icosahedral types")]
    UnclassifiedFiniteGroup(usize),
    #[error("corpus line {line}: {msg}")]
    Corpus { line: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Classification {
    Unknot,
    CyclicType(u64),
    TetrahedralType,
    IcosahedralType,
    InfiniteOrUnknown,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Unknot => write!(f, "Unknot"),
            Classification::CyclicType(n) => write!(f, "CyclicType{{{n}}}"),
            Classification::TetrahedralType => write!(f, "TetrahedralType"),
            Classification::IcosahedralType => write!(f, "IcosahedralType"),
            Classification::InfiniteOrUnknown => write!(f, "InfiniteOrUnknown"),
        }
    }
}

impl FromStr for Classification {
    type Err = String;

    /// Accepts the display form and the short corpus labels
    /// `unknot`, `cyclic:n`, `tetrahedral`, `icosahedral`, `infinite`.
    fn from_str(s: &str) -> Result<Self, String> {
        let cyclic = |n: &str| n.parse().map(Classification::CyclicType).map_err(|_| format!("bad cyclic order '{n}'"));
        match s {
            "Unknot" | "unknot" => Ok(Classification::Unknot),
            "TetrahedralType" | "tetrahedral" => Ok(Classification::TetrahedralType),
            "IcosahedralType" | "icosahedral" => Ok(Classification::IcosahedralType),
            "InfiniteOrUnknown" | "infinite" => Ok(Classification::InfiniteOrUnknown),
            _ => {
                if let Some(n) = s.strip_prefix("cyclic:") {
                    cyclic(n)
                } else if let Some(n) = s.strip_prefix("CyclicType{").and_then(|r| r.strip_suffix('}')) {
                    cyclic(n)
                } else {
                    Err(format!("unknown classification '{s}'"))
                }
            }
        }
    }
}

impl From<Classification> for String {
    fn from(c: Classification) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for Classification {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnalyzeOptions {
    pub coset_cap: usize,
    pub group_cap: usize,
    pub timings: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { coset_cap: DEFAULT_COSET_CAP, group_cap: DEFAULT_GROUP_CAP, timings: false }
    }
}

/// One analyzed knot. Field order is the serialized key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub name: String,
    pub det: u64,
    #[serde(with = "display_group")]
    pub h1: AbelianGroup,
    pub orbifold_order: Option<usize>,
    pub cover_order: Option<usize>,
    pub classification: Classification,
    #[serde(rename = "theoremC_consistent")]
    pub theorem_c_consistent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
}

mod display_group {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::arith::AbelianGroup;

    pub fn serialize<S: Serializer>(g: &AbelianGroup, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(g)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<AbelianGroup, D::Error> {
        let s = String::deserialize(d)?;
        parse_group(&s).ok_or_else(|| serde::de::Error::custom(format!("bad abelian group '{s}'")))
    }

    fn parse_group(s: &str) -> Option<AbelianGroup> {
        if s == "0" {
            return Some(AbelianGroup::trivial());
        }
        let mut factors = Vec::new();
        let mut free = 0;
        for part in s.split(" x ") {
            if part == "Z" {
                free += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                free += r.parse::<usize>().ok()?;
            } else {
                factors.push(part.strip_prefix("Z/")?.parse().ok()?);
            }
        }
        Some(AbelianGroup::new(factors, free))
    }
}

/// Cyclic if abelian, icosahedral if the derived series stops at a perfect
/// group of order 120, tetrahedral if solvable and nonabelian.
pub fn classify_finite(g: &PermGroup) -> Result<Classification, AnalyzerError> {
    if g.is_abelian() {
        let ab = g.abelianization();
        if !ab.is_cyclic() {
            return Err(AnalyzerError::InternalInconsistency(format!("abelian cover group {ab} is not cyclic")));
        }
        return Ok(Classification::CyclicType(g.order() as u64));
    }
    let series = g.derived_series();
    let last = series.last().expect("series starts with the group");
    if last.is_trivial() {
        if !series.iter().any(|h| h.order() == 8 && !is_abelian_subgroup(g, h)) {
            warn!("solvable cover group of order {} has no quaternion term in its derived series", g.order());
        }
        return Ok(Classification::TetrahedralType);
    }
    if last.order() == 120 {
        return Ok(Classification::IcosahedralType);
    }
    Err(AnalyzerError::UnclassifiedFiniteGroup(g.order()))
}

fn is_abelian_subgroup(g: &PermGroup, h: &crate::groups::Subgroup) -> bool {
    let gens = h.generators();
    gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// Full pipeline for one diagram.
pub fn analyze(name: &str, k: &KnotDiagram, opts: &AnalyzeOptions) -> Result<CoverReport, AnalyzerError> {
    let start = Instant::now();
    let det = determinant(k)
        .to_u64()
        .ok_or_else(|| AnalyzerError::InternalInconsistency("determinant exceeds u64".into()))?;
    if det % 2 == 0 {
        return Err(AnalyzerError::InternalInconsistency(format!("knot determinant {det} is even")));
    }
    let h1 = h1_double_cover(k);
    if h1.order() != Some(det) {
        return Err(AnalyzerError::InternalInconsistency(format!("|H1| of {h1} differs from determinant {det}")));
    }
    let orbifold = orbifold_quotient(&wirtinger(k));
    let outcome = todd_coxeter(&orbifold, opts.coset_cap);
    let (orbifold_order, cover_order, classification) = match &outcome {
        EnumerationOutcome::Inconclusive { .. } => (None, None, Classification::InfiniteOrUnknown),
        EnumerationOutcome::Finite(table) => {
            if !table.verify(&orbifold) {
                return Err(AnalyzerError::InternalInconsistency("coset table fails its certificate".into()));
            }
            let cover = branched_cover_group(&orbifold, &outcome, opts.group_cap)?;
            if 2 * cover.order != table.order() {
                return Err(AnalyzerError::InternalInconsistency(format!(
                    "cover order {} is not half of {}",
                    cover.order,
                    table.order()
                )));
            }
            let ab = cover.group.abelianization();
            if ab != h1 {
                return Err(AnalyzerError::InternalInconsistency(format!(
                    "cover abelianization {ab} differs from H1 = {h1} (determinant {det})"
                )));
            }
            let class = if cover.order == 1 { Classification::Unknot } else { classify_finite(&cover.group)? };
            (Some(table.order()), Some(cover.order), class)
        }
    };
    let theorem_c_consistent = cover_order != Some(2) && (cover_order != Some(1) || det == 1);
    Ok(CoverReport {
        name: name.to_string(),
        det,
        h1,
        orbifold_order,
        cover_order,
        classification,
        theorem_c_consistent,
        ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    })
}
