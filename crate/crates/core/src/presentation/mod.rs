//! Finitely presented groups: Wirtinger and orbifold presentations, coset
//! enumeration and the index-two kernel.

mod cover;
mod enumerate;

pub use cover::{branched_cover_group, CoverGroup};
pub use enumerate::{todd_coxeter, CosetTable, EnumerationOutcome, DEFAULT_COSET_CAP};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{smith_normal_form, AbelianGroup, IntegerMatrix};
use crate::groups::GroupError;
use crate::knot::KnotDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator {letter} out of range for {generators} generators")]
    BadLetter { letter: i32, generators: usize },
    #[error("exponent-sum map to Z/2 is not onto an index-two quotient: {0}")]
    NotIndexTwo(String),
    #[error("coset enumeration did not complete within {0} cosets")]
    Inconclusive(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Generators `1..=n`; a word is a sequence of signed generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<Vec<i32>>,
}

/// Free and cyclic reduction.
pub fn reduce_cyclically(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    let (mut i, mut j) = (0, out.len());
    while j - i >= 2 && out[i] == -out[j - 1] {
        i += 1;
        j -= 1;
    }
    out[i..j].to_vec()
}

pub fn invert_word(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|&l| -l).collect()
}

impl GroupPresentation {
    /// Reduces every relator and drops the trivial ones.
    pub fn new(generators: usize, relators: Vec<Vec<i32>>) -> Result<Self, PresentationError> {
        for r in &relators {
            if let Some(&letter) = r.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > generators) {
                return Err(PresentationError::BadLetter { letter, generators });
            }
        }
        let relators = relators.iter().map(|r| reduce_cyclically(r)).filter(|r| !r.is_empty()).collect();
        Ok(GroupPresentation { generators, relators })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn exponent_matrix(&self) -> IntegerMatrix {
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators];
                for &l in r {
                    row[l.unsigned_abs() as usize - 1] += l.signum() as i64;
                }
                row
            })
            .collect();
        let mut m = IntegerMatrix::from_i64(&rows);
        if rows.is_empty() {
            m = IntegerMatrix::zeros(0, self.generators);
        }
        m
    }
}

/// Abelianization from the Smith form of the exponent-sum matrix.
pub fn abelianize(p: &GroupPresentation) -> AbelianGroup {
    smith_normal_form(&p.exponent_matrix()).row_quotient()
}

/// Wirtinger presentation: one meridian per arc, one relator per crossing,
/// the last relator dropped as redundant.
pub fn wirtinger(k: &KnotDiagram) -> GroupPresentation {
    let arcs = k.arc_count();
    let mut relators: Vec<Vec<i32>> = k
        .crossing_arcs()
        .iter()
        .map(|c| {
            let (o, a, b) = (c.over as i32 + 1, c.under_in as i32 + 1, c.under_out as i32 + 1);
            let s = c.sign as i32;
            vec![s * o, a, -s * o, -b]
        })
        .collect();
    relators.pop();
    GroupPresentation::new(arcs, relators).expect("arc labels are in range")
}

/// Adds the square of every generator.
pub fn orbifold_quotient(p: &GroupPresentation) -> GroupPresentation {
    let mut relators = p.relators.clone();
    relators.extend((1..=p.generators as i32).map(|g| vec![g, g]));
    GroupPresentation::new(p.generators, relators).expect("generators are in range")
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens={}; rel=", self.generators)?;
        for (i, r) in self.relators.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            let letters: Vec<String> = r.iter().map(|l| l.to_string()).collect();
            f.write_str(&letters.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for GroupPresentation {
    type Err = PresentationError;

    /// `gens=n; rel= w₁, w₂, …` with words as signed indices.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |pos: usize, msg: &str| PresentationError::Parse { pos, msg: msg.to_string() };
        let lead = s.len() - s.trim_start().len();
        let body = s.trim_start();
        let Some(rest) = body.strip_prefix("gens=") else {
            return Err(err(lead, "expected 'gens='"));
        };
        let Some((count, rels)) = rest.split_once(';') else {
            return Err(err(lead + 5 + rest.len(), "expected ';' after the generator count"));
        };
        let generators: usize = count.trim().parse().map_err(|_| err(lead + 5, "invalid generator count"))?;
        let rels_at = lead + 5 + count.len() + 1;
        let trimmed = rels.trim_start();
        let Some(words) = trimmed.strip_prefix("rel=") else {
            return Err(err(rels_at + rels.len() - trimmed.len(), "expected 'rel='"));
        };
        let mut offset = rels_at + rels.len() - trimmed.len() + 4;
        let mut relators = Vec::new();
        if !words.trim().is_empty() {
            for w in words.split(',') {
                let mut word = Vec::new();
                let mut pos = offset;
                for tok in w.split(' ') {
                    if !tok.is_empty() {
                        let l: i32 = tok.parse().map_err(|_| err(pos, "expected a signed generator index"))?;
                        if l == 0 || l.unsigned_abs() as usize > generators {
                            return Err(err(pos, "generator index out of range"));
                        }
                        word.push(l);
                    }
                    pos += tok.len() + 1;
                }
                if word.is_empty() {
                    return Err(err(offset, "empty relator"));
                }
                relators.push(word);
                offset += w.len() + 1;
            }
        }
        GroupPresentation::new(generators, relators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{dt_to_diagram, parse_pd};

    #[test]
    fn text_round_trip() {
        let p: GroupPresentation = "gens=2; rel= 1 1, 2 2, 1 2 1 2 1 2".parse().unwrap();
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p.to_string().parse::<GroupPresentation>().unwrap(), p);
        let free: GroupPresentation = "gens=2; rel=".parse().unwrap();
        assert!(free.relators().is_empty());
        assert!(matches!("gens=2; rel= 1 3".parse::<GroupPresentation>(), Err(PresentationError::Parse { pos: 15, .. })));
        assert!("gens=x; rel=".parse::<GroupPresentation>().is_err());
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce_cyclically(&[1, 2, -2, 3, -1]), vec![3]);
        assert_eq!(reduce_cyclically(&[1, -1]), Vec::<i32>::new());
        assert_eq!(reduce_cyclically(&[-2, 1, 2]), vec![1]);
    }

    #[test]
    fn knot_groups_abelianize_to_z() {
        let trefoil = parse_pd("[(1,4,2,5),(3,6,4,1),(5,2,6,3)]").unwrap();
        let w = wirtinger(&trefoil);
        assert_eq!((w.generators(), w.relators().len()), (3, 2));
        assert_eq!(abelianize(&w), AbelianGroup::new(vec![], 1));
        assert_eq!(abelianize(&orbifold_quotient(&w)), AbelianGroup::cyclic(2));
        let f8 = wirtinger(&dt_to_diagram(&[4, 6, 8, 2]).unwrap());
        assert_eq!((f8.generators(), f8.relators().len()), (4, 3));
        assert_eq!(abelianize(&f8), AbelianGroup::new(vec![], 1));
        let u = wirtinger(&KnotDiagram::unknot());
        assert_eq!((u.generators(), u.relators().len()), (1, 0));
    }
}
