//! Knot diagrams: planar-diagram, Dowker–Thistlethwaite and braid input,
//! rational and Montesinos constructions, and coloring invariants.

mod braid;
mod builder;
mod diagram;
mod dt;
mod invariants;
mod parse;
mod tangle;

pub use braid::{torus_knot, BraidWord, MAX_STRANDS};
pub use builder::{DiagramBuilder, End};
pub use diagram::{CrossingArcs, KnotDiagram};
pub use dt::{dt_code, dt_to_diagram, MAX_DT_CROSSINGS};
pub use invariants::{coloring_matrix, determinant, determinant_u64, h1_double_cover, reduced_coloring_matrix};
pub use parse::{parse_braid, parse_dt, parse_pd};
pub use tangle::{
    infinity_tangle, montesinos, numerator_closure, odd_continued_fraction, rational_tangle, tangle_sum,
    twist_horizontal, twist_vertical, two_bridge, zero_tangle, Tangle,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid diagram: {0}")]
    Validation(String),
    #[error("not a knot: {0}")]
    NotAKnot(String),
    #[error("invalid parameters: {0}")]
    SpecViolation(String),
}

/// Input formats understood by [`knot_from_text`].
pub const KNOT_FORMATS: [&str; 6] = ["pd", "dt", "braid", "torus", "twobridge", "montesinos"];

/// Builds a diagram from a format name and payload.
///
/// `torus` and `twobridge` take two integers, `montesinos` takes
/// `e=<int>` followed by fractions `b/a`.
pub fn knot_from_text(format: &str, payload: &str) -> Result<KnotDiagram, KnotError> {
    match format {
        "pd" => parse_pd(payload),
        "dt" => dt_to_diagram(&parse_dt(payload)?),
        "braid" => parse_braid(payload)?.to_diagram(),
        "torus" => {
            let [p, q] = two_ints(payload)?;
            torus_knot(p, q)?.to_diagram()
        }
        "twobridge" => {
            let [p, q] = two_ints(payload)?;
            two_bridge(p, q)
        }
        "montesinos" => {
            let (e, fractions) = parse_montesinos(payload)?;
            montesinos(e, &fractions)
        }
        other => Err(KnotError::Parse { pos: 0, msg: format!("unknown knot format '{other}'") }),
    }
}

fn words(payload: &str) -> impl Iterator<Item = (usize, &str)> {
    payload
        .split(|c: char| c.is_whitespace() || c == ',')
        .scan(0usize, |offset, w| {
            let at = *offset;
            *offset += w.len() + 1;
            Some((at, w))
        })
        .filter(|(_, w)| !w.is_empty())
}

fn int_at(pos: usize, w: &str) -> Result<i64, KnotError> {
    w.parse().map_err(|_| KnotError::Parse { pos, msg: format!("expected an integer, found '{w}'") })
}

fn two_ints(payload: &str) -> Result<[i64; 2], KnotError> {
    let v: Vec<i64> = words(payload).map(|(p, w)| int_at(p, w)).collect::<Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<i64>| KnotError::Parse {
        pos: 0,
        msg: format!("expected two integers, found {}", v.len()),
    })
}

fn parse_montesinos(payload: &str) -> Result<(i64, Vec<(i64, i64)>), KnotError> {
    let mut e = 0;
    let mut fractions = Vec::new();
    for (pos, w) in words(payload) {
        if let Some(v) = w.strip_prefix("e=") {
            e = int_at(pos + 2, v)?;
        } else if let Some((b, a)) = w.split_once('/') {
            fractions.push((int_at(pos, b)?, int_at(pos + b.len() + 1, a)?));
        } else {
            return Err(KnotError::Parse { pos, msg: format!("expected 'e=<int>' or a fraction, found '{w}'") });
        }
    }
    Ok((e, fractions))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(knot_from_text("torus", "2 3").unwrap().crossing_count(), 3);
        assert_eq!(knot_from_text("twobridge", "5 2").unwrap().crossing_count(), 4);
        let m = knot_from_text("montesinos", "e=-1 1/2 1/3 1/5").unwrap();
        assert_eq!(determinant_u64(&m), Some(1));
        assert!(matches!(knot_from_text("montesinos", "e=1 x"), Err(KnotError::Parse { pos: 4, .. })));
        assert!(knot_from_text("torus", "2").is_err());
        assert!(knot_from_text("gauss", "").is_err());
    }
}
