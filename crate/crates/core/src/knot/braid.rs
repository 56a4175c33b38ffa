use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::builder::{DiagramBuilder, End};
use super::tangle::compass;
use super::{KnotDiagram, KnotError};

pub const MAX_STRANDS: usize = 1 << 16;

/// Braid word on `strands` strands; letter `±i` is `σ_i^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, KnotError> {
        if strands == 0 {
            return Err(KnotError::Validation("a braid needs at least one strand".into()));
        }
        if strands > MAX_STRANDS {
            return Err(KnotError::Validation(format!("{strands} strands exceeds the limit of {MAX_STRANDS}")));
        }
        if let Some(&l) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(KnotError::Validation(format!("generator {l} out of range for {strands} strands")));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Closure as a knot diagram; fails for multi-component closures.
    pub fn to_diagram(&self) -> Result<KnotDiagram, KnotError> {
        let mut b = DiagramBuilder::new();
        let bottoms: Vec<usize> = (0..self.strands).map(|_| b.point()).collect();
        let mut ends: Vec<End> = bottoms.iter().map(|&p| End::Point(p, 0)).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let c = b.crossing();
            let (nw, ne, sw, se) = compass(l.signum());
            b.connect(ends[i], End::Arm(c, sw));
            b.connect(ends[i + 1], End::Arm(c, se));
            ends[i] = End::Arm(c, nw);
            ends[i + 1] = End::Arm(c, ne);
        }
        for (e, &p) in ends.iter().zip(&bottoms) {
            b.connect(*e, End::Point(p, 1));
        }
        b.finish()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strands={}", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// `(σ₁ σ₂ ⋯ σ_{p−1})^q` on `p` strands.
pub fn torus_knot(p: i64, q: i64) -> Result<BraidWord, KnotError> {
    if p < 2 || q < 2 {
        return Err(KnotError::SpecViolation(format!("torus knot parameters must be >= 2, got ({p},{q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(KnotError::NotAKnot(format!("the ({p},{q}) torus link has {} components", p.gcd(&q))));
    }
    let letters = (0..q).flat_map(|_| 1..p as i32).collect();
    BraidWord::new(p as usize, letters)
}
