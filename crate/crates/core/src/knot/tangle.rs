use num_integer::Integer;

use super::builder::{DiagramBuilder, End};
use super::{KnotDiagram, KnotError};

/// Four open ends of a tangle inside a builder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tangle {
    pub nw: End,
    pub ne: End,
    pub sw: End,
    pub se: End,
}

/// Arm indices `(nw, ne, sw, se)` of a twist crossing. The crossing with
/// sign +1 has its over strand on the SW–NE diagonal.
pub(crate) fn compass(sign: i32) -> (usize, usize, usize, usize) {
    if sign > 0 {
        // ccw arms: SE, NE, NW, SW
        (2, 1, 3, 0)
    } else {
        // ccw arms: SW, SE, NE, NW
        (3, 2, 0, 1)
    }
}

/// Two horizontal strands, fraction 0.
pub fn zero_tangle(b: &mut DiagramBuilder) -> Tangle {
    let top = b.point();
    let bottom = b.point();
    Tangle { nw: End::Point(top, 0), ne: End::Point(top, 1), sw: End::Point(bottom, 0), se: End::Point(bottom, 1) }
}

/// Two vertical strands, fraction ∞.
pub fn infinity_tangle(b: &mut DiagramBuilder) -> Tangle {
    let left = b.point();
    let right = b.point();
    Tangle { nw: End::Point(left, 0), sw: End::Point(left, 1), ne: End::Point(right, 0), se: End::Point(right, 1) }
}

/// Adds `count` crossings on the east side (`F ↦ F + count`).
pub fn twist_horizontal(b: &mut DiagramBuilder, mut t: Tangle, count: i64) -> Tangle {
    let sign = count.signum() as i32;
    for _ in 0..count.unsigned_abs() {
        let c = b.crossing();
        let (nw, ne, sw, se) = compass(sign);
        b.connect(t.ne, End::Arm(c, nw));
        b.connect(t.se, End::Arm(c, sw));
        t.ne = End::Arm(c, ne);
        t.se = End::Arm(c, se);
    }
    t
}

/// Adds `count` crossings on the south side (`1/F ↦ 1/F + count`).
pub fn twist_vertical(b: &mut DiagramBuilder, mut t: Tangle, count: i64) -> Tangle {
    let sign = count.signum() as i32;
    for _ in 0..count.unsigned_abs() {
        let c = b.crossing();
        let (nw, ne, sw, se) = compass(sign);
        b.connect(t.sw, End::Arm(c, nw));
        b.connect(t.se, End::Arm(c, ne));
        t.sw = End::Arm(c, sw);
        t.se = End::Arm(c, se);
    }
    t
}

/// Side-by-side sum; fractions add for rational tangles.
pub fn tangle_sum(b: &mut DiagramBuilder, left: Tangle, right: Tangle) -> Tangle {
    b.connect(left.ne, right.nw);
    b.connect(left.se, right.sw);
    Tangle { nw: left.nw, sw: left.sw, ne: right.ne, se: right.se }
}

/// Joins NW to NE and SW to SE.
pub fn numerator_closure(b: &mut DiagramBuilder, t: Tangle) {
    b.connect(t.nw, t.ne);
    b.connect(t.sw, t.se);
}

/// Continued fraction `num/den = c₀ + 1/(c₁ + 1/(…))` of odd length.
pub fn odd_continued_fraction(mut num: i64, mut den: i64) -> Vec<i64> {
    assert!(den > 0);
    let mut terms = Vec::new();
    loop {
        let c = Integer::div_floor(&num, &den);
        terms.push(c);
        let r = num - c * den;
        if r == 0 {
            break;
        }
        (num, den) = (den, r);
    }
    if terms.len() % 2 == 0 {
        let last = terms.pop().expect("nonempty");
        terms.push(last - 1);
        terms.push(1);
    }
    terms
}

/// Rational tangle with fraction `num/den` (`den ≥ 1`).
pub fn rational_tangle(b: &mut DiagramBuilder, num: i64, den: i64) -> Tangle {
    let cf = odd_continued_fraction(num, den);
    let mut t = zero_tangle(b);
    for (i, &a) in cf.iter().rev().enumerate() {
        t = if i % 2 == 0 { twist_horizontal(b, t, a) } else { twist_vertical(b, t, a) };
    }
    t
}

/// Two-bridge knot with fraction `p/q`, the numerator closure of the
/// rational tangle `p/q`.
pub fn two_bridge(p: i64, q: i64) -> Result<KnotDiagram, KnotError> {
    if p < 1 || p % 2 == 0 || q < 1 || q > p || p.gcd(&q) != 1 {
        return Err(KnotError::SpecViolation(format!(
            "two-bridge knots need odd p >= 1 and 0 < q <= p coprime to p, got {p}/{q}"
        )));
    }
    let mut b = DiagramBuilder::new();
    let t = rational_tangle(&mut b, p, q);
    numerator_closure(&mut b, t);
    b.finish()
}

/// Montesinos knot: numerator closure of `[e] + β₁/α₁ + … + β_r/α_r`,
/// fractions given as `(β, α)`.
pub fn montesinos(e: i64, fractions: &[(i64, i64)]) -> Result<KnotDiagram, KnotError> {
    for &(beta, alpha) in fractions {
        if alpha < 1 || beta.gcd(&alpha) != 1 {
            return Err(KnotError::SpecViolation(format!("invalid tangle fraction {beta}/{alpha}")));
        }
    }
    let mut b = DiagramBuilder::new();
    let zero = zero_tangle(&mut b);
    let mut t = twist_horizontal(&mut b, zero, e);
    for &(beta, alpha) in fractions {
        let r = rational_tangle(&mut b, beta, alpha);
        t = tangle_sum(&mut b, t, r);
    }
    numerator_closure(&mut b, t);
    b.finish()
}
