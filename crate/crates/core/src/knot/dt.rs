use super::diagram::{faces_of, EdgeEnds};
use super::{KnotDiagram, KnotError};

/// Largest Dowker–Thistlethwaite code accepted; the planar embedding is found
/// by searching over `2^(n-1)` local orientations.
pub const MAX_DT_CROSSINGS: usize = 20;

/// Converts a Dowker–Thistlethwaite code to a planar diagram.
///
/// Crossing `i` pairs the odd passage `2i − 1` with the even passage
/// `|codes[i]|`. A positive entry means the odd passage goes under.
pub fn dt_to_diagram(codes: &[i64]) -> Result<KnotDiagram, KnotError> {
    let n = codes.len();
    if n == 0 {
        return Ok(KnotDiagram::unknot());
    }
    if n > MAX_DT_CROSSINGS {
        return Err(KnotError::Validation(format!("DT codes are limited to {MAX_DT_CROSSINGS} crossings")));
    }
    let mut seen = vec![false; n];
    for &c in codes {
        let a = c.unsigned_abs() as usize;
        if a % 2 != 0 || a == 0 || a > 2 * n || seen[a / 2 - 1] {
            return Err(KnotError::Validation(format!(
                "DT entries must be a signed permutation of 2, 4, …, {}; bad entry {c}",
                2 * n
            )));
        }
        seen[a / 2 - 1] = true;
    }
    let m = 2 * n as u32;
    let into = |t: u32| if t == 1 { m } else { t - 1 };
    // (under passage, over passage) per crossing
    let passages: Vec<(u32, u32)> = codes
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let odd = 2 * i as u32 + 1;
            let even = c.unsigned_abs() as u32;
            if c > 0 {
                (odd, even)
            } else {
                (even, odd)
            }
        })
        .collect();
    for mask in 0u64..(1 << (n - 1)) {
        let tuples: Vec<[u32; 4]> = passages
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let flip = i > 0 && mask >> (i - 1) & 1 == 1;
                if flip {
                    [into(u), v, u, into(v)]
                } else {
                    [into(u), into(v), u, v]
                }
            })
            .collect();
        if faces_of(&tuples).len() == n + 2 {
            return KnotDiagram::from_pd(tuples);
        }
    }
    Err(KnotError::Validation("DT code has no planar realization".into()))
}

/// Dowker–Thistlethwaite code of a diagram, numbering passages along the
/// orientation from the incoming under edge of the first crossing.
pub fn dt_code(k: &KnotDiagram) -> Vec<i64> {
    let crossings = k.crossings();
    let n = crossings.len();
    let ends = EdgeEnds::new(crossings);
    // (odd passage, even passage, odd passage is under)
    let mut seen: Vec<Option<(u32, usize)>> = vec![None; n];
    let mut code = vec![0i64; n];
    let (mut c, mut p) = (0usize, 0usize);
    for t in 1..=(2 * n) as u32 {
        match seen[c] {
            None => seen[c] = Some((t, p)),
            Some((s, sp)) => {
                let (odd, odd_pos, even) = if s % 2 == 1 { (s, sp, t) } else { (t, p, s) };
                let under = odd_pos % 2 == 0;
                code[(odd as usize - 1) / 2] = if under { even as i64 } else { -(even as i64) };
            }
        }
        let out = (p + 2) % 4;
        (c, p) = ends.other(crossings[c][out], c, out);
    }
    code
}
