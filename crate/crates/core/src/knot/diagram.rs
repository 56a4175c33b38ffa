use std::fmt;

use serde::{Deserialize, Serialize};

use super::KnotError;

/// Crossing arcs in the form the Wirtinger presentation needs, with arcs
/// numbered from 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingArcs {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
}

/// Validated single-component knot diagram in planar-diagram form.
///
/// Each crossing lists its four edge labels counterclockwise, starting
/// from the incoming under edge, so positions 0 → 2 are the under strand
/// and positions 1, 3 the over strand. Edge labels are `1..=2n`. The
/// crossing is positive when the over strand runs from position 3 to
/// position 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KnotDiagram {
    crossings: Vec<[u32; 4]>,
    signs: Vec<i8>,
}

impl KnotDiagram {
    pub fn unknot() -> Self {
        KnotDiagram { crossings: Vec::new(), signs: Vec::new() }
    }

    /// Validates planar-diagram tuples.
    pub fn from_pd(crossings: Vec<[u32; 4]>) -> Result<Self, KnotError> {
        let n = crossings.len();
        let edges = 2 * n;
        let mut seen = vec![0u8; edges + 1];
        for (c, t) in crossings.iter().enumerate() {
            for &e in t {
                if e == 0 || e as usize > edges {
                    return Err(KnotError::Validation(format!(
                        "crossing {} uses label {e}, labels must lie in 1..={edges}",
                        c + 1
                    )));
                }
                seen[e as usize] += 1;
            }
        }
        if let Some(e) = (1..=edges).find(|&e| seen[e] != 2) {
            return Err(KnotError::Validation(format!("label {e} occurs {} times, expected 2", seen[e])));
        }
        let ends = EdgeEnds::new(&crossings);
        let components = if n == 0 { 1 } else { ends.components_of(&crossings) };
        if components != 1 {
            return Err(KnotError::NotAKnot(format!("diagram has {components} components")));
        }
        // traverse from the first under-incoming position and check that every
        // under strand is crossed from position 0 to 2
        let mut over_from = vec![None; n];
        if n > 0 {
            let (mut c, mut p) = (0usize, 0usize);
            for _ in 0..edges {
                let out = (p + 2) % 4;
                match p {
                    0 => {}
                    2 => {
                        return Err(KnotError::Validation(format!(
                            "crossing {} is traversed against its under strand",
                            c + 1
                        )))
                    }
                    _ => over_from[c] = Some(p),
                }
                let e = crossings[c][out];
                (c, p) = ends.other(e, c, out);
            }
        }
        let signs = over_from
            .iter()
            .map(|f| match f {
                Some(3) => 1,
                Some(_) => -1,
                None => unreachable!("single component visits every crossing twice"),
            })
            .collect();
        Ok(KnotDiagram { crossings, signs })
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// Number of over-arcs; a crossingless diagram has a single arc.
    pub fn arc_count(&self) -> usize {
        self.crossings.len().max(1)
    }

    /// Over-arc labels of every edge (index `e - 1` for label `e`).
    fn edge_arcs(&self) -> Vec<usize> {
        let edges = 2 * self.crossings.len();
        let mut parent: Vec<usize> = (0..edges).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for t in &self.crossings {
            let (a, b) = (find(&mut parent, t[1] as usize - 1), find(&mut parent, t[3] as usize - 1));
            parent[a] = b;
        }
        let mut label = vec![usize::MAX; edges];
        let mut next = 0;
        let mut out = vec![0; edges];
        for (e, slot) in out.iter_mut().enumerate() {
            let r = find(&mut parent, e);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            *slot = label[r];
        }
        out
    }

    /// Arcs at each crossing.
    pub fn crossing_arcs(&self) -> Vec<CrossingArcs> {
        let arcs = self.edge_arcs();
        let arc = |e: u32| arcs[e as usize - 1];
        self.crossings
            .iter()
            .zip(&self.signs)
            .map(|(t, &sign)| CrossingArcs { over: arc(t[1]), under_in: arc(t[0]), under_out: arc(t[2]), sign })
            .collect()
    }

    /// Faces of the planar diagram, each as the cycle of corners
    /// `(crossing, position)` around it; a corner sits between positions
    /// `p` and `p + 1`.
    pub fn faces(&self) -> Vec<Vec<(usize, usize)>> {
        faces_of(&self.crossings)
    }

    pub fn to_pd_string(&self) -> String {
        let parts: Vec<String> =
            self.crossings.iter().map(|t| format!("({},{},{},{})", t[0], t[1], t[2], t[3])).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Debug for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KnotDiagram{}", self.to_pd_string())
    }
}

/// Where each edge label attaches: two `(crossing, position)` ends per label.
pub(crate) struct EdgeEnds {
    ends: Vec<[(usize, usize); 2]>,
}

impl EdgeEnds {
    pub(crate) fn new(crossings: &[[u32; 4]]) -> Self {
        let edges = 2 * crossings.len();
        let mut ends = vec![[(usize::MAX, 0); 2]; edges + 1];
        for (c, t) in crossings.iter().enumerate() {
            for (p, &e) in t.iter().enumerate() {
                let slot = &mut ends[e as usize];
                if slot[0].0 == usize::MAX {
                    slot[0] = (c, p);
                } else {
                    slot[1] = (c, p);
                }
            }
        }
        EdgeEnds { ends }
    }

    /// The end of `e` that is not `(c, p)`.
    pub(crate) fn other(&self, e: u32, c: usize, p: usize) -> (usize, usize) {
        let [a, b] = self.ends[e as usize];
        if a == (c, p) {
            b
        } else {
            a
        }
    }

    /// Components of the straight-through traversal.
    pub(crate) fn components_of(&self, crossings: &[[u32; 4]]) -> usize {
        let mut used = vec![[false; 4]; crossings.len()];
        let mut count = 0;
        for c0 in 0..crossings.len() {
            for p0 in 0..4 {
                if used[c0][p0] {
                    continue;
                }
                count += 1;
                let (mut c, mut p) = (c0, p0);
                while !used[c][p] {
                    let out = (p + 2) % 4;
                    used[c][p] = true;
                    used[c][out] = true;
                    (c, p) = self.other(crossings[c][out], c, out);
                }
            }
        }
        count
    }
}

pub(crate) fn faces_of(crossings: &[[u32; 4]]) -> Vec<Vec<(usize, usize)>> {
    let ends = EdgeEnds::new(crossings);
    let mut used = vec![[false; 4]; crossings.len()];
    let mut faces = Vec::new();
    for c0 in 0..crossings.len() {
        for p0 in 0..4 {
            if used[c0][p0] {
                continue;
            }
            let mut face = Vec::new();
            let (mut c, mut p) = (c0, p0);
            while !used[c][p] {
                used[c][p] = true;
                face.push((c, p));
                let q = (p + 1) % 4;
                (c, p) = ends.other(crossings[c][q], c, q);
            }
            faces.push(face);
        }
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: [[u32; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];

    #[test]
    fn trefoil_validates() {
        let k = KnotDiagram::from_pd(TREFOIL.to_vec()).unwrap();
        assert_eq!(k.crossing_count(), 3);
        assert_eq!(k.writhe().abs(), 3);
        assert_eq!(k.faces().len(), 5);
        let arcs = k.crossing_arcs();
        assert!(arcs.iter().all(|a| a.over != a.under_in && a.under_in != a.under_out));
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(matches!(
            KnotDiagram::from_pd(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 6]]),
            Err(KnotError::Validation(_))
        ));
        assert!(matches!(KnotDiagram::from_pd(vec![[1, 2, 3, 9]]), Err(KnotError::Validation(_))));
    }

    #[test]
    fn hopf_link_is_not_a_knot() {
        let hopf = vec![[1, 3, 2, 4], [3, 1, 4, 2]];
        assert!(matches!(KnotDiagram::from_pd(hopf), Err(KnotError::NotAKnot(_))));
    }

    #[test]
    fn empty_diagram_is_the_unknot() {
        let k = KnotDiagram::from_pd(Vec::new()).unwrap();
        assert_eq!(k, KnotDiagram::unknot());
        assert_eq!(k.arc_count(), 1);
    }
}
