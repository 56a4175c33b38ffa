use super::{KnotDiagram, KnotError};

/// Attachment point of a strand end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    /// Arm `0..4` of a crossing, counterclockwise; arms 0–2 are the under strand.
    Arm(usize, usize),
    /// Slot `0..2` of a pass-through point.
    Point(usize, usize),
}

/// Assembles a planar diagram from crossings, pass-through points and
/// connections between ends, then relabels it in planar-diagram form.
#[derive(Debug, Default, Clone)]
pub struct DiagramBuilder {
    crossings: usize,
    points: usize,
    arm_link: Vec<[Option<End>; 4]>,
    point_link: Vec<[Option<End>; 2]>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn crossing(&mut self) -> usize {
        self.crossings += 1;
        self.arm_link.push([None; 4]);
        self.crossings - 1
    }

    pub fn point(&mut self) -> usize {
        self.points += 1;
        self.point_link.push([None; 2]);
        self.points - 1
    }

    fn slot(&mut self, e: End) -> &mut Option<End> {
        match e {
            End::Arm(c, a) => &mut self.arm_link[c][a],
            End::Point(p, s) => &mut self.point_link[p][s],
        }
    }

    pub fn connect(&mut self, a: End, b: End) {
        assert!(self.slot(a).is_none() && self.slot(b).is_none(), "end connected twice");
        *self.slot(a) = Some(b);
        *self.slot(b) = Some(a);
    }

    fn link(&self, e: End) -> End {
        match e {
            End::Arm(c, a) => self.arm_link[c][a],
            End::Point(p, s) => self.point_link[p][s],
        }
        .expect("every end must be connected before finishing")
    }

    /// The crossing arm reached from `e` after passing through points, or
    /// `None` if the strand closes up without reaching a crossing.
    fn follow(&self, from: End) -> Option<(usize, usize)> {
        let mut e = self.link(from);
        let start = e;
        loop {
            match e {
                End::Arm(c, a) => return Some((c, a)),
                End::Point(p, s) => {
                    e = self.link(End::Point(p, 1 - s));
                    if e == start {
                        return None;
                    }
                }
            }
        }
    }

    /// Number of closed components, including crossingless loops.
    pub fn components(&self) -> usize {
        let mut arm_used = vec![[false; 4]; self.crossings];
        let mut point_used = vec![false; self.points];
        let mut count = 0;
        for c0 in 0..self.crossings {
            for a0 in 0..4 {
                if arm_used[c0][a0] {
                    continue;
                }
                count += 1;
                let (mut c, mut a) = (c0, a0);
                while !arm_used[c][a] {
                    let out = (a + 2) % 4;
                    arm_used[c][a] = true;
                    arm_used[c][out] = true;
                    let mut e = self.link(End::Arm(c, out));
                    while let End::Point(p, s) = e {
                        point_used[p] = true;
                        e = self.link(End::Point(p, 1 - s));
                    }
                    let End::Arm(nc, na) = e else { unreachable!() };
                    (c, a) = (nc, na);
                }
            }
        }
        for p0 in 0..self.points {
            if point_used[p0] {
                continue;
            }
            count += 1;
            let (mut p, mut s) = (p0, 1);
            loop {
                point_used[p] = true;
                let End::Point(q, t) = self.link(End::Point(p, s)) else {
                    unreachable!("points on crossing strands are already marked")
                };
                if q == p0 {
                    break;
                }
                (p, s) = (q, 1 - t);
            }
        }
        count
    }

    /// Orients the single component, numbers edges along it and rotates each
    /// crossing so that position 0 is its incoming under edge.
    pub fn finish(&self) -> Result<KnotDiagram, KnotError> {
        let comps = self.components();
        if comps != 1 {
            return Err(KnotError::NotAKnot(format!("closure has {comps} components")));
        }
        let n = self.crossings;
        if n == 0 {
            return Ok(KnotDiagram::unknot());
        }
        // walk from arm 0 of crossing 0 (entering there)
        let mut labels = vec![[0u32; 4]; n];
        let mut under_entry = vec![usize::MAX; n];
        let (mut c, mut a) = (0usize, 0usize);
        for edge in 1..=(2 * n) as u32 {
            if a % 2 == 0 {
                under_entry[c] = a;
            }
            let out = (a + 2) % 4;
            labels[c][out] = edge;
            let (nc, na) = self.follow(End::Arm(c, out)).expect("strand reaches a crossing");
            labels[nc][na] = edge;
            (c, a) = (nc, na);
        }
        let tuples = labels
            .iter()
            .zip(&under_entry)
            .map(|(t, &u)| [t[u], t[(u + 1) % 4], t[(u + 2) % 4], t[(u + 3) % 4]])
            .collect();
        KnotDiagram::from_pd(tuples)
    }
}
