use log::debug;
use serde::{Deserialize, Serialize};

use super::GroupPresentation;
use crate::groups::Perm;

pub const DEFAULT_COSET_CAP: usize = 200_000;

const NONE: u32 = u32::MAX;

/// Closed coset table of the trivial subgroup. Column `2g` is generator
/// `g + 1`, column `2g + 1` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetTable {
    columns: usize,
    rows: Vec<u32>,
}

impl CosetTable {
    pub fn order(&self) -> usize {
        if self.columns == 0 {
            1
        } else {
            self.rows.len() / self.columns
        }
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Image of a coset under a signed generator.
    pub fn act(&self, coset: usize, letter: i32) -> usize {
        self.rows[coset * self.columns + column(letter)] as usize
    }

    pub fn act_word(&self, coset: usize, word: &[i32]) -> usize {
        word.iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Right regular action of generator `g` (1-based).
    pub fn generator_perm(&self, g: usize) -> Perm {
        let images = (0..self.order()).map(|c| self.act(c, g as i32) as u32).collect();
        Perm::new(images).expect("closed coset table columns are permutations")
    }

    /// Certificate check: every relator fixes every coset, columns are
    /// mutually inverse permutations and the action is transitive.
    pub fn verify(&self, p: &GroupPresentation) -> bool {
        let n = self.order();
        if self.columns != 2 * p.generators() {
            return false;
        }
        for c in 0..n {
            for g in 1..=p.generators() as i32 {
                let d = self.act(c, g);
                if d >= n || self.act(d, -g) != c {
                    return false;
                }
            }
            if p.relators().iter().any(|r| self.act_word(c, r) != c) {
                return false;
            }
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(c) = stack.pop() {
            for g in 1..=p.generators() as i32 {
                for l in [g, -g] {
                    let d = self.act(c, l);
                    if !seen[d] {
                        seen[d] = true;
                        stack.push(d);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

fn column(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnumerationOutcome {
    Finite(CosetTable),
    Inconclusive { cap: usize },
}

impl EnumerationOutcome {
    pub fn order(&self) -> Option<usize> {
        match self {
            EnumerationOutcome::Finite(t) => Some(t.order()),
            EnumerationOutcome::Inconclusive { .. } => None,
        }
    }
}

struct Enumerator {
    width: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    cap: usize,
    queue: Vec<u32>,
    relators: Vec<Vec<usize>>,
}

struct CapReached;

impl Enumerator {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.width + x]
    }

    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.width + x] = v;
    }

    fn slots(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), CapReached> {
        if self.slots() >= self.cap {
            return Err(CapReached);
        }
        let d = self.slots() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.width));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = (a.min(b), a.max(b));
        self.parent[kill as usize] = keep;
        self.live -= 1;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.width {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                if self.get(f, x ^ 1) == e {
                    self.set(f, x ^ 1, NONE);
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex);
                } else {
                    let fx = self.get(f1, x ^ 1);
                    if fx != NONE {
                        self.merge(e1, fx);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                    }
                }
            }
        }
    }

    /// Scans `w` at `c`, defining cosets when `fill` is set; closes the cycle
    /// with a deduction or a coincidence.
    fn scan(&mut self, c: u32, r: usize, fill: bool) -> Result<(), CapReached> {
        let len = self.relators[r].len();
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, len);
        loop {
            while i < j {
                let next = self.get(f, self.relators[r][i]);
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let next = self.get(b, self.relators[r][j - 1] ^ 1);
                if next == NONE {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let x = self.relators[r][i];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            let x = self.relators[r][i];
            self.define(f, x)?;
        }
    }

    /// Scans every live coset without defining new ones.
    fn lookahead(&mut self) {
        let mut c = 0;
        while c < self.slots() as u32 {
            for r in 0..self.relators.len() {
                if !self.is_live(c) {
                    break;
                }
                let _ = self.scan(c, r, false);
            }
            c += 1;
        }
    }

    /// Renumbers live cosets consecutively, preserving order. Returns the
    /// new index of each old coset.
    fn compact(&mut self) -> Vec<u32> {
        let mut map = vec![NONE; self.slots()];
        let mut next = 0u32;
        for c in 0..self.slots() {
            if self.is_live(c as u32) {
                map[c] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.width);
        for c in 0..self.slots() {
            if map[c] == NONE {
                continue;
            }
            for x in 0..self.width {
                let v = self.table[c * self.width + x];
                table.push(if v == NONE { NONE } else { map[self.rep(v) as usize] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        map
    }

    fn row_complete(&self, c: u32) -> bool {
        (0..self.width).all(|x| self.get(c, x) != NONE)
    }
}

/// Coset enumeration over the trivial subgroup, HLT style with a lookahead
/// and compaction pass when `cap` coset slots are in use.
pub fn todd_coxeter(p: &GroupPresentation, cap: usize) -> EnumerationOutcome {
    let width = 2 * p.generators();
    if width == 0 {
        return EnumerationOutcome::Finite(CosetTable { columns: 0, rows: Vec::new() });
    }
    let relators = p.relators().iter().map(|r| r.iter().map(|&l| column(l)).collect()).collect();
    let mut e = Enumerator {
        width,
        table: vec![NONE; width],
        parent: vec![0],
        live: 1,
        cap: cap.max(1),
        queue: Vec::new(),
        relators,
    };
    let mut c = 0u32;
    'cosets: while (c as usize) < e.slots() {
        if e.is_live(c) {
            for r in 0..e.relators.len() {
                if !e.is_live(c) {
                    break;
                }
                if e.scan(c, r, true).is_err() {
                    if let Some(nc) = make_room(&mut e, c) {
                        c = nc;
                        continue 'cosets;
                    }
                    return EnumerationOutcome::Inconclusive { cap };
                }
            }
            for x in 0..width {
                if !e.is_live(c) {
                    break;
                }
                if e.get(c, x) == NONE && e.define(c, x).is_err() {
                    if let Some(nc) = make_room(&mut e, c) {
                        c = nc;
                        continue 'cosets;
                    }
                    return EnumerationOutcome::Inconclusive { cap };
                }
            }
        }
        c += 1;
    }
    e.compact();
    debug_assert!((0..e.slots() as u32).all(|c| e.row_complete(c)));
    debug!("coset enumeration closed with {} cosets", e.live);
    EnumerationOutcome::Finite(CosetTable { columns: width, rows: e.table })
}

/// Lookahead then compaction; the new index of the coset being processed,
/// or `None` if no slot was freed.
fn make_room(e: &mut Enumerator, c: u32) -> Option<u32> {
    e.lookahead();
    let before = e.slots();
    let map = e.compact();
    debug!("lookahead at {} slots freed {}", before, before - e.slots());
    if e.slots() >= e.cap {
        return None;
    }
    // restart from the first surviving coset at or before c
    let mut k = c as usize;
    loop {
        if map[k] != NONE {
            return Some(map[k]);
        }
        if k == 0 {
            return Some(0);
        }
        k -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(s: &str, cap: usize) -> Option<usize> {
        let p: GroupPresentation = s.parse().unwrap();
        let out = todd_coxeter(&p, cap);
        if let EnumerationOutcome::Finite(t) = &out {
            assert!(t.verify(&p), "{s}");
        }
        out.order()
    }

    #[test]
    fn small_groups() {
        assert_eq!(order("gens=2; rel= 1 1, 2 2, 1 2 1 2 1 2", 1000), Some(6));
        assert_eq!(order("gens=1; rel= 1 1 1 1 1", 1000), Some(5));
        assert_eq!(order("gens=2; rel= 1 1, 2 2 2, 1 2 1 2 1 2 1 2 1 2", 1000), Some(60));
        assert_eq!(order("gens=1; rel=", 10), None);
        assert_eq!(order("gens=2; rel=", 1000), None);
        assert_eq!(order("gens=2; rel= 1, 2", 10), Some(1));
    }

    #[test]
    fn tight_cap_forces_lookahead() {
        // A5 needs more than 60 slots under plain HLT
        assert_eq!(order("gens=2; rel= 1 1, 2 2 2, 1 2 1 2 1 2 1 2 1 2", 70), Some(60));
    }
}
