//! Shortlex Knuth–Bendix completion and enumeration of normal forms.

use std::cmp::Ordering;
use std::collections::HashSet;

/// Letters `g` and `g⁻¹` of generator `i` (1-based) become `2i−2` and `2i−1`.
fn encode(l: i32) -> u8 {
    let g = (l.unsigned_abs() - 1) as u8;
    if l > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

fn shortlex(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn find(hay: &[u8], needle: &[u8]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

pub struct RewritingSystem {
    letters: u8,
    rules: Vec<(Vec<u8>, Vec<u8>)>,
}

impl RewritingSystem {
    pub fn reduce(&self, w: &[u8]) -> Vec<u8> {
        let mut w = w.to_vec();
        'outer: loop {
            for (l, r) in &self.rules {
                if let Some(i) = find(&w, l) {
                    w.splice(i..i + l.len(), r.iter().copied());
                    continue 'outer;
                }
            }
            return w;
        }
    }

    fn add(&mut self, u: Vec<u8>, v: Vec<u8>, pending: &mut Vec<(Vec<u8>, Vec<u8>)>) {
        let (u, v) = (self.reduce(&u), self.reduce(&v));
        let (l, r) = match shortlex(&u, &v) {
            Ordering::Equal => return,
            Ordering::Greater => (u, v),
            Ordering::Less => (v, u),
        };
        // rules made redundant by the new left side go back to the queue
        let mut kept = Vec::with_capacity(self.rules.len());
        for (a, b) in self.rules.drain(..) {
            if find(&a, &l).is_some() {
                pending.push((a, b));
            } else {
                kept.push((a, b));
            }
        }
        self.rules = kept;
        self.rules.push((l, r));
        for i in 0..self.rules.len() {
            let rhs = self.reduce(&self.rules[i].1.clone());
            self.rules[i].1 = rhs;
        }
    }

    fn critical_pairs(&self) -> Vec<(Vec<u8>, Vec<u8>)> {
        let mut out = Vec::new();
        for (l1, r1) in &self.rules {
            for (l2, r2) in &self.rules {
                // suffix of l1 equal to a prefix of l2
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let mut a = r1.clone();
                        a.extend_from_slice(&l2[k..]);
                        let mut b = l1[..l1.len() - k].to_vec();
                        b.extend_from_slice(r2);
                        out.push((a, b));
                    }
                }
                if l1 != l2 {
                    if let Some(i) = find(l1, l2) {
                        let mut b = l1[..i].to_vec();
                        b.extend_from_slice(r2);
                        b.extend_from_slice(&l1[i + l2.len()..]);
                        out.push((r1.clone(), b));
                    }
                }
            }
        }
        out
    }

    /// Completes the system for `⟨x₁…xₙ | relators⟩`, or gives up past
    /// `max_rules` rules.
    pub fn complete(generators: usize, relators: &[Vec<i32>], max_rules: usize) -> Option<Self> {
        let letters = (2 * generators) as u8;
        let mut sys = RewritingSystem { letters, rules: Vec::new() };
        let mut pending: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
        for g in 0..generators as u8 {
            pending.push((vec![2 * g, 2 * g + 1], vec![]));
            pending.push((vec![2 * g + 1, 2 * g], vec![]));
        }
        for r in relators {
            pending.push((r.iter().map(|&l| encode(l)).collect(), vec![]));
        }
        loop {
            while let Some((u, v)) = pending.pop() {
                sys.add(u, v, &mut pending);
                if sys.rules.len() > max_rules {
                    return None;
                }
            }
            for (a, b) in sys.critical_pairs() {
                if sys.reduce(&a) != sys.reduce(&b) {
                    pending.push((a, b));
                }
            }
            if pending.is_empty() {
                return Some(sys);
            }
        }
    }

    /// Number of irreducible words, by breadth-first extension; `None` past
    /// `limit`.
    pub fn count_normal_forms(&self, limit: usize) -> Option<usize> {
        let mut seen: HashSet<Vec<u8>> = HashSet::from([Vec::new()]);
        let mut layer = vec![Vec::new()];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for w in &layer {
                for x in 0..self.letters {
                    let mut v = w.clone();
                    v.push(x);
                    if self.reduce(&v) == v && seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
            if seen.len() > limit {
                return None;
            }
            layer = next;
        }
        Some(seen.len())
    }
}

/// Order of a finitely presented group from its confluent rewriting system.
pub fn order_by_rewriting(generators: usize, relators: &[Vec<i32>]) -> Option<usize> {
    RewritingSystem::complete(generators, relators, 5_000)?.count_normal_forms(100_000)
}
