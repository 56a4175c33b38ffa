use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::arith::AbelianGroup;

use super::GroupError;

/// Elements a finite group can be built from.
pub trait GroupElement: Clone + Eq + Hash + fmt::Debug + Send + Sync {
    /// `self · other`
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;
}

const ROOT: u8 = u8::MAX;

/// Finite group given by explicit elements, closed under its generators.
///
/// Elements are numbered in breadth-first order from the identity (index 0).
/// Every element remembers the generator that first reached it, which gives
/// each element a word in the generators and lets all products be evaluated
/// through the right-multiplication tables without touching the elements.
#[derive(Clone)]
pub struct FiniteGroup<E> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    generators: Vec<usize>,
    /// `rmul[g][x]` = index of `x · gen_g`
    rmul: Vec<Vec<u32>>,
    parent: Vec<(u32, u8)>,
    inverse: Vec<u32>,
}

/// Subgroup as a membership mask plus a generating set (indices into the
/// ambient group).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<bool>,
    order: usize,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

impl<E: GroupElement> FiniteGroup<E> {
    /// Breadth-first closure of `gens`. Fails once more than `cap` elements
    /// have been produced.
    pub fn generate(gens: &[E], cap: usize) -> Result<Self, GroupError> {
        let Some(first) = gens.first() else {
            return Err(GroupError::NoGenerators);
        };
        assert!(gens.len() < ROOT as usize, "too many generators");
        let id = first.identity_like();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut rmul: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        let mut parent = vec![(0u32, ROOT)];
        let mut x = 0;
        while x < elements.len() {
            for (g, gen) in gens.iter().enumerate() {
                let y = elements[x].compose(gen);
                let idx = match index.get(&y) {
                    Some(&i) => i,
                    None => {
                        if elements.len() >= cap {
                            return Err(GroupError::CapExceeded(cap));
                        }
                        let i = elements.len();
                        index.insert(y.clone(), i);
                        elements.push(y);
                        parent.push((x as u32, g as u8));
                        i
                    }
                };
                rmul[g].push(idx as u32);
            }
            x += 1;
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        let inverse = elements.iter().map(|e| index[&e.inverse()] as u32).collect();
        Ok(FiniteGroup { elements, index, generators, rmul, parent, inverse })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &E {
        &self.elements[x]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn member(&self, e: &E) -> Result<usize, GroupError> {
        self.index_of(e).ok_or(GroupError::NotMember)
    }

    /// Indices of the generators the group was built from.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Generator indices spelling element `x` from the identity.
    pub fn word(&self, mut x: usize) -> Vec<u8> {
        let mut w = Vec::new();
        while self.parent[x].1 != ROOT {
            let (p, g) = self.parent[x];
            w.push(g);
            x = p as usize;
        }
        w.reverse();
        w
    }

    fn apply_word(&self, mut x: usize, word: &[u8]) -> usize {
        for &g in word {
            x = self.rmul[g as usize][x] as usize;
        }
        x
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let mut w = Vec::new();
        let mut y = b;
        while self.parent[y].1 != ROOT {
            let (p, g) = self.parent[y];
            w.push(g);
            y = p as usize;
        }
        let mut x = a;
        for &g in w.iter().rev() {
            x = self.rmul[g as usize][x] as usize;
        }
        x
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    pub fn pow(&self, x: usize, n: u64) -> usize {
        let w = self.word(x);
        let mut acc = self.identity();
        for _ in 0..n {
            acc = self.apply_word(acc, &w);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let w = self.word(x);
        let mut acc = x;
        let mut n = 1;
        while acc != 0 {
            acc = self.apply_word(acc, &w);
            n += 1;
        }
        n
    }

    /// `g x g⁻¹`
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a⁻¹ b⁻¹ a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Orbit of `x` under conjugation by the elements of `within`.
    fn class_within(&self, x: usize, within: &[usize]) -> Vec<usize> {
        let mut seen = vec![x];
        let mut mark = HashSet::from([x]);
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for &g in within {
                let z = self.conjugate(g, y);
                if mark.insert(z) {
                    seen.push(z);
                    queue.push_back(z);
                }
            }
        }
        seen.sort_unstable();
        seen
    }

    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        self.class_within(x, &self.generators)
    }

    pub fn conjugacy_class_of(&self, e: &E) -> Result<Vec<usize>, GroupError> {
        Ok(self.conjugacy_class(self.member(e)?))
    }

    /// All conjugacy classes, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.order()];
        let mut classes = Vec::new();
        for x in 0..self.order() {
            if done[x] {
                continue;
            }
            let c = self.conjugacy_class(x);
            for &y in &c {
                done[y] = true;
            }
            classes.push(c);
        }
        classes
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { members: vec![true; self.order()], order: self.order(), generators: self.generators.clone() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut members = vec![false; self.order()];
        members[0] = true;
        Subgroup { members, order: 1, generators: Vec::new() }
    }

    fn close(&self, gens: Vec<usize>) -> Subgroup {
        let words: Vec<Vec<u8>> = gens.iter().map(|&g| self.word(g)).collect();
        let mut members = vec![false; self.order()];
        members[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut order = 1;
        while let Some(x) = queue.pop_front() {
            for w in &words {
                let y = self.apply_word(x, w);
                if !members[y] {
                    members[y] = true;
                    order += 1;
                    queue.push_back(y);
                }
            }
        }
        assert_eq!(self.order() % order, 0, "subgroup order must divide the group order");
        Subgroup { members, order, generators: gens }
    }

    /// Smallest subgroup containing `elements`. Only elements not already
    /// generated by earlier ones are kept as generators.
    pub fn subgroup(&self, elements: &[usize]) -> Subgroup {
        let mut h = self.trivial_subgroup();
        for &x in elements {
            if !h.contains(x) {
                let mut gens = h.generators.clone();
                gens.push(x);
                h = self.close(gens);
            }
        }
        h
    }

    /// Smallest subgroup of `within` that contains `s` and is normalized by
    /// `within`.
    pub fn normal_closure_in(&self, within: &Subgroup, s: &[usize]) -> Subgroup {
        let mut h = self.trivial_subgroup();
        for &x in s {
            assert!(within.contains(x), "element outside the enclosing subgroup");
            if h.contains(x) {
                continue;
            }
            for y in self.class_within(x, &within.generators) {
                if !h.contains(y) {
                    let mut gens = h.generators.clone();
                    gens.push(y);
                    h = self.close(gens);
                }
            }
        }
        h
    }

    pub fn normal_closure(&self, s: &[usize]) -> Subgroup {
        self.normal_closure_in(&self.whole(), s)
    }

    pub fn normal_closure_of(&self, s: &[E]) -> Result<Subgroup, GroupError> {
        let idx = s.iter().map(|e| self.member(e)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.normal_closure(&idx))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        h.generators.iter().all(|&x| self.generators.iter().all(|&g| h.contains(self.conjugate(g, x))))
    }

    /// `[H, H]` as the normal closure in `H` of commutators of generators of `H`.
    pub fn derived_subgroup_of(&self, h: &Subgroup) -> Subgroup {
        let g = &h.generators;
        let comms: Vec<usize> = g
            .iter()
            .enumerate()
            .flat_map(|(n, &a)| g[n + 1..].iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        let d = self.normal_closure_in(h, &comms);
        debug_assert!(d
            .generators
            .iter()
            .all(|&x| h.generators.iter().all(|&y| d.contains(self.conjugate(y, x)))));
        d
    }

    /// `G ⊇ G' ⊇ G'' ⊇ …` until two consecutive terms agree; the first entry is `G`.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.derived_subgroup_of(last);
            if next.order == last.order {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup_of(&self.whole()).order == self.order()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(|s| s.is_trivial())
    }

    /// Invariant factors of `H / [H, H]`.
    pub fn abelianization_of(&self, h: &Subgroup) -> AbelianGroup {
        let d = self.derived_subgroup_of(h);
        quotient_structure(self, h, &d)
    }

    pub fn abelianization(&self) -> AbelianGroup {
        self.abelianization_of(&self.whole())
    }
}

/// Structure of the abelian quotient `H / N` from its order statistics: the
/// number of cosets killed by `p^j` is `Π p^{min(j, eᵢ)}` over the `p`-primary
/// cyclic factors `Z/p^{eᵢ}`, which determines the factors.
fn quotient_structure<E: GroupElement>(g: &FiniteGroup<E>, h: &Subgroup, n: &Subgroup) -> AbelianGroup {
    let index = h.order / n.order;
    if index == 1 {
        return AbelianGroup::trivial();
    }
    // coset order of each element of H
    let mut count_by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for x in h.elements() {
        let w = g.word(x);
        let mut acc = x;
        let mut k = 1;
        while !n.contains(acc) {
            acc = g.apply_word(acc, &w);
            k += 1;
        }
        *count_by_order.entry(k).or_default() += 1;
    }
    let mut factors = Vec::new();
    let mut rest = index;
    let mut p = 2;
    while rest > 1 {
        if rest % p != 0 {
            p += 1;
            continue;
        }
        while rest % p == 0 {
            rest /= p;
        }
        // |A[p^j]| for j = 0, 1, ... until the p-part is exhausted
        let mut sizes = vec![1usize];
        let mut pj = 1;
        loop {
            pj *= p;
            let killed: usize = count_by_order.iter().filter(|(o, _)| pj % **o == 0).map(|(_, c)| c).sum();
            let size = killed / n.order;
            if size == *sizes.last().expect("nonempty") {
                break;
            }
            sizes.push(size);
        }
        // number of cyclic factors of order ≥ p^j is log_p(sizes[j]/sizes[j-1])
        let at_least: Vec<u32> = sizes.windows(2).map(|w| ilog(w[1] / w[0], p)).collect();
        for (j, &c) in at_least.iter().enumerate() {
            let next = at_least.get(j + 1).copied().unwrap_or(0);
            for _ in 0..c - next {
                factors.push((p as u64).pow(j as u32 + 1));
            }
        }
    }
    let group = AbelianGroup::new(factors, 0);
    assert_eq!(group.order(), Some(index as u64), "abelian quotient structure must match its order");
    group
}

fn ilog(mut v: usize, p: usize) -> u32 {
    let mut k = 0;
    while v > 1 {
        debug_assert!(v % p == 0);
        v /= p;
        k += 1;
    }
    k
}

impl<E: GroupElement> fmt::Debug for FiniteGroup<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order()).field("generators", &self.generators).finish()
    }
}
