use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// Finitely generated abelian group `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_k`, with
/// `d₁ | d₂ | … | d_k` and every `dᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    factors: Vec<u64>,
    free_rank: usize,
}

impl AbelianGroup {
    /// Normalizes an arbitrary list of cyclic orders into invariant factors.
    pub fn new(cyclic_orders: Vec<u64>, free_rank: usize) -> Self {
        // split into prime powers, then recombine largest-with-largest
        let mut by_prime: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
        for d in cyclic_orders {
            assert!(d != 0, "use free_rank for infinite cyclic factors");
            let mut n = d;
            let mut p = 2;
            while p * p <= n {
                if n % p == 0 {
                    let mut q = 1;
                    while n % p == 0 {
                        n /= p;
                        q *= p;
                    }
                    by_prime.entry(p).or_default().push(q);
                }
                p += 1;
            }
            if n > 1 {
                by_prime.entry(n).or_default().push(n);
            }
        }
        let len = by_prime.values().map(|v| v.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for powers in by_prime.values_mut() {
            powers.sort_unstable();
            for (slot, q) in factors.iter_mut().rev().zip(powers.iter().rev()) {
                *slot *= q;
            }
        }
        AbelianGroup { factors, free_rank }
    }

    pub fn trivial() -> Self {
        AbelianGroup { factors: Vec::new(), free_rank: 0 }
    }

    pub fn cyclic(n: u64) -> Self {
        if n == 0 {
            Self::new(vec![], 1)
        } else if n == 1 {
            Self::trivial()
        } else {
            Self::new(vec![n], 0)
        }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.free_rank == 0
    }

    /// Order, or `None` if infinite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.factors.iter().product())
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn has_two_torsion(&self) -> bool {
        self.factors.iter().any(|d| d.is_even())
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() + self.free_rank <= 1
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" x "))
    }
}
