use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{AbelianGroup, IntegerMatrix};

/// Diagonal of the Smith normal form `d₁ | d₂ | … | d_r` (all positive) of an
/// integer matrix, together with its shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Invariant factors greater than one.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    /// `Z^rows / M·Z^cols`.
    pub fn cokernel(&self) -> AbelianGroup {
        AbelianGroup::new(to_u64(&self.invariant_factors()), self.rows - self.rank())
    }

    /// `Z^cols / (row space)`, the group presented by relators-as-rows.
    pub fn row_quotient(&self) -> AbelianGroup {
        AbelianGroup::new(to_u64(&self.invariant_factors()), self.cols - self.rank())
    }
}

fn to_u64(v: &[BigInt]) -> Vec<u64> {
    v.iter().map(|d| d.to_u64().expect("invariant factor exceeds u64")).collect()
}

/// Smith normal form by repeated gcd pivoting with unimodular row and column
/// operations on big integers.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut dirty = false;
        for i in t + 1..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&a[t][t]);
            for j in t..cols {
                let v = &a[t][j] * &q;
                a[i][j] -= v;
            }
            dirty |= !a[i][t].is_zero();
        }
        for j in t + 1..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&a[t][t]);
            for i in t..rows {
                let v = &a[i][t] * &q;
                a[i][j] -= v;
            }
            dirty |= !a[t][j].is_zero();
        }
        if dirty {
            continue;
        }
        // pivot must divide the rest of the block
        let piv = a[t][t].clone();
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&piv)));
        if let Some(i) = bad {
            for j in t..cols {
                let v = a[i][j].clone();
                a[t][j] += v;
            }
            continue;
        }
        diag.push(piv.abs());
        t += 1;
    }
    SmithForm { diagonal: diag, rows, cols }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntegerMatrix::from_i64(rows))
            .invariant_factors()
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn examples() {
        assert!(smith_normal_form(&IntegerMatrix::identity(3)).cokernel().is_trivial());
        assert_eq!(factors(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        let empty = smith_normal_form(&IntegerMatrix::zeros(0, 0));
        assert!(empty.cokernel().is_trivial());
    }

    #[test]
    fn divisibility_chain() {
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![6]);
        assert_eq!(factors(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]), vec![2, 2, 60]);
    }

    #[test]
    fn free_rank() {
        let s = smith_normal_form(&IntegerMatrix::from_i64(&[vec![1, -1, 0]]));
        assert_eq!(s.row_quotient(), AbelianGroup::new(vec![], 2));
        assert_eq!(s.cokernel(), AbelianGroup::trivial());
    }
}
