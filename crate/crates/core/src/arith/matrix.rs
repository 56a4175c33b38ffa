use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactScalar, Rat};

/// The operations fraction-free elimination needs from an integral domain.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat::ZERO
    }
    fn one() -> Self {
        Rat::ONE
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
}

impl Ring for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn add(&self, other: &Self) -> Self {
        ExactScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        ExactScalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        ExactScalar::mul(self, other)
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RationalMatrix = Matrix<Rat>;
pub type IntegerMatrix = Matrix<BigInt>;

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(T::zero(), |acc, (a, b)| acc.add(&a.mul(b))))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Removes one row and one column.
    pub fn minor(&self, row: usize, col: usize) -> Self {
        let rows = (0..self.rows)
            .filter(|&i| i != row)
            .map(|i| (0..self.cols).filter(|&j| j != col).map(|j| self[(i, j)].clone()).collect())
            .collect::<Vec<Vec<T>>>();
        let mut m = Self::from_rows(rows);
        if self.rows == 1 {
            m.rows = 0;
        }
        m.cols = self.cols.saturating_sub(1);
        m
    }
}

impl IntegerMatrix {
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }
}

impl RationalMatrix {
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rat::int(x)).collect()).collect())
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for i in 0..self.rows {
            l.entry(&&self.data[i * self.cols..(i + 1) * self.cols]);
        }
        l.finish()
    }
}

/// Division-free row echelon form. Returns the echelon matrix and pivot columns.
fn echelon<T: Ring>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else { continue };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let piv = a[(r, c)].clone();
        for i in r + 1..a.rows {
            let f = a[(i, c)].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..a.cols {
                // row_i ← piv·row_i − f·row_r
                let v = piv.mul(&a[(i, j)]).sub(&f.mul(&a[(r, j)]));
                a[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<T: Ring>(m: &Matrix<T>) -> usize {
    echelon(m).1.len()
}

/// Basis of the right null space `{v : M v = 0}`, computed without division.
/// The result has `cols - rank` vectors, one per free column.
pub fn kernel<T: Ring>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let (e, pivots) = echelon(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![T::zero(); m.cols];
        v[f] = T::one();
        for (i, &p) in pivots.iter().enumerate().rev() {
            let s = (p + 1..m.cols).fold(T::zero(), |acc, j| acc.add(&e[(i, j)].mul(&v[j])));
            let piv = e[(i, p)].clone();
            for x in v.iter_mut() {
                *x = x.mul(&piv);
            }
            v[p] = T::zero().sub(&s);
        }
        basis.push(v);
    }
    basis
}

/// Scales a rational vector to a primitive integer vector with positive
/// first nonzero entry.
pub fn primitive(v: &[Rat]) -> Vec<Rat> {
    let den = v.iter().fold(<BigInt as One>::one(), |acc, x| acc.lcm(&x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let g = ints.iter().fold(<BigInt as Zero>::zero(), |acc, x| acc.gcd(x));
    if Zero::is_zero(&g) {
        return v.to_vec();
    }
    let sign = ints.iter().find(|x| !Zero::is_zero(*x)).map_or(1, |x| if x.is_negative() { -1 } else { 1 });
    ints.into_iter().map(|x| Rat::from(x / &g * sign)).collect()
}

impl RationalMatrix {
    /// Null space as primitive integer vectors.
    pub fn kernel_primitive(&self) -> Vec<Vec<Rat>> {
        kernel(self).iter().map(|v| primitive(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_examples() {
        assert!(kernel(&RationalMatrix::identity(4)).is_empty());
        assert_eq!(kernel(&RationalMatrix::zeros(4, 4)).len(), 4);
        let m = RationalMatrix::from_i64(&[vec![1, 1], vec![2, 2]]);
        let k = m.kernel_primitive();
        assert_eq!(k, vec![vec![Rat::ONE, Rat::int(-1)]]);
    }

    #[test]
    fn kernel_vectors_are_exact_zeros() {
        let m = RationalMatrix::from_i64(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, -1, 5]]);
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn kernel_over_cyclotomic_scalars() {
        let r2 = ExactScalar::sqrt2();
        let m = Matrix::from_rows(vec![vec![r2.clone(), ExactScalar::int(-2)], vec![ExactScalar::one(), r2.neg()]]);
        let _ = &m;
        // second row is first / √2: rank 1
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn minor_shapes() {
        let m = IntegerMatrix::from_i64(&[vec![1, 2, 3], vec![4, 5, 6]]);
        let n = m.minor(0, 1);
        assert_eq!((n.rows(), n.cols()), (1, 2));
        assert_eq!(n.row(0), &[BigInt::from(4), BigInt::from(6)]);
        let single = IntegerMatrix::from_i64(&[vec![7]]).minor(0, 0);
        assert_eq!((single.rows(), single.cols()), (0, 0));
    }
}
