use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::KnotDiagram;
use crate::arith::{smith_normal_form, AbelianGroup, IntegerMatrix};

/// Coloring matrix: one row per crossing, one column per arc, with
/// `2·over − under_in − under_out`.
pub fn coloring_matrix(k: &KnotDiagram) -> IntegerMatrix {
    let n = k.arc_count();
    let mut m = IntegerMatrix::zeros(k.crossing_count(), n);
    for (row, a) in k.crossing_arcs().iter().enumerate() {
        m[(row, a.over)] += 2;
        m[(row, a.under_in)] -= 1;
        m[(row, a.under_out)] -= 1;
    }
    m
}

/// The coloring matrix with its last row and column removed.
pub fn reduced_coloring_matrix(k: &KnotDiagram) -> IntegerMatrix {
    let m = coloring_matrix(k);
    if m.rows() == 0 {
        return IntegerMatrix::zeros(0, 0);
    }
    m.minor(m.rows() - 1, m.cols() - 1)
}

/// First homology of the branched double cover, the cokernel of the
/// reduced coloring matrix.
pub fn h1_double_cover(k: &KnotDiagram) -> AbelianGroup {
    smith_normal_form(&reduced_coloring_matrix(k)).cokernel()
}

/// Knot determinant `|Δ(−1)|`.
pub fn determinant(k: &KnotDiagram) -> BigInt {
    let m = reduced_coloring_matrix(k);
    let snf = smith_normal_form(&m);
    if snf.rank() < m.rows() {
        return BigInt::zero();
    }
    snf.diagonal.iter().fold(BigInt::one(), |acc, d| acc * d).abs()
}

/// Determinant as `u64` when it fits.
pub fn determinant_u64(k: &KnotDiagram) -> Option<u64> {
    determinant(k).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{dt_to_diagram, parse_pd};

    #[test]
    fn trefoil_and_figure_eight() {
        let t = parse_pd("[(1,4,2,5),(3,6,4,1),(5,2,6,3)]").unwrap();
        assert_eq!(determinant_u64(&t), Some(3));
        assert_eq!(h1_double_cover(&t), AbelianGroup::cyclic(3));
        let f8 = dt_to_diagram(&[4, 6, 8, 2]).unwrap();
        assert_eq!(determinant_u64(&f8), Some(5));
    }

    #[test]
    fn unknot_cover_is_the_sphere() {
        let u = KnotDiagram::unknot();
        assert_eq!(determinant_u64(&u), Some(1));
        assert!(h1_double_cover(&u).is_trivial());
    }
}
