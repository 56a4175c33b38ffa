//! Checkerboard (Goeritz) matrix, an independent route to the determinant
//! and to the first homology of the branched double cover.

use knotform::arith::{smith_normal_form, AbelianGroup, IntegerMatrix};
use knotform::knot::KnotDiagram;
use num_traits::{Signed, ToPrimitive};

/// Face index of every corner and a two-coloring of the faces.
fn colored_faces(k: &KnotDiagram) -> (Vec<[usize; 4]>, Vec<bool>) {
    let faces = k.faces();
    let n = k.crossing_count();
    let mut face_of = vec![[usize::MAX; 4]; n];
    for (f, corners) in faces.iter().enumerate() {
        for &(c, p) in corners {
            face_of[c][p] = f;
        }
    }
    let mut color: Vec<Option<bool>> = vec![None; faces.len()];
    color[0] = Some(true);
    let mut stack = vec![0usize];
    while let Some(f) = stack.pop() {
        let col = color[f].unwrap();
        for &(c, p) in &faces[f] {
            for q in [(p + 1) % 4, (p + 3) % 4] {
                let g = face_of[c][q];
                match color[g] {
                    None => {
                        color[g] = Some(!col);
                        stack.push(g);
                    }
                    Some(x) => assert_ne!(x, col, "diagram is not checkerboard colorable"),
                }
            }
        }
    }
    (face_of, color.into_iter().map(Option::unwrap).collect())
}

/// Reduced Goeritz matrix over the white faces.
pub fn goeritz_matrix(k: &KnotDiagram) -> IntegerMatrix {
    let (face_of, white) = colored_faces(k);
    let index: Vec<Option<usize>> = {
        let mut next = 0;
        white
            .iter()
            .map(|&w| {
                w.then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let w = white.iter().filter(|&&w| w).count();
    let mut g = vec![vec![0i64; w]; w];
    for corners in &face_of {
        let even_white = white[corners[0]];
        let (a, b, eta) = if even_white { (corners[0], corners[2], 1) } else { (corners[1], corners[3], -1) };
        let (i, j) = (index[a].unwrap(), index[b].unwrap());
        if i != j {
            g[i][j] -= eta;
            g[j][i] -= eta;
            g[i][i] += eta;
            g[j][j] += eta;
        }
    }
    let full = IntegerMatrix::from_i64(&g);
    full.minor(w - 1, w - 1)
}

pub fn goeritz_determinant(k: &KnotDiagram) -> u64 {
    if k.crossing_count() == 0 {
        return 1;
    }
    let m = goeritz_matrix(k);
    let snf = smith_normal_form(&m);
    if snf.rank() < m.rows() {
        return 0;
    }
    snf.diagonal.iter().map(|d| d.abs().to_u64().unwrap()).product()
}

pub fn goeritz_h1(k: &KnotDiagram) -> AbelianGroup {
    if k.crossing_count() == 0 {
        return AbelianGroup::trivial();
    }
    smith_normal_form(&goeritz_matrix(k)).cokernel()
}
