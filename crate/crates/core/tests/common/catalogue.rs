//! Small finite presentations with known orders.

use knotform::knot::{dt_to_diagram, parse_pd, KnotDiagram};
use knotform::presentation::{orbifold_quotient, wirtinger, GroupPresentation};

fn pres(text: &str) -> GroupPresentation {
    text.parse().unwrap()
}

fn orbifold(k: &KnotDiagram) -> GroupPresentation {
    orbifold_quotient(&wirtinger(k))
}

pub fn catalogue() -> Vec<(&'static str, GroupPresentation, usize)> {
    let trefoil = parse_pd("[(1,4,2,5),(3,6,4,1),(5,2,6,3)]").unwrap();
    let figure_eight = dt_to_diagram(&[4, 6, 8, 2]).unwrap();
    vec![
        ("cyclic 5", pres("gens=1; rel= 1 1 1 1 1"), 5),
        ("symmetric 3", pres("gens=2; rel= 1 1, 2 2, 1 2 1 2 1 2"), 6),
        ("quaternion", pres("gens=2; rel= 1 1 1 1, 1 1 -2 -2, -2 1 2 1"), 8),
        ("dihedral 10", pres("gens=2; rel= 1 1 1 1 1, 2 2, 1 2 1 2"), 10),
        ("alternating 4", pres("gens=2; rel= 1 1, 2 2 2, 1 2 1 2 1 2"), 12),
        ("cyclic 3 x cyclic 4", pres("gens=2; rel= 1 1 1, 2 2 2 2, 1 2 -1 -2"), 12),
        ("symmetric 4", pres("gens=2; rel= 1 1, 2 2 2, 1 2 1 2 1 2 1 2"), 24),
        ("coxeter A3", pres("gens=3; rel= 1 1, 2 2, 3 3, 1 2 1 2 1 2, 2 3 2 3 2 3, 1 3 1 3"), 24),
        ("alternating 5", pres("gens=2; rel= 1 1, 2 2 2, 1 2 1 2 1 2 1 2 1 2"), 60),
        ("trefoil orbifold", orbifold(&trefoil), 6),
        ("figure-eight orbifold", orbifold(&figure_eight), 10),
    ]
}

