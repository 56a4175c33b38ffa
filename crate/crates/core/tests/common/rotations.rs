//! Random rotation classes of R⁴ built from exact unit quaternions.

use rand::seq::SliceRandom;
use rand::Rng;

use knotform::groups::{FiniteGroup, FixedSet, RotationClass, Spin4Element, UnitQuaternion, DEFAULT_GROUP_CAP};
use knotform::spaceform::{binary_icosahedral_generators, octahedral_unit};

fn closure(gens: Vec<UnitQuaternion>) -> Vec<UnitQuaternion> {
    let lifted: Vec<Spin4Element> = gens.into_iter().map(Spin4Element::left_only).collect();
    let g = FiniteGroup::generate(&lifted, DEFAULT_GROUP_CAP).expect("finite");
    g.elements().iter().map(|s| s.left.clone()).collect()
}

/// Binary icosahedral and octahedral groups plus roots of unity of order ≤ 12.
pub fn quaternion_pool() -> Vec<UnitQuaternion> {
    let mut pool = closure(binary_icosahedral_generators());
    assert_eq!(pool.len(), 120);
    let octahedral = closure(vec![octahedral_unit(), UnitQuaternion::from_rational(1, 1, 1, 1, 2).expect("unit")]);
    assert_eq!(octahedral.len(), 48);
    pool.extend(octahedral);
    for n in 1..=12 {
        pool.extend((0..n as i64).map(|a| UnitQuaternion::exp_i(a, n)));
    }
    pool
}

/// About half of the classes pair `l` with a conjugate of `±l`.
pub fn random_class<R: Rng>(pool: &[UnitQuaternion], rng: &mut R) -> RotationClass {
    let l = pool.choose(rng).expect("nonempty").clone();
    let r = if rng.gen_bool(0.5) {
        let g = pool.choose(rng).expect("nonempty");
        g.mul(&l).mul(&g.inverse())
    } else {
        pool.choose(rng).expect("nonempty").clone()
    };
    let r = if rng.gen_bool(0.5) { r } else { r.neg() };
    RotationClass::from_spin(Spin4Element::new(l, r))
}

/// Whether the kernel computation and the real-part criterion agree, and
/// every basis vector of a fixed circle is actually fixed.
pub fn criteria_agree(class: &RotationClass) -> bool {
    let fixed = class.fixed_set();
    if fixed.is_empty() == class.has_fixed_points() {
        return false;
    }
    match &fixed {
        FixedSet::Empty => true,
        FixedSet::All => class.is_identity(),
        FixedSet::Circle(basis) => {
            !class.is_identity() && basis.iter().all(|v| &class.representative().act(v) == v)
        }
    }
}
