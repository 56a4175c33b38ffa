//! Unit quaternions, the action of Spin(4) = S³ × S³ on R⁴, and exact
//! finite groups built by closure.

mod finite;
mod perm;
mod quaternion;
mod spin4;

pub use finite::{FiniteGroup, GroupElement, Subgroup};
pub use perm::Perm;
pub use quaternion::{dot, hamilton, UnitQuaternion, Vector4};
pub use spin4::{fixed_set, FixedSet, RotationClass, Spin4Element};

use thiserror::Error;

/// Default bound on the number of elements produced by a closure.
pub const DEFAULT_GROUP_CAP: usize = 100_000;

pub type SpinGroup = FiniteGroup<Spin4Element>;
pub type RotationGroup = FiniteGroup<RotationClass>;
pub type PermGroup = FiniteGroup<Perm>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("element is not a member of the group")]
    NotMember,
    #[error("quaternion does not have unit norm")]
    NotUnit,
    #[error("a generating set must be nonempty")]
    NoGenerators,
    #[error("group is not contained in S^3 x S^1")]
    WrongAmbient,
}

/// Outcome of the free-action test for a group of rotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAction {
    pub free: bool,
    /// A non-identity element with a fixed point, when not free.
    pub witness: Option<RotationClass>,
}

/// Whether every non-identity rotation in `g` moves every point of S³.
pub fn acts_freely(g: &RotationGroup) -> FreeAction {
    let witness = g.elements().iter().find(|r| !r.is_identity() && r.has_fixed_points()).cloned();
    FreeAction { free: witness.is_none(), witness }
}

/// Orders of `G ∩ (S³ × 1)` and `G ∩ (1 × S¹)` and their gcd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Intersections {
    pub left: usize,
    pub right: usize,
    pub gcd: usize,
}

pub fn subgroup_intersections(g: &SpinGroup) -> Result<Intersections, GroupError> {
    if g.elements().iter().any(|s| !s.right.is_complex()) {
        return Err(GroupError::WrongAmbient);
    }
    let left = g.elements().iter().filter(|s| s.right.is_one()).count();
    let right = g.elements().iter().filter(|s| s.left.is_one()).count();
    Ok(Intersections { left, right, gcd: num_integer::gcd(left, right) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q8() -> SpinGroup {
        let gens = [UnitQuaternion::i(), UnitQuaternion::j()].map(Spin4Element::left_only);
        SpinGroup::generate(&gens, 100).unwrap()
    }

    #[test]
    fn quaternion_group() {
        let g = q8();
        assert_eq!(g.order(), 8);
        let i = g.member(&Spin4Element::left_only(UnitQuaternion::i())).unwrap();
        let class = g.conjugacy_class(i);
        let minus_i = g.member(&Spin4Element::left_only(UnitQuaternion::i().neg())).unwrap();
        let mut expected = vec![i, minus_i];
        expected.sort();
        assert_eq!(class, expected);
        assert_eq!(g.conjugacy_class(0), vec![0]);
        let d = g.derived_subgroup_of(&g.whole());
        assert_eq!(d.order(), 2);
        assert_eq!(g.abelianization(), crate::arith::AbelianGroup::new(vec![2, 2], 0));
        let minus_one = g.member(&Spin4Element::left_only(UnitQuaternion::one().neg())).unwrap();
        assert_eq!(g.normal_closure(&[minus_one]).order(), 2);
        assert!(g.normal_closure(&[0]).is_trivial());
    }

    #[test]
    fn cyclic_group_and_cap() {
        let z5 = [Spin4Element::left_only(UnitQuaternion::exp_i(1, 5))];
        let g = SpinGroup::generate(&z5, 100).unwrap();
        assert_eq!(g.order(), 5);
        assert!(g.is_abelian());
        assert!(g.derived_subgroup_of(&g.whole()).is_trivial());
        assert_eq!(g.abelianization(), crate::arith::AbelianGroup::cyclic(5));
        let z7 = [Spin4Element::left_only(UnitQuaternion::exp_i(1, 7))];
        assert_eq!(SpinGroup::generate(&z7, 5).unwrap_err(), GroupError::CapExceeded(5));
    }

    #[test]
    fn binary_tetrahedral_is_solvable() {
        let gens = [
            Spin4Element::left_only(UnitQuaternion::i()),
            Spin4Element::left_only(UnitQuaternion::from_rational(1, 1, 1, 1, 2).unwrap()),
        ];
        let g = SpinGroup::generate(&gens, 1000).unwrap();
        assert_eq!(g.order(), 24);
        let orders: Vec<usize> = g.derived_series().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![24, 8, 2, 1]);
        assert_eq!(g.abelianization(), crate::arith::AbelianGroup::cyclic(3));
    }

    #[test]
    fn freeness_of_lens_groups() {
        let g = RotationGroup::generate(&[Spin4Element::from_torus_rotation(1, 2, 5).rotation()], 100).unwrap();
        assert_eq!(g.order(), 5);
        assert!(acts_freely(&g).free);
        let h = RotationGroup::generate(
            &[Spin4Element::new(UnitQuaternion::j(), UnitQuaternion::j()).rotation()],
            100,
        )
        .unwrap();
        let f = acts_freely(&h);
        assert!(!f.free);
        assert!(f.witness.unwrap().fixed_set().dimension() == 2);
    }

    #[test]
    fn intersections() {
        let triv = SpinGroup::generate(&[Spin4Element::identity()], 10).unwrap();
        assert_eq!(subgroup_intersections(&triv).unwrap(), Intersections { left: 1, right: 1, gcd: 1 });
        let bad = SpinGroup::generate(&[Spin4Element::right_only(UnitQuaternion::j())], 10).unwrap();
        assert_eq!(subgroup_intersections(&bad), Err(GroupError::WrongAmbient));
    }

    #[test]
    fn perm_groups() {
        let cycle = Perm::new(vec![1, 2, 3, 4, 0]).unwrap();
        let flip = Perm::new(vec![0, 4, 3, 2, 1]).unwrap();
        let d5 = PermGroup::generate(&[cycle, flip], 100).unwrap();
        assert_eq!(d5.order(), 10);
        assert!(!d5.is_abelian());
        assert_eq!(d5.abelianization(), crate::arith::AbelianGroup::cyclic(2));
        assert!(Perm::new(vec![0, 0]).is_none());
    }
}
