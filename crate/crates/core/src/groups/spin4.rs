use std::fmt;

use crate::arith::{kernel, ExactScalar, Matrix};

use super::quaternion::{dot, hamilton, UnitQuaternion, Vector4};
use super::GroupElement;

/// Element `(l, r)` of S³ × S³ acting on H by `x ↦ l x r⁻¹`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Spin4Element {
    pub left: UnitQuaternion,
    pub right: UnitQuaternion,
}

impl Spin4Element {
    pub fn new(left: UnitQuaternion, right: UnitQuaternion) -> Self {
        Spin4Element { left, right }
    }

    pub fn identity() -> Self {
        Self::new(UnitQuaternion::one(), UnitQuaternion::one())
    }

    /// `(-1, -1)`, the kernel of Spin(4) → SO(4).
    pub fn minus_identity() -> Self {
        Self::new(UnitQuaternion::one().neg(), UnitQuaternion::one().neg())
    }

    pub fn left_only(q: UnitQuaternion) -> Self {
        Self::new(q, UnitQuaternion::one())
    }

    pub fn right_only(q: UnitQuaternion) -> Self {
        Self::new(UnitQuaternion::one(), q)
    }

    /// Lift of the unitary rotation `(z₁, z₂) ↦ (e^{iα} z₁, e^{iβ} z₂)` with
    /// `α = 2π a/n`, `β = 2π b/n`, under `x = z₁ + z₂ j`.
    pub fn from_torus_rotation(a: i64, b: i64, n: u32) -> Self {
        // x ↦ e^{iφ} x e^{iψ} rotates (z₁, z₂) by (φ+ψ, φ−ψ); use half-angles
        let n2 = 2 * n;
        Self::new(UnitQuaternion::exp_i(a + b, n2), UnitQuaternion::exp_i(b - a, n2))
    }

    pub fn act(&self, x: &Vector4) -> Vector4 {
        hamilton(&hamilton(self.left.coords(), x), self.right.inverse().coords())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.left.neg(), self.right.neg())
    }

    pub fn rotation(&self) -> RotationClass {
        RotationClass::from_spin(self.clone())
    }
}

impl GroupElement for Spin4Element {
    fn compose(&self, other: &Self) -> Self {
        Self::new(self.left.mul(&other.left), self.right.mul(&other.right))
    }

    fn inverse(&self) -> Self {
        Self::new(self.left.inverse(), self.right.inverse())
    }

    fn identity_like(&self) -> Self {
        Self::identity()
    }
}

impl fmt::Debug for Spin4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Spin4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// Element of SO(4) = Spin(4)/{±(1,1)}, stored as the representative whose
/// left factor has positive leading coordinate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RotationClass {
    rep: Spin4Element,
}

impl RotationClass {
    pub fn from_spin(s: Spin4Element) -> Self {
        if s.left.leading_sign() < 0 {
            RotationClass { rep: s.neg() }
        } else {
            RotationClass { rep: s }
        }
    }

    pub fn identity() -> Self {
        RotationClass { rep: Spin4Element::identity() }
    }

    pub fn representative(&self) -> &Spin4Element {
        &self.rep
    }

    pub fn is_identity(&self) -> bool {
        self.rep.left.is_one() && self.rep.right.is_one()
    }

    /// `Re q₁ = Re q₂`, which holds iff the rotation fixes a nonzero vector.
    pub fn has_fixed_points(&self) -> bool {
        self.rep.left.re() == self.rep.right.re()
    }

    pub fn fixed_set(&self) -> FixedSet {
        fixed_set(self)
    }
}

impl GroupElement for RotationClass {
    fn compose(&self, other: &Self) -> Self {
        Self::from_spin(self.rep.compose(&other.rep))
    }

    fn inverse(&self) -> Self {
        Self::from_spin(self.rep.inverse())
    }

    fn identity_like(&self) -> Self {
        Self::identity()
    }
}

impl fmt::Debug for RotationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RotationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{}", self.rep)
    }
}

/// Fixed subspace of a rotation of R⁴, intersected with S³.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedSet {
    Empty,
    /// Great circle in the plane spanned by two exact orthogonal vectors.
    Circle([Vector4; 2]),
    All,
}

impl FixedSet {
    pub fn dimension(&self) -> usize {
        match self {
            FixedSet::Empty => 0,
            FixedSet::Circle(_) => 2,
            FixedSet::All => 4,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, FixedSet::Empty)
    }

    /// Squared lengths of the circle basis vectors.
    pub fn squared_norms(&self) -> Option<[ExactScalar; 2]> {
        match self {
            FixedSet::Circle([u, v]) => Some([dot(u, u), dot(v, v)]),
            _ => None,
        }
    }

    /// Circle basis scaled to unit length in floating point.
    pub fn orthonormal_f64(&self) -> Option<[[f64; 4]; 2]> {
        let FixedSet::Circle(basis) = self else { return None };
        Some(basis.clone().map(|v| {
            let f = v.map(|x| x.to_f64());
            let n = f.iter().map(|x| x * x).sum::<f64>().sqrt();
            f.map(|x| x / n)
        }))
    }
}

/// Kernel of `x ↦ q₁ x − x q₂` on R⁴, computed exactly.
pub fn fixed_set(r: &RotationClass) -> FixedSet {
    let Spin4Element { left, right } = r.representative();
    let mut m = Matrix::<ExactScalar>::zeros(4, 4);
    for col in 0..4 {
        let mut e: Vector4 = Default::default();
        e[col] = ExactScalar::one();
        let image = hamilton(left.coords(), &e);
        let twisted = hamilton(&e, right.coords());
        for row in 0..4 {
            m[(row, col)] = image[row].sub(&twisted[row]);
        }
    }
    let basis = kernel(&m);
    match basis.len() {
        0 => FixedSet::Empty,
        4 => FixedSet::All,
        2 => {
            let u: Vector4 = basis[0].clone().try_into().expect("length 4");
            let v: Vector4 = basis[1].clone().try_into().expect("length 4");
            // Gram–Schmidt without division
            let uu = dot(&u, &u);
            let uv = dot(&u, &v);
            let w: Vector4 = [0, 1, 2, 3].map(|n| v[n].mul(&uu).sub(&u[n].mul(&uv)));
            FixedSet::Circle([u, w])
        }
        d => panic!("fixed subspace of a rotation of R^4 has dimension {d}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_normalization_identifies_antipodes() {
        let s = Spin4Element::new(UnitQuaternion::i(), UnitQuaternion::j());
        assert_eq!(s.rotation(), s.neg().rotation());
        assert_eq!(Spin4Element::minus_identity().rotation(), RotationClass::identity());
    }

    #[test]
    fn conjugation_by_j_fixes_the_plane_of_one_and_j() {
        let c = Spin4Element::new(UnitQuaternion::j(), UnitQuaternion::j()).rotation();
        let fs = c.fixed_set();
        let FixedSet::Circle(basis) = &fs else { panic!("expected a circle, got {fs:?}") };
        for v in basis {
            assert!(v[1].is_zero() && v[3].is_zero());
            assert_eq!(&c.representative().act(v), v);
        }
        assert!(dot(&basis[0], &basis[1]).is_zero());
    }

    #[test]
    fn identity_and_free_rotation() {
        assert_eq!(RotationClass::identity().fixed_set(), FixedSet::All);
        let free = Spin4Element::new(UnitQuaternion::i(), UnitQuaternion::i().neg()).rotation();
        // i x i: Re parts agree (both 0), fixes the plane spanned by j, k
        assert_eq!(free.fixed_set().dimension(), 2);
        let lens = Spin4Element::from_torus_rotation(1, 1, 5).rotation();
        assert!(!lens.has_fixed_points());
        assert_eq!(lens.fixed_set(), FixedSet::Empty);
    }

    #[test]
    fn torus_rotation_acts_on_coordinates() {
        // (z₁, z₂) ↦ (i z₁, -z₂) at quarter and half turns
        let s = Spin4Element::from_torus_rotation(1, 2, 4);
        let one: Vector4 = [ExactScalar::one(), ExactScalar::zero(), ExactScalar::zero(), ExactScalar::zero()];
        let jv: Vector4 = [ExactScalar::zero(), ExactScalar::zero(), ExactScalar::one(), ExactScalar::zero()];
        let img = s.act(&one);
        assert!(img[0].is_zero() && img[1].is_one());
        let img = s.act(&jv);
        assert_eq!(img[2], ExactScalar::int(-1));
    }
}
