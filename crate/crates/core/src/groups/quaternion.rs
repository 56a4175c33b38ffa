use std::fmt;

use crate::arith::{ExactScalar, Rat};

use super::GroupError;

/// A vector of R⁴ = H in the basis 1, i, j, k.
pub type Vector4 = [ExactScalar; 4];

/// Hamilton product of two coordinate vectors.
pub fn hamilton(p: &Vector4, q: &Vector4) -> Vector4 {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    let m = |x: &ExactScalar, y: &ExactScalar| x.mul(y);
    [
        m(a1, a2).sub(&m(b1, b2)).sub(&m(c1, c2)).sub(&m(d1, d2)),
        m(a1, b2).add(&m(b1, a2)).add(&m(c1, d2)).sub(&m(d1, c2)),
        m(a1, c2).sub(&m(b1, d2)).add(&m(c1, a2)).add(&m(d1, b2)),
        m(a1, d2).add(&m(b1, c2)).sub(&m(c1, b2)).add(&m(d1, a2)),
    ]
}

pub fn dot(p: &Vector4, q: &Vector4) -> ExactScalar {
    p.iter().zip(q).fold(ExactScalar::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

/// Unit quaternion with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnitQuaternion {
    coords: Vector4,
}

impl UnitQuaternion {
    pub fn new(a: ExactScalar, b: ExactScalar, c: ExactScalar, d: ExactScalar) -> Result<Self, GroupError> {
        let coords = [a, b, c, d];
        if !dot(&coords, &coords).is_one() {
            return Err(GroupError::NotUnit);
        }
        Ok(UnitQuaternion { coords })
    }

    fn raw(coords: Vector4) -> Self {
        UnitQuaternion { coords }
    }

    fn basis(n: usize) -> Self {
        let mut coords: Vector4 = Default::default();
        coords[n] = ExactScalar::one();
        Self::raw(coords)
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn i() -> Self {
        Self::basis(1)
    }

    pub fn j() -> Self {
        Self::basis(2)
    }

    pub fn k() -> Self {
        Self::basis(3)
    }

    /// `e^{2πi a/n}`, a unit complex number inside H.
    pub fn exp_i(a: i64, n: u32) -> Self {
        Self::raw([ExactScalar::cos_2pi(a, n), ExactScalar::sin_2pi(a, n), ExactScalar::zero(), ExactScalar::zero()])
    }

    /// Rational combination `(a + b i + c j + d k) / den` of basis units.
    pub fn from_rational(a: i64, b: i64, c: i64, d: i64, den: i64) -> Result<Self, GroupError> {
        let f = |x| ExactScalar::rational(Rat::new(x, den));
        Self::new(f(a), f(b), f(c), f(d))
    }

    pub fn coords(&self) -> &Vector4 {
        &self.coords
    }

    pub fn re(&self) -> &ExactScalar {
        &self.coords[0]
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::raw(hamilton(&self.coords, &other.coords))
    }

    /// Conjugate, which is the inverse for unit quaternions.
    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = &self.coords;
        Self::raw([a.clone(), b.neg(), c.neg(), d.neg()])
    }

    pub fn neg(&self) -> Self {
        Self::raw(self.coords.clone().map(|x| x.neg()))
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|x| x.is_zero())
    }

    /// Lies in the circle `{a + b i}`.
    pub fn is_complex(&self) -> bool {
        self.coords[2].is_zero() && self.coords[3].is_zero()
    }

    /// Sign of the first nonzero coordinate.
    pub(crate) fn leading_sign(&self) -> i32 {
        self.coords.iter().map(|x| x.signum()).find(|&s| s != 0).unwrap_or(0)
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [0, 1, 2, 3].map(|n| self.coords[n].to_f64())
    }
}

impl fmt::Debug for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let units = ["", "i", "j", "k"];
        let parts: Vec<String> = self
            .coords
            .iter()
            .zip(units)
            .filter(|(x, _)| !x.is_zero())
            .map(|(x, u)| match (x.as_rational(), u) {
                (Some(r), "") => r.to_string(),
                (Some(r), u) if r.is_one() => u.to_string(),
                (Some(r), u) if r == Rat::int(-1) => format!("-{u}"),
                (Some(r), u) => format!("{r}{u}"),
                (None, "") => format!("({x})"),
                (None, u) => format!("({x}){u}"),
            })
            .collect();
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}
