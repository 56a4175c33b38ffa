//! The three families of spherical space forms `S³/Π` with `Π ⊂ U(2)` and
//! `Π/[Π,Π]` of odd order, each with an involution whose fixed set is a
//! circle, together with an exact verifier for the group-theoretic facts
//! that make the quotient by the involution a 3-sphere.

mod report;

pub use report::render_report;

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{AbelianGroup, ExactScalar, Rat};
use crate::groups::{
    acts_freely, fixed_set, subgroup_intersections, FixedSet, GroupElement, GroupError, RotationClass,
    RotationGroup, SpinGroup, Spin4Element, UnitQuaternion,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceFormError {
    #[error("invalid parameters: {0}")]
    SpecViolation(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("candidate {0} is not an involution of the extended group with a circle of fixed points")]
    NotCandidate(String),
}

/// Parameters of one space-form group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "lowercase")]
pub enum SpaceFormSpec {
    /// `ζ·(z₁, z₂) = (ζ z₁, ζ^p z₂)` for `ζ` a primitive `m`-th root of unity.
    Cyclic { m: u32, p: i64 },
    Tetrahedral { m: u32, k: u32 },
    Icosahedral { m: u32 },
}

impl SpaceFormSpec {
    pub fn validate(&self) -> Result<(), SpaceFormError> {
        let bad = |msg: String| Err(SpaceFormError::SpecViolation(msg));
        match *self {
            SpaceFormSpec::Cyclic { m, p } => {
                if m == 0 || m.is_even() {
                    return bad(format!("cyclic order m = {m} must be odd and positive"));
                }
                if p.gcd(&(m as i64)) != 1 {
                    return bad(format!("p = {p} must be coprime to m = {m}"));
                }
            }
            SpaceFormSpec::Tetrahedral { m, k } => {
                if m == 0 || m.gcd(&6) != 1 {
                    return bad(format!("m = {m} must be coprime to 6"));
                }
                if k == 1 {
                    return bad("k = 1 is excluded".into());
                }
                if k > 6 {
                    return bad(format!("k = {k} is too large"));
                }
            }
            SpaceFormSpec::Icosahedral { m } => {
                if m == 0 || m.gcd(&30) != 1 {
                    return bad(format!("m = {m} must be coprime to 30"));
                }
            }
        }
        Ok(())
    }

    pub fn case_name(&self) -> &'static str {
        match self {
            SpaceFormSpec::Cyclic { .. } => "cyclic",
            SpaceFormSpec::Tetrahedral { .. } => "tetrahedral",
            SpaceFormSpec::Icosahedral { .. } => "icosahedral",
        }
    }

    /// Generators of the group in S³ × S¹ ⊂ Spin(4).
    pub fn spin_generators(&self) -> Vec<Spin4Element> {
        match *self {
            SpaceFormSpec::Cyclic { m, p } => {
                vec![Spin4Element::from_torus_rotation(1, p, m), Spin4Element::minus_identity()]
            }
            SpaceFormSpec::Tetrahedral { m, k } => {
                let zeta = UnitQuaternion::exp_i(1, 3u32.pow(k));
                vec![
                    Spin4Element::right_only(UnitQuaternion::exp_i(1, 2 * m)),
                    Spin4Element::new(UnitQuaternion::from_rational(1, 1, 1, 1, 2).expect("unit"), zeta),
                    Spin4Element::left_only(UnitQuaternion::i()),
                    Spin4Element::left_only(UnitQuaternion::j()),
                ]
            }
            SpaceFormSpec::Icosahedral { m } => {
                let mut g: Vec<Spin4Element> =
                    binary_icosahedral_generators().into_iter().map(Spin4Element::left_only).collect();
                g.push(Spin4Element::right_only(UnitQuaternion::exp_i(1, 2 * m)));
                g
            }
        }
    }

    /// The lift of the involution.
    pub fn involution(&self) -> Spin4Element {
        match self {
            SpaceFormSpec::Tetrahedral { .. } => Spin4Element::new(inv_sqrt2_i_plus_j(), UnitQuaternion::j()),
            _ => Spin4Element::new(UnitQuaternion::j(), UnitQuaternion::j()),
        }
    }

    /// The sweep used by the test suites and `spaceform sweep`.
    pub fn default_sweep() -> Vec<SpaceFormSpec> {
        let mut out = Vec::new();
        for m in [1, 3, 5, 7, 9, 15] {
            for p in [1, 2, 4] {
                out.push(SpaceFormSpec::Cyclic { m, p });
            }
        }
        for m in [1, 5, 7] {
            for k in [0, 2] {
                out.push(SpaceFormSpec::Tetrahedral { m, k });
            }
        }
        for m in [1, 7, 11] {
            out.push(SpaceFormSpec::Icosahedral { m });
        }
        out
    }
}

impl fmt::Display for SpaceFormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceFormSpec::Cyclic { m, p } => write!(f, "cyclic(m={m}, p={p})"),
            SpaceFormSpec::Tetrahedral { m, k } => write!(f, "tetrahedral(m={m}, k={k})"),
            SpaceFormSpec::Icosahedral { m } => write!(f, "icosahedral(m={m})"),
        }
    }
}

/// `(i + j)/√2`
fn inv_sqrt2_i_plus_j() -> UnitQuaternion {
    let h = ExactScalar::sqrt2().mul_rat(&Rat::new(1, 2));
    UnitQuaternion::new(ExactScalar::zero(), h.clone(), h, ExactScalar::zero()).expect("unit")
}

/// Generators of the binary icosahedral group: `-1, i, j, k`,
/// `(1 + i + j + k)/2` and `(i + φ j + φ⁻¹ k)/2` with `φ` the golden ratio.
pub fn binary_icosahedral_generators() -> Vec<UnitQuaternion> {
    let phi = ExactScalar::golden_ratio();
    let half = Rat::new(1, 2);
    let golden = UnitQuaternion::new(
        ExactScalar::zero(),
        ExactScalar::rational(half.clone()),
        phi.mul_rat(&half),
        phi.inv().expect("nonzero").mul_rat(&half),
    )
    .expect("unit");
    vec![
        UnitQuaternion::one().neg(),
        UnitQuaternion::i(),
        UnitQuaternion::j(),
        UnitQuaternion::k(),
        UnitQuaternion::from_rational(1, 1, 1, 1, 2).expect("unit"),
        golden,
    ]
}

/// `(i + j)/√2`, which together with the binary icosahedral generators
/// generates an infinite group.
pub fn octahedral_unit() -> UnitQuaternion {
    inv_sqrt2_i_plus_j()
}

/// Groups attached to one spec.
#[derive(Debug, Clone)]
pub struct SpaceFormCertificate {
    pub spec: SpaceFormSpec,
    /// Group in Spin(4).
    pub pi_hat: SpinGroup,
    /// Its image in SO(4).
    pub pi: RotationGroup,
    pub iota_hat: Spin4Element,
    /// `⟨Π̂, ι̂⟩` in Spin(4).
    pub gamma_hat: SpinGroup,
    /// `⟨Π, ι̃⟩` in SO(4).
    pub gamma: RotationGroup,
}

impl SpaceFormCertificate {
    pub fn iota(&self) -> RotationClass {
        self.iota_hat.rotation()
    }
}

/// Validates the spec and builds every group.
pub fn build(spec: SpaceFormSpec, cap: usize) -> Result<SpaceFormCertificate, SpaceFormError> {
    spec.validate()?;
    build_unchecked(spec, cap)
}

/// Builds without validating the parameters; used for negative controls.
pub fn build_unchecked(spec: SpaceFormSpec, cap: usize) -> Result<SpaceFormCertificate, SpaceFormError> {
    let gens = spec.spin_generators();
    let iota_hat = spec.involution();
    let pi_hat = SpinGroup::generate(&gens, cap)?;
    let classes: Vec<RotationClass> = gens.iter().map(|g| g.rotation()).collect();
    let pi = RotationGroup::generate(&classes, cap)?;
    let mut ext = gens.clone();
    ext.push(iota_hat.clone());
    let gamma_hat = SpinGroup::generate(&ext, cap)?;
    let mut ext_classes = classes;
    ext_classes.push(iota_hat.rotation());
    let gamma = RotationGroup::generate(&ext_classes, cap)?;
    Ok(SpaceFormCertificate { spec, pi_hat, pi, iota_hat, gamma_hat, gamma })
}

/// One named verification result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

/// All checks for one certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLedger {
    pub checks: Vec<Check>,
    pub abelianization: AbelianGroup,
}

impl CheckLedger {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_NAMES: [&str; 7] = [
    "free_action",
    "odd_abelianization",
    "involution_normalizes",
    "involution_fixes_circle",
    "generated_by_involutions",
    "fixed_points_only_in_involution_class",
    "intersection_gcd",
];

fn check(name: &'static str, passed: bool, witness: impl FnOnce() -> String) -> Check {
    Check { name, passed, witness: (!passed).then(witness) }
}

/// Runs the seven checks on a certificate.
pub fn verify(cert: &SpaceFormCertificate) -> CheckLedger {
    let mut checks = Vec::with_capacity(7);

    let free = acts_freely(&cert.pi);
    checks.push(check(CHECK_NAMES[0], free.free, || format!("{} has a fixed point", free.witness.clone().expect("witness"))));

    let abelianization = cert.pi.abelianization();
    let odd = !abelianization.has_two_torsion();
    checks.push(check(CHECK_NAMES[1], odd, || {
        let element = two_torsion_witness(&cert.pi).map(|x| cert.pi.element(x).to_string()).unwrap_or_default();
        format!("abelianization {abelianization} has 2-torsion, image of {element} has order 2")
    }));

    let iota_inv = cert.iota_hat.inverse();
    let bad_gen = cert.pi_hat.generators().iter().find(|&&g| {
        let conj = cert.iota_hat.compose(cert.pi_hat.element(g)).compose(&iota_inv);
        cert.pi_hat.index_of(&conj).is_none()
    });
    checks.push(check(CHECK_NAMES[2], bad_gen.is_none(), || {
        format!("conjugate of {} leaves the group", cert.pi_hat.element(*bad_gen.expect("witness")))
    }));

    let iota = cert.iota();
    let square = iota.compose(&iota);
    let fs = fixed_set(&iota);
    let circle = matches!(fs, FixedSet::Circle(_));
    checks.push(check(CHECK_NAMES[3], square.is_identity() && !iota.is_identity() && circle, || {
        format!("square {square}, fixed set of dimension {}", fs.dimension())
    }));

    let g = &cert.gamma_hat;
    let iota_idx = g.index_of(&cert.iota_hat).expect("involution is a generator");
    let closure = g.normal_closure(&[iota_idx]);
    checks.push(check(CHECK_NAMES[4], closure.order() == g.order(), || {
        format!("normal closure has order {} in a group of order {}", closure.order(), g.order())
    }));

    checks.push(fixed_point_check(cert));

    let inter = subgroup_intersections(&cert.pi_hat);
    let (passed, witness) = match inter {
        Ok(i) => (i.gcd <= 2, format!("orders {} and {} have gcd {}", i.left, i.right, i.gcd)),
        Err(e) => (false, e.to_string()),
    };
    checks.push(check(CHECK_NAMES[6], passed, || witness));

    CheckLedger { checks, abelianization }
}

/// Every non-identity element of `Γ` with a fixed point is conjugate to the
/// involution; the fixed-point test is done both by real parts and by the
/// kernel dimension, and the two must agree.
fn fixed_point_check(cert: &SpaceFormCertificate) -> Check {
    let g = &cert.gamma;
    let iota_idx = g.index_of(&cert.iota()).expect("involution is a generator");
    let class = g.conjugacy_class(iota_idx);
    for (x, r) in g.elements().iter().enumerate().skip(1) {
        let by_real_part = r.has_fixed_points();
        let by_kernel = !fixed_set(r).is_empty();
        if by_real_part != by_kernel {
            return check(CHECK_NAMES[5], false, || format!("fixed-point criteria disagree on {r}"));
        }
        if by_kernel && class.binary_search(&x).is_err() {
            return check(CHECK_NAMES[5], false, || format!("{r} has fixed points outside the class of the involution"));
        }
    }
    check(CHECK_NAMES[5], true, String::new)
}

/// An element of `G` whose image in `G/[G,G]` has order exactly 2.
fn two_torsion_witness(g: &RotationGroup) -> Option<usize> {
    let d = g.derived_subgroup_of(&g.whole());
    (0..g.order()).find(|&x| !d.contains(x) && d.contains(g.mul(x, x)))
}

/// Partitions `candidates` into `Γ`-conjugacy classes. Every candidate must
/// be an involution of `Γ` whose fixed set is a circle.
pub fn involution_uniqueness_scan(
    cert: &SpaceFormCertificate,
    candidates: &[RotationClass],
) -> Result<Vec<Vec<RotationClass>>, SpaceFormError> {
    let g = &cert.gamma;
    let mut classes: Vec<(Vec<usize>, Vec<RotationClass>)> = Vec::new();
    for c in candidates {
        let reject = || SpaceFormError::NotCandidate(c.to_string());
        let x = g.index_of(c).ok_or_else(reject)?;
        if c.is_identity() || !c.compose(c).is_identity() || !matches!(fixed_set(c), FixedSet::Circle(_)) {
            return Err(reject());
        }
        match classes.iter_mut().find(|(cls, _)| cls.binary_search(&x).is_ok()) {
            Some((_, members)) => members.push(c.clone()),
            None => classes.push((g.conjugacy_class(x), vec![c.clone()])),
        }
    }
    Ok(classes.into_iter().map(|(_, m)| m).collect())
}

/// Elements of `Γ ∖ Π` whose fixed set is a circle.
pub fn circle_elements_outside(cert: &SpaceFormCertificate) -> Vec<RotationClass> {
    cert.gamma
        .elements()
        .iter()
        .filter(|r| cert.pi.index_of(r).is_none() && r.has_fixed_points())
        .filter(|r| matches!(fixed_set(r), FixedSet::Circle(_)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_GROUP_CAP;

    #[test]
    fn spec_validation() {
        assert!(SpaceFormSpec::Cyclic { m: 4, p: 1 }.validate().is_err());
        assert!(SpaceFormSpec::Cyclic { m: 9, p: 3 }.validate().is_err());
        assert!(SpaceFormSpec::Tetrahedral { m: 1, k: 1 }.validate().is_err());
        assert!(SpaceFormSpec::Tetrahedral { m: 3, k: 0 }.validate().is_err());
        assert!(SpaceFormSpec::Icosahedral { m: 5 }.validate().is_err());
        assert!(SpaceFormSpec::Icosahedral { m: 7 }.validate().is_ok());
        assert!(SpaceFormSpec::default_sweep().len() >= 12);
    }

    #[test]
    fn small_cases() {
        let c = build(SpaceFormSpec::Cyclic { m: 3, p: 1 }, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(c.pi.order(), 3);
        assert!(verify(&c).all_passed());
        let t = build(SpaceFormSpec::Tetrahedral { m: 1, k: 0 }, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!((t.pi_hat.order(), t.pi.order()), (48, 24));
        let ledger = verify(&t);
        assert!(ledger.all_passed(), "{ledger:?}");
    }
}
