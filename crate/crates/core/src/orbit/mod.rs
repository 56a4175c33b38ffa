//! Orbit spaces of weighted circle actions on the round 3-sphere, as
//! singular surfaces of revolution.

mod distance;
mod geodesic;
mod quadrature;

pub use distance::{hopf_distance, hopf_map, orbit_distance, quotient_coordinates, random_unit_c2, C2};
pub use geodesic::{surface_distance, validate_profile, Validation};

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrbitError {
    #[error("invalid weights ({0}, {1}): need coprime k >= l >= 1")]
    InvalidAction(u32, u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("profiles live on different domains [0, {0}] and [0, {1}]")]
    DomainMismatch(f64, f64),
    #[error("profile disagrees with orbit distances: max discrepancy {max:.3e} exceeds {tolerance:.1e}")]
    OracleMismatch { max: f64, tolerance: f64 },
}

/// Numeric tolerances shared by every orbit computation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    /// Pointwise comparison of closed forms.
    pub grid: f64,
    /// One-dimensional minimizations.
    pub minimization: f64,
    /// Gate for accepting a profile against the orbit-distance oracle.
    pub oracle_gate: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { grid: 1e-12, minimization: 1e-6, oracle_gate: 1e-3 }
    }
}

/// Circle action `θ·(z₁, z₂) = (e^{ikθ} z₁, e^{iℓθ} z₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedAction {
    k: u32,
    l: u32,
}

impl WeightedAction {
    pub fn new(k: u32, l: u32) -> Result<Self, OrbitError> {
        if l == 0 || k < l || k.gcd(&l) != 1 {
            return Err(OrbitError::InvalidAction(k, l));
        }
        Ok(WeightedAction { k, l })
    }

    pub fn hopf() -> Self {
        WeightedAction { k: 1, l: 1 }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// All admissible actions with `k ≤ max_k`.
    pub fn all_up_to(max_k: u32) -> Vec<Self> {
        (1..=max_k).flat_map(|k| (1..=k).filter_map(move |l| Self::new(k, l).ok())).collect()
    }
}

impl fmt::Display for WeightedAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ProfileKind {
    WeightedQuotient { k: u32, l: u32 },
    Suspension { n: u32 },
    Doubled(Box<RevolutionProfile>),
}

/// Metric `dt² + f(t)² dφ²` on `[0, T] × R/2πZ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RevolutionProfile {
    pub kind: ProfileKind,
}

impl RevolutionProfile {
    pub fn suspension(n: u32) -> Result<Self, OrbitError> {
        if n == 0 {
            return Err(OrbitError::InvalidParameter("suspension order must be positive".into()));
        }
        Ok(RevolutionProfile { kind: ProfileKind::Suspension { n } })
    }

    /// Right end `T` of the domain.
    pub fn domain_end(&self) -> f64 {
        match &self.kind {
            ProfileKind::WeightedQuotient { .. } => FRAC_PI_2,
            ProfileKind::Suspension { .. } => PI,
            ProfileKind::Doubled(inner) => inner.domain_end(),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        match &self.kind {
            ProfileKind::WeightedQuotient { k, l } => {
                let (s, c) = t.sin_cos();
                let (k, l) = (*k as f64, *l as f64);
                s * c / (l * l * s * s + k * k * c * c).sqrt()
            }
            ProfileKind::Suspension { n } => t.sin() / *n as f64,
            ProfileKind::Doubled(inner) => 2.0 * inner.eval(t),
        }
    }

    /// Point of maximal radius, by golden-section search.
    pub fn widest(&self) -> f64 {
        if let ProfileKind::WeightedQuotient { k, l } = self.kind {
            return ((k as f64) / (l as f64)).sqrt().atan();
        }
        let (mut a, mut b) = (0.0, self.domain_end());
        let g = (5f64.sqrt() - 1.0) / 2.0;
        while b - a > 1e-14 {
            let (x1, x2) = (b - g * (b - a), a + g * (b - a));
            if self.eval(x1) < self.eval(x2) {
                a = x1;
            } else {
                b = x2;
            }
        }
        (a + b) / 2.0
    }

    pub fn label(&self) -> String {
        match &self.kind {
            ProfileKind::WeightedQuotient { k, l } => format!("S_{k},{l}"),
            ProfileKind::Suspension { n } => format!("S_{n}"),
            ProfileKind::Doubled(inner) => format!("2*{}", inner.label()),
        }
    }
}

/// Closed-form profile `sin t cos t / sqrt(ℓ² sin² t + k² cos² t)` on `[0, π/2]`.
pub fn profile(action: WeightedAction) -> RevolutionProfile {
    RevolutionProfile { kind: ProfileKind::WeightedQuotient { k: action.k, l: action.l } }
}

/// Profile of the branched double cover: twice the radius.
pub fn branched_double(p: &RevolutionProfile) -> RevolutionProfile {
    RevolutionProfile { kind: ProfileKind::Doubled(Box::new(p.clone())) }
}

/// One-sided slope `f(h)/h` at a zero endpoint, Richardson-extrapolated in
/// powers of `h²` (the profiles are odd about their endpoints).
fn endpoint_slope(g: impl Fn(f64) -> f64) -> f64 {
    const LEVELS: usize = 5;
    let h0 = 0.05;
    let mut table = [[0.0f64; LEVELS]; LEVELS];
    for i in 0..LEVELS {
        let h = h0 / (1u32 << i) as f64;
        table[i][0] = g(h) / h;
        let mut factor = 4.0;
        for j in 1..=i {
            table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
            factor *= 4.0;
        }
    }
    table[LEVELS - 1][LEVELS - 1]
}

/// Cone angles `2π f′(0⁺)` and `2π |f′(T⁻)|`.
pub fn cone_angles(p: &RevolutionProfile) -> (f64, f64) {
    let t = p.domain_end();
    let a = endpoint_slope(|h| p.eval(h));
    let b = endpoint_slope(|h| p.eval(t - h));
    (2.0 * PI * a, 2.0 * PI * b.abs())
}

/// Outcome of a pointwise domination test `f_A ≥ f_B`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub holds: bool,
    /// Largest `f_B − f_A` seen on the grid (negative when strictly dominated).
    pub max_violation: f64,
    /// Grid point attaining `max_violation`.
    pub witness_t: f64,
}

/// Checks `f_A(tᵢ) ≥ f_B(tᵢ) − tol` on a uniform grid of `n` points.
pub fn compare(a: &RevolutionProfile, b: &RevolutionProfile, n: usize, tol: f64) -> Result<Comparison, OrbitError> {
    let (ta, tb) = (a.domain_end(), b.domain_end());
    if ta != tb {
        return Err(OrbitError::DomainMismatch(ta, tb));
    }
    if n < 2 {
        return Err(OrbitError::InvalidParameter("grid needs at least two points".into()));
    }
    let mut worst = (f64::NEG_INFINITY, 0.0);
    for i in 0..n {
        let t = ta * i as f64 / (n - 1) as f64;
        let v = b.eval(t) - a.eval(t);
        if v > worst.0 {
            worst = (v, t);
        }
    }
    Ok(Comparison { holds: worst.0 <= tol, max_violation: worst.0, witness_t: worst.1 })
}

/// The chain `S_{1,1} ≥ S_{k,1} ≥ S_{k,ℓ}`: both comparisons.
pub fn chain(action: WeightedAction, n: usize, tol: f64) -> Result<[Comparison; 2], OrbitError> {
    let round = profile(WeightedAction::hopf());
    let middle = profile(WeightedAction::new(action.k, 1)?);
    let bottom = profile(action);
    Ok([compare(&round, &middle, n, tol)?, compare(&middle, &bottom, n, tol)?])
}

/// Rows `(t, f₁(t), f₂(t), …)` on a uniform grid.
pub fn profile_table(profiles: &[RevolutionProfile], n: usize) -> Vec<Vec<f64>> {
    let t_end = profiles.first().map_or(FRAC_PI_2, |p| p.domain_end());
    (0..n)
        .map(|i| {
            let t = if n > 1 { t_end * i as f64 / (n - 1) as f64 } else { 0.0 };
            std::iter::once(t).chain(profiles.iter().map(|p| p.eval(t))).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn act(k: u32, l: u32) -> WeightedAction {
        WeightedAction::new(k, l).unwrap()
    }

    #[test]
    fn closed_form_values() {
        let round = profile(WeightedAction::hopf());
        assert!((round.eval(PI / 4.0) - 0.5).abs() < 1e-15);
        assert!((profile(act(2, 1)).eval(PI / 4.0) - 1.0 / 10f64.sqrt()).abs() < 1e-15);
        assert!((round.widest() - PI / 4.0).abs() < 1e-15);
        assert!(WeightedAction::new(2, 2).is_err());
        assert!(WeightedAction::new(1, 2).is_err());
    }

    #[test]
    fn cone_angle_values() {
        let (a, b) = cone_angles(&profile(act(3, 2)));
        assert!((a - 2.0 * PI / 3.0).abs() < 1e-8 && (b - PI).abs() < 1e-8, "{a} {b}");
        let (a, b) = cone_angles(&RevolutionProfile::suspension(4).unwrap());
        assert!((a - PI / 2.0).abs() < 1e-8 && (b - PI / 2.0).abs() < 1e-8);
    }

    #[test]
    fn comparisons() {
        let tol = Tolerances::default().grid;
        let f11 = profile(WeightedAction::hopf());
        assert!(compare(&f11, &profile(act(3, 1)), 10_000, tol).unwrap().holds);
        assert!(compare(&profile(act(3, 1)), &profile(act(3, 2)), 10_000, tol).unwrap().holds);
        let bad = compare(&profile(act(2, 1)), &f11, 10_000, tol).unwrap();
        assert!(!bad.holds && bad.max_violation > 0.0);
        let doubled = branched_double(&profile(act(3, 2)));
        assert!(compare(&f11, &doubled, 10_000, tol).unwrap().holds);
        assert!(!compare(&f11, &branched_double(&f11), 10_000, tol).unwrap().holds);
        assert!(compare(&f11, &RevolutionProfile::suspension(2).unwrap(), 10, tol).is_err());
    }
}
