use std::f64::consts::{PI, TAU};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::quadrature::integrate_clustered;
use super::{orbit_distance, profile, quotient_coordinates, random_unit_c2, OrbitError, RevolutionProfile, WeightedAction};

const GRID: usize = 128;
const QUAD_TOL: f64 = 1e-11;
const BISECTIONS: usize = 60;

/// Geodesic family with a fixed Clairaut constant `c`: the turning point
/// (if any) and the pieces of the path in `t`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Family {
    /// Monotone in `t` between the endpoints.
    Direct,
    /// Turns at the zero of `f − c` beyond both endpoints towards `T`.
    Upper,
    /// Turns at the zero of `f − c` below both endpoints towards 0.
    Lower,
}

struct Problem<'a> {
    p: &'a RevolutionProfile,
    t1: f64,
    t2: f64,
    widest: f64,
}

impl Problem<'_> {
    fn lo(&self) -> f64 {
        self.t1.min(self.t2)
    }

    fn hi(&self) -> f64 {
        self.t1.max(self.t2)
    }

    /// Zero of `f − c` on a monotone stretch `[a, b]`.
    fn turning(&self, mut a: f64, mut b: f64, c: f64, increasing: bool) -> f64 {
        for _ in 0..200 {
            let m = (a + b) / 2.0;
            if m <= a || m >= b {
                break;
            }
            if (self.p.eval(m) < c) == increasing {
                a = m;
            } else {
                b = m;
            }
        }
        (a + b) / 2.0
    }

    /// `(Δφ, length)` of the geodesic in `family` with Clairaut constant `c`.
    fn sweep(&self, family: Family, c: f64) -> (f64, f64) {
        let f = |t: f64| {
            let r = self.p.eval(t);
            let gap = (r * r - c * c).abs().sqrt();
            if gap > 0.0 && r > 0.0 {
                [c / (r * gap), r / gap]
            } else {
                [0.0, 0.0]
            }
        };
        let piece = |a: f64, b: f64| integrate_clustered(&f, a, b, QUAD_TOL);
        let (s1, s2) = match family {
            Family::Direct => (piece(self.lo(), self.hi()), [0.0, 0.0]),
            Family::Upper => {
                let end = self.p.domain_end();
                let b = self.turning(self.hi().max(self.widest), end, c, false);
                (piece(self.t1, b), piece(self.t2, b))
            }
            Family::Lower => {
                let a = self.turning(0.0, self.lo().min(self.widest), c, true);
                (piece(a, self.t1), piece(a, self.t2))
            }
        };
        (s1[0] + s2[0], s1[1] + s2[1])
    }
}

/// Distance in the metric `dt² + f(t)² dφ²` between `(t₁, φ₁)` and
/// `(t₂, φ₂)`, by shooting over the Clairaut constant of geodesics and
/// comparing with the paths through either cone point.
pub fn surface_distance(p: &RevolutionProfile, a: (f64, f64), b: (f64, f64)) -> f64 {
    let (t1, t2) = (a.0, b.0);
    let end = p.domain_end();
    let mut dphi = (b.1 - a.1).rem_euclid(TAU);
    if dphi > PI {
        dphi = TAU - dphi;
    }
    let mut best = (t1 + t2).min(2.0 * end - t1 - t2);
    if dphi < 1e-14 {
        return best.min((t1 - t2).abs());
    }
    let cmax = p.eval(t1).min(p.eval(t2));
    if cmax <= 0.0 {
        return best;
    }
    let prob = Problem { p, t1, t2, widest: p.widest() };
    // the direct family continues, through c = cmax, into the turning family
    // that turns at the endpoint of smaller radius
    let t_small = if p.eval(t1) <= p.eval(t2) { t1 } else { t2 };
    let (joined, other) =
        if t_small >= prob.widest { (Family::Upper, Family::Lower) } else { (Family::Lower, Family::Upper) };
    let grid: Vec<f64> = (1..=GRID)
        .map(|i| if i == GRID { cmax * (1.0 - 1e-10) } else { cmax * i as f64 / GRID as f64 })
        .collect();
    let mut path: Vec<(Family, f64, f64, f64)> = Vec::with_capacity(2 * GRID + 1);
    path.push((Family::Direct, 0.0, 0.0, (t1 - t2).abs()));
    for &c in &grid {
        let (phi, len) = prob.sweep(Family::Direct, c);
        path.push((Family::Direct, c, phi, len));
    }
    for &c in grid.iter().rev() {
        let (phi, len) = prob.sweep(joined, c);
        path.push((joined, c, phi, len));
    }
    let mut separate: Vec<(Family, f64, f64, f64)> = Vec::with_capacity(GRID);
    for &c in grid.iter().rev() {
        let (phi, len) = prob.sweep(other, c);
        separate.push((other, c, phi, len));
    }
    let top = path.iter().chain(&separate).map(|s| s.2).filter(|v| v.is_finite()).fold(0.0, f64::max).min(8.0 * TAU);
    let mut targets = Vec::new();
    let mut j = 0.0;
    while dphi + j <= top {
        targets.push(dphi + j);
        if TAU - dphi + j <= top {
            targets.push(TAU - dphi + j);
        }
        j += TAU;
    }
    for seq in [&path, &separate] {
        for w in seq.windows(2) {
            let (x, y) = (w[0], w[1]);
            for &tau in &targets {
                let (gx, gy) = (x.2 - tau, y.2 - tau);
                if gx == 0.0 {
                    best = best.min(x.3);
                }
                if gx.signum() == gy.signum() || gy == 0.0 {
                    continue;
                }
                if x.0 != y.0 {
                    // crossing the junction at c ≈ cmax
                    best = best.min(x.3.min(y.3));
                    continue;
                }
                let (mut ca, mut cb, mut ga) = (x.1, y.1, gx);
                let mut len = x.3;
                for _ in 0..BISECTIONS {
                    let cm = (ca + cb) / 2.0;
                    let (phi, l) = prob.sweep(x.0, cm);
                    len = l;
                    let gm = phi - tau;
                    if gm == 0.0 {
                        break;
                    }
                    if gm.signum() == ga.signum() {
                        (ca, ga) = (cm, gm);
                    } else {
                        cb = cm;
                    }
                }
                best = best.min(len);
            }
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Validation {
    pub samples: usize,
    pub max_discrepancy: f64,
}

/// Compares orbit distances in the 3-sphere with geodesic distances of the
/// closed-form profile on random pairs of orbits.
pub fn validate_profile(
    action: WeightedAction,
    samples: usize,
    seed: u64,
    gate: f64,
) -> Result<Validation, OrbitError> {
    if samples == 0 {
        return Err(OrbitError::InvalidParameter("need at least one sample".into()));
    }
    let prof = profile(action);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<_> = (0..samples).map(|_| (random_unit_c2(&mut rng), random_unit_c2(&mut rng))).collect();
    let max = pairs
        .par_iter()
        .map(|(p, q)| {
            let oracle = orbit_distance(action, p, q);
            let surface =
                surface_distance(&prof, quotient_coordinates(action, p), quotient_coordinates(action, q));
            (oracle - surface).abs()
        })
        .reduce(|| 0.0, f64::max);
    if max >= gate {
        return Err(OrbitError::OracleMismatch { max, tolerance: gate });
    }
    Ok(Validation { samples, max_discrepancy: max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn round_sphere_distances() {
        // S_{1,1} is the sphere of radius 1/2 with polar angle 2t
        let p = profile(WeightedAction::hopf());
        let cases: [((f64, f64), (f64, f64)); 3] = [((0.3, 0.0), (1.1, 2.0)), ((0.2, 1.0), (0.25, 1.3)), ((0.7, 0.0), (0.7, PI))];
        for (a, b) in cases {
            let (th1, th2) = (2.0 * a.0, 2.0 * b.0);
            let cos = th1.cos() * th2.cos() + th1.sin() * th2.sin() * (b.1 - a.1).cos();
            let exact = 0.5 * cos.clamp(-1.0, 1.0).acos();
            let d = surface_distance(&p, a, b);
            assert!((d - exact).abs() < 1e-8, "{a:?} {b:?}: {d} vs {exact}");
        }
    }

    #[test]
    fn pole_to_pole_is_a_meridian() {
        let p = profile(WeightedAction::new(2, 1).unwrap());
        assert!((surface_distance(&p, (0.0, 0.0), (FRAC_PI_2, 1.0)) - FRAC_PI_2).abs() < 1e-12);
    }
}
