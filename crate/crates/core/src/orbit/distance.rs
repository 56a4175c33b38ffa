use std::f64::consts::TAU;

use rand::Rng;

use super::WeightedAction;

/// Point of `C²` as `(Re z₁, Im z₁, Re z₂, Im z₂)`.
pub type C2 = [f64; 4];

const SAMPLES: usize = 2048;

fn rotate(q: &C2, a: WeightedAction, theta: f64) -> C2 {
    let (s1, c1) = (a.k() as f64 * theta).sin_cos();
    let (s2, c2) = (a.l() as f64 * theta).sin_cos();
    [c1 * q[0] - s1 * q[1], s1 * q[0] + c1 * q[1], c2 * q[2] - s2 * q[3], s2 * q[2] + c2 * q[3]]
}

fn chord(p: &C2, q: &C2) -> f64 {
    p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
}

/// Round distance on the unit sphere, from the chord.
fn sphere_distance(p: &C2, q: &C2) -> f64 {
    2.0 * (chord(p, q) / 2.0).min(1.0).asin()
}

/// Distance between the orbits of `p` and `q` in the round unit 3-sphere:
/// dense sampling of the circle followed by golden-section refinement.
pub fn orbit_distance(a: WeightedAction, p: &C2, q: &C2) -> f64 {
    if p == q {
        return 0.0;
    }
    let d = |theta: f64| chord(p, &rotate(q, a, theta));
    let step = TAU / SAMPLES as f64;
    let best = (0..SAMPLES).map(|i| (i, d(i as f64 * step))).min_by(|x, y| x.1.total_cmp(&y.1)).expect("samples");
    let (mut lo, mut hi) = ((best.0 as f64 - 1.0) * step, (best.0 as f64 + 1.0) * step);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut x1, mut x2) = (hi - g * (hi - lo), lo + g * (hi - lo));
    let (mut f1, mut f2) = (d(x1), d(x2));
    while hi - lo > 1e-12 {
        if f1 < f2 {
            hi = x2;
            (x2, f2) = (x1, f1);
            x1 = hi - g * (hi - lo);
            f1 = d(x1);
        } else {
            lo = x1;
            (x1, f1) = (x2, f2);
            x2 = lo + g * (hi - lo);
            f2 = d(x2);
        }
    }
    let theta = (lo + hi) / 2.0;
    sphere_distance(p, &rotate(q, a, theta)).min(sphere_distance(p, &rotate(q, a, best.0 as f64 * step)))
}

/// Hopf map to the unit 2-sphere: `(2 z₁ z̄₂, |z₁|² − |z₂|²)`.
pub fn hopf_map(p: &C2) -> [f64; 3] {
    let (a, b, c, d) = (p[0], p[1], p[2], p[3]);
    [2.0 * (a * c + b * d), 2.0 * (b * c - a * d), a * a + b * b - c * c - d * d]
}

/// Distance of the Hopf images in the sphere of radius 1/2.
pub fn hopf_distance(p: &C2, q: &C2) -> f64 {
    let (x, y) = (hopf_map(p), hopf_map(q));
    let chord = x.iter().zip(&y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
    (chord / 2.0).min(1.0).asin()
}

/// `(t, ψ)` with `p = (cos t·e^{iα}, sin t·e^{iβ})` and `ψ = ℓα − kβ mod 2π`.
pub fn quotient_coordinates(a: WeightedAction, p: &C2) -> (f64, f64) {
    let r1 = p[0].hypot(p[1]);
    let r2 = p[2].hypot(p[3]);
    let t = r2.atan2(r1);
    let alpha = p[1].atan2(p[0]);
    let beta = p[3].atan2(p[2]);
    let psi = (a.l() as f64 * alpha - a.k() as f64 * beta).rem_euclid(TAU);
    (t, psi)
}

/// Uniform random point of the unit 3-sphere.
pub fn random_unit_c2<R: Rng>(rng: &mut R) -> C2 {
    loop {
        let v: C2 = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 && n <= 1.0 {
            return v.map(|x| x / n);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn singular_orbits_are_a_quarter_circle_apart() {
        let d = orbit_distance(WeightedAction::hopf(), &[1.0, 0.0, 0.0, 0.0], &[0.0, 0.0, 1.0, 0.0]);
        assert!((d - PI / 2.0).abs() < 1e-12);
        let a = WeightedAction::new(2, 1).unwrap();
        let d = orbit_distance(a, &[1.0, 0.0, 0.0, 0.0], &[0.0, 0.0, 0.0, 1.0]);
        assert!((d - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn hopf_quotient_is_the_half_sphere() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (p, q) = (random_unit_c2(&mut rng), random_unit_c2(&mut rng));
            let d = orbit_distance(WeightedAction::hopf(), &p, &q);
            assert!((d - hopf_distance(&p, &q)).abs() < 1e-9, "{d}");
        }
    }
}
