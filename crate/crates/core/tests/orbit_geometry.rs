use std::f64::consts::{FRAC_PI_2, PI, TAU};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use knotform::orbit::*;

const GRID: usize = 10_000;

fn admissible(max_k: u32) -> Vec<WeightedAction> {
    WeightedAction::all_up_to(max_k)
}

#[test]
fn chain_holds_for_small_weights() {
    let tol = Tolerances::default().grid;
    for a in admissible(6) {
        for c in chain(a, GRID, tol).unwrap() {
            assert!(c.holds, "{a}: {c:?}");
        }
    }
}

/// `2 f_{k,ℓ} ≤ f_{1,1}` reduces to `k² cos² t + ℓ² sin² t ≥ 4`, which holds
/// as soon as `ℓ ≥ 2`; with `ℓ = 1` it fails near `t = π/2`.
#[test]
fn doubling_bound() {
    let tol = Tolerances::default().grid;
    let round = profile(WeightedAction::hopf());
    for a in admissible(6) {
        let c = compare(&round, &branched_double(&profile(a)), GRID, tol).unwrap();
        assert_eq!(c.holds, a.l() >= 2, "{a}: {c:?}");
        if a.l() >= 2 {
            let (k, l) = (a.k() as f64, a.l() as f64);
            assert!((0..GRID).all(|i| {
                let t = FRAC_PI_2 * i as f64 / (GRID - 1) as f64;
                k * k * t.cos().powi(2) + l * l * t.sin().powi(2) >= 4.0 - 1e-12
            }));
        }
    }
}

#[test]
fn cone_angles_are_two_pi_over_weights() {
    for a in admissible(6) {
        let (at_zero, at_end) = cone_angles(&profile(a));
        assert!((at_zero - TAU / a.k() as f64).abs() < 1e-8, "{a}: {at_zero}");
        assert!((at_end - TAU / a.l() as f64).abs() < 1e-8, "{a}: {at_end}");
    }
    for n in 1..=6 {
        let (x, y) = cone_angles(&RevolutionProfile::suspension(n).unwrap());
        assert!((x - TAU / n as f64).abs() < 1e-8 && (y - TAU / n as f64).abs() < 1e-8);
    }
}

#[test]
fn round_quotient_has_radius_one_half() {
    let round = profile(WeightedAction::hopf());
    let table = profile_table(&[round], 1001);
    let (t, f) = table.iter().map(|r| (r[0], r[1])).fold((0.0, 0.0), |m, x| if x.1 > m.1 { x } else { m });
    assert!((f - 0.5).abs() < 1e-12 && (t - PI / 4.0).abs() < 1e-12);
}

#[test]
fn hopf_orbit_distances_are_round() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let (p, q) = (random_unit_c2(&mut rng), random_unit_c2(&mut rng));
        let d = orbit_distance(WeightedAction::hopf(), &p, &q);
        assert!((d - hopf_distance(&p, &q)).abs() < 1e-5);
    }
}

#[test]
fn smooth_pole_is_a_meridian_away() {
    let a = WeightedAction::new(2, 1).unwrap();
    let d = orbit_distance(a, &[1.0, 0.0, 0.0, 0.0], &[0.0, 0.0, 0.6, 0.8]);
    assert!((d - FRAC_PI_2).abs() < 1e-12);
    let s = surface_distance(&profile(a), (0.0, 0.0), (FRAC_PI_2, 2.0));
    assert!((s - FRAC_PI_2).abs() < 1e-12);
}

#[test]
fn profiles_match_orbit_distances() {
    let gate = Tolerances::default().oracle_gate;
    let hopf = validate_profile(WeightedAction::hopf(), 100, 1, gate).unwrap();
    assert!(hopf.max_discrepancy < 1e-5, "{hopf:?}");
    for (k, l) in [(2, 1), (3, 2)] {
        let v = validate_profile(WeightedAction::new(k, l).unwrap(), 100, 1, gate).unwrap();
        assert!(v.max_discrepancy < gate, "({k},{l}): {v:?}");
    }
}

#[test]
fn wrong_profile_is_rejected() {
    // the (3,1) closed form against (3,2) orbits
    let action = WeightedAction::new(3, 2).unwrap();
    let wrong = profile(WeightedAction::new(3, 1).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let worst = (0..30)
        .map(|_| {
            let (p, q) = (random_unit_c2(&mut rng), random_unit_c2(&mut rng));
            let s = surface_distance(&wrong, quotient_coordinates(action, &p), quotient_coordinates(action, &q));
            (orbit_distance(action, &p, &q) - s).abs()
        })
        .fold(0.0, f64::max);
    assert!(worst > 1e-3, "{worst}");
}

#[test]
fn invalid_inputs() {
    assert!(WeightedAction::new(4, 2).is_err());
    assert!(WeightedAction::new(0, 0).is_err());
    assert!(RevolutionProfile::suspension(0).is_err());
    assert!(matches!(
        validate_profile(WeightedAction::hopf(), 0, 1, 1e-3),
        Err(OrbitError::InvalidParameter(_))
    ));
}

fn unit_point() -> impl Strategy<Value = C2> {
    prop::array::uniform4(-1.0f64..1.0)
        .prop_filter("away from the origin", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-2)
        .prop_map(|v| {
            let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.map(|x| x / n)
        })
}

fn action() -> impl Strategy<Value = WeightedAction> {
    prop::sample::select(admissible(6))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn orbit_distance_is_a_metric(a in action(), p in unit_point(), q in unit_point(), r in unit_point()) {
        let (pq, qp) = (orbit_distance(a, &p, &q), orbit_distance(a, &q, &p));
        prop_assert!((pq - qp).abs() < 1e-9);
        let (qr, pr) = (orbit_distance(a, &q, &r), orbit_distance(a, &p, &r));
        prop_assert!(pr <= pq + qr + 1e-6);
        prop_assert!(orbit_distance(a, &p, &p) == 0.0);
        prop_assert!((0.0..=FRAC_PI_2 + 1e-12).contains(&pq));
    }
}
