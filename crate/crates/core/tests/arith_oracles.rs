mod common;

use common::divisors::determinantal_factors;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use knotform::arith::{smith_normal_form, ExactScalar, IntegerMatrix, Rat};

const CONDUCTORS: [u32; 9] = [1, 2, 3, 4, 5, 6, 8, 10, 12];

fn scalar() -> impl Strategy<Value = ExactScalar> {
    prop::collection::vec((-6i64..=6, 1i64..=4, 0usize..CONDUCTORS.len(), 0i64..12, any::<bool>()), 1..4).prop_map(
        |terms| {
            terms.into_iter().fold(ExactScalar::zero(), |acc, (num, den, n, a, sine)| {
                let n = CONDUCTORS[n];
                let t = if sine { ExactScalar::sin_2pi(a, n) } else { ExactScalar::cos_2pi(a, n) };
                acc.add(&t.mul_rat(&Rat::new(num, den)))
            })
        },
    )
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-9 * (1.0 + x.abs().max(y.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn field_identities(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert!(close(a.mul(&b).to_f64(), a.to_f64() * b.to_f64()));
        prop_assert!(close(a.add(&b).to_f64(), a.to_f64() + b.to_f64()));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            prop_assert_eq!(b.mul(&a).div(&a).unwrap(), b.clone());
        } else {
            prop_assert!(a.inv().is_err());
        }
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.mul(&b).conjugate(), a.conjugate().mul(&b.conjugate()));
        // σ₇ is an automorphism of every field in play (conductors divide 120)
        prop_assert_eq!(a.mul(&b).galois(7), a.galois(7).mul(&b.galois(7)));
        prop_assert_eq!(a.add(&b).galois(7), a.galois(7).add(&b.galois(7)));
    }

    #[test]
    fn pythagorean_identity(a in -30i64..30, n in 1u32..=30) {
        let (c, s) = (ExactScalar::cos_2pi(a, n), ExactScalar::sin_2pi(a, n));
        prop_assert!(c.square().add(&s.square()).is_one());
        prop_assert!(close(c.to_f64(), (std::f64::consts::TAU * a as f64 / n as f64).cos()));
    }
}

#[test]
fn surds() {
    assert_eq!(ExactScalar::sqrt2().square(), ExactScalar::int(2));
    assert_eq!(ExactScalar::sqrt3().square(), ExactScalar::int(3));
    assert_eq!(ExactScalar::sqrt5().square(), ExactScalar::int(5));
    let phi = ExactScalar::golden_ratio();
    assert_eq!(phi.square(), phi.add(&ExactScalar::one()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn smith_form_matches_determinantal_divisors(
        entries in prop::collection::vec(prop_oneof![3 => -9i64..=9, 1 => Just(0i64), 1 => -60i64..=60], 16),
        rank_drop in 0usize..3,
    ) {
        let mut rows: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
        // some matrices are made singular to exercise rank deficiency
        if rank_drop == 1 {
            rows[3] = (0..4).map(|j| 2 * rows[0][j] - 3 * rows[1][j]).collect();
        }
        let snf = smith_normal_form(&IntegerMatrix::from_i64(&rows));
        let nonzero: Vec<BigInt> = snf.diagonal.iter().filter(|d| !d.is_zero()).map(|d| d.abs()).collect();
        let expected = determinantal_factors(&rows);
        prop_assert_eq!(nonzero.len(), expected.len());
        for (d, e) in nonzero.iter().zip(&expected) {
            prop_assert_eq!(d.to_i128().unwrap(), *e);
        }
        for w in nonzero.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }
}
