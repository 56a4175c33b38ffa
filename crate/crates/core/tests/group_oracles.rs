mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::rotations::{criteria_agree, quaternion_pool, random_class};

/// Kernel dimension of `x ↦ l x r⁻¹ − x` against equality of real parts.
#[test]
fn fixed_set_dimension_matches_real_part_criterion() {
    let pool = quaternion_pool();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut with_fixed = 0;
    for _ in 0..10_000 {
        let class = random_class(&pool, &mut rng);
        assert!(criteria_agree(&class), "{class}");
        with_fixed += usize::from(class.has_fixed_points());
    }
    assert!((1000..9000).contains(&with_fixed), "{with_fixed}");
}
