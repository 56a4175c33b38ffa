#![no_main]

use knotform::knot::{determinant_u64, parse_pd};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(k) = parse_pd(src) {
        if k.crossing_count() <= 12 {
            let _ = determinant_u64(&k);
        }
    }
});
