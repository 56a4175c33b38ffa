#![no_main]

use knotform::knot::parse_braid;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(b) = parse_braid(src) {
        if b.letters().len() <= 64 {
            let _ = b.to_diagram();
        }
    }
});
