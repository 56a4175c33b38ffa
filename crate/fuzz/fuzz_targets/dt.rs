#![no_main]

use knotform::knot::{dt_to_diagram, parse_dt};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(code) = parse_dt(src) {
        let _ = dt_to_diagram(&code);
    }
});
