#![no_main]

use knotform::presentation::GroupPresentation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(p) = src.parse::<GroupPresentation>() {
        let again: GroupPresentation = p.to_string().parse().expect("printed presentation parses");
        assert_eq!(p, again);
    }
});
