#![no_main]

use libfuzzer_sys::fuzz_target;
use quintel::exactmath::IntPoly;

// The coefficient-list parser must never panic, and anything it accepts
// must round-trip through the canonical rendering.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(poly) = IntPoly::parse_coeff_list(text) {
        let rendered = poly.to_coeff_list();
        let again = IntPoly::parse_coeff_list(&rendered).expect("round trip");
        assert_eq!(again, poly);
    }
});
